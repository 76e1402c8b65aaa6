// Exhaustive reference for C_p: every subset of the piece is visited unless a
// cell of I(P) is already certain to stay undominated. Loss and words of each
// surviving subset are recomputed from scratch from the definitions.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "griddom/border.hpp"
#include "griddom/errors.hpp"
#include "griddom/parallel.hpp"

namespace griddom {
namespace {

class SubsetOracle {
 public:
  SubsetOracle(const BorderPiece& piece, const WordTable& table)
      : piece_(piece), table_(table), canvas_(piece.canvas()), cells_(piece.cells()),
        result_(table.size()) {
    const std::size_t area = static_cast<std::size_t>(canvas_.n) * static_cast<std::size_t>(canvas_.m);
    chosen_.assign(area, 0);
    position_.assign(area, -1);
    for (std::size_t t = 0; t < cells_.size(); ++t) position_[id(cells_[t])] = static_cast<int>(t);

    // Each internal cell is checked right after the last cell of its closed
    // neighbourhood has been decided.
    const VertexSet internal = internal_vertices(piece.as_set(), Ambient::quadrant);
    checks_.resize(cells_.size());
    for (const auto& v : internal.members()) {
      int last = position_[id(v)];
      for (const auto& u : around(v)) last = std::max(last, position_[id(u)]);
      checks_[static_cast<std::size_t>(last)].push_back(v);
    }
  }

  // Visits the subsets whose first `depth` cells follow the bits of `prefix`.
  TropicalMatrix run(std::size_t depth, std::uint32_t prefix) {
    depth_ = depth;
    prefix_ = prefix;
    visit(0);
    return std::move(result_);
  }

 private:
  [[nodiscard]] std::size_t id(const Vertex& v) const {
    return static_cast<std::size_t>((v.j - 1) * canvas_.n + (v.i - 1));
  }

  [[nodiscard]] std::vector<Vertex> around(const Vertex& v) const {
    std::vector<Vertex> out;
    for (const Vertex u : {Vertex{v.i - 1, v.j}, Vertex{v.i + 1, v.j}, Vertex{v.i, v.j - 1},
                           Vertex{v.i, v.j + 1}}) {
      if (u.i >= 1 && u.j >= 1 && u.i <= canvas_.n && u.j <= canvas_.m) out.push_back(u);
    }
    return out;
  }

  [[nodiscard]] bool dominated(const Vertex& v) const {
    if (chosen_[id(v)]) return true;
    for (const auto& u : around(v)) {
      if (chosen_[id(u)]) return true;
    }
    return false;
  }

  void visit(std::size_t t) {
    if (t == cells_.size()) {
      record();
      return;
    }
    for (int take = 0; take < 2; ++take) {
      if (t < depth_ && static_cast<int>((prefix_ >> t) & 1U) != take) continue;
      chosen_[id(cells_[t])] = static_cast<char>(take);
      bool ok = true;
      for (const auto& v : checks_[t]) ok = ok && dominated(v);
      if (ok) visit(t + 1);
    }
    chosen_[id(cells_[t])] = 0;
  }

  void record() {
    // The canvas leaves a margin around the piece, so N[S] fits inside it.
    std::vector<char> covered(chosen_.size(), 0);
    long long members = 0;
    for (const auto& v : cells_) {
      if (!chosen_[id(v)]) continue;
      ++members;
      covered[id(v)] = 1;
      for (const auto& u : around(v)) covered[id(u)] = 1;
    }
    long long reach = 0;
    for (char c : covered) reach += c;
    const long long loss = 5 * members - reach;

    auto letter = [&](const Vertex& v) { return chosen_[id(v)] ? 0 : (dominated(v) ? 1 : 2); };
    std::uint32_t in = 0;
    std::uint32_t out = 0;
    for (const auto& v : piece_.input_vertices()) in = (in << 2) | static_cast<std::uint32_t>(letter(v));
    for (const auto& v : piece_.output_vertices()) out = (out << 2) | static_cast<std::uint32_t>(letter(v));
    Entry& e = result_(table_.rank_code(in), table_.rank_code(out));
    e = std::min(e, static_cast<Entry>(loss));
  }

  const BorderPiece& piece_;
  const WordTable& table_;
  GridDims canvas_;
  std::vector<Vertex> cells_;
  std::vector<char> chosen_;
  std::vector<int> position_;
  std::vector<std::vector<Vertex>> checks_;
  TropicalMatrix result_;
  std::size_t depth_ = 0;
  std::uint32_t prefix_ = 0;
};

constexpr std::size_t kPrefixCells = 6;

}  // namespace

TropicalMatrix oracle_C(int k, int p, int cell_limit) {
  const BorderPiece piece(k, p);
  if (piece.cell_count() > static_cast<std::size_t>(cell_limit)) {
    throw SizeError("oracle limited to " + std::to_string(cell_limit) + " cells, piece has " +
                    std::to_string(piece.cell_count()));
  }
  const WordTable table(k);
  // Subset ranges fixed by a prefix of cells run independently and are merged
  // by entrywise minimum, so the result does not depend on scheduling.
  const std::size_t depth = std::min(kPrefixCells, piece.cell_count());
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<TropicalMatrix> parts(tasks);
  parallel_for_chunks(tasks, [&](std::size_t begin, std::size_t end) {
    for (std::size_t task = begin; task < end; ++task) {
      parts[task] = SubsetOracle(piece, table).run(depth, static_cast<std::uint32_t>(task));
    }
  });
  TropicalMatrix out(table.size());
  for (const auto& part : parts) {
    for (std::size_t e = 0; e < part.data().size(); ++e) out.data()[e] = std::min(out.data()[e], part.data()[e]);
  }
  return out;
}

}  // namespace griddom
