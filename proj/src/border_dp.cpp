// Frontier dynamic programme for the piece matrices C_p.
//
// Cells of the piece are inserted one at a time in lexicographic order. After
// each insertion the state is the labelling phi_S restricted to the frontier
// X \ I(X) of the inserted set X, and the value is the least partial loss.
// All loss is credited when a cell is chosen:
//   +5 for the cell itself,
//   -1 for every cell of N[x] that no previously chosen cell dominates.
// Cells of N[x] outside X can only be dominated by frontier cells, so the
// labels are enough to decide "previously dominated". A cell leaves the
// frontier once all its neighbours are inserted; it is then internal to the
// piece and must not carry label 2.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "griddom/border.hpp"
#include "griddom/errors.hpp"

namespace griddom {
namespace {

struct State {
  std::uint64_t key;
  std::uint32_t loss;
};

constexpr int kMaxFrontierSlots = 32;

int get_label(std::uint64_t key, int slot) { return static_cast<int>((key >> (2 * slot)) & 3U); }

void sort_and_merge(std::vector<State>& states) {
  std::sort(states.begin(), states.end(), [](const State& a, const State& b) {
    return a.key < b.key || (a.key == b.key && a.loss < b.loss);
  });
  auto out = states.begin();
  for (auto it = states.begin(); it != states.end();) {
    *out = *it;
    const auto key = it->key;
    while (it != states.end() && it->key == key) ++it;
    ++out;
  }
  states.erase(out, states.end());
}

class FrontierProgramme {
 public:
  explicit FrontierProgramme(const BorderPiece& piece)
      : piece_(piece), canvas_(piece.canvas()), order_(piece.cells()) {
    const auto cells = static_cast<std::size_t>(canvas_.n * canvas_.m);
    in_piece_.assign(cells, false);
    inserted_.assign(cells, false);
    slot_of_.assign(cells, -1);
    for (const auto& v : order_) in_piece_[id(v)] = true;
  }

  TropicalMatrix run(FrontierStats* stats) {
    std::vector<State> states{{0, 0}};
    FrontierStats local;
    for (const auto& x : order_) {
      states = insert(x, states);
      local.max_frontier = std::max(local.max_frontier, frontier_.size());
      local.max_states = std::max(local.max_states, states.size());
    }
    if (stats) *stats = local;
    return collect(states);
  }

 private:
  [[nodiscard]] std::size_t id(const Vertex& v) const {
    return static_cast<std::size_t>((v.j - 1) * canvas_.n + (v.i - 1));
  }

  [[nodiscard]] std::vector<Vertex> neighbours(const Vertex& v) const {
    std::vector<Vertex> out;
    for (const Vertex u : {Vertex{v.i - 1, v.j}, Vertex{v.i + 1, v.j}, Vertex{v.i, v.j - 1},
                           Vertex{v.i, v.j + 1}}) {
      if (u.i >= 1 && u.j >= 1) out.push_back(u);
    }
    return out;
  }

  [[nodiscard]] bool placed(const Vertex& v) const {
    return v.i <= canvas_.n && v.j <= canvas_.m && in_piece_[id(v)] && inserted_[id(v)];
  }

  [[nodiscard]] bool all_neighbours_inserted(const Vertex& v) const {
    for (const auto& u : neighbours(v)) {
      if (!placed(u)) return false;
    }
    return true;
  }

  [[nodiscard]] int slot(const Vertex& v) const {
    const int s = slot_of_[id(v)];
    assert(s >= 0);
    return s;
  }

  std::vector<State> insert(const Vertex& x, const std::vector<State>& states) {
    // Inserted neighbours of x, all on the frontier since x was missing.
    std::vector<int> near;
    // For each neighbour u of x not yet inserted: frontier slots of the
    // inserted cells adjacent to u.
    std::vector<std::vector<int>> outer;
    for (const auto& u : neighbours(x)) {
      if (placed(u)) {
        near.push_back(slot(u));
        continue;
      }
      std::vector<int> guards;
      for (const auto& g : neighbours(u)) {
        if (placed(g)) guards.push_back(slot(g));
      }
      outer.push_back(std::move(guards));
    }

    inserted_[id(x)] = true;
    const int x_slot = static_cast<int>(frontier_.size());
    std::vector<Vertex> extended = frontier_;
    extended.push_back(x);

    std::vector<int> keep;     // old slots (or x_slot) surviving, in new order
    std::vector<int> leaving;  // slots becoming internal
    for (int s = 0; s < static_cast<int>(extended.size()); ++s) {
      (all_neighbours_inserted(extended[static_cast<std::size_t>(s)]) ? leaving : keep).push_back(s);
    }
    if (keep.size() > static_cast<std::size_t>(kMaxFrontierSlots)) {
      throw SizeError("frontier exceeds " + std::to_string(kMaxFrontierSlots) + " cells");
    }

    std::vector<State> next;
    next.reserve(states.size() * 2);
    int labels[kMaxFrontierSlots + 1];
    for (const State& st : states) {
      for (int choose = 0; choose < 2; ++choose) {
        for (int s = 0; s < x_slot; ++s) labels[s] = get_label(st.key, s);
        std::int64_t loss = st.loss;
        bool dominated = false;
        for (int s : near) dominated = dominated || labels[s] == 0;
        if (choose) {
          labels[x_slot] = 0;
          loss += 5;
          if (!dominated) --loss;
          for (int s : near) {
            if (labels[s] == 2) {
              labels[s] = 1;
              --loss;
            }
          }
          for (const auto& guards : outer) {
            bool before = false;
            for (int s : guards) before = before || labels[s] == 0;
            if (!before) --loss;
          }
        } else {
          labels[x_slot] = dominated ? 1 : 2;
        }

        bool ok = true;
        for (int s : leaving) ok = ok && labels[s] != 2;
        if (!ok) continue;

        std::uint64_t key = 0;
        for (std::size_t t = 0; t < keep.size(); ++t) {
          key |= static_cast<std::uint64_t>(labels[keep[t]]) << (2 * t);
        }
        next.push_back({key, static_cast<std::uint32_t>(loss)});
      }
    }

    std::vector<Vertex> new_frontier;
    for (int s : keep) new_frontier.push_back(extended[static_cast<std::size_t>(s)]);
    for (const auto& v : frontier_) slot_of_[id(v)] = -1;
    frontier_ = std::move(new_frontier);
    for (std::size_t t = 0; t < frontier_.size(); ++t) slot_of_[id(frontier_[t])] = static_cast<int>(t);

    sort_and_merge(next);
    return next;
  }

  TropicalMatrix collect(const std::vector<State>& states) {
    const int k = piece_.width();
    const WordTable table(k);
    std::vector<int> in_slots;
    std::vector<int> out_slots;
    for (const auto& v : piece_.input_vertices()) in_slots.push_back(slot(v));
    for (const auto& v : piece_.output_vertices()) out_slots.push_back(slot(v));

    TropicalMatrix c(table.size());
    for (const State& st : states) {
      std::uint32_t in_code = 0;
      std::uint32_t out_code = 0;
      for (int s : in_slots) in_code = (in_code << 2) | static_cast<std::uint32_t>(get_label(st.key, s));
      for (int s : out_slots) out_code = (out_code << 2) | static_cast<std::uint32_t>(get_label(st.key, s));
      Entry& e = c(table.rank_code(in_code), table.rank_code(out_code));
      e = std::min<Entry>(e, st.loss);
    }
    return c;
  }

  BorderPiece piece_;
  GridDims canvas_;
  std::vector<Vertex> order_;
  std::vector<bool> in_piece_;
  std::vector<bool> inserted_;
  std::vector<int> slot_of_;
  std::vector<Vertex> frontier_;
};

}  // namespace

TropicalMatrix compute_C_frontier(int k, int p, FrontierStats* stats) {
  return FrontierProgramme(BorderPiece(k, p)).run(stats);
}

TropicalMatrix compute_C_base(int k, FrontierStats* stats) {
  if (k < 1 || k > kMaxBorderWidth) {
    throw InputError("border width must be in [1, " + std::to_string(kMaxBorderWidth) + "], got " +
                     std::to_string(k));
  }
  return compute_C_frontier(k, k + 2, stats);
}

}  // namespace griddom
