#include "griddom/grid.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "griddom/errors.hpp"
#include "griddom/words.hpp"

namespace griddom {

bool inside(const GridDims& dims, const Vertex& v) {
  return v.i >= 1 && v.i <= dims.n && v.j >= 1 && v.j <= dims.m;
}

void validate(const GridDims& dims) {
  if (dims.n < 1 || dims.m < 1) {
    throw InputError("grid dimensions must be positive, got " + std::to_string(dims.n) + "x" +
                     std::to_string(dims.m));
  }
}

namespace {

void require_inside(const GridDims& dims, const Vertex& v) {
  if (!inside(dims, v)) {
    throw InputError("vertex (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                     ") outside " + std::to_string(dims.n) + "x" + std::to_string(dims.m) +
                     " grid");
  }
}

constexpr int kDi[5] = {0, -1, 1, 0, 0};
constexpr int kDj[5] = {0, 0, 0, -1, 1};

}  // namespace

VertexSet::VertexSet(GridDims dims) : dims_(dims) {
  validate(dims_);
  bits_.assign((dims_.vertex_count() + 63) / 64, 0);
}

VertexSet VertexSet::full(GridDims dims) {
  VertexSet s(dims);
  for (std::size_t k = 0; k < dims.vertex_count(); ++k) s.set(k);
  return s;
}

VertexSet VertexSet::from(GridDims dims, const std::vector<Vertex>& members) {
  VertexSet s(dims);
  for (const auto& v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(bits_.begin(), bits_.end(), [](auto w) { return w == 0; });
}

std::size_t VertexSet::index_of(const Vertex& v) const {
  require_inside(dims_, v);
  return static_cast<std::size_t>(v.j - 1) * static_cast<std::size_t>(dims_.n) +
         static_cast<std::size_t>(v.i - 1);
}

Vertex VertexSet::vertex_at(std::size_t index) const {
  const auto n = static_cast<std::size_t>(dims_.n);
  return {static_cast<int>(index % n) + 1, static_cast<int>(index / n) + 1};
}

bool VertexSet::test(std::size_t index) const { return (bits_[index / 64] >> (index % 64)) & 1U; }

void VertexSet::set(std::size_t index, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (index % 64);
  if (value) {
    bits_[index / 64] |= mask;
  } else {
    bits_[index / 64] &= ~mask;
  }
}

bool VertexSet::contains(const Vertex& v) const { return inside(dims_, v) && test(index_of(v)); }
void VertexSet::insert(const Vertex& v) { set(index_of(v), true); }
void VertexSet::erase(const Vertex& v) { set(index_of(v), false); }

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word != 0) {
      const int b = std::countr_zero(word);
      out.push_back(vertex_at(w * 64 + static_cast<std::size_t>(b)));
      word &= word - 1;
    }
  }
  return out;
}

void VertexSet::check_same_dims(const VertexSet& other) const {
  if (!(dims_ == other.dims_)) throw InputError("vertex sets belong to different grids");
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_dims(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_dims(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_dims(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= ~other.bits_[w];
  return *this;
}

VertexSet closed_neighborhood(const GridDims& dims, const Vertex& v) {
  require_inside(dims, v);
  VertexSet out(dims);
  for (int d = 0; d < 5; ++d) {
    const Vertex u{v.i + kDi[d], v.j + kDj[d]};
    if (inside(dims, u)) out.insert(u);
  }
  return out;
}

VertexSet closed_neighborhood(const VertexSet& set) {
  VertexSet out(set.dims());
  for (const auto& v : set.members()) {
    for (int d = 0; d < 5; ++d) {
      const Vertex u{v.i + kDi[d], v.j + kDj[d]};
      if (inside(set.dims(), u)) out.insert(u);
    }
  }
  return out;
}

bool is_dominating(const VertexSet& set) {
  return closed_neighborhood(set).size() == set.dims().vertex_count();
}

long long loss(const VertexSet& set) {
  return 5 * static_cast<long long>(set.size()) -
         static_cast<long long>(closed_neighborhood(set).size());
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const GridDims& dims) : dims_(dims) {
    const std::size_t count = dims.vertex_count();
    full_ = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    closed_.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      const Vertex v{static_cast<int>(k % dims.n) + 1, static_cast<int>(k / dims.n) + 1};
      std::uint64_t mask = 0;
      for (int d = 0; d < 5; ++d) {
        const Vertex u{v.i + kDi[d], v.j + kDj[d]};
        if (inside(dims, u)) {
          mask |= std::uint64_t{1} << ((u.j - 1) * dims.n + (u.i - 1));
        }
      }
      closed_[k] = mask;
    }
  }

  /// Smallest s such that some s-subset dominates; sizes are tried in
  /// increasing order and the first success is returned.
  ExactGamma solve() {
    for (int budget = 0;; ++budget) {
      chosen_.clear();
      if (search(0, budget)) {
        ExactGamma result{budget, VertexSet(dims_)};
        for (int k : chosen_) result.witness.set(static_cast<std::size_t>(k));
        return result;
      }
    }
  }

 private:
  // Every dominating set contains a member of N[u] for the lowest uncovered
  // u, so branching on those members enumerates all minimal candidates.
  bool search(std::uint64_t covered, int budget) {
    const std::uint64_t open = full_ & ~covered;
    if (open == 0) return true;
    if (budget == 0) return false;
    if (std::popcount(open) > 5 * budget) return false;
    const int u = std::countr_zero(open);
    std::uint64_t candidates = closed_[static_cast<std::size_t>(u)];
    while (candidates != 0) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      chosen_.push_back(v);
      if (search(covered | closed_[static_cast<std::size_t>(v)], budget - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  GridDims dims_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> closed_;
  std::vector<int> chosen_;
};

}  // namespace

ExactGamma gamma_bruteforce(const GridDims& dims, int vertex_limit) {
  validate(dims);
  const auto count = dims.vertex_count();
  if (count > static_cast<std::size_t>(std::min(vertex_limit, 64))) {
    throw SizeError("brute force limited to " + std::to_string(std::min(vertex_limit, 64)) +
                    " vertices, grid has " + std::to_string(count));
  }
  return CoverSearch(dims).solve();
}

// ---------------------------------------------------------------------------
// Column profile DP

int gamma_profile_dp(const GridDims& dims, int width_limit) {
  validate(dims);
  const GridDims g = dims.normalized();
  const int h = g.n;
  if (h > std::min(width_limit, kMaxWordLength)) {
    throw SizeError("profile DP limited to width " +
                    std::to_string(std::min(width_limit, kMaxWordLength)) + ", got " +
                    std::to_string(h));
  }

  // State: one label per row, base 3, row r at digit r. Between columns it is
  // the label word of the last column. Within column c, rows below r already
  // hold column c and rows from r up still hold column c - 1.
  std::vector<std::size_t> pow3(static_cast<std::size_t>(h) + 1, 1);
  for (int r = 1; r <= h; ++r) pow3[static_cast<std::size_t>(r)] = pow3[static_cast<std::size_t>(r - 1)] * 3;
  const std::size_t states = pow3[static_cast<std::size_t>(h)];

  using Cost = std::uint16_t;
  constexpr Cost kUnreached = std::numeric_limits<Cost>::max();
  std::vector<Cost> cost(states, kUnreached);
  std::vector<Cost> next(states, kUnreached);

  // A virtual all-1 column in front of the grid imposes nothing.
  std::size_t start = 0;
  for (int r = 0; r < h; ++r) start += pow3[static_cast<std::size_t>(r)];
  cost[start] = 0;

  for (int col = 0; col < g.m; ++col) {
    for (int r = 0; r < h; ++r) {
      std::fill(next.begin(), next.end(), kUnreached);
      const std::size_t here = pow3[static_cast<std::size_t>(r)];
      const std::size_t below = r > 0 ? pow3[static_cast<std::size_t>(r - 1)] : 0;
      for (std::size_t s = 0; s < states; ++s) {
        const Cost c = cost[s];
        if (c == kUnreached) continue;
        const int left = static_cast<int>((s / here) % 3);
        const int under = r > 0 ? static_cast<int>((s / below) % 3) : 1;
        const std::size_t cleared = s - static_cast<std::size_t>(left) * here;
        // Leave the cell out: its left neighbour leaves the profile and must
        // already be dominated.
        if (left != 2) {
          const int label = (left == 0 || under == 0) ? 1 : 2;
          const std::size_t t = cleared + static_cast<std::size_t>(label) * here;
          next[t] = std::min(next[t], c);
        }
        // Take the cell: it dominates the cell below.
        std::size_t t = cleared;
        if (under == 2) t -= below;
        next[t] = std::min<Cost>(next[t], static_cast<Cost>(c + 1));
      }
      cost.swap(next);
    }
  }

  Cost best = kUnreached;
  for (std::size_t s = 0; s < states; ++s) {
    if (cost[s] == kUnreached) continue;
    bool open = false;
    for (std::size_t x = s; x != 0 && !open; x /= 3) open = x % 3 == 2;
    if (!open) best = std::min(best, cost[s]);
  }
  return best;
}

std::string render_ascii(const VertexSet& set) {
  std::ostringstream out;
  const auto& d = set.dims();
  for (int j = d.m; j >= 1; --j) {
    for (int i = 1; i <= d.n; ++i) out << (set.contains({i, j}) ? '#' : '.');
    out << '\n';
  }
  return out.str();
}

}  // namespace griddom
