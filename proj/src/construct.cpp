// Upper-bound constructor.
//
// The seed is the diagonal pattern on the (n+2) x (m+2) grid surrounding
// G_{n,m}, with every vertex outside the grid moved onto its nearest grid
// vertex. This dominates G_{n,m} and is optimal along the sides; what it
// wastes sits at the four corners, so each corner square is re-solved exactly
// with the rest of the set fixed. A greedy repair and a prune pass follow.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "griddom/bounds.hpp"
#include "griddom/errors.hpp"

namespace griddom {
namespace {

constexpr int kCornerWindow = 5;
constexpr int kMinConstructorSide = 8;

constexpr int kDi[5] = {0, -1, 1, 0, 0};
constexpr int kDj[5] = {0, 0, 0, -1, 1};

class Builder {
 public:
  explicit Builder(GridDims dims) : dims_(dims), chosen_(dims.vertex_count(), 0), cover_(dims.vertex_count(), 0) {}

  [[nodiscard]] std::size_t id(const Vertex& v) const {
    return static_cast<std::size_t>((v.j - 1) * dims_.n + (v.i - 1));
  }
  [[nodiscard]] bool chosen(const Vertex& v) const { return chosen_[id(v)] != 0; }
  [[nodiscard]] int cover(const Vertex& v) const { return cover_[id(v)]; }

  template <typename F>
  void for_closed(const Vertex& v, F&& f) const {
    for (int d = 0; d < 5; ++d) {
      const Vertex u{v.i + kDi[d], v.j + kDj[d]};
      if (inside(dims_, u)) f(u);
    }
  }

  void add(const Vertex& v) {
    if (chosen(v)) return;
    chosen_[id(v)] = 1;
    order_.push_back(v);
    for_closed(v, [&](const Vertex& u) { ++cover_[id(u)]; });
  }

  void remove(const Vertex& v) {
    if (!chosen(v)) return;
    chosen_[id(v)] = 0;
    for_closed(v, [&](const Vertex& u) { --cover_[id(u)]; });
  }

  void seed_projected(int orientation, int offset) {
    for (int i = 0; i <= dims_.n + 1; ++i) {
      for (int j = 0; j <= dims_.m + 1; ++j) {
        const int key = orientation == 0 ? i + 2 * j : 2 * i + j;
        if (key % 5 != offset) continue;
        add({std::clamp(i, 1, dims_.n), std::clamp(j, 1, dims_.m)});
      }
    }
  }

  // Replaces the members inside [i0,i1] x [j0,j1] by a minimum set that
  // restores domination of the window and its surrounding ring.
  void resolve_window(int i0, int i1, int j0, int j1) {
    std::vector<Vertex> cells;
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) cells.push_back({i, j});
    }
    for (const auto& v : cells) remove(v);

    std::vector<Vertex> needs;
    for (int i = i0 - 1; i <= i1 + 1; ++i) {
      for (int j = j0 - 1; j <= j1 + 1; ++j) {
        const Vertex v{i, j};
        if (inside(dims_, v) && cover(v) == 0) needs.push_back(v);
      }
    }
    if (needs.size() > 64) throw ConstructionError("corner window too large");

    std::vector<std::uint64_t> reach(cells.size(), 0);
    std::vector<std::vector<int>> by_need(needs.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (std::size_t r = 0; r < needs.size(); ++r) {
        if (std::abs(needs[r].i - cells[c].i) + std::abs(needs[r].j - cells[c].j) <= 1) {
          reach[c] |= std::uint64_t{1} << r;
          by_need[r].push_back(static_cast<int>(c));
        }
      }
    }
    const std::uint64_t all = needs.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << needs.size()) - 1;
    std::vector<int> pick;
    // Each cell covers at most five needs, which bounds the search.
    auto search = [&](auto&& self, std::uint64_t open, int budget) -> bool {
      if (open == 0) return true;
      if (std::popcount(open) > 5 * budget) return false;
      const int r = std::countr_zero(open);
      for (int c : by_need[static_cast<std::size_t>(r)]) {
        pick.push_back(c);
        if (self(self, open & ~reach[static_cast<std::size_t>(c)], budget - 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    for (int budget = 0;; ++budget) {
      pick.clear();
      if (search(search, all, budget)) break;
    }
    for (int c : pick) add(cells[static_cast<std::size_t>(c)]);
  }

  // Every undominated vertex, in lexicographic order, gets the member of its
  // closed neighbourhood covering the most undominated vertices.
  void repair() {
    for (int i = 1; i <= dims_.n; ++i) {
      for (int j = 1; j <= dims_.m; ++j) {
        const Vertex u{i, j};
        if (cover(u) > 0) continue;
        std::vector<Vertex> options;
        for_closed(u, [&](const Vertex& v) { options.push_back(v); });
        std::sort(options.begin(), options.end());
        Vertex best = options.front();
        int best_gain = -1;
        for (const auto& v : options) {
          int gain = 0;
          for_closed(v, [&](const Vertex& w) { gain += cover(w) == 0; });
          if (gain > best_gain) {
            best_gain = gain;
            best = v;
          }
        }
        add(best);
      }
    }
  }

  // Drops members whose closed neighbourhood stays dominated without them,
  // latest insertion first.
  void prune() {
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const Vertex v = *it;
      if (!chosen(v)) continue;
      bool redundant = true;
      for_closed(v, [&](const Vertex& u) { redundant = redundant && cover(u) >= 2; });
      if (redundant) remove(v);
    }
  }

  [[nodiscard]] VertexSet result() const {
    VertexSet out(dims_);
    for (int i = 1; i <= dims_.n; ++i) {
      for (int j = 1; j <= dims_.m; ++j) {
        if (chosen({i, j})) out.insert({i, j});
      }
    }
    return out;
  }

 private:
  GridDims dims_;
  std::vector<char> chosen_;
  std::vector<int> cover_;
  std::vector<Vertex> order_;
};

VertexSet attempt(const GridDims& dims, int orientation, int offset) {
  Builder b(dims);
  b.seed_projected(orientation, offset);
  const int w = kCornerWindow;
  b.resolve_window(1, w, 1, w);
  b.resolve_window(dims.n - w + 1, dims.n, 1, w);
  b.resolve_window(1, w, dims.m - w + 1, dims.m);
  b.resolve_window(dims.n - w + 1, dims.n, dims.m - w + 1, dims.m);
  b.repair();
  b.prune();
  return b.result();
}

}  // namespace

VertexSet construct_dominating_set(const GridDims& dims) {
  validate(dims);
  if (std::min(dims.n, dims.m) < kMinConstructorSide) {
    throw InputError("constructor needs min(n, m) >= " + std::to_string(kMinConstructorSide));
  }
  const long long bound = chang_formula(dims);
  std::optional<VertexSet> best;
  for (int orientation = 0; orientation < 2; ++orientation) {
    for (int offset = 0; offset < 5; ++offset) {
      VertexSet s = attempt(dims, orientation, offset);
      if (!is_dominating(s)) continue;
      if (!best || s.size() < best->size()) best = std::move(s);
      if (static_cast<long long>(best->size()) <= bound) return *best;
    }
  }
  throw ConstructionError("no construction reached " + std::to_string(bound) + " for " +
                          std::to_string(dims.n) + "x" + std::to_string(dims.m) +
                          (best ? ", best was " + std::to_string(best->size()) : std::string()));
}

}  // namespace griddom
