// Slow, obviously-correct reference implementations. They share no code with
// the library beyond the plain data types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "griddom/grid.hpp"
#include "griddom/tropical.hpp"

namespace oracle {

using Point = std::pair<int, int>;
using PointSet = std::set<Point>;

// Neighbours are kept when accept(i, j) holds.
template <typename Accept>
PointSet closed_nbhd(const PointSet& s, Accept accept) {
  PointSet out;
  for (auto [i, j] : s) {
    const Point cand[5] = {{i, j}, {i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
    for (auto [a, b] : cand) {
      if (accept(a, b)) out.insert({a, b});
    }
  }
  return out;
}

inline PointSet grid_nbhd(const PointSet& s, int n, int m) {
  return closed_nbhd(s, [=](int a, int b) { return a >= 1 && a <= n && b >= 1 && b <= m; });
}

inline PointSet quadrant_nbhd(const PointSet& s) {
  return closed_nbhd(s, [](int a, int b) { return a >= 1 && b >= 1; });
}

inline long long grid_loss(const PointSet& s, int n, int m) {
  return 5LL * static_cast<long long>(s.size()) - static_cast<long long>(grid_nbhd(s, n, m).size());
}

inline long long quadrant_loss(const PointSet& s) {
  return 5LL * static_cast<long long>(s.size()) - static_cast<long long>(quadrant_nbhd(s).size());
}

inline PointSet to_points(const griddom::VertexSet& s) {
  PointSet out;
  for (const auto& v : s.members()) out.insert({v.i, v.j});
  return out;
}

// Exhaustive over all 2^(nm) subsets; fine up to about 20 vertices.
inline int gamma(int n, int m) {
  const int cells = n * m;
  int best = cells;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cells); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    PointSet s;
    for (int c = 0; c < cells; ++c) {
      if (mask >> c & 1U) s.insert({c % n + 1, c / n + 1});
    }
    if (static_cast<int>(grid_nbhd(s, n, m).size()) == cells) best = size;
  }
  return best;
}

// Every string over {0,1,2} of length k without a 02 or 20 factor, in
// lexicographic order.
inline std::vector<std::vector<int>> words(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(k), 0);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  for (std::uint64_t x = 0; x < total; ++x) {
    std::uint64_t y = x;
    for (int i = k - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = static_cast<int>(y % 3);
      y /= 3;
    }
    bool ok = true;
    for (int i = 0; i + 1 < k; ++i) {
      if (w[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(i + 1)] == 2 &&
          w[static_cast<std::size_t>(i)] != 1) {
        ok = false;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

using Dense = std::vector<std::vector<long long>>;
inline constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

inline Dense to_dense(const griddom::TropicalMatrix& m) {
  Dense out(m.dim(), std::vector<long long>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out[r][c] = m(r, c) == griddom::kInf ? kInf : m(r, c);
  }
  return out;
}

inline Dense min_plus(const Dense& a, const Dense& b) {
  const std::size_t d = a.size();
  Dense out(d, std::vector<long long>(d, kInf));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t c = 0; c < d; ++c) {
        if (a[r][k] < kInf && b[k][c] < kInf) out[r][c] = std::min(out[r][c], a[r][k] + b[k][c]);
      }
    }
  }
  return out;
}

inline long long four_loop(const Dense& mn, const Dense& mm) {
  const std::size_t d = mn.size();
  long long best = kInf;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (mn[a][b] >= kInf) continue;
      for (std::size_t c = 0; c < d; ++c) {
        if (mm[b][c] >= kInf) continue;
        for (std::size_t e = 0; e < d; ++e) {
          if (mn[c][e] >= kInf || mm[e][a] >= kInf) continue;
          best = std::min(best, mn[a][b] + mm[b][c] + mn[c][e] + mm[e][a]);
        }
      }
    }
  }
  return best;
}

// Matrix with roughly `finite_share` finite entries drawn from [0, max_value].
inline griddom::TropicalMatrix random_matrix(std::mt19937_64& rng, std::size_t dim, double finite_share,
                                             griddom::Entry max_value) {
  griddom::TropicalMatrix m(dim);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<griddom::Entry> value(0, max_value);
  for (auto& e : m.data()) e = coin(rng) < finite_share ? value(rng) : griddom::kInf;
  return m;
}

}  // namespace oracle
