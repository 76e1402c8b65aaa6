// Fixtures shared by the unit tests and the acceptance binary.
#pragma once

#include <random>
#include <vector>

#include "griddom/border.hpp"
#include "griddom/grid.hpp"
#include "griddom/words.hpp"
#include "oracles.hpp"

// A 131-vertex dominating set of the 24x24 grid; 131 = floor(26 * 26 / 5) - 4 is optimal.
inline griddom::VertexSet figure_set() {
  static const std::vector<griddom::Vertex> points = {
      {1, 3}, {1, 6}, {1, 9}, {1, 11}, {1, 14}, {1, 16}, {1, 19}, {1, 21}, {2, 1}, {2, 3},
      {2, 8}, {2, 13}, {2, 18}, {2, 23}, {2, 24}, {3, 5}, {3, 10}, {3, 15}, {3, 20}, {4, 2},
      {4, 7}, {4, 12}, {4, 17}, {4, 22}, {5, 4}, {5, 9}, {5, 14}, {5, 19}, {5, 24}, {6, 1},
      {6, 6}, {6, 11}, {6, 16}, {6, 21}, {7, 3}, {7, 8}, {7, 13}, {7, 18}, {7, 23}, {8, 1},
      {8, 5}, {8, 10}, {8, 15}, {8, 20}, {8, 24}, {9, 2}, {9, 7}, {9, 12}, {9, 17}, {9, 22},
      {10, 4}, {10, 9}, {10, 14}, {10, 19}, {10, 24}, {11, 1}, {11, 6}, {11, 11}, {11, 16}, {11, 21},
      {12, 3}, {12, 8}, {12, 13}, {12, 18}, {12, 23}, {13, 1}, {13, 5}, {13, 10}, {13, 15}, {13, 20},
      {13, 24}, {14, 2}, {14, 7}, {14, 12}, {14, 17}, {14, 22}, {15, 4}, {15, 9}, {15, 14}, {15, 19},
      {15, 24}, {16, 1}, {16, 6}, {16, 11}, {16, 16}, {16, 21}, {17, 3}, {17, 8}, {17, 13}, {17, 18},
      {17, 23}, {18, 1}, {18, 5}, {18, 10}, {18, 15}, {18, 20}, {18, 24}, {19, 2}, {19, 7}, {19, 12},
      {19, 17}, {19, 22}, {20, 4}, {20, 9}, {20, 14}, {20, 19}, {20, 24}, {21, 1}, {21, 6}, {21, 11},
      {21, 16}, {21, 21}, {22, 3}, {22, 8}, {22, 13}, {22, 18}, {22, 23}, {23, 1}, {23, 5}, {23, 10},
      {23, 15}, {23, 20}, {24, 3}, {24, 7}, {24, 9}, {24, 12}, {24, 14}, {24, 17}, {24, 19}, {24, 22},
      {24, 24},
  };
  return griddom::VertexSet::from({24, 24}, points);
}

inline griddom::VertexSet random_subset(std::mt19937_64& rng, griddom::GridDims d, double share) {
  griddom::VertexSet s(d);
  std::bernoulli_distribution coin(share);
  for (std::size_t x = 0; x < d.vertex_count(); ++x) {
    if (coin(rng)) s.set(x);
  }
  return s;
}

// A random subset completed greedily: every undominated vertex joins.
inline griddom::VertexSet random_dominating(std::mt19937_64& rng, griddom::GridDims d) {
  std::uniform_real_distribution<double> share(0.1, 0.45);
  griddom::VertexSet s = random_subset(rng, d, share(rng));
  for (std::size_t x = 0; x < d.vertex_count(); ++x) {
    if (!griddom::closed_neighborhood(s).test(x)) s.set(x);
  }
  return s;
}

struct LossAlgebraCase {
  bool positivity = false;
  bool disjoint_identity = false;
  bool monotone = false;
  bool superadditive = false;
};

// Draws S1, S2 on one grid, makes them disjoint, and checks the four loss
// properties, including the exact overlap identity for disjoint unions.
inline LossAlgebraCase check_loss_algebra(std::mt19937_64& rng, griddom::GridDims d) {
  using griddom::VertexSet;
  std::uniform_real_distribution<double> share(0.0, 0.6);
  const VertexSet a = random_subset(rng, d, share(rng));
  const VertexSet b = random_subset(rng, d, share(rng)) - a;
  const VertexSet both = a | b;
  const VertexSet shared = griddom::closed_neighborhood(a) & griddom::closed_neighborhood(b);
  LossAlgebraCase c;
  c.positivity = griddom::loss(a) >= 0 && griddom::loss(b) >= 0 && griddom::loss(both) >= 0;
  c.disjoint_identity =
      griddom::loss(both) == griddom::loss(a) + griddom::loss(b) + static_cast<long long>(shared.size());
  c.monotone = griddom::loss(a) <= griddom::loss(both) && griddom::loss(b) <= griddom::loss(both);
  c.superadditive = griddom::loss(both) >= griddom::loss(a) + griddom::loss(b);
  return c;
}

struct GluingCase {
  bool identity = false;
  bool compatible = false;
};

// For each pair of consecutive border pieces X, Y: the grid loss of D on
// their union against the two piece losses plus the interface overlap.
inline std::vector<GluingCase> check_gluing(const griddom::VertexSet& d, int k) {
  using namespace griddom;
  const auto pieces = decompose_border({d.dims(), k});
  std::vector<GluingCase> out;
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    const PlacedPiece& x = pieces[a];
    const PlacedPiece& y = pieces[(a + 1) % pieces.size()];
    const VertexSet dx = x.pull_back(d);
    const VertexSet dy = y.pull_back(d);
    const VertexSet joint = d & (x.image(d.dims()) | y.image(d.dims()));
    const Word w = piece_words(x.piece, dx).out;
    const Word w2 = piece_words(y.piece, dy).in;
    const long long expected = oracle::quadrant_loss(oracle::to_points(dx)) +
                               oracle::quadrant_loss(oracle::to_points(dy)) + overlap_loss(w, w2);
    out.push_back({oracle::grid_loss(oracle::to_points(joint), d.dims().n, d.dims().m) == expected,
                   griddom::compatible(w, w2)});
  }
  return out;
}
