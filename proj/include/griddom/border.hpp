#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "griddom/grid.hpp"
#include "griddom/tropical.hpp"
#include "griddom/words.hpp"

namespace griddom {

inline constexpr int kMaxBorderWidth = 10;

/// Where neighbourhoods live. `quadrant` is {i >= 1, j >= 1} with no top or
/// right boundary: a VertexSet's dims then act as a window onto it, and
/// vertices on the window's top row or right column have neighbours beyond it.
enum class Ambient { grid, quadrant };

/// I(S) = {v in S : N[v] inside S}.
[[nodiscard]] VertexSet internal_vertices(const VertexSet& set, Ambient ambient = Ambient::quadrant);

/// 5|S| - |N[S]| with N taken in `ambient`.
[[nodiscard]] long long ambient_loss(const VertexSet& set, Ambient ambient);

/// phi_S(v): 0 if v in S, 1 if dominated by S, 2 otherwise.
[[nodiscard]] int label(const VertexSet& set, const Vertex& v);

/// The piece P_p of width k:
///   ([k] x {k+2}) u ([k+1] x {k+1}) u ([p] x [k]).
/// Input vertices are (i, k+2), output vertices (p, i), for i in [k].
class BorderPiece {
 public:
  /// Throws InputError unless 1 <= k <= kMaxBorderWidth and p >= k + 2.
  BorderPiece(int k, int p);

  [[nodiscard]] int width() const { return k_; }
  [[nodiscard]] int extent() const { return p_; }
  [[nodiscard]] bool contains(const Vertex& v) const;
  /// Cells in lexicographic (column, then row) order.
  [[nodiscard]] std::vector<Vertex> cells() const;
  [[nodiscard]] std::size_t cell_count() const;
  [[nodiscard]] std::vector<Vertex> input_vertices() const;
  [[nodiscard]] std::vector<Vertex> output_vertices() const;
  /// Smallest window holding the piece and every quadrant neighbour of it.
  [[nodiscard]] GridDims canvas() const { return {p_ + 1, k_ + 3}; }
  [[nodiscard]] VertexSet as_set() const;

 private:
  int k_;
  int p_;
};

struct PieceWords {
  Word in;
  Word out;
};

/// Input and output words of S for `piece`, labels taken in the quadrant.
/// S may live on any window containing the piece. Throws InputError when S
/// has a vertex outside the piece.
[[nodiscard]] PieceWords piece_words(const BorderPiece& piece, const VertexSet& set);

/// T[w, w2]: cost of appending one column with output word w2 to a piece
/// whose output word is w, or +inf when no such extension exists.
[[nodiscard]] Entry transition_entry(const Word& w, const Word& w2);
[[nodiscard]] TropicalMatrix build_T(const WordTable& table);
[[nodiscard]] TropicalMatrix build_T(int k);

struct FrontierStats {
  std::size_t max_frontier = 0;  // largest |X_i \ I(X_i)|
  std::size_t max_states = 0;    // largest number of live labellings
};

/// C_{k+2}: for each (input word, output word) the minimum quadrant loss of a
/// subset of P_{k+2}(k) dominating I(P_{k+2}), +inf when none exists.
/// Computed by a frontier dynamic programme inserting cells in lexicographic
/// order.
[[nodiscard]] TropicalMatrix compute_C_base(int k, FrontierStats* stats = nullptr);

/// Same table for an arbitrary extent p >= k + 2, by the same programme.
[[nodiscard]] TropicalMatrix compute_C_frontier(int k, int p, FrontierStats* stats = nullptr);

/// C (x) T^steps.
[[nodiscard]] TropicalMatrix evolve_C(const TropicalMatrix& c, const TropicalMatrix& t, int steps);

inline constexpr int kDefaultOracleCellLimit = 24;

/// Exhaustive C_p over subsets of P_p(k), pruned only by the domination
/// requirement. Throws SizeError when the piece has more than `cell_limit`
/// cells.
[[nodiscard]] TropicalMatrix oracle_C(int k, int p, int cell_limit = kDefaultOracleCellLimit);

/// l(S_next) - l(S_prev) in the quadrant, checking that piece_next extends
/// piece_prev by one column, that S_prev = S_next restricted to piece_prev and
/// that S_next dominates I(piece_next). Both sets must share one window.
[[nodiscard]] long long delta_bookkeeping(const VertexSet& prev, const VertexSet& next,
                                          const BorderPiece& piece_prev,
                                          const BorderPiece& piece_next);

// ---------------------------------------------------------------------------
// Whole-border geometry

/// Quarter turn f_{n,m}(i, j) = (j, n - i + 1), mapping [n]x[m] onto [m]x[n].
[[nodiscard]] Vertex rotate_quarter(const GridDims& dims, const Vertex& v);

/// B_{n,m}: the frame of thickness k plus the four cells diagonal to the
/// inner corners.
[[nodiscard]] VertexSet border_set(const GridDims& dims, int k);

/// One of the four border pieces together with its embedding.
struct PlacedPiece {
  char name = 'P';
  BorderPiece piece;
  /// Grid in which the piece has its canonical P shape: (n, m) or (m, n).
  GridDims frame;
  /// Frame coordinates to grid coordinates.
  std::function<Vertex(const Vertex&)> to_grid;
  /// Grid coordinates to frame coordinates.
  std::function<Vertex(const Vertex&)> to_frame;

  [[nodiscard]] VertexSet image(const GridDims& grid) const;
  /// Restricts a grid subset to this piece and expresses it in frame coordinates.
  [[nodiscard]] VertexSet pull_back(const VertexSet& grid_subset) const;
};

struct BorderGeometry {
  GridDims dims;
  int k = 0;
};

/// P_{n-(k+2)}, O_{m-(k+2)}, R_{n-(k+2)}, Q_{m-(k+2)} in cyclic gluing order:
/// each piece's output row faces the next piece's input row. Requires
/// n, m >= 2(k+2).
[[nodiscard]] std::array<PlacedPiece, 4> decompose_border(const BorderGeometry& geom);

}  // namespace griddom
