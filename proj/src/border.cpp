#include "griddom/border.hpp"

#include <string>

#include "griddom/errors.hpp"

namespace griddom {
namespace {

constexpr int kDi[4] = {-1, 1, 0, 0};
constexpr int kDj[4] = {0, 0, -1, 1};

bool in_quadrant(const Vertex& v) { return v.i >= 1 && v.j >= 1; }

bool beyond_window(const GridDims& dims, const Vertex& v) { return v.i > dims.n || v.j > dims.m; }

}  // namespace

VertexSet internal_vertices(const VertexSet& set, Ambient ambient) {
  const auto& dims = set.dims();
  VertexSet out(dims);
  for (const auto& v : set.members()) {
    bool internal = true;
    for (int d = 0; d < 4 && internal; ++d) {
      const Vertex u{v.i + kDi[d], v.j + kDj[d]};
      if (!in_quadrant(u)) continue;
      if (beyond_window(dims, u)) {
        // Outside the grid there is nothing; outside the window there is more quadrant.
        internal = ambient == Ambient::grid;
        continue;
      }
      internal = set.contains(u);
    }
    if (internal) out.insert(v);
  }
  return out;
}

long long ambient_loss(const VertexSet& set, Ambient ambient) {
  long long covered = static_cast<long long>(closed_neighborhood(set).size());
  if (ambient == Ambient::quadrant) {
    // Each cell past the window's top row or right column touches exactly one
    // window cell, so these are counted once each.
    for (const auto& v : set.members()) {
      covered += (v.i == set.dims().n) + (v.j == set.dims().m);
    }
  }
  return 5 * static_cast<long long>(set.size()) - covered;
}

int label(const VertexSet& set, const Vertex& v) {
  if (set.contains(v)) return 0;
  for (int d = 0; d < 4; ++d) {
    if (set.contains({v.i + kDi[d], v.j + kDj[d]})) return 1;
  }
  return 2;
}

// ---------------------------------------------------------------------------
// Pieces

BorderPiece::BorderPiece(int k, int p) : k_(k), p_(p) {
  if (k < 1 || k > kMaxBorderWidth) {
    throw InputError("border width must be in [1, " + std::to_string(kMaxBorderWidth) +
                     "], got " + std::to_string(k));
  }
  if (p < k + 2) {
    throw InputError("piece extent must be at least k + 2 = " + std::to_string(k + 2) +
                     ", got " + std::to_string(p));
  }
}

bool BorderPiece::contains(const Vertex& v) const {
  if (v.i < 1 || v.j < 1) return false;
  if (v.j <= k_) return v.i <= p_;
  if (v.j == k_ + 1) return v.i <= k_ + 1;
  if (v.j == k_ + 2) return v.i <= k_;
  return false;
}

std::vector<Vertex> BorderPiece::cells() const {
  std::vector<Vertex> out;
  out.reserve(cell_count());
  for (int i = 1; i <= p_; ++i) {
    for (int j = 1; j <= k_ + 2; ++j) {
      if (contains({i, j})) out.push_back({i, j});
    }
  }
  return out;
}

std::size_t BorderPiece::cell_count() const {
  return static_cast<std::size_t>(k_ + (k_ + 1) + p_ * k_);
}

std::vector<Vertex> BorderPiece::input_vertices() const {
  std::vector<Vertex> out;
  for (int i = 1; i <= k_; ++i) out.push_back({i, k_ + 2});
  return out;
}

std::vector<Vertex> BorderPiece::output_vertices() const {
  std::vector<Vertex> out;
  for (int i = 1; i <= k_; ++i) out.push_back({p_, i});
  return out;
}

VertexSet BorderPiece::as_set() const { return VertexSet::from(canvas(), cells()); }

PieceWords piece_words(const BorderPiece& piece, const VertexSet& set) {
  const auto& dims = set.dims();
  if (dims.n < piece.extent() || dims.m < piece.width() + 2) {
    throw InputError("vertex set window is smaller than the piece");
  }
  for (const auto& v : set.members()) {
    if (!piece.contains(v)) {
      throw InputError("vertex (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                       ") is not in the piece");
    }
  }
  std::vector<int> in;
  std::vector<int> out;
  for (const auto& v : piece.input_vertices()) in.push_back(label(set, v));
  for (const auto& v : piece.output_vertices()) out.push_back(label(set, v));
  return {Word::from_letters(in), Word::from_letters(out)};
}

// ---------------------------------------------------------------------------
// Transition matrix

Entry transition_entry(const Word& w, const Word& w2) {
  const int k = w.length();
  if (w2.length() != k) throw InputError("transition words differ in length");

  long long delta = 0;
  for (int pos = 0; pos < k; ++pos) {
    const int before = w[pos];
    const int after = w2[pos];
    // The new cell would be dominated by the old one.
    if (before == 0 && after == 2) return kInf;
    // An old cell below the top row is internal now and stays undominated.
    if (pos + 1 < k && before == 2 && after != 0) return kInf;
    if (after == 1 && before != 0 && (pos == 0 || w2[pos - 1] != 0) &&
        (pos + 1 == k || w2[pos + 1] != 0)) {
      return kInf;  // labelled dominated with no chosen neighbour
    }
    switch (after) {
      case 0:
        delta += 3;
        if (before == 2) delta -= 1;  // old cell now dominated
        break;
      case 1:
        delta -= 1;
        break;
      default:
        break;
    }
    if (before == 0) delta += 1;  // new cell was already dominated
  }
  if (w2[k - 1] == 0) delta -= 1;  // the cell above the new top cell
  return static_cast<Entry>(delta);
}

TropicalMatrix build_T(const WordTable& table) {
  const std::size_t dim = table.size();
  TropicalMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const Word w = table.word(r);
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = transition_entry(w, table.word(c));
  }
  return out;
}

TropicalMatrix build_T(int k) {
  if (k < 1 || k > kMaxBorderWidth) {
    throw InputError("border width must be in [1, " + std::to_string(kMaxBorderWidth) + "]");
  }
  return build_T(WordTable(k));
}

TropicalMatrix evolve_C(const TropicalMatrix& c, const TropicalMatrix& t, int steps) {
  if (c.dim() != t.dim()) throw InputError("C and T dimensions differ");
  if (steps < 0) throw InputError("evolve steps must be non-negative");
  if (steps == 0) return c;
  const SparseRows sparse = SparseRows::of(t);
  TropicalMatrix current = c;
  for (int s = 0; s < steps; ++s) current = min_plus_product(current, sparse);
  return current;
}

long long delta_bookkeeping(const VertexSet& prev, const VertexSet& next,
                            const BorderPiece& piece_prev, const BorderPiece& piece_next) {
  if (piece_prev.width() != piece_next.width() ||
      piece_next.extent() != piece_prev.extent() + 1) {
    throw InputError("next piece must extend the previous one by a single column");
  }
  if (!(prev.dims() == next.dims())) throw InputError("sets must share one window");
  for (const auto& v : next.members()) {
    if (!piece_next.contains(v)) throw InputError("next set leaves its piece");
  }
  VertexSet restricted(next.dims());
  for (const auto& v : next.members()) {
    if (piece_prev.contains(v)) restricted.insert(v);
  }
  if (!(restricted == prev)) throw InputError("previous set is not the restriction of the next");

  VertexSet piece_cells(next.dims());
  for (const auto& v : piece_next.cells()) {
    if (!inside(next.dims(), v)) throw InputError("window too small for the next piece");
    piece_cells.insert(v);
  }
  const VertexSet must = internal_vertices(piece_cells, Ambient::quadrant);
  const VertexSet covered = closed_neighborhood(next);
  if (!((must - covered).empty())) throw InputError("next set does not dominate I(piece)");

  return ambient_loss(next, Ambient::quadrant) - ambient_loss(prev, Ambient::quadrant);
}

// ---------------------------------------------------------------------------
// Border decomposition

Vertex rotate_quarter(const GridDims& dims, const Vertex& v) { return {v.j, dims.n - v.i + 1}; }

VertexSet border_set(const GridDims& dims, int k) {
  VertexSet out(dims);
  for (int j = 1; j <= dims.m; ++j) {
    for (int i = 1; i <= dims.n; ++i) {
      if (i <= k || j <= k || i > dims.n - k || j > dims.m - k) out.insert({i, j});
    }
  }
  for (const Vertex v : {Vertex{k + 1, k + 1}, Vertex{k + 1, dims.m - k},
                         Vertex{dims.n - k, k + 1}, Vertex{dims.n - k, dims.m - k}}) {
    if (inside(dims, v)) out.insert(v);
  }
  return out;
}

VertexSet PlacedPiece::image(const GridDims& grid) const {
  VertexSet out(grid);
  for (const auto& v : piece.cells()) out.insert(to_grid(v));
  return out;
}

VertexSet PlacedPiece::pull_back(const VertexSet& grid_subset) const {
  VertexSet out(frame);
  for (const auto& v : grid_subset.members()) {
    const Vertex f = to_frame(v);
    if (piece.contains(f)) out.insert(f);
  }
  return out;
}

std::array<PlacedPiece, 4> decompose_border(const BorderGeometry& geom) {
  const int n = geom.dims.n;
  const int m = geom.dims.m;
  const int k = geom.k;
  if (n < 2 * (k + 2) || m < 2 * (k + 2)) {
    throw InputError("border decomposition needs n, m >= 2(k+2) = " + std::to_string(2 * (k + 2)));
  }
  const GridDims wide{n, m};
  const GridDims tall{m, n};
  const BorderPiece along_n(k, n - (k + 2));
  const BorderPiece along_m(k, m - (k + 2));

  // f_{n,m} and its inverse; R is the half turn f_{m,n} o f_{n,m}.
  auto f_nm = [wide](const Vertex& v) { return rotate_quarter(wide, v); };
  auto f_mn = [tall](const Vertex& v) { return rotate_quarter(tall, v); };
  auto f_nm_inv = [n](const Vertex& v) { return Vertex{n - v.j + 1, v.i}; };
  auto f_mn_inv = [m](const Vertex& v) { return Vertex{m - v.j + 1, v.i}; };
  auto identity = [](const Vertex& v) { return v; };
  auto half = [n, m](const Vertex& v) { return Vertex{n - v.i + 1, m - v.j + 1}; };

  return {{
      {'P', along_n, wide, identity, identity},
      {'O', along_m, tall, f_nm_inv, f_nm},
      {'R', along_n, wide, half, half},
      {'Q', along_m, tall, f_mn, f_mn_inv},
  }};
}

}  // namespace griddom
