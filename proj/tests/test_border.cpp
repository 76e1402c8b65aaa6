#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "griddom/border.hpp"
#include "griddom/errors.hpp"
#include "oracles.hpp"

using namespace griddom;

namespace {

// Piece cells straight from the definition.
oracle::PointSet piece_points(int k, int p) {
  oracle::PointSet out;
  for (int i = 1; i <= k; ++i) out.insert({i, k + 2});
  for (int i = 1; i <= k + 1; ++i) out.insert({i, k + 1});
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= k; ++j) out.insert({i, j});
  }
  return out;
}

int ref_label(const oracle::PointSet& s, oracle::Point v) {
  if (s.count(v)) return 0;
  return oracle::quadrant_nbhd(s).count(v) ? 1 : 2;
}

// C_p by enumerating subsets of the piece, with words read off by hand.
TropicalMatrix reference_C(int k, int p) {
  const auto cells_set = piece_points(k, p);
  const std::vector<oracle::Point> cells(cells_set.begin(), cells_set.end());
  oracle::PointSet internal;
  for (auto v : cells) {
    bool inside = true;
    for (auto u : oracle::quadrant_nbhd({v})) inside = inside && cells_set.count(u);
    if (inside) internal.insert(v);
  }
  const WordTable table(k);
  TropicalMatrix out(table.size());
  for (std::uint32_t mask = 0; mask < (1U << cells.size()); ++mask) {
    oracle::PointSet s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (mask >> c & 1U) s.insert(cells[c]);
    }
    const auto covered = oracle::quadrant_nbhd(s);
    bool ok = true;
    for (auto v : internal) ok = ok && covered.count(v);
    if (!ok) continue;
    std::vector<int> in;
    std::vector<int> outw;
    for (int i = 1; i <= k; ++i) {
      in.push_back(ref_label(s, {i, k + 2}));
      outw.push_back(ref_label(s, {p, i}));
    }
    const std::size_t r = table.rank(Word::from_letters(in));
    const std::size_t c = table.rank(Word::from_letters(outw));
    out(r, c) = std::min(out(r, c), static_cast<Entry>(oracle::quadrant_loss(s)));
  }
  return out;
}

VertexSet on_canvas(const BorderPiece& piece, const std::vector<Vertex>& vs) {
  return VertexSet::from(piece.canvas(), vs);
}

// The per-letter reading of the transition cost, -|w|_2 in place of the
// count of positions where a 2 turns into a chosen cell.
TropicalMatrix literal_T(const WordTable& table, int* negative) {
  TropicalMatrix out(table.size());
  *negative = 0;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const Word w = table.word(r);
    for (std::size_t c = 0; c < table.size(); ++c) {
      const Word w2 = table.word(c);
      if (transition_entry(w, w2) == kInf) continue;
      const int k = w.length();
      const long long delta =
          3LL * w2.count(0) - w.count(2) - w2.count(1) + w.count(0) - (w2[k - 1] == 0 ? 1 : 0);
      if (delta < 0) {
        ++*negative;
        continue;
      }
      out(r, c) = static_cast<Entry>(delta);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("piece shape") {
  const BorderPiece piece(3, 5);
  CHECK(piece.cell_count() == 3 + 4 + 15);
  CHECK(piece.contains({4, 4}));
  CHECK_FALSE(piece.contains({4, 5}));
  CHECK_FALSE(piece.contains({5, 4}));
  CHECK(piece.contains({5, 3}));
  CHECK(piece.input_vertices() == std::vector<Vertex>{{1, 5}, {2, 5}, {3, 5}});
  CHECK(piece.output_vertices() == std::vector<Vertex>{{5, 1}, {5, 2}, {5, 3}});
  CHECK_THROWS_AS(BorderPiece(3, 4), InputError);
  CHECK_THROWS_AS(BorderPiece(11, 20), InputError);
  for (int k = 1; k <= 4; ++k) {
    for (int p = k + 2; p <= k + 6; ++p) {
      const BorderPiece b(k, p);
      oracle::PointSet got;
      for (auto v : b.cells()) got.insert({v.i, v.j});
      CHECK(got == piece_points(k, p));
    }
  }
}

TEST_CASE("internal vertices") {
  CHECK(internal_vertices(VertexSet::from({5, 5}, {{3, 3}})).empty());
  std::vector<Vertex> block;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) block.push_back({i, j});
  }
  const VertexSet corner = internal_vertices(VertexSet::from({5, 5}, block));
  CHECK(corner == VertexSet::from({5, 5}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  // The window edge is not a boundary of the quadrant.
  CHECK(internal_vertices(VertexSet::from({3, 3}, block)) == VertexSet::from({3, 3}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(internal_vertices(VertexSet::from({3, 3}, block), Ambient::grid) == VertexSet::full({3, 3}));

  const BorderPiece piece(3, 5);
  const VertexSet cells = piece.as_set();
  const auto pts = piece_points(3, 5);
  for (const auto& v : piece.cells()) {
    bool expected = true;
    for (auto u : oracle::quadrant_nbhd({{v.i, v.j}})) expected = expected && pts.count(u);
    CHECK(internal_vertices(cells).contains(v) == expected);
    if (v.j == 5 || v.i == 5) CHECK_FALSE(internal_vertices(cells).contains(v));
  }
}

TEST_CASE("piece words") {
  const BorderPiece piece(3, 5);
  const auto empty = piece_words(piece, VertexSet(piece.canvas()));
  CHECK(empty.in == Word::uniform(3, 2));
  CHECK(empty.out == Word::uniform(3, 2));
  CHECK(piece_words(piece, on_canvas(piece, {{5, 1}, {5, 2}, {5, 3}})).out == Word::uniform(3, 0));
  CHECK(piece_words(piece, on_canvas(piece, {{5, 2}})).out == Word::parse("101"));
  CHECK_THROWS_AS((void)piece_words(piece, on_canvas(piece, {{6, 1}})), InputError);
}

TEST_CASE("transition examples") {
  CHECK(transition_entry(Word::uniform(10, 2), Word::uniform(10, 0)) == 19);
  CHECK(transition_entry(Word::uniform(10, 0), Word::uniform(10, 2)) == kInf);
  CHECK(build_T(1).dim() == 3);
}

TEST_CASE("base tables are symmetric and stay within the frontier bound") {
  for (int k = 1; k <= 4; ++k) {
    FrontierStats stats;
    const TropicalMatrix c = compute_C_base(k, &stats);
    CHECK(c.is_symmetric());
    CHECK(stats.max_frontier <= static_cast<std::size_t>(2 * k + 1));
    CHECK(c.min_finite().has_value());
  }
}

TEST_CASE("frontier programme against subset enumeration") {
  for (auto [k, p] : {std::pair{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}}) {
    CAPTURE(k);
    CAPTURE(p);
    const TropicalMatrix expected = reference_C(k, p);
    CHECK(compute_C_frontier(k, p) == expected);
    CHECK(oracle_C(k, p) == expected);
  }
}

TEST_CASE("transition recurrence on small pieces") {
  for (int k = 1; k <= 2; ++k) {
    const TropicalMatrix base = compute_C_base(k);
    const TropicalMatrix t = build_T(k);
    for (int p = k + 2; p <= k + 5; ++p) {
      CAPTURE(k);
      CAPTURE(p);
      const TropicalMatrix evolved = p == k + 2 ? base : evolve_C(base, t, p - (k + 2));
      CHECK(evolved == oracle_C(k, p));
      CHECK(evolved == compute_C_frontier(k, p));
    }
  }
  CHECK_THROWS_AS((void)oracle_C(3, 7), SizeError);
}

TEST_CASE("the per-letter transition reading breaks the recurrence") {
  for (int k = 1; k <= 2; ++k) {
    const WordTable table(k);
    int negative = 0;
    const TropicalMatrix lit = literal_T(table, &negative);
    CHECK(negative > 0);
    const TropicalMatrix want = oracle_C(k, k + 3);
    CHECK(evolve_C(compute_C_base(k), build_T(table), 1) == want);
    CHECK_FALSE(evolve_C(compute_C_base(k), lit, 1) == want);
  }
}

TEST_CASE("bookkeeping agrees with the transition table") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int p = k + 2 + static_cast<int>(rng() % 3);
    const BorderPiece prev_piece(k, p);
    const BorderPiece next_piece(k, p + 1);
    const GridDims window = next_piece.canvas();
    VertexSet cells(window);
    for (const auto& v : next_piece.cells()) cells.insert(v);
    VertexSet next = random_subset(rng, window, 0.35) & cells;
    const VertexSet must = internal_vertices(cells);
    for (const auto& v : must.members()) {
      if (!closed_neighborhood(next).contains(v)) next.insert(v);
    }
    VertexSet prev(window);
    for (const auto& v : next.members()) {
      if (prev_piece.contains(v)) prev.insert(v);
    }
    const long long delta = delta_bookkeeping(prev, next, prev_piece, next_piece);
    REQUIRE(delta == oracle::quadrant_loss(oracle::to_points(next)) -
                         oracle::quadrant_loss(oracle::to_points(prev)));
    const Word w = piece_words(prev_piece, prev).out;
    const Word w2 = piece_words(next_piece, next).out;
    REQUIRE(transition_entry(w, w2) != kInf);
    REQUIRE(static_cast<long long>(transition_entry(w, w2)) == delta);
  }
  const BorderPiece a(2, 4);
  const BorderPiece b(2, 5);
  VertexSet full(b.canvas());
  for (const auto& v : b.cells()) full.insert(v);
  CHECK_THROWS_AS((void)delta_bookkeeping(VertexSet(b.canvas()), VertexSet(b.canvas()), a, b), InputError);
  CHECK_THROWS_AS((void)delta_bookkeeping(VertexSet(b.canvas()), full, a, b), InputError);
  CHECK_THROWS_AS((void)delta_bookkeeping(VertexSet(b.canvas()), VertexSet(b.canvas()), a, BorderPiece(2, 6)),
                  InputError);
}

TEST_CASE("quarter turns") {
  const GridDims d{5, 8};
  for (int i = 1; i <= d.n; ++i) {
    for (int j = 1; j <= d.m; ++j) {
      const Vertex v{i, j};
      const Vertex once = rotate_quarter(d, v);
      CHECK(inside({d.m, d.n}, once));
      const Vertex back = rotate_quarter({d.m, d.n}, rotate_quarter(d, rotate_quarter({d.m, d.n}, once)));
      CHECK(back == v);
    }
  }
}

TEST_CASE("border decomposition") {
  for (auto [k, n, m] : {std::tuple{10, 30, 40}, {3, 10, 10}, {3, 11, 14}, {1, 6, 9}}) {
    CAPTURE(k);
    CAPTURE(n);
    CAPTURE(m);
    const GridDims d{n, m};
    const auto pieces = decompose_border({d, k});
    CHECK(pieces[0].piece.extent() == n - (k + 2));
    CHECK(pieces[1].piece.extent() == m - (k + 2));
    CHECK(pieces[2].piece.extent() == n - (k + 2));
    CHECK(pieces[3].piece.extent() == m - (k + 2));
    VertexSet seen(d);
    std::size_t total = 0;
    for (const auto& placed : pieces) {
      const VertexSet image = placed.image(d);
      CHECK((seen & image).empty());
      seen |= image;
      total += image.size();
      CHECK(image.size() == placed.piece.cell_count());
    }
    const VertexSet border = border_set(d, k);
    CHECK(seen == border);
    CHECK(total == border.size());
    CHECK(border.size() == static_cast<std::size_t>(n * m - (n - 2 * k) * (m - 2 * k) + 4));
  }
  CHECK_THROWS_AS((void)decompose_border({{9, 10}, 3}), InputError);
}

TEST_CASE("gluing identity on random dominating sets") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const GridDims d{10 + static_cast<int>(rng() % 3), 10 + static_cast<int>(rng() % 3)};
    const VertexSet dom = random_dominating(rng, d);
    REQUIRE(is_dominating(dom));
    for (const GluingCase& c : check_gluing(dom, 3)) {
      REQUIRE(c.identity);
      REQUIRE(c.compatible);
    }
  }
}
