#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "griddom/errors.hpp"
#include "griddom/matrix_io.hpp"
#include "griddom/tropical.hpp"
#include "oracles.hpp"

using namespace griddom;

namespace {

bool leq(const TropicalMatrix& a, const TropicalMatrix& b) {
  for (std::size_t e = 0; e < a.data().size(); ++e) {
    if (a.data()[e] > b.data()[e]) return false;
  }
  return true;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("griddom-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("saturating addition") {
  CHECK(tropical_add(2, 3) == 5);
  CHECK(tropical_add(kInf, 0) == kInf);
  CHECK(tropical_add(kInf - 1, 5) == kInf);
}

TEST_CASE("product against the triple loop") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 1 + rng() % 17;
    const double share = trial % 3 == 0 ? 0.1 : 0.7;  // exercises both product paths
    const auto a = oracle::random_matrix(rng, dim, 0.7, 30);
    const auto b = oracle::random_matrix(rng, dim, share, 30);
    const auto expected = oracle::min_plus(oracle::to_dense(a), oracle::to_dense(b));
    REQUIRE(oracle::to_dense(min_plus_product(a, b)) == expected);
    REQUIRE(oracle::to_dense(min_plus_product(a, SparseRows::of(b))) == expected);
  }
}

TEST_CASE("product identities") {
  std::mt19937_64 rng(22);
  const auto a = oracle::random_matrix(rng, 6, 0.6, 20);
  const auto id = TropicalMatrix::identity(6);
  CHECK(min_plus_product(id, a) == a);
  CHECK(min_plus_product(a, id) == a);
  CHECK(min_plus_product(TropicalMatrix(6), a) == TropicalMatrix(6));
  CHECK_THROWS_AS((void)min_plus_product(a, TropicalMatrix(5)), InputError);
}

TEST_CASE("associativity, shift law and monotonicity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + rng() % 8;
    const auto a = oracle::random_matrix(rng, dim, 0.6, 15);
    const auto b = oracle::random_matrix(rng, dim, 0.6, 15);
    const auto c = oracle::random_matrix(rng, dim, 0.6, 15);
    REQUIRE(min_plus_product(min_plus_product(a, b), c) == min_plus_product(a, min_plus_product(b, c)));
    const auto s = static_cast<std::int64_t>(rng() % 11);
    REQUIRE(min_plus_product(shift(a, s), b) == shift(min_plus_product(a, b), s));
    TropicalMatrix bigger = a;
    for (auto& e : bigger.data()) {
      if (e != kInf && rng() % 2) e += 3;
      if (rng() % 5 == 0) e = kInf;
    }
    REQUIRE(leq(min_plus_product(a, b), min_plus_product(bigger, b)));
  }
}

TEST_CASE("shift examples") {
  std::mt19937_64 rng(24);
  const auto a = oracle::random_matrix(rng, 4, 0.8, 9);
  CHECK(shift(a, 0) == a);
  CHECK(shift(TropicalMatrix(3), 5) == TropicalMatrix(3));
  CHECK(shift_between(a, shift(a, 7)) == 7);
  CHECK(shift_between(shift(a, 7), a) == -7);
  CHECK(shift_between(TropicalMatrix(3), TropicalMatrix(3)) == 0);
  const auto ones = TropicalMatrix(2, 1);
  CHECK_THROWS_AS((void)shift(ones, -2), InputError);
  TropicalMatrix holes = ones;
  holes(0, 1) = kInf;
  CHECK_FALSE(shift_between(ones, holes).has_value());
}

TEST_CASE("shift detection") {
  std::mt19937_64 rng(25);
  const auto start = oracle::random_matrix(rng, 5, 0.7, 9);
  const ShiftDetection same = detect_eventual_shift([](const TropicalMatrix& m) { return m; }, start, 4);
  CHECK(same.iteration == 0);
  CHECK(same.constant == 0);
  const ShiftDetection plus = detect_eventual_shift([](const TropicalMatrix& m) { return shift(m, 1); }, start, 4);
  CHECK(plus.iteration == 0);
  CHECK(plus.constant == 1);

  // Settles after two steps: entries are capped at 3, then grow by one.
  auto settle = [](const TropicalMatrix& m) {
    TropicalMatrix out = m;
    for (auto& e : out.data()) e = e == kInf ? kInf : (e > 3 ? 3 : e + 1);
    return out;
  };
  const auto two = TropicalMatrix::from_rows({{0, 10}, {10, 0}});
  const ShiftDetection late = detect_eventual_shift(settle, two, 8);
  CHECK(late.iteration == 1);
  CHECK(late.constant == 1);

  const auto swap = [](const TropicalMatrix& m) { return m.transpose(); };
  const auto lopsided = TropicalMatrix::from_rows({{0, 1}, {5, 0}});
  CHECK_THROWS_AS((void)detect_eventual_shift(swap, lopsided, 6), ConvergenceError);
}

TEST_CASE("periodic shift detection") {
  const auto lopsided = TropicalMatrix::from_rows({{0, 1}, {5, 0}});
  // Transpose, adding one on every second step.
  int calls = 0;
  auto step = [&calls](const TropicalMatrix& m) { return (calls++ % 2) ? shift(m.transpose(), 1) : m.transpose(); };
  const PeriodicShift p = detect_eventual_period(step, lopsided, 10, 4);
  CHECK(p.iteration == 0);
  CHECK(p.period == 2);
  CHECK(p.constant == 1);
  calls = 0;
  CHECK_THROWS_AS((void)detect_eventual_period(step, lopsided, 10, 1), ConvergenceError);
}

TEST_CASE("folding") {
  std::mt19937_64 rng(26);
  const auto a = oracle::random_matrix(rng, 5, 0.7, 9);
  const FoldedMatrix single = fold_min_shifted({a});
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      const auto v = single.value(r, c);
      CHECK(v.has_value() == (a(r, c) != kInf));
      if (v) CHECK(*v == a(r, c));
    }
  }
  const FoldedMatrix pair = fold_min_shifted({a, shift(a, 1)});
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      if (a(r, c) != kInf) CHECK(*pair.value(r, c) == a(r, c));
    }
  }
  CHECK_THROWS_AS((void)fold_min_shifted({}), InputError);

  // A rational rate: term t loses floor(3t/2).
  ShiftFolder folder(3, 2, 5);
  CHECK(folder.drop(0) == 0);
  CHECK(folder.drop(1) == 1);
  CHECK(folder.drop(3) == 4);
  const auto z = TropicalMatrix(1, 0);
  for (std::size_t t = 0; t < 5; ++t) folder.add(t, shift(z, static_cast<std::int64_t>(2 * t)));
  CHECK(*folder.result().value(0, 0) == 0);
}

TEST_CASE("quadruple minimum against four loops") {
  std::mt19937_64 rng(27);
  CHECK(quadruple_min(TropicalMatrix::identity(4), TropicalMatrix::identity(4)) == 0);
  CHECK(quadruple_min(TropicalMatrix(4), TropicalMatrix(4)) == kInf);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 1 + rng() % 17;
    const auto mn = oracle::random_matrix(rng, dim, 0.4, 25);
    const auto mm = oracle::random_matrix(rng, dim, 0.4, 25);
    const long long expected = oracle::four_loop(oracle::to_dense(mn), oracle::to_dense(mm));
    const Entry got = quadruple_min(mn, mm);
    REQUIRE((got == kInf ? oracle::kInf : static_cast<long long>(got)) == expected);
  }
}

TEST_CASE("folded quadruple minimum handles negative entries") {
  ShiftFolder f(1, 3);
  f.add(0, TropicalMatrix::from_rows({{1, 4}, {4, 1}}));
  f.add(1, TropicalMatrix::from_rows({{1, 4}, {4, 1}}));
  f.add(2, TropicalMatrix::from_rows({{kInf, 1}, {1, kInf}}));
  const FoldedMatrix m = f.result();
  CHECK(*m.value(0, 0) == 0);
  CHECK(*m.value(0, 1) == -1);
  CHECK(quadruple_min(m, m) == -4);
}

TEST_CASE("TMX round trip") {
  std::mt19937_64 rng(28);
  const auto m = oracle::random_matrix(rng, 7, 0.5, 1000);
  std::stringstream buf;
  write_tmx(buf, m, {3, MatrixTag::glued, 5});
  CHECK(buf.str().size() == kTmxHeaderBytes + 49 * 4);
  CHECK(buf.str().substr(0, 4) == "TMX1");
  auto [back, key] = read_tmx(buf);
  CHECK(back == m);
  CHECK(key == MatrixKey{3, MatrixTag::glued, 5});
}

TEST_CASE("TMX corruption is reported") {
  const auto m = TropicalMatrix::from_rows({{0, kInf}, {kInf, 0}});
  std::stringstream good;
  write_tmx(good, m, {1, MatrixTag::piece, 3});
  const std::string bytes = good.str();

  auto read = [](const std::string& s) {
    std::stringstream in(s);
    return read_tmx(in);
  };
  CHECK_THROWS_AS((void)read("TMX2" + bytes.substr(4)), CacheError);
  CHECK_THROWS_AS((void)read(bytes.substr(0, bytes.size() - 1)), CacheError);
  CHECK_THROWS_AS((void)read(bytes + "x"), CacheError);
  std::string bad_tag = bytes;
  bad_tag[10] = 'Z';
  CHECK_THROWS_AS((void)read(bad_tag), CacheError);
  CHECK_THROWS_AS((void)read(""), CacheError);
}

TEST_CASE("matrix store") {
  const auto dir = scratch_dir("store");
  const MatrixStore store(dir);
  const MatrixKey key{2, MatrixTag::transition, 0};
  CHECK_FALSE(store.contains(key));
  int computed = 0;
  bool hit = true;
  const auto m = TropicalMatrix::from_rows({{1, 2}, {3, kInf}});
  auto compute = [&] {
    ++computed;
    return m;
  };
  CHECK(store.get_or_compute(key, compute, &hit) == m);
  CHECK_FALSE(hit);
  CHECK(store.get_or_compute(key, compute, &hit) == m);
  CHECK(hit);
  CHECK(computed == 1);

  // A file whose header names another key is rejected.
  std::filesystem::copy_file(store.path_for(key), store.path_for({2, MatrixTag::gluing, 0}));
  CHECK_THROWS_AS((void)store.load({2, MatrixTag::gluing, 0}), CacheError);
  std::ofstream(store.path_for(key), std::ios::trunc) << "junk";
  CHECK_THROWS_AS((void)store.load(key), CacheError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("CSV export") {
  std::ostringstream out;
  write_csv(out, TropicalMatrix::from_rows({{0, kInf}, {7, 1}}));
  CHECK(out.str() == "0,inf\n7,1\n");
}
