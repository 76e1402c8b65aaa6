#include "griddom/bounds.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "griddom/border.hpp"
#include "griddom/errors.hpp"
#include "griddom/words.hpp"

namespace griddom {
namespace {

long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// gamma(G_{n,m}) = ceil((a*m + b) / d) - [exception(m)] for a fixed n <= m.
struct TableRow {
  int n;
  long long a;
  long long b;
  long long d;
  bool (*exception)(int m);
  int adjust;  // added when exception(m) holds
};

bool never(int) { return false; }
bool row4(int m) { return m == 5 || m == 6 || m == 9; }
bool row5(int m) { return m == 7; }
bool row10(int m) { return m % 13 == 10 || m == 13 || m == 16; }
bool row11(int m) { return m == 11 || m == 18 || m == 20 || m == 22 || m == 33; }
bool row13(int m) {
  const int r = m % 33;
  return r == 13 || r == 16 || r == 18 || r == 19;
}
bool row14(int m) { return m % 22 == 7; }
bool row15(int m) { return m % 26 == 5; }

constexpr std::array<TableRow, 15> kTable{{
    {1, 1, 0, 3, never, 0},
    {2, 1, 1, 2, never, 0},
    {3, 3, 1, 4, never, 0},
    {4, 1, 0, 1, row4, +1},
    {5, 6, 4, 5, row5, -1},
    {6, 10, 4, 7, never, 0},
    {7, 5, 1, 3, never, 0},
    {8, 15, 7, 8, never, 0},
    {9, 23, 10, 11, never, 0},
    {10, 30, 15, 13, row10, -1},
    {11, 38, 22, 15, row11, -1},
    {12, 80, 38, 29, never, 0},
    {13, 98, 54, 33, row13, -1},
    {14, 35, 20, 11, row14, -1},
    {15, 44, 28, 13, row15, -1},
}};

}  // namespace

long long chang_formula(const GridDims& dims) {
  const long long prod = static_cast<long long>(dims.n + 2) * static_cast<long long>(dims.m + 2);
  // floor division; the product is negative only for degenerate dims.
  const long long q = prod >= 0 ? prod / 5 : -ceil_div(-prod, 5);
  return q - 4;
}

std::optional<long long> gamma_closed_form(const GridDims& dims) {
  validate(dims);
  const GridDims d = dims.normalized();
  if (d.n >= 16) return chang_formula(d);
  const TableRow& row = kTable[static_cast<std::size_t>(d.n - 1)];
  long long value = ceil_div(row.a * d.m + row.b, row.d);
  if (row.exception(d.m)) value += row.adjust;
  return value;
}

long long gamma_from_loss(const GridDims& dims, long long loss) {
  return ceil_div(static_cast<long long>(dims.vertex_count()) + loss, 5);
}

// ---------------------------------------------------------------------------
// Transfer-matrix lower bound

namespace {

TropicalMatrix cached(const MatrixStore* store, const MatrixKey& key,
                      const std::function<TropicalMatrix()>& compute) {
  return store ? store->get_or_compute(key, compute) : compute();
}

struct ChainResult {
  PeriodicShift shift;
  FoldedMatrix folded;
};

ChainResult run_chain(const TropicalMatrix& start, const SparseRows& t, int k, std::int64_t slope,
                      std::size_t period, std::size_t max_iters, std::size_t max_period,
                      const ProgressFn& progress) {
  ShiftFolder folder(slope, period, max_iters + 1);
  auto step = [&t](const TropicalMatrix& a) { return min_plus_product(a, t); };
  auto observe = [&](std::size_t i, const TropicalMatrix& m) {
    folder.add(i, m);
    if (progress) progress(k + 2 + static_cast<int>(i), m.finite_count());
  };
  const PeriodicShift shift = detect_eventual_period(step, start, max_iters, max_period, observe);
  return {shift, folder.result()};
}

long long side_drop(std::int64_t slope, int period, long long steps) {
  const long long num = slope * steps;
  return num >= 0 ? num / period : -((-num + period - 1) / period);
}

}  // namespace

TransferConstants transfer_constants(int k, const TransferOptions& options) {
  if (k < 1 || k > kMaxBorderWidth) {
    throw InputError("border width must be in [1, " + std::to_string(kMaxBorderWidth) + "], got " +
                     std::to_string(k));
  }
  const MatrixStore* store = options.store;
  const auto base = static_cast<std::uint32_t>(k + 2);
  const WordTable table(k);
  const TropicalMatrix c = cached(store, {k, MatrixTag::piece, base}, [k] { return compute_C_base(k); });
  const TropicalMatrix t = cached(store, {k, MatrixTag::transition, 0}, [&] { return build_T(table); });
  const TropicalMatrix l = cached(store, {k, MatrixTag::gluing, 0}, [&] { return build_L(table); });
  const TropicalMatrix m0 = cached(store, {k, MatrixTag::glued, base}, [&] {
    return c.density() < kSparseDensityThreshold ? min_plus_product(l, SparseRows::of(c))
                                                 : min_plus_product(l, c);
  });
  const SparseRows sparse_t = SparseRows::of(t);

  ChainResult chain = run_chain(m0, sparse_t, k, options.slope_guess, options.period_guess, options.max_iters,
                                options.max_period, options.progress);
  if (chain.shift.constant < 0) {
    throw ConvergenceError("detected a negative shift constant");
  }
  if (chain.shift.constant != options.slope_guess || chain.shift.period != options.period_guess) {
    // Same iterates again, folded with the detected rate.
    chain = run_chain(m0, sparse_t, k, chain.shift.constant, chain.shift.period,
                      chain.shift.iteration + chain.shift.period, chain.shift.period, options.progress);
  }

  const auto cycle = quadruple_min(chain.folded, chain.folded);
  if (!cycle) throw ConvergenceError("every 4-cycle of the folded matrix is infinite");

  TransferConstants out;
  out.k = k;
  out.p_star = k + 2 + static_cast<int>(chain.shift.iteration);
  out.slope = chain.shift.constant;
  out.period = static_cast<int>(chain.shift.period);
  out.B = *cycle;
  out.folded = std::move(chain.folded);
  out.t_density = t.density();
  return out;
}

LowerBoundReport lower_bound_from(const GridDims& dims, const TransferConstants& constants) {
  validate(dims);
  const int k = constants.k;
  const long long base = 2LL * (k + 2);
  if (dims.n < base || dims.m < base) {
    throw InputError("transfer bound at k=" + std::to_string(k) + " needs n, m >= " + std::to_string(base));
  }
  LowerBoundReport r;
  r.k = k;
  r.B = constants.B;
  r.p_star = constants.p_star;
  r.slope = constants.slope;
  r.period = constants.period;
  const long long raw = 2 * side_drop(constants.slope, constants.period, dims.n - base) +
                        2 * side_drop(constants.slope, constants.period, dims.m - base) + constants.B;
  // A loss is never negative, so a negative bound says nothing more than 0.
  r.bound_loss = std::max(0LL, raw);
  r.bound_gamma = gamma_from_loss(dims, r.bound_loss);
  return r;
}

LowerBoundReport transfer_lower_bound(const GridDims& dims, int k, const TransferOptions& options) {
  validate(dims);
  if (dims.n < 2 * (k + 2) || dims.m < 2 * (k + 2)) {
    throw InputError("transfer bound at k=" + std::to_string(k) + " needs n, m >= " +
                     std::to_string(2 * (k + 2)));
  }
  return lower_bound_from(dims, transfer_constants(k, options));
}

}  // namespace griddom
