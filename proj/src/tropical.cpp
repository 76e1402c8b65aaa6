#include "griddom/tropical.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "griddom/errors.hpp"
#include "griddom/parallel.hpp"

namespace griddom {

TropicalMatrix::TropicalMatrix(std::size_t dim, Entry fill) : dim_(dim), data_(dim * dim, fill) {}

TropicalMatrix TropicalMatrix::identity(std::size_t dim) {
  TropicalMatrix out(dim);
  for (std::size_t k = 0; k < dim; ++k) out(k, k) = 0;
  return out;
}

TropicalMatrix TropicalMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
  TropicalMatrix out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw InputError("matrix rows must form a square");
    std::copy(rows[r].begin(), rows[r].end(), out.row(r).begin());
  }
  return out;
}

std::size_t TropicalMatrix::finite_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](Entry e) { return e != kInf; }));
}

double TropicalMatrix::density() const {
  if (data_.empty()) return 0.0;
  return static_cast<double>(finite_count()) / static_cast<double>(data_.size());
}

std::optional<Entry> TropicalMatrix::min_finite() const {
  const Entry m = data_.empty() ? kInf : *std::min_element(data_.begin(), data_.end());
  if (m == kInf) return std::nullopt;
  return m;
}

TropicalMatrix TropicalMatrix::transpose() const {
  TropicalMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool TropicalMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r + 1; c < dim_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

SparseRows SparseRows::of(const TropicalMatrix& m) {
  SparseRows out;
  const std::size_t dim = m.dim();
  out.offsets.reserve(dim + 1);
  out.offsets.push_back(0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (m(r, c) != kInf) {
        out.columns.push_back(static_cast<std::uint32_t>(c));
        out.values.push_back(m(r, c));
      }
    }
    out.offsets.push_back(out.columns.size());
  }
  return out;
}

namespace {

void check_dims(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InputError("matrix dimension mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
  }
}

}  // namespace

TropicalMatrix min_plus_product(const TropicalMatrix& a, const SparseRows& b) {
  const std::size_t dim = a.dim();
  check_dims(dim + 1, b.offsets.size());
  TropicalMatrix out(dim);
  parallel_for_chunks(dim, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      auto dst = out.row(r);
      const auto src = a.row(r);
      for (std::size_t k = 0; k < dim; ++k) {
        const Entry left = src[k];
        if (left == kInf) continue;
        for (std::size_t e = b.offsets[k]; e < b.offsets[k + 1]; ++e) {
          const Entry v = tropical_add(left, b.values[e]);
          Entry& slot = dst[b.columns[e]];
          if (v < slot) slot = v;
        }
      }
    }
  });
  return out;
}

TropicalMatrix min_plus_product(const TropicalMatrix& a, const TropicalMatrix& b) {
  check_dims(a.dim(), b.dim());
  if (b.density() < kSparseDensityThreshold) return min_plus_product(a, SparseRows::of(b));

  const std::size_t dim = a.dim();
  TropicalMatrix out(dim);
  parallel_for_chunks(dim, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      Entry* dst = out.row(r).data();
      const auto src = a.row(r);
      for (std::size_t k = 0; k < dim; ++k) {
        const Entry left = src[k];
        if (left == kInf) continue;
        const Entry* right = b.row(k).data();
        for (std::size_t c = 0; c < dim; ++c) dst[c] = std::min(dst[c], tropical_add(left, right[c]));
      }
    }
  });
  return out;
}

TropicalMatrix shift(const TropicalMatrix& a, std::int64_t c) {
  TropicalMatrix out = a;
  for (Entry& e : out.data()) {
    if (e == kInf) continue;
    const std::int64_t v = static_cast<std::int64_t>(e) + c;
    if (v < 0) throw InputError("shift by " + std::to_string(c) + " makes an entry negative");
    if (v >= static_cast<std::int64_t>(kInf)) throw InputError("shift overflows the entry range");
    e = static_cast<Entry>(v);
  }
  return out;
}

std::optional<std::int64_t> shift_between(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  std::optional<std::int64_t> c;
  const auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if ((x[k] == kInf) != (y[k] == kInf)) return std::nullopt;
    if (x[k] == kInf) continue;
    const std::int64_t d = static_cast<std::int64_t>(y[k]) - static_cast<std::int64_t>(x[k]);
    if (!c) {
      c = d;
    } else if (*c != d) {
      return std::nullopt;
    }
  }
  return c.value_or(0);
}

ShiftDetection detect_eventual_shift(const MatrixStep& step, const TropicalMatrix& start,
                                     std::size_t max_iters, const IterateObserver& observer) {
  TropicalMatrix current = start;
  if (observer) observer(0, current);
  for (std::size_t t = 0; t < max_iters; ++t) {
    TropicalMatrix next = step(current);
    check_dims(current.dim(), next.dim());
    if (observer) observer(t + 1, next);
    if (auto c = shift_between(current, next)) return {t, *c};
    current = std::move(next);
  }
  throw ConvergenceError("no constant shift between consecutive iterates within " +
                         std::to_string(max_iters) + " steps");
}

PeriodicShift detect_eventual_period(const MatrixStep& step, const TropicalMatrix& start,
                                     std::size_t max_iters, std::size_t max_period,
                                     const IterateObserver& observer) {
  if (max_period == 0) throw InputError("period bound must be positive");
  std::deque<TropicalMatrix> recent{start};  // recent.back() is A_s
  if (observer) observer(0, start);
  for (std::size_t s = 1; s <= max_iters; ++s) {
    TropicalMatrix next = step(recent.back());
    check_dims(recent.back().dim(), next.dim());
    if (observer) observer(s, next);
    for (std::size_t q = 1; q <= recent.size(); ++q) {
      if (auto c = shift_between(recent[recent.size() - q], next)) return {s - q, q, *c};
    }
    recent.push_back(std::move(next));
    if (recent.size() > max_period) recent.pop_front();
  }
  throw ConvergenceError("no periodic shift with period <= " + std::to_string(max_period) +
                         " within " + std::to_string(max_iters) + " steps");
}

ShiftFolder::ShiftFolder(std::int64_t slope, std::size_t period, std::size_t max_terms)
    : slope_(slope), period_(period), max_terms_(max_terms) {
  if (max_terms_ == 0) throw InputError("fold needs at least one term");
  if (period_ == 0) throw InputError("fold period must be positive");
  // Term t is stored as A_t + drop(max_terms - 1) - drop(t) >= 0.
  acc_.bias = slope_ > 0 ? drop(max_terms_ - 1) : 0;
}

std::int64_t ShiftFolder::drop(std::size_t t) const {
  const std::int64_t num = slope_ * static_cast<std::int64_t>(t);
  const auto q = static_cast<std::int64_t>(period_);
  return num >= 0 ? num / q : -((-num + q - 1) / q);
}

void ShiftFolder::add(std::size_t t, const TropicalMatrix& term) {
  if (t >= max_terms_) throw InputError("fold term index beyond the configured maximum");
  if (terms_ == 0) {
    acc_.biased = TropicalMatrix(term.dim());
  } else {
    check_dims(acc_.biased.dim(), term.dim());
  }
  // For negative slopes the offset grows with t instead, keeping values >= 0.
  const std::int64_t offset = acc_.bias - drop(t);
  const auto& src = term.data();
  auto& dst = acc_.biased.data();
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (src[k] == kInf) continue;
    const std::int64_t v = static_cast<std::int64_t>(src[k]) + offset;
    if (v < 0 || v >= static_cast<std::int64_t>(kInf)) {
      throw InputError("folded entry out of range");
    }
    dst[k] = std::min(dst[k], static_cast<Entry>(v));
  }
  ++terms_;
}

FoldedMatrix ShiftFolder::result() const {
  if (terms_ == 0) throw InputError("fold of an empty sequence");
  return acc_;
}

FoldedMatrix fold_min_shifted(const std::vector<TropicalMatrix>& sequence, std::int64_t slope) {
  if (sequence.empty()) throw InputError("fold of an empty sequence");
  if (slope < 0) throw InputError("fold slope must be non-negative");
  ShiftFolder folder(slope, sequence.size());
  for (std::size_t t = 0; t < sequence.size(); ++t) folder.add(t, sequence[t]);
  return folder.result();
}

namespace {

Entry cycle_min(const TropicalMatrix& product) {
  Entry best = kInf;
  const std::size_t dim = product.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r; c < dim; ++c) {
      best = std::min(best, tropical_add(product(r, c), product(c, r)));
    }
  }
  return best;
}

}  // namespace

Entry quadruple_min(const TropicalMatrix& mn, const TropicalMatrix& mm) {
  check_dims(mn.dim(), mm.dim());
  return cycle_min(min_plus_product(mn, mm));
}

std::optional<std::int64_t> quadruple_min(const FoldedMatrix& mn, const FoldedMatrix& mm) {
  check_dims(mn.dim(), mm.dim());
  const Entry raw = cycle_min(min_plus_product(mn.biased, mm.biased));
  if (raw == kInf) return std::nullopt;
  return static_cast<std::int64_t>(raw) - 2 * (mn.bias + mm.bias);
}

}  // namespace griddom
