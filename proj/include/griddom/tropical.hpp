#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace griddom {

/// An element of N u {+inf}. +inf is the largest 32-bit value.
using Entry = std::uint32_t;
inline constexpr Entry kInf = std::numeric_limits<Entry>::max();

/// Saturating (min,+) multiplication of two entries.
[[nodiscard]] constexpr Entry tropical_add(Entry a, Entry b) {
  const std::uint64_t s = std::uint64_t{a} + std::uint64_t{b};
  return s >= kInf ? kInf : static_cast<Entry>(s);
}

/// Square matrix over (min,+), row-major.
class TropicalMatrix {
 public:
  TropicalMatrix() = default;
  /// dim x dim matrix filled with `fill`.
  explicit TropicalMatrix(std::size_t dim, Entry fill = kInf);

  static TropicalMatrix identity(std::size_t dim);
  /// Builds from nested rows; throws InputError when not square.
  static TropicalMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] Entry operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  Entry& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  [[nodiscard]] std::span<const Entry> row(std::size_t r) const {
    return {data_.data() + r * dim_, dim_};
  }
  std::span<Entry> row(std::size_t r) { return {data_.data() + r * dim_, dim_}; }
  [[nodiscard]] const std::vector<Entry>& data() const { return data_; }
  std::vector<Entry>& data() { return data_; }

  [[nodiscard]] std::size_t finite_count() const;
  /// Fraction of finite entries.
  [[nodiscard]] double density() const;
  [[nodiscard]] std::optional<Entry> min_finite() const;
  [[nodiscard]] TropicalMatrix transpose() const;
  [[nodiscard]] bool is_symmetric() const;

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> data_;
};

/// Per-row lists of finite entries.
struct SparseRows {
  std::vector<std::size_t> offsets;  // size dim + 1
  std::vector<std::uint32_t> columns;
  std::vector<Entry> values;

  static SparseRows of(const TropicalMatrix& m);
};

/// Below this density of finite entries the right operand is walked sparsely.
inline constexpr double kSparseDensityThreshold = 0.25;

/// C[i,j] = min_k A[i,k] + B[k,j]. Rows are split across worker threads.
[[nodiscard]] TropicalMatrix min_plus_product(const TropicalMatrix& a, const TropicalMatrix& b);
/// Same product with a precomputed sparse view of `b`.
[[nodiscard]] TropicalMatrix min_plus_product(const TropicalMatrix& a, const SparseRows& b);

/// Adds `c` to every finite entry. Throws InputError when a finite entry would
/// drop below zero.
[[nodiscard]] TropicalMatrix shift(const TropicalMatrix& a, std::int64_t c);

/// The constant c with b == shift(a, c) entrywise (identical +inf pattern),
/// or nullopt. Two all-infinite matrices give c = 0.
[[nodiscard]] std::optional<std::int64_t> shift_between(const TropicalMatrix& a,
                                                         const TropicalMatrix& b);

struct ShiftDetection {
  std::size_t iteration = 0;  // smallest t with A_{t+1} = A_t + c
  std::int64_t constant = 0;
};

using MatrixStep = std::function<TropicalMatrix(const TropicalMatrix&)>;
/// Called with (t, A_t) for every iterate produced, including A_0.
using IterateObserver = std::function<void(std::size_t, const TropicalMatrix&)>;

/// Iterates A_{t+1} = step(A_t) from `start` until some A_{t+1} equals A_t
/// shifted by a constant. Throws ConvergenceError after `max_iters` steps.
ShiftDetection detect_eventual_shift(const MatrixStep& step, const TropicalMatrix& start,
                                     std::size_t max_iters, const IterateObserver& observer = {});

struct PeriodicShift {
  std::size_t iteration = 0;  // t in A_{t+period} = A_t + constant
  std::size_t period = 1;
  std::int64_t constant = 0;
};

/// Like detect_eventual_shift but also accepts A_{t+q} = A_t + c for periods
/// q <= max_period. After each new iterate A_s the periods are tried in
/// increasing order against A_{s-q}; the first match is returned. Keeps the
/// last max_period iterates in memory.
PeriodicShift detect_eventual_period(const MatrixStep& step, const TropicalMatrix& start,
                                     std::size_t max_iters, std::size_t max_period,
                                     const IterateObserver& observer = {});

/// A matrix with possibly negative finite entries, stored as
/// `biased(r,c) - bias`.
struct FoldedMatrix {
  TropicalMatrix biased;
  std::int64_t bias = 0;

  [[nodiscard]] std::size_t dim() const { return biased.dim(); }
  [[nodiscard]] std::optional<std::int64_t> value(std::size_t r, std::size_t c) const {
    const Entry e = biased(r, c);
    if (e == kInf) return std::nullopt;
    return static_cast<std::int64_t>(e) - bias;
  }
};

/// Streaming form of fold_min_shifted: keeps min over t of
/// (A_t - floor(slope * t / period)).
class ShiftFolder {
 public:
  /// `max_terms` bounds the number of terms so every stored value stays
  /// non-negative.
  ShiftFolder(std::int64_t slope, std::size_t max_terms) : ShiftFolder(slope, 1, max_terms) {}
  ShiftFolder(std::int64_t slope, std::size_t period, std::size_t max_terms);

  void add(std::size_t t, const TropicalMatrix& term);
  [[nodiscard]] bool empty() const { return terms_ == 0; }
  [[nodiscard]] std::size_t terms() const { return terms_; }
  [[nodiscard]] std::int64_t slope() const { return slope_; }
  [[nodiscard]] std::size_t period() const { return period_; }
  /// floor(slope * t / period), the amount subtracted from term t.
  [[nodiscard]] std::int64_t drop(std::size_t t) const;
  [[nodiscard]] FoldedMatrix result() const;

 private:
  std::int64_t slope_;
  std::size_t period_;
  std::size_t max_terms_;
  std::size_t terms_ = 0;
  FoldedMatrix acc_;
};

/// Entrywise min over t of (sequence[t] - slope * t). Throws InputError on an
/// empty sequence.
[[nodiscard]] FoldedMatrix fold_min_shifted(const std::vector<TropicalMatrix>& sequence,
                                            std::int64_t slope = 1);

/// min over w1..w4 of Mn[w1,w2] + Mm[w2,w3] + Mn[w3,w4] + Mm[w4,w1],
/// evaluated as min of A' + A'^T with A' = Mn (x) Mm.
[[nodiscard]] Entry quadruple_min(const TropicalMatrix& mn, const TropicalMatrix& mm);
/// Same quantity on folded matrices; nullopt when every cycle is infinite.
[[nodiscard]] std::optional<std::int64_t> quadruple_min(const FoldedMatrix& mn,
                                                        const FoldedMatrix& mm);

}  // namespace griddom
