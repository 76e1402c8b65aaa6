#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "griddom/grid.hpp"
#include "griddom/matrix_io.hpp"
#include "griddom/tropical.hpp"

namespace griddom {

/// floor((n+2)(m+2)/5) - 4. Equals gamma only for 16 <= min(n, m).
[[nodiscard]] long long chang_formula(const GridDims& dims);

/// Exact gamma from the published table (n <= m after normalising). The
/// table covers every n <= 21 and its last row every n >= 16, so a value is
/// returned for all valid dims. The rows are transcribed as published; the
/// n = 6 row is one short of the true value whenever m = 3 (mod 7), e.g.
/// 15 instead of 16 at 6 x 10.
[[nodiscard]] std::optional<long long> gamma_closed_form(const GridDims& dims);

/// ceil((n*m + loss) / 5), the size of a dominating set with the given loss.
[[nodiscard]] long long gamma_from_loss(const GridDims& dims, long long loss);

struct LowerBoundReport {
  int k = 0;
  std::int64_t B = 0;         // min over 4-cycles of the folded matrix
  int p_star = 0;             // M_{p_star + period} = M_{p_star} + slope
  std::int64_t slope = 0;
  int period = 1;
  long long bound_loss = 0;   // lower bound on the least loss of a dominating set
  long long bound_gamma = 0;
};

/// Per-step progress: (p, finite entries of M_p).
using ProgressFn = std::function<void(int, std::size_t)>;

struct TransferOptions {
  std::size_t max_iters = 256;
  /// Longest period tried by the shift detection. Each unit keeps one more
  /// matrix in memory.
  std::size_t max_period = 8;
  /// Expected shift constant and period; folding starts with them and is
  /// redone if the detected ones differ.
  std::int64_t slope_guess = 1;
  std::size_t period_guess = 1;
  const MatrixStore* store = nullptr;
  ProgressFn progress;
};

/// The piece-independent part of the lower bound for one width k.
struct TransferConstants {
  int k = 0;
  int p_star = 0;
  std::int64_t slope = 0;
  int period = 1;
  std::int64_t B = 0;
  FoldedMatrix folded;
  double t_density = 0.0;
};

/// Builds (or loads) C_{k+2}, T and L, iterates M_{p+1} = M_p (x) T until
/// M_{p+q} = M_p + c, folds M' = min_t (M_{k+2+t} - floor(c t / q)) and
/// evaluates the quadruple minimum on M'. Throws ConvergenceError when no
/// periodic shift appears within max_iters steps.
[[nodiscard]] TransferConstants transfer_constants(int k, const TransferOptions& options = {});

/// Lower bound for one grid from precomputed constants: B plus
/// floor(c (side - 2(k+2)) / q) for each of the four sides. Requires
/// n, m >= 2(k+2).
[[nodiscard]] LowerBoundReport lower_bound_from(const GridDims& dims, const TransferConstants& constants);

[[nodiscard]] LowerBoundReport transfer_lower_bound(const GridDims& dims, int k,
                                                    const TransferOptions& options = {});

/// Dominating set of size at most chang_formula(dims), for 8 <= min(n, m).
/// Throws InputError below that range and ConstructionError when no attempt
/// meets the bound.
[[nodiscard]] VertexSet construct_dominating_set(const GridDims& dims);

struct GammaCertificate {
  GridDims dims;
  long long lower = 0;
  long long upper = 0;
  std::optional<long long> exact;
  std::vector<std::string> methods;
  std::optional<VertexSet> witness;
  std::optional<LowerBoundReport> transfer;
  /// Bounds that contradicted the interval held at the time; they are not
  /// applied.
  std::vector<std::string> conflicts;

  /// Narrows [lower, upper] and sets `exact` when they meet. A bound that
  /// would empty the interval is recorded in `conflicts` instead.
  void tighten(long long lo, long long hi, const std::string& method);
};

struct ResolveOptions {
  int brute_force_limit = kDefaultBruteForceVertexLimit;
  int profile_width_limit = kDefaultProfileWidthLimit;
  bool use_closed_form = true;
  /// Width for the transfer-matrix sandwich; 0 disables it.
  int transfer_k = 0;
  TransferOptions transfer;
  /// Precomputed constants for transfer_k, reused across calls.
  const TransferConstants* constants = nullptr;
  /// Restrict to a single method: "brute", "profile", "closed-form",
  /// "sandwich", or empty for automatic dispatch.
  std::string method;
};

/// Tries the exact solvers, then the table, then the sandwich, recording each
/// method that contributed. An unresolved grid gets [ceil(nm/5), nm] narrowed
/// by whatever applied. A forced `method` that does not apply raises
/// InputError.
[[nodiscard]] GammaCertificate resolve_gamma(const GridDims& dims, const ResolveOptions& options = {});

/// {n, m, lower, upper, exact?, methods[], witness?, k?, B?, p_star?}.
/// The witness is left out when it has more than `witness_limit` vertices.
[[nodiscard]] std::string certificate_json(const GammaCertificate& cert, std::size_t witness_limit = 4096,
                                           int indent = -1);

}  // namespace griddom
