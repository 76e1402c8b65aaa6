// griddom: domination numbers of grid graphs from the command line.
//
// Exit codes: 0 exact result, 2 interval only, 64 invalid input,
// 65 corrupt cache, 1 sandwich violation or construction failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "griddom/border.hpp"
#include "griddom/bounds.hpp"
#include "griddom/errors.hpp"
#include "griddom/grid.hpp"
#include "griddom/matrix_io.hpp"
#include "griddom/parallel.hpp"
#include "griddom/words.hpp"

using namespace griddom;

namespace {

constexpr int kExitExact = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInterval = 2;
constexpr int kExitUsage = 64;
constexpr int kExitCache = 65;

struct Config {
  std::string cache_dir;
  unsigned threads = 0;
  bool json = false;
  int brute_limit = kDefaultBruteForceVertexLimit;
  int profile_limit = kDefaultProfileWidthLimit;
};

MatrixStore open_store(const Config& cfg) {
  return MatrixStore(cfg.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cfg.cache_dir));
}

void log_line(const std::string& text) { std::cerr << text << std::endl; }

TropicalMatrix fetch(const MatrixStore& store, const MatrixKey& key, const std::function<TropicalMatrix()>& fn) {
  bool hit = false;
  TropicalMatrix m = store.get_or_compute(key, fn, &hit);
  log_line(std::string(hit ? "cache hit: " : "computed: ") + store.path_for(key).string());
  return m;
}

TropicalMatrix piece_matrix(const MatrixStore& store, int k, int p) {
  const auto base = static_cast<std::uint32_t>(k + 2);
  const TropicalMatrix c = fetch(store, {k, MatrixTag::piece, base}, [k] { return compute_C_base(k); });
  if (p == k + 2) return c;
  return fetch(store, {k, MatrixTag::piece, static_cast<std::uint32_t>(p)}, [&] {
    const TropicalMatrix t = fetch(store, {k, MatrixTag::transition, 0}, [k] { return build_T(k); });
    return evolve_C(c, t, p - (k + 2));
  });
}

// ---------------------------------------------------------------------------

int cmd_gamma(const Config& cfg, int n, int m, const std::string& method, int k) {
  const GridDims dims{n, m};
  validate(dims);
  ResolveOptions opt;
  opt.brute_force_limit = cfg.brute_limit;
  opt.profile_width_limit = cfg.profile_limit;
  opt.method = method;
  opt.transfer_k = k;
  std::optional<MatrixStore> store;
  if (k > 0) {
    store.emplace(open_store(cfg));
    opt.transfer.store = &*store;
  }
  const GammaCertificate cert = resolve_gamma(dims, opt);
  if (cfg.json) {
    std::cout << certificate_json(cert) << '\n';
  } else {
    std::string methods;
    for (const auto& s : cert.methods) methods += (methods.empty() ? "" : ", ") + s;
    if (cert.exact) {
      std::cout << "gamma(" << n << "x" << m << ") = " << *cert.exact << "  [" << methods << "]\n";
    } else {
      std::cout << "gamma(" << n << "x" << m << ") in [" << cert.lower << ", " << cert.upper << "]  [" << methods
                << "]\n";
    }
    if (cert.transfer) {
      std::cout << "  k=" << cert.transfer->k << " B=" << cert.transfer->B << " p*=" << cert.transfer->p_star
                << " shift=" << cert.transfer->slope << "/" << cert.transfer->period
                << " bound_loss=" << cert.transfer->bound_loss << '\n';
    }
    for (const auto& c : cert.conflicts) std::cout << "  conflict: " << c << '\n';
  }
  if (!cert.conflicts.empty()) return kExitFailure;
  return cert.exact ? kExitExact : kExitInterval;
}

int cmd_words(int k, const std::string& mode) {
  if (k < 1 || k > kMaxWordLength) {
    throw InputError("word length must be in [1, " + std::to_string(kMaxWordLength) + "]");
  }
  const WordTable table(k);
  if (mode == "count") {
    std::cout << table.size() << '\n';
  } else {
    for (std::size_t r = 0; r < table.size(); ++r) std::cout << table.word(r).to_string() << '\n';
  }
  return kExitExact;
}

int cmd_matrix_build(const Config& cfg, int k) {
  const MatrixStore store = open_store(cfg);
  (void)fetch(store, {k, MatrixTag::piece, static_cast<std::uint32_t>(k + 2)}, [k] { return compute_C_base(k); });
  (void)fetch(store, {k, MatrixTag::transition, 0}, [k] { return build_T(k); });
  (void)fetch(store, {k, MatrixTag::gluing, 0}, [k] { return build_L(WordTable(k)); });
  return kExitExact;
}

int cmd_matrix_evolve(const Config& cfg, int k, int p) {
  const BorderPiece piece(k, p);
  const MatrixStore store = open_store(cfg);
  const TropicalMatrix c = piece_matrix(store, k, p);
  std::cout << "C_" << p << " (k=" << k << "): " << c.dim() << "x" << c.dim() << ", " << c.finite_count()
            << " finite entries\n";
  return kExitExact;
}

int cmd_matrix_export(const Config& cfg, int k, char tag_char, std::optional<int> p_opt, const std::string& out) {
  const auto tag = tag_from_char(tag_char);
  if (!tag) throw InputError(std::string("unknown matrix tag '") + tag_char + "'");
  if (k < 1 || k > kMaxBorderWidth) throw InputError("border width out of range");
  const int p = p_opt.value_or(k + 2);
  const MatrixStore store = open_store(cfg);

  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw InputError("cannot open " + out);
  }
  std::ostream& os = out.empty() ? std::cout : file;

  switch (*tag) {
    case MatrixTag::piece:
      (void)BorderPiece(k, p);
      write_csv(os, piece_matrix(store, k, p));
      break;
    case MatrixTag::transition:
      write_csv(os, fetch(store, {k, *tag, 0}, [k] { return build_T(k); }));
      break;
    case MatrixTag::gluing:
      write_csv(os, fetch(store, {k, *tag, 0}, [k] { return build_L(WordTable(k)); }));
      break;
    case MatrixTag::glued: {
      (void)BorderPiece(k, p);
      const TropicalMatrix c = piece_matrix(store, k, p);
      const TropicalMatrix l = fetch(store, {k, MatrixTag::gluing, 0}, [k] { return build_L(WordTable(k)); });
      write_csv(os, fetch(store, {k, *tag, static_cast<std::uint32_t>(p)}, [&] { return min_plus_product(l, c); }));
      break;
    }
    case MatrixTag::folded: {
      TransferOptions opt;
      opt.store = &store;
      const TransferConstants tc = transfer_constants(k, opt);
      const FoldedMatrix& f = tc.folded;
      for (std::size_t r = 0; r < f.dim(); ++r) {
        for (std::size_t c = 0; c < f.dim(); ++c) {
          if (c) os << ',';
          if (auto v = f.value(r, c)) {
            os << *v;
          } else {
            os << "inf";
          }
        }
        os << '\n';
      }
      break;
    }
  }
  return kExitExact;
}

struct VerifyScope {
  int k = 3;
  int nmin = 1;
  int nmax = 0;
  int mmax = 0;
};

// Cells below n, m >= 2(k+2) are still checked, with ceil(nm/5) as the lower
// bound in place of the transfer bound.
int cmd_verify(const Config& cfg, VerifyScope scope) {
  if (scope.nmin < 1 || scope.nmax < scope.nmin || scope.mmax < scope.nmin) {
    throw InputError("empty verification scope: give --nmax and --mmax >= --nmin");
  }
  const int base = 2 * (scope.k + 2);
  std::optional<TransferConstants> tc;
  const MatrixStore store = open_store(cfg);
  if (scope.nmax >= base && scope.mmax >= base) {
    TransferOptions opt;
    opt.store = &store;
    tc = transfer_constants(scope.k, opt);
    std::cout << "k=" << tc->k << " B=" << tc->B << " p*=" << tc->p_star << " shift=" << tc->slope << "/"
              << tc->period << '\n';
  }

  int cells = 0;
  int violations = 0;
  for (int n = scope.nmin; n <= scope.nmax; ++n) {
    for (int m = n; m <= scope.mmax; ++m) {
      const GridDims dims{n, m};
      long long lower = gamma_from_loss(dims, 0);
      std::string lower_source = "trivial";
      if (tc && n >= base) {
        lower = lower_bound_from(dims, *tc).bound_gamma;
        lower_source = "transfer";
      }
      long long exact = 0;
      std::string exact_source;
      if (static_cast<long long>(dims.vertex_count()) <= cfg.brute_limit) {
        exact = gamma_bruteforce(dims, cfg.brute_limit).gamma;
        exact_source = "brute";
      } else if (n <= cfg.profile_limit) {
        exact = gamma_profile_dp(dims, cfg.profile_limit);
        exact_source = "profile-dp";
      } else {
        exact = *gamma_closed_form(dims);
        exact_source = "closed-form";
      }
      std::optional<long long> upper;
      if (n >= 8) upper = static_cast<long long>(construct_dominating_set(dims).size());
      const bool ok = lower <= exact && (!upper || exact <= *upper);
      ++cells;
      if (!ok) ++violations;
      std::cout << n << "x" << m << ": lower=" << lower << " (" << lower_source << ") exact=" << exact << " ("
                << exact_source << ")";
      if (upper) std::cout << " upper=" << *upper;
      std::cout << (ok ? " ok" : " VIOLATION") << '\n';
    }
  }
  std::cout << cells << " cells, " << violations << " violations\n";
  return violations == 0 ? kExitExact : kExitFailure;
}

int cmd_verify_full_scale(const Config& cfg, std::size_t max_period) {
  constexpr int k = 10;
  const MatrixStore store = open_store(cfg);
  TransferOptions opt;
  opt.store = &store;
  opt.max_period = max_period;
  opt.progress = [](int p, std::size_t finite) { log_line("p=" + std::to_string(p) + " finite=" + std::to_string(finite)); };
  log_line("building C_12, T and L for k=10 (cached in " + store.dir().string() + ")");
  const TransferConstants tc = transfer_constants(k, opt);

  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    std::cout << (cond ? "ok   " : "FAIL ") << what << '\n';
    ok = ok && cond;
  };
  check(std::abs((1.0 - tc.t_density) - 0.955) <= 0.005,
        "T infinite fraction " + std::to_string(1.0 - tc.t_density) + " ~ 0.955");
  check(tc.slope == 1 && tc.period == 1 && tc.p_star == 125,
        "shift index " + std::to_string(tc.p_star) + ", constant " + std::to_string(tc.slope) + "/" +
            std::to_string(tc.period) + " (expected M_126 = M_125 + 1)");
  check(tc.B == 76, "quadruple minimum B = " + std::to_string(tc.B) + " (expected 76)");
  int mismatches = 0;
  for (int n = 24; n <= 100; n += 4) {
    for (int m = n; m <= 100; m += 7) {
      const LowerBoundReport r = lower_bound_from({n, m}, tc);
      if (r.bound_gamma != chang_formula({n, m}) || r.bound_loss != 2LL * (n + m) - 20) ++mismatches;
    }
  }
  check(mismatches == 0, "bound_gamma = floor((n+2)(m+2)/5) - 4 on sampled 24 <= n <= m <= 100");
  check(lower_bound_from({24, 24}, tc).bound_gamma == 131, "gamma(24x24) = 131");
  if (ok) std::cout << "gamma(G_{n,m}) = floor((n+2)(m+2)/5) - 4 for 24 <= n <= m\n";
  return ok ? kExitExact : kExitFailure;
}

int cmd_render(const Config& cfg, int n, int m) {
  const GridDims dims{n, m};
  validate(dims);
  if (std::min(n, m) >= 8) {
    const VertexSet set = construct_dominating_set(dims);
    std::cout << render_ascii(set);
    std::cout << set.size() << " <= " << chang_formula(dims) << "  (constructed, floor((n+2)(m+2)/5) - 4)\n";
    return kExitExact;
  }
  const ExactGamma g = gamma_bruteforce(dims, std::max(cfg.brute_limit, 64));
  std::cout << render_ascii(g.witness);
  std::cout << g.gamma << " = gamma  (exact witness)\n";
  return kExitExact;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination numbers of grid graphs"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--cache-dir", cfg.cache_dir, "Matrix cache directory (default: $GRIDDOM_CACHE or .griddom-cache)");
  app.add_option("--threads", cfg.threads, "Worker threads, 0 for all cores");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--brute-limit", cfg.brute_limit, "Largest grid (vertices) for brute force")->check(CLI::Range(1, 64));
  app.add_option("--profile-limit", cfg.profile_limit, "Widest grid for the profile DP")
      ->check(CLI::Range(1, kMaxWordLength));

  int n = 0;
  int m = 0;
  std::string method;
  int gamma_k = 0;
  auto* gamma = app.add_subcommand("gamma", "Domination number of G_{n,m} with a certificate");
  gamma->add_option("n", n)->required();
  gamma->add_option("m", m)->required();
  gamma->add_option("--method", method, "brute | profile | closed-form | sandwich")
      ->check(CLI::IsMember({"brute", "profile", "closed-form", "sandwich"}));
  gamma->add_option("--k", gamma_k, "Border width for the transfer-matrix lower bound (0: off)")
      ->check(CLI::Range(0, kMaxBorderWidth));

  int word_k = 0;
  std::string word_mode = "count";
  auto* words = app.add_subcommand("words", "Count or list label words");
  words->add_option("k", word_k)->required();
  words->add_option("mode", word_mode)->check(CLI::IsMember({"count", "list"}));

  auto* matrix = app.add_subcommand("matrix", "Build, evolve or export cached matrices");
  matrix->require_subcommand(1);
  int mk = 3;
  int mp = 0;
  std::optional<int> export_p;
  char tag = 'C';
  std::string out;
  auto* build = matrix->add_subcommand("build", "Compute C_{k+2}, T and L into the cache");
  build->add_option("--k", mk)->required();
  auto* evolve = matrix->add_subcommand("evolve", "Compute C_p = C_{k+2} (x) T^(p-k-2)");
  evolve->add_option("--k", mk)->required();
  evolve->add_option("--p", mp)->required();
  auto* exp = matrix->add_subcommand("export", "Write a matrix as CSV");
  exp->add_option("--k", mk)->required();
  exp->add_option("--tag", tag, "C | L | T | M | F")->check(CLI::IsMember({'C', 'L', 'T', 'M', 'F'}));
  exp->add_option("--p", export_p, "Piece extent for C and M (default k+2)");
  exp->add_option("--out", out, "Output file (default stdout)");

  VerifyScope scope;
  bool full_scale = false;
  std::size_t max_period = 1;
  auto* verify = app.add_subcommand("verify", "Check lower <= exact <= upper over a range of grids");
  verify->add_option("--k", scope.k)->check(CLI::Range(1, kMaxBorderWidth));
  verify->add_option("--nmin", scope.nmin);
  verify->add_option("--nmax", scope.nmax);
  verify->add_option("--mmax", scope.mmax);
  verify->add_flag("--full-scale", full_scale, "Run the k=10 pipeline (hours)");
  verify->add_option("--max-period", max_period, "Longest shift period tried in full-scale mode");

  auto* render = app.add_subcommand("render", "Draw a small dominating set");
  render->add_option("n", n)->required();
  render->add_option("m", m)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    set_worker_threads(cfg.threads);
    if (*gamma) return cmd_gamma(cfg, n, m, method, gamma_k);
    if (*words) return cmd_words(word_k, word_mode);
    if (*build) return cmd_matrix_build(cfg, mk);
    if (*evolve) return cmd_matrix_evolve(cfg, mk, mp);
    if (*exp) return cmd_matrix_export(cfg, mk, tag, export_p, out);
    if (*verify) return full_scale ? cmd_verify_full_scale(cfg, max_period) : cmd_verify(cfg, scope);
    if (*render) return cmd_render(cfg, n, m);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CacheError& e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return kExitCache;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
