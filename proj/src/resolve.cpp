#include <algorithm>
#include <string>

#include <json.hpp>

#include "griddom/bounds.hpp"
#include "griddom/errors.hpp"
#include "griddom/words.hpp"

namespace griddom {

void GammaCertificate::tighten(long long lo, long long hi, const std::string& method) {
  const long long new_lower = std::max(lower, lo);
  const long long new_upper = std::min(upper, hi);
  if (new_lower > new_upper) {
    conflicts.push_back(method + ": [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "] against [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
    return;
  }
  lower = new_lower;
  upper = new_upper;
  if (lower == upper) exact = lower;
  if (std::find(methods.begin(), methods.end(), method) == methods.end()) methods.push_back(method);
}

namespace {

bool wants(const ResolveOptions& o, const char* method) { return o.method.empty() || o.method == method; }

bool sandwich_applies(const GridDims& dims, int k) {
  return k > 0 && std::min(dims.n, dims.m) >= 2 * (k + 2);
}

void attach_witness(GammaCertificate& cert, VertexSet set, const char* method) {
  if (static_cast<long long>(set.size()) != cert.upper || cert.witness) return;
  cert.witness = std::move(set);
  if (std::find(cert.methods.begin(), cert.methods.end(), method) == cert.methods.end()) {
    cert.methods.emplace_back(method);
  }
}

}  // namespace

GammaCertificate resolve_gamma(const GridDims& dims, const ResolveOptions& options) {
  validate(dims);
  const GridDims d = dims.normalized();
  const long long area = static_cast<long long>(dims.vertex_count());

  GammaCertificate cert;
  cert.dims = dims;
  cert.lower = gamma_from_loss(dims, 0);
  cert.upper = area;

  const bool brute_ok = area <= std::min(options.brute_force_limit, 64);
  const bool profile_ok = d.n <= std::min(options.profile_width_limit, kMaxWordLength);
  const bool sandwich_ok = sandwich_applies(dims, options.transfer_k);
  const bool construct_ok = d.n >= 8;

  if (!options.method.empty()) {
    const std::string& m = options.method;
    const bool ok = (m == "brute" && brute_ok) || (m == "profile" && profile_ok) ||
                    (m == "closed-form" && options.use_closed_form) ||
                    (m == "sandwich" && (sandwich_ok || construct_ok));
    if (m != "brute" && m != "profile" && m != "closed-form" && m != "sandwich") {
      throw InputError("unknown method '" + m + "'");
    }
    if (!ok) throw InputError("method '" + m + "' does not apply to this grid");
  }

  if (brute_ok && wants(options, "brute")) {
    ExactGamma g = gamma_bruteforce(dims, options.brute_force_limit);
    cert.tighten(g.gamma, g.gamma, "brute");
    attach_witness(cert, std::move(g.witness), "brute");
  } else if (profile_ok && wants(options, "profile")) {
    const int g = gamma_profile_dp(dims, options.profile_width_limit);
    cert.tighten(g, g, "profile-dp");
  }
  // With an exact value in hand the table is only cross-checked, so a wrong
  // table entry shows up under `conflicts`.
  if (options.use_closed_form && wants(options, "closed-form")) {
    if (auto g = gamma_closed_form(dims)) cert.tighten(*g, *g, "closed-form");
  }

  const bool run_sandwich = options.method == "sandwich" || (options.method.empty() && (!cert.exact || sandwich_ok));
  if (run_sandwich) {
    if (sandwich_ok) {
      LowerBoundReport report =
          options.constants && options.constants->k == options.transfer_k
              ? lower_bound_from(dims, *options.constants)
              : transfer_lower_bound(dims, options.transfer_k, options.transfer);
      cert.tighten(report.bound_gamma, area, "transfer-lower(" + std::to_string(report.k) + ")");
      cert.transfer = report;
    }
  }
  if (construct_ok && (run_sandwich || (cert.exact && !cert.witness))) {
    try {
      VertexSet set = construct_dominating_set(dims);
      if (run_sandwich) cert.tighten(cert.lower, static_cast<long long>(set.size()), "construction");
      attach_witness(cert, std::move(set), "construction");
    } catch (const ConstructionError&) {
      // The interval stays as the other methods left it.
    }
  }
  return cert;
}

std::string certificate_json(const GammaCertificate& cert, std::size_t witness_limit, int indent) {
  nlohmann::ordered_json j;
  j["n"] = cert.dims.n;
  j["m"] = cert.dims.m;
  j["lower"] = cert.lower;
  j["upper"] = cert.upper;
  if (cert.exact) j["exact"] = *cert.exact;
  j["methods"] = cert.methods;
  if (cert.witness && cert.witness->size() <= witness_limit) {
    auto points = nlohmann::ordered_json::array();
    for (const auto& v : cert.witness->members()) points.push_back({v.i, v.j});
    j["witness"] = std::move(points);
  }
  if (cert.transfer) {
    j["k"] = cert.transfer->k;
    j["B"] = cert.transfer->B;
    j["p_star"] = cert.transfer->p_star;
  }
  if (!cert.conflicts.empty()) j["conflicts"] = cert.conflicts;
  return j.dump(indent);
}

}  // namespace griddom
