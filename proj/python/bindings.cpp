#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "griddom/border.hpp"
#include "griddom/bounds.hpp"
#include "griddom/errors.hpp"
#include "griddom/grid.hpp"
#include "griddom/tropical.hpp"
#include "griddom/words.hpp"

namespace py = pybind11;
using namespace griddom;

namespace {

using Points = std::vector<std::pair<int, int>>;
using FloatArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

Points to_points(const VertexSet& s) {
  Points out;
  for (const auto& v : s.members()) out.emplace_back(v.i, v.j);
  return out;
}

VertexSet from_points(int n, int m, const Points& pts) {
  const GridDims dims{n, m};
  validate(dims);
  VertexSet s(dims);
  for (const auto& [i, j] : pts) {
    if (!inside(dims, {i, j})) throw InputError("vertex outside the grid");
    s.insert({i, j});
  }
  return s;
}

// +inf <-> math.inf
py::array_t<double> to_numpy(const TropicalMatrix& a) {
  const auto d = static_cast<py::ssize_t>(a.dim());
  py::array_t<double> out({d, d});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t r = 0; r < d; ++r) {
    for (py::ssize_t c = 0; c < d; ++c) {
      const Entry e = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      v(r, c) = e == kInf ? std::numeric_limits<double>::infinity() : static_cast<double>(e);
    }
  }
  return out;
}

TropicalMatrix from_numpy(const FloatArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) throw InputError("expected a square 2-d array");
  const auto d = static_cast<std::size_t>(arr.shape(0));
  TropicalMatrix a(d);
  auto v = arr.unchecked<2>();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const double x = v(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c));
      if (std::isinf(x) && x > 0) continue;
      if (!(x >= 0) || x != std::floor(x) || x >= static_cast<double>(kInf)) {
        throw InputError("entries must be non-negative integers or +inf");
      }
      a(r, c) = static_cast<Entry>(x);
    }
  }
  return a;
}

py::dict report_dict(const LowerBoundReport& r) {
  py::dict d;
  d["k"] = r.k;
  d["B"] = r.B;
  d["p_star"] = r.p_star;
  d["slope"] = r.slope;
  d["period"] = r.period;
  d["bound_loss"] = r.bound_loss;
  d["bound_gamma"] = r.bound_gamma;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Domination numbers of grid graphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<CacheError>(m, "CacheError", base.ptr());

  m.def("is_dominating", [](int n, int mm, const Points& pts) { return is_dominating(from_points(n, mm, pts)); },
        py::arg("n"), py::arg("m"), py::arg("vertices"));
  m.def("loss", [](int n, int mm, const Points& pts) { return loss(from_points(n, mm, pts)); }, py::arg("n"),
        py::arg("m"), py::arg("vertices"), "5|S| - |N[S]|");

  m.def(
      "gamma_bruteforce",
      [](int n, int mm, int limit) {
        py::gil_scoped_release release;
        const ExactGamma g = gamma_bruteforce({n, mm}, limit);
        py::gil_scoped_acquire acquire;
        return std::make_tuple(g.gamma, to_points(g.witness));
      },
      py::arg("n"), py::arg("m"), py::arg("vertex_limit") = kDefaultBruteForceVertexLimit,
      "Minimum dominating set size and one witness.");
  m.def(
      "gamma_profile_dp",
      [](int n, int mm, int width) {
        py::gil_scoped_release release;
        return gamma_profile_dp({n, mm}, width);
      },
      py::arg("n"), py::arg("m"), py::arg("width_limit") = kDefaultProfileWidthLimit);
  m.def("gamma_closed_form", [](int n, int mm) { return gamma_closed_form({n, mm}); }, py::arg("n"), py::arg("m"));
  m.def("chang_formula", [](int n, int mm) { return chang_formula({n, mm}); }, py::arg("n"), py::arg("m"));
  m.def(
      "construct_dominating_set", [](int n, int mm) { return to_points(construct_dominating_set({n, mm})); },
      py::arg("n"), py::arg("m"));

  m.def("count_words", [](int k) { return WordTable(k).size(); }, py::arg("k"));
  m.def(
      "words",
      [](int k) {
        const WordTable t(k);
        std::vector<std::string> out;
        out.reserve(t.size());
        for (std::size_t r = 0; r < t.size(); ++r) out.push_back(t.word(r).to_string());
        return out;
      },
      py::arg("k"), "Valid words of length k in lexicographic order.");

  m.def("build_T", [](int k) { return to_numpy(build_T(k)); }, py::arg("k"));
  m.def("build_L", [](int k) { return to_numpy(build_L(WordTable(k))); }, py::arg("k"));
  m.def(
      "compute_C", [](int k, int p) { return to_numpy(compute_C_frontier(k, p)); }, py::arg("k"), py::arg("p"),
      "Piece matrix C_p by the frontier dynamic programme.");
  m.def(
      "oracle_C", [](int k, int p, int limit) { return to_numpy(oracle_C(k, p, limit)); }, py::arg("k"),
      py::arg("p"), py::arg("cell_limit") = kDefaultOracleCellLimit);
  m.def(
      "min_plus", [](const FloatArray& a, const FloatArray& b) { return to_numpy(min_plus_product(from_numpy(a), from_numpy(b))); },
      py::arg("a"), py::arg("b"));
  m.def(
      "quadruple_min",
      [](const FloatArray& a, const FloatArray& b) -> std::optional<long long> {
        const Entry e = quadruple_min(from_numpy(a), from_numpy(b));
        if (e == kInf) return std::nullopt;
        return static_cast<long long>(e);
      },
      py::arg("mn"), py::arg("mm"));

  m.def(
      "transfer_lower_bound",
      [](int n, int mm, int k) {
        LowerBoundReport r;
        {
          py::gil_scoped_release release;
          r = transfer_lower_bound({n, mm}, k);
        }
        return report_dict(r);
      },
      py::arg("n"), py::arg("m"), py::arg("k"));

  m.def(
      "certificate_json",
      [](int n, int mm, const std::string& method, int k) {
        ResolveOptions opt;
        opt.method = method;
        opt.transfer_k = k;
        GammaCertificate cert;
        {
          py::gil_scoped_release release;
          cert = resolve_gamma({n, mm}, opt);
        }
        return certificate_json(cert);
      },
      py::arg("n"), py::arg("m"), py::arg("method") = "", py::arg("k") = 0);
}
