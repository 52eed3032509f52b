#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibchar/fibfinite.hpp"
#include "fibchar/fibinfinite.hpp"
#include "fibchar/identities.hpp"
#include "fibchar/json_io.hpp"
#include "fibchar/partitions.hpp"
#include "fibchar/render.hpp"
#include "fibchar/voachar.hpp"

namespace py = pybind11;

namespace {

py::dict report_dict(const fibchar::IdentityReport& rep) {
  py::dict d;
  d["identity"] = rep.id;
  py::dict params;
  for (const auto& [k, v] : rep.params) params[k.c_str()] = v;
  d["params"] = params;
  d["order"] = rep.order;
  d["zmin"] = rep.zMin;
  d["zmax"] = rep.zMax;
  d["match"] = rep.match;
  if (rep.firstMismatch) {
    py::dict mm;
    mm["z"] = rep.firstMismatch->zExp;
    mm["q"] = rep.firstMismatch->qExp;
    mm["lhs"] = rep.firstMismatch->lhs;
    mm["rhs"] = rep.firstMismatch->rhs;
    d["firstMismatch"] = mm;
  } else {
    d["firstMismatch"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(fibchar, m) {
  m.doc() = "exact q-series engine for Fibonacci configuration characters and "
            "Durfee rectangle identities";

  m.def(
      "qbinom",
      [](int N, int k) {
        const fibchar::LaurentPoly p = fibchar::qbinom(N, k);
        std::vector<long long> coeffs;
        if (!p.is_zero()) {
          coeffs.assign(static_cast<std::size_t>(p.max_q()) + 1, 0);
          for (const auto& [key, c] : p.terms())
            coeffs[static_cast<std::size_t>(key.second)] = c;
        }
        return coeffs;
      },
      py::arg("N"), py::arg("k"),
      "Gaussian binomial [N k]_q as a dense coefficient list");

  m.def(
      "partition_count",
      [](int n) {
        if (n < 0) return 0LL;
        return fibchar::inv_pochhammer(std::nullopt, n).at(n);
      },
      py::arg("n"));

  m.def(
      "fib_char",
      [](int n, int l) { return fibchar::fib_char_recurrence(n, l).to_string(); },
      py::arg("n"), py::arg("l"), "finite character in canonical text form");

  m.def(
      "fib_count",
      [](int n, int l) { return fibchar::fib_char_recurrence(n, l).value_at_one(); },
      py::arg("n"), py::arg("l"));

  m.def(
      "inf_char_slice",
      [](int theta, int l, int s, int order) {
        const fibchar::QSeries c =
            fibchar::inf_char_closed(theta, l, order, s, s);
        return c.coeff_of_z(s).coeffs();
      },
      py::arg("theta"), py::arg("l"), py::arg("s"), py::arg("order"),
      "coefficients of the z^s slice of the bilateral character");

  m.def(
      "classify",
      [](const std::vector<int>& parts, int l, int n, int m) {
        const auto cls =
            fibchar::durfee_classify(fibchar::Partition::of(parts), l, n, m);
        py::dict d;
        d["kind"] = cls.hasRect ? "rect" : "norect";
        d["k"] = cls.k;
        d["i"] = cls.i;
        return d;
      },
      py::arg("parts"), py::arg("l"), py::arg("n"), py::arg("m"));

  m.def(
      "verify",
      [](const std::string& id, int order, int theta, int l, int s, int n,
         int m) {
        fibchar::QFactorialTable tab(order);
        fibchar::IdentityReport rep;
        if (id == "jacobi")
          rep = fibchar::check_jacobi(order, 6, tab);
        else if (id == "l1-explicit")
          rep = fibchar::check_l1_explicit(theta, order, 5, tab);
        else if (id == "zslice")
          rep = fibchar::check_zslice(theta, l, s, order, tab);
        else if (id == "durfee")
          rep = fibchar::durfee_identity_check(l, n, m, order, 20, tab);
        else if (id == "final-theta-zero")
          rep = fibchar::check_final_theta_zero(l, order, 5, tab);
        else if (id == "correspondence")
          rep = fibchar::check_correspondence(theta, l, s, order, tab);
        else if (id == "line-equivalence")
          rep = fibchar::line_equivalence_check(l, n, m, order, tab);
        else if (id == "split")
          rep = fibchar::split_identity_check(theta, l, order, 4, tab, 12);
        else
          throw fibchar::BadArgument("unknown identity id " + id);
        return report_dict(rep);
      },
      py::arg("id"), py::arg("order") = 20, py::arg("theta") = 0,
      py::arg("l") = 1, py::arg("s") = 0, py::arg("n") = 0, py::arg("m") = 0);

  m.def(
      "voa_offset",
      [](int i, int N) {
        const auto s = fibchar::voa_char(i, N, 0, 0, 0);
        return py::make_tuple(s.qOffset.num, s.qOffset.den);
      },
      py::arg("i"), py::arg("N"), "exact rational character prefactor exponent");

  m.def(
      "tau_prefix",
      [](int theta, int l, const std::vector<int>& added,
         const std::vector<int>& removed) {
        fibchar::InfFibConfig cfg{theta, l,
                                  std::set<int>(added.begin(), added.end()),
                                  std::set<int>(removed.begin(), removed.end())};
        const auto idx = fibchar::tau(cfg);
        py::dict d;
        d["prefix"] = idx.prefix;
        d["tailStart"] = idx.tailStart;
        d["tailGap"] = idx.tailGap;
        return d;
      },
      py::arg("theta"), py::arg("l"), py::arg("added") = std::vector<int>{},
      py::arg("removed") = std::vector<int>{});

  m.def("render_durfee_svg",
        [](const std::vector<int>& parts, int l, int n, int m) {
          return fibchar::render_durfee_svg(fibchar::Partition::of(parts), l, n, m);
        },
        py::arg("parts"), py::arg("l"), py::arg("n"), py::arg("m"));

  m.def("render_family_svg", &fibchar::render_family_svg, py::arg("l"),
        py::arg("n"), py::arg("m"), py::arg("kmax"));
}
