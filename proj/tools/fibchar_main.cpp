#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fibchar/fibfinite.hpp"
#include "fibchar/fibinfinite.hpp"
#include "fibchar/identities.hpp"
#include "fibchar/json_io.hpp"
#include "fibchar/partitions.hpp"
#include "fibchar/render.hpp"
#include "fibchar/voachar.hpp"

namespace {

using fibchar::IdentityReport;
using fibchar::Partition;
using fibchar::QFactorialTable;
using fibchar::SuiteConfig;
using nlohmann::json;

int default_order() {
  if (const char* env = std::getenv("FIBCFG_ORDER")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid FIBCFG_ORDER value\n";
  }
  return 30;
}

struct Output {
  std::string path;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path, std::ios::binary);
      if (!file) throw fibchar::BadArgument("cannot open output file " + path);
    }
    return file;
  }
  std::ofstream file;
};

Partition parse_parts(const std::vector<int>& parts) {
  return Partition::of(parts);
}

int run_char(const std::string& mode, int n, int l, int theta, int i, int N,
             int order, int zmin, int zmax, bool asJson, Output& out) {
  if (mode == "fib") {
    const fibchar::LaurentPoly chi = fibchar::fib_char_recurrence(n, l);
    if (asJson) {
      json j;
      j["char"] = "fib";
      j["n"] = n;
      j["l"] = l;
      j["poly"] = fibchar::poly_to_json(chi);
      out.stream() << j.dump() << '\n';
    } else {
      out.stream() << chi.to_string() << '\n';
    }
    return 0;
  }
  if (mode == "inf") {
    const fibchar::QSeries s = fibchar::inf_char_closed(theta, l, order, zmin, zmax);
    if (asJson) {
      json j;
      j["char"] = "inf";
      j["theta"] = theta;
      j["l"] = l;
      j["series"] = fibchar::series_to_json(s);
      out.stream() << j.dump() << '\n';
    } else {
      for (int z = zmin; z <= zmax; ++z)
        out.stream() << "[z^" << z << "] " << s.coeff_of_z(z).to_string() << '\n';
    }
    return 0;
  }
  // voa
  const fibchar::ShiftedSeries s = fibchar::voa_char(i, N, order, zmin, zmax);
  if (asJson) {
    json j;
    j["char"] = "voa";
    j["i"] = i;
    j["N"] = N;
    j["offsetNum"] = s.qOffset.num;
    j["offsetDen"] = s.qOffset.den;
    j["series"] = fibchar::series_to_json(s.body);
    out.stream() << j.dump() << '\n';
  } else {
    out.stream() << "offset: " << s.qOffset.num;
    if (s.qOffset.den != 1) out.stream() << '/' << s.qOffset.den;
    out.stream() << '\n';
    for (int z = zmin; z <= zmax; ++z)
      out.stream() << "[z^" << z << "] " << s.body.coeff_of_z(z).to_string()
                   << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string id;
  std::optional<int> theta, l, s, n, m;
  std::string variant;
  int order = 30;
  int zabs = -1;  // -1: per-id default
  int censusCap = 28;
  int bruteOrder = 20;
  int lMax = 3, sAbs = 3, nMax = 3, mMax = 3;
  std::string fault;  // "id:slot"
  bool timings = false;
};

int run_verify(const VerifyArgs& a, Output& out) {
  std::string faultId;
  int faultSlot = -1;
  if (!a.fault.empty()) {
    const auto colon = a.fault.rfind(':');
    if (colon == std::string::npos)
      throw fibchar::BadArgument("--fault expects id:slot");
    faultId = a.fault.substr(0, colon);
    faultSlot = std::stoi(a.fault.substr(colon + 1));
  }
  const auto slot = [&](const std::string& id) {
    return faultId == id ? faultSlot : -1;
  };

  std::vector<IdentityReport> reports;
  const int zabs = a.zabs >= 0 ? a.zabs : (a.id == "jacobi" ? 8 : 5);

  if (a.id == "all") {
    SuiteConfig cfg;
    cfg.order = a.order;
    cfg.zAbs = zabs;
    cfg.lMax = a.lMax;
    cfg.sAbs = a.sAbs;
    cfg.nMax = a.nMax;
    cfg.mMax = a.mMax;
    cfg.censusCap = a.censusCap;
    cfg.bruteOrder = a.bruteOrder;
    cfg.faultId = faultId;
    cfg.faultSlot = faultSlot;
    reports = fibchar::run_suite(cfg);
  } else {
    QFactorialTable tab(a.order);
    const auto each_theta_l = [&](auto&& f) {
      if (a.theta && a.l)
        f(*a.theta, *a.l);
      else
        for (int l = 0; l <= a.lMax; ++l)
          for (int theta = 0; theta <= l; ++theta) f(theta, l);
    };
    if (a.id == "jacobi") {
      reports.push_back(fibchar::check_jacobi(a.order, zabs, tab, slot("jacobi")));
    } else if (a.id == "l1-explicit") {
      std::vector<int> thetas;
      if (a.variant == "11")
        thetas = {1};
      else if (a.variant == "01")
        thetas = {0};
      else if (a.variant.empty())
        thetas = {1, 0};
      else
        throw fibchar::BadArgument("--variant must be 11 or 01");
      for (int theta : thetas)
        reports.push_back(fibchar::check_l1_explicit(theta, a.order, zabs, tab,
                                                     slot("l1-explicit")));
    } else if (a.id == "zslice") {
      each_theta_l([&](int theta, int l) {
        if (a.s)
          reports.push_back(fibchar::check_zslice(theta, l, *a.s, a.order, tab,
                                                  slot("zslice")));
        else
          for (int s = -a.sAbs; s <= a.sAbs; ++s)
            reports.push_back(
                fibchar::check_zslice(theta, l, s, a.order, tab, slot("zslice")));
      });
    } else if (a.id == "durfee") {
      const auto run = [&](int l, int n, int m) {
        reports.push_back(fibchar::durfee_identity_check(
            l, n, m, a.order, a.censusCap, tab, slot("durfee")));
      };
      if (a.l && a.n && a.m)
        run(*a.l, *a.n, *a.m);
      else
        for (int l = 0; l <= a.lMax; ++l)
          for (int n = 0; n <= a.nMax; ++n)
            for (int m = 0; m <= a.mMax; ++m) run(l, n, m);
    } else if (a.id == "line-equivalence") {
      const auto run = [&](int l, int n1, int m1) {
        reports.push_back(fibchar::line_equivalence_check(
            l, n1, m1, a.order, tab, slot("line-equivalence")));
      };
      if (a.l && a.n && a.m)
        run(*a.l, *a.n, *a.m);
      else
        for (int l = 0; l <= a.lMax; ++l)
          for (int n = 0; n <= a.nMax; ++n)
            for (int m = 0; m <= a.mMax; ++m) run(l, n, m);
    } else if (a.id == "final-theta-zero") {
      if (a.l)
        reports.push_back(fibchar::check_final_theta_zero(
            *a.l, a.order, zabs, tab, slot("final-theta-zero")));
      else
        for (int l = 0; l <= a.lMax; ++l)
          reports.push_back(fibchar::check_final_theta_zero(
              l, a.order, zabs, tab, slot("final-theta-zero")));
    } else if (a.id == "correspondence") {
      each_theta_l([&](int theta, int l) {
        if (a.s)
          reports.push_back(fibchar::check_correspondence(
              theta, l, *a.s, a.order, tab, slot("correspondence")));
        else
          for (int s = -a.sAbs; s <= a.sAbs; ++s)
            reports.push_back(fibchar::check_correspondence(
                theta, l, s, a.order, tab, slot("correspondence")));
      });
    } else if (a.id == "split") {
      each_theta_l([&](int theta, int l) {
        reports.push_back(fibchar::split_identity_check(theta, l, a.order, zabs,
                                                        tab, a.bruteOrder));
      });
    } else {
      std::cerr << "error: unknown identity id '" << a.id << "'\n";
      return 2;
    }
  }

  bool allMatch = true;
  for (const auto& rep : reports) {
    out.stream() << fibchar::report_to_json(rep, a.timings).dump() << '\n';
    allMatch = allMatch && rep.match;
  }
  return allMatch ? 0 : 1;
}

int run_durfee_classify(const std::vector<int>& parts, int l, int n, int m,
                        bool asJson, Output& out) {
  const Partition p = parse_parts(parts);
  const fibchar::DurfeeClass cls = fibchar::durfee_classify(p, l, n, m);
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (asJson) {
    json j;
    j["kind"] = cls.hasRect ? "rect" : "norect";
    j["k"] = cls.k;
    j["i"] = cls.i;
    j["l"] = l;
    j["n"] = n;
    j["m"] = m;
    out.stream() << j.dump() << '\n';
    return 0;
  }
  if (!cls.hasRect) {
    out.stream() << "NoRect\n";
    out.stream() << "contains " << n << "x" << m << ": "
                 << yn(fibchar::contains_rect(p, n, m)) << '\n';
    return 0;
  }
  const int rows = cls.k + n;
  const int cols = (l + 1) * cls.k + m;
  out.stream() << "Rect k=" << cls.k << " i=" << cls.i << '\n';
  out.stream() << "contains " << rows << "x" << cols << ": "
               << yn(fibchar::contains_rect(p, rows, cols)) << '\n';
  out.stream() << "contains " << rows + 1 << "x" << cols + l + 1 << ": "
               << yn(fibchar::contains_rect(p, rows + 1, cols + l + 1)) << '\n';
  if (cls.i >= 1)
    out.stream() << "contains " << rows + 1 << "x" << cols + cls.i << ": "
                 << yn(fibchar::contains_rect(p, rows + 1, cols + cls.i)) << '\n';
  else
    out.stream() << "contains " << rows + 1 << "x" << cols + 1 << ": "
                 << yn(fibchar::contains_rect(p, rows + 1, cols + 1)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series engine for Fibonacci configuration characters "
               "and Durfee rectangle identities"};
  app.require_subcommand(1);

  // ---- char ----
  auto* cmdChar = app.add_subcommand("char", "compute characters");
  cmdChar->require_subcommand(1);
  int n = 0, l = 0, theta = 0, iIdx = 0, NIdx = 1;
  int order = default_order();
  int zmin = -5, zmax = 5;
  bool asJson = false;
  std::string outPath;

  auto* charFib = cmdChar->add_subcommand("fib", "finite configuration character");
  charFib->add_option("--n", n, "number of points")->required()->check(CLI::NonNegativeNumber);
  charFib->add_option("--l", l, "separation parameter")->required()->check(CLI::NonNegativeNumber);
  charFib->add_flag("--json", asJson, "JSON output");
  charFib->add_option("--out", outPath, "output file");

  auto* charInf = cmdChar->add_subcommand("inf", "infinite configuration character");
  charInf->add_option("--theta", theta, "vacuum residue")->required()->check(CLI::NonNegativeNumber);
  charInf->add_option("--l", l, "separation parameter")->required()->check(CLI::NonNegativeNumber);
  charInf->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
  charInf->add_option("--zmin", zmin, "window lower bound");
  charInf->add_option("--zmax", zmax, "window upper bound");
  charInf->add_flag("--json", asJson, "JSON output");
  charInf->add_option("--out", outPath, "output file");

  auto* charVoa = cmdChar->add_subcommand("voa", "module character with rational offset");
  charVoa->add_option("--i", iIdx, "module index")->required()->check(CLI::NonNegativeNumber);
  charVoa->add_option("--N", NIdx, "lattice parameter")->required()->check(CLI::PositiveNumber);
  charVoa->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
  charVoa->add_option("--zmin", zmin, "window lower bound");
  charVoa->add_option("--zmax", zmax, "window upper bound");
  charVoa->add_flag("--json", asJson, "JSON output");
  charVoa->add_option("--out", outPath, "output file");

  // ---- verify ----
  VerifyArgs va;
  va.order = default_order();
  auto* cmdVerify = app.add_subcommand("verify", "run identity checks, one JSON report per line");
  cmdVerify->add_option("id", va.id,
                        "identity id: jacobi, l1-explicit, zslice, durfee, "
                        "final-theta-zero, correspondence, line-equivalence, "
                        "split, all")
      ->required();
  int vTheta = -1, vL = -1, vS = -1000, vN = -1, vM = -1;
  cmdVerify->add_option("--theta", vTheta, "vacuum residue");
  cmdVerify->add_option("--l", vL, "separation parameter");
  cmdVerify->add_option("--s", vS, "z-slice exponent");
  cmdVerify->add_option("--n", vN, "Durfee row shift (also --n1)");
  cmdVerify->add_option("--m", vM, "Durfee column shift (also --m1)");
  cmdVerify->add_option("--n1", vN, "alias of --n");
  cmdVerify->add_option("--m1", vM, "alias of --m");
  cmdVerify->add_option("--variant", va.variant, "l1-explicit variant: 11 or 01");
  cmdVerify->add_option("--order", va.order, "truncation order")->check(CLI::NonNegativeNumber);
  cmdVerify->add_option("--zabs", va.zabs, "symmetric z-window half-width")->check(CLI::NonNegativeNumber);
  cmdVerify->add_option("--census-cap", va.censusCap, "partition census bound")->check(CLI::NonNegativeNumber);
  cmdVerify->add_option("--brute-order", va.bruteOrder, "enumeration depth for split checks")->check(CLI::NonNegativeNumber);
  cmdVerify->add_option("--lmax", va.lMax, "grid bound for l")->check(CLI::NonNegativeNumber);
  cmdVerify->add_option("--sabs", va.sAbs, "grid bound for |s|")->check(CLI::NonNegativeNumber);
  cmdVerify->add_option("--nmax", va.nMax, "grid bound for n")->check(CLI::NonNegativeNumber);
  cmdVerify->add_option("--mmax", va.mMax, "grid bound for m")->check(CLI::NonNegativeNumber);
  cmdVerify->add_option("--fault", va.fault, "inject id:slot exponent fault (testing aid)");
  cmdVerify->add_flag("--timings", va.timings, "emit real elapsedMillis");
  cmdVerify->add_option("--out", outPath, "output file");

  // ---- durfee ----
  auto* cmdDurfee = app.add_subcommand("durfee", "partition classification");
  cmdDurfee->require_subcommand(1);
  auto* durfeeClassify = cmdDurfee->add_subcommand("classify", "classify one partition");
  std::vector<int> parts;
  durfeeClassify->add_option("--parts", parts, "partition parts, e.g. 4,3,1")->delimiter(',');
  durfeeClassify->add_option("--l", l, "separation parameter")->required()->check(CLI::NonNegativeNumber);
  durfeeClassify->add_option("--n", n, "row shift")->required()->check(CLI::NonNegativeNumber);
  int mShift = 0;
  durfeeClassify->add_option("--m", mShift, "column shift")->required()->check(CLI::NonNegativeNumber);
  durfeeClassify->add_flag("--json", asJson, "JSON output");
  durfeeClassify->add_option("--out", outPath, "output file");

  // ---- render ----
  auto* cmdRender = app.add_subcommand("render", "emit SVG dissection figures");
  cmdRender->require_subcommand(1);
  std::string svgOut;
  auto* renderDurfee = cmdRender->add_subcommand("durfee", "one partition with its rectangles");
  renderDurfee->add_option("--parts", parts, "partition parts")->delimiter(',');
  renderDurfee->add_option("--l", l, "separation parameter")->required()->check(CLI::NonNegativeNumber);
  renderDurfee->add_option("--n", n, "row shift")->required()->check(CLI::NonNegativeNumber);
  renderDurfee->add_option("--m", mShift, "column shift")->required()->check(CLI::NonNegativeNumber);
  renderDurfee->add_option("--out", svgOut, "output SVG file")->required();

  int kmax = 2;
  auto* renderFamily = cmdRender->add_subcommand("family", "nested rectangle outlines");
  renderFamily->add_option("--l", l, "separation parameter")->required()->check(CLI::NonNegativeNumber);
  renderFamily->add_option("--n", n, "row shift")->required()->check(CLI::NonNegativeNumber);
  renderFamily->add_option("--m", mShift, "column shift")->required()->check(CLI::NonNegativeNumber);
  renderFamily->add_option("--kmax", kmax, "largest k outline")->required()->check(CLI::NonNegativeNumber);
  renderFamily->add_option("--out", svgOut, "output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  Output out;
  out.path = outPath;
  try {
    if (charFib->parsed()) return run_char("fib", n, l, 0, 0, 1, order, zmin, zmax, asJson, out);
    if (charInf->parsed()) {
      if (zmin > zmax) {
        std::cerr << "error: --zmin must not exceed --zmax\n";
        return 2;
      }
      return run_char("inf", 0, l, theta, 0, 1, order, zmin, zmax, asJson, out);
    }
    if (charVoa->parsed()) {
      if (zmin > zmax) {
        std::cerr << "error: --zmin must not exceed --zmax\n";
        return 2;
      }
      return run_char("voa", 0, 0, 0, iIdx, NIdx, order, zmin, zmax, asJson, out);
    }
    if (cmdVerify->parsed()) {
      if (vTheta >= 0) va.theta = vTheta;
      if (vL >= 0) va.l = vL;
      if (vS != -1000) va.s = vS;
      if (vN >= 0) va.n = vN;
      if (vM >= 0) va.m = vM;
      return run_verify(va, out);
    }
    if (durfeeClassify->parsed())
      return run_durfee_classify(parts, l, n, mShift, asJson, out);
    if (renderDurfee->parsed()) {
      const std::string svg = fibchar::render_durfee_svg(parse_parts(parts), l, n, mShift);
      std::ofstream f(svgOut, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot open " << svgOut << '\n';
        return 2;
      }
      f << svg;
      return 0;
    }
    if (renderFamily->parsed()) {
      const std::string svg = fibchar::render_family_svg(l, n, mShift, kmax);
      std::ofstream f(svgOut, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot open " << svgOut << '\n';
        return 2;
      }
      f << svg;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
