#include "fibchar/identities.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "fibchar/fibinfinite.hpp"
#include "fibchar/partitions.hpp"

namespace fibchar {

namespace {

using ZQD = std::function<long long(int)>;

// Unilateral sum  sum_{n >= 0} z^{zof(n)} q^{qof(n)} / (q)_{den(n)} as a
// truncation-exact QSeries; negative den(n) kills the term, terms above the
// truncation order are dropped.
QSeries sum_series(const QFactorialTable& tab, const ZQD& zof, const ZQD& qof,
                   const ZQD& den) {
  const int D = tab.order();
  const int bound = 2 * static_cast<int>(std::sqrt(2.0 * D + 4.0)) + 8;
  struct Term {
    int z;
    long long q;
    long long d;
  };
  std::vector<Term> terms;
  for (int n = 0; n <= bound; ++n) {
    const long long q = qof(n);
    const long long d = den(n);
    if (d < 0 || q < 0 || q > D) continue;
    terms.push_back({static_cast<int>(zof(n)), q, d});
  }
  int lo = 0, hi = 0;
  for (const auto& t : terms) {
    lo = std::min(lo, t.z);
    hi = std::max(hi, t.z);
  }
  QSeries out(D, lo, hi);
  for (const auto& t : terms)
    out.add_slice(t.z, tab.inv_pochhammer(t.d), static_cast<int>(t.q), 1);
  return out;
}

// Univariate variant of the same shape.
USeries sum_useries(const QFactorialTable& tab, const ZQD& qof, const ZQD& den1,
                    const ZQD& den2, long long sign = 1, int n0 = 0) {
  const int D = tab.order();
  const int bound = n0 + 2 * static_cast<int>(std::sqrt(2.0 * D + 4.0)) + 8;
  USeries out(D);
  for (int n = n0; n <= bound; ++n) {
    const long long d1 = den1(n);
    const long long d2 = den2(n);
    if (d1 < 0 || d2 < 0) continue;
    const long long q = qof(n);
    if (q < 0 || q > D) continue;
    out.add_scaled(tab.inv_pochhammer(d1).mul(tab.inv_pochhammer(d2)),
                   static_cast<int>(q), sign);
  }
  return out;
}

void compare_windows(IdentityReport& rep, QSeries lhs, QSeries rhs, int zAbs,
                     int D) {
  const int lo = std::min({lhs.z_min(), rhs.z_min(), -zAbs});
  const int hi = std::max({lhs.z_max(), rhs.z_max(), zAbs});
  lhs.ensure_window(lo, hi);
  rhs.ensure_window(lo, hi);
  rep.record(first_mismatch(lhs, rhs, lo, hi, D));
}

void compare_u(IdentityReport& rep, const USeries& lhs, const USeries& rhs,
               int D, int tag) {
  if (auto mm = first_mismatch(lhs, rhs, D))
    rep.record(Mismatch{tag, mm->first, mm->second.first, mm->second.second});
}

}  // namespace

CorrespondenceEntry correspondence(int theta, int l, int s) {
  if (l < 0 || theta < 0 || theta > l)
    throw BadTheta("correspondence: need 0 <= theta <= l");
  CorrespondenceEntry e;
  e.theta = theta;
  e.l = l;
  e.s = s;
  e.modulus = l + 1;
  if (s <= 0) {
    e.n = 0;
    e.m = l - s - l * s - theta;
  } else {
    e.n = s;
    e.m = l - theta;
  }
  return e;
}

IdentityReport check_jacobi(int D, int zAbs, const QFactorialTable& tab,
                            int faultSlot) {
  if (D < 0 || tab.order() < D) throw BadArgument("check_jacobi: bad order");
  const Perturb P(faultSlot);
  IdentityReport rep;
  rep.id = "jacobi";
  rep.order = D;
  rep.zMin = -zAbs;
  rep.zMax = zAbs;

  // Bilateral sum side.
  const int bound = static_cast<int>(std::sqrt(2.0 * D + 4.0)) + 3;
  std::vector<std::pair<int, long long>> slices;
  int lo = 0, hi = 0;
  for (int m = -bound; m <= bound; ++m) {
    const long long f = P(0, static_cast<long long>(m) * (m - 1) / 2);
    if (f < 0 || f > D) continue;
    slices.push_back({m, f});
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  QSeries lhs(D, lo, hi);
  for (auto [m, f] : slices)
    lhs.add_slice(m, tab.inv_pochhammer_inf(), static_cast<int>(f), 1);

  // Product side, folded factor by factor; factors beyond q^D cannot touch
  // coefficients below the truncation order.
  QSeries rhs = QSeries::from_poly(LaurentPoly::one(), D, 0, 0);
  for (int j = 0; j <= D; ++j) {
    const long long e = P(1, j);
    LaurentPoly f = LaurentPoly::one();
    if (e <= D) f.add_term(1, static_cast<int>(e), 1);
    rhs = rhs.mul(QSeries::from_poly(f, D, 0, 0));
  }
  for (int j = 1; j <= D; ++j) {
    const long long e = P(2, j);
    LaurentPoly f = LaurentPoly::one();
    if (e <= D) f.add_term(-1, static_cast<int>(e), 1);
    rhs = rhs.mul(QSeries::from_poly(f, D, 0, 0));
  }
  compare_windows(rep, lhs, rhs, zAbs, D);
  rep.finish();
  return rep;
}

IdentityReport check_l1_explicit(int theta, int D, int zAbs,
                                 const QFactorialTable& tab, int faultSlot) {
  if (theta != 0 && theta != 1)
    throw BadArgument("check_l1_explicit: variant theta must be 0 or 1");
  const Perturb P(faultSlot);
  IdentityReport rep;
  rep.id = "l1-explicit";
  rep.params = {{"theta", theta}, {"l", 1}};
  rep.order = D;
  rep.zMin = -zAbs;
  rep.zMax = zAbs;

  const int bound = static_cast<int>(std::sqrt(2.0 * D + 4.0)) + 3;
  std::vector<std::pair<int, long long>> slices;
  int lo = 0, hi = 0;
  for (int m = -bound; m <= bound; ++m) {
    const long long base = theta == 1 ? static_cast<long long>(m) * m
                                      : static_cast<long long>(m) * (m - 1);
    const long long f = P(0, base);
    if (f < 0 || f > D) continue;
    slices.push_back({m, f});
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  QSeries lhs(D, lo, hi);
  for (auto [m, f] : slices)
    lhs.add_slice(m, tab.inv_pochhammer_inf(), static_cast<int>(f), 1);

  QSeries rhs(D, 0, 0);
  if (theta == 1) {
    const QSeries a = sum_series(
        tab, [](int n) { return n; },
        [&](int n) { return P(1, static_cast<long long>(n) * n); },
        [](int n) { return n; });
    const QSeries b = sum_series(
        tab, [](int k) { return -k; },
        [&](int k) { return P(2, static_cast<long long>(k) * k); },
        [](int k) { return 2LL * k; });
    const QSeries c = sum_series(
        tab, [](int n) { return n; },
        [&](int n) { return P(3, static_cast<long long>(n) * (n + 1)); },
        [](int n) { return n; });
    const QSeries d = sum_series(
        tab, [](int k) { return -k; },
        [&](int k) { return P(4, static_cast<long long>(k + 1) * (k + 1)); },
        [](int k) { return 2LL * k + 1; });
    rhs = a.mul(b).add(c.mul(d));
  } else {
    const QSeries a = sum_series(
        tab, [](int n) { return n + 1; },
        [&](int n) { return P(1, static_cast<long long>(n) * (n + 1)); },
        [](int n) { return n; });
    const QSeries b = sum_series(
        tab, [](int k) { return -k; },
        [&](int k) { return P(2, static_cast<long long>(k) * (k + 1)); },
        [](int k) { return 2LL * k; });
    const QSeries c = sum_series(
        tab, [](int n) { return n; },
        [&](int n) { return P(3, static_cast<long long>(n) * n); },
        [](int n) { return n; });
    const QSeries d = sum_series(
        tab, [](int k) { return -k; },
        [&](int k) { return P(4, static_cast<long long>(k) * (k + 1)); },
        [](int k) { return 2LL * k + 1; });
    rhs = a.mul(b).add(c.mul(d));
  }
  compare_windows(rep, lhs, rhs, zAbs, D);
  rep.finish();
  return rep;
}

namespace {

// Normalized z^s slice of the (theta, l) character identity: the unified
// formula with the 1/(q)_{n<0} = 0 convention. Slot 0 perturbs the empty-slot
// summand's exponent, slot 1 the occupied-slot summands'.
USeries zslice_rhs(int theta, int l, int s, const QFactorialTable& tab,
                   const Perturb& P) {
  const int D = tab.order();
  USeries rhs(D);
  rhs += sum_useries(
      tab,
      [&](int m) {
        return P(0, static_cast<long long>(m + s) *
                        (static_cast<long long>(l + 1) * m + l - theta));
      },
      [&](int m) { return m + s; },
      [&](int m) { return static_cast<long long>(l + 1) * m + l - theta; });
  for (int i = 0; i <= l - 1; ++i) {
    rhs += sum_useries(
        tab,
        [&](int m) {
          return P(1, static_cast<long long>(m + s) *
                          (static_cast<long long>(l + 1) * m + i - theta));
        },
        [&](int m) { return m + s - 1; },
        [&](int m) { return static_cast<long long>(l + 1) * m + i - theta; });
  }
  return rhs;
}

// Printed l = 1 slice families, verified verbatim (two-sum form and combined
// three-term numerator form). Slots 2..6.
void check_printed_l1_slices(IdentityReport& rep, int theta, int s, int D,
                             const QFactorialTable& tab, const Perturb& P) {
  const USeries lhs = tab.inv_pochhammer_inf();
  USeries twoSum(D);
  USeries combined(D);
  if (theta == 1 && s >= 0) {
    twoSum += sum_useries(
        tab, [&](int k) { return P(2, 2LL * k * (k + s)); },
        [&](int k) { return k + s; }, [](int k) { return 2LL * k; });
    twoSum += sum_useries(
        tab, [&](int k) { return P(3, (2LL * k + 1) * (k + s + 1)); },
        [&](int k) { return k + s; }, [](int k) { return 2LL * k + 1; });
    for (long long sign : {1, 2, 3}) {
      combined += sum_useries(
          tab,
          [&](int k) {
            const long long base = P(4, 2LL * k * (k + s));
            if (sign == 1) return base;
            if (sign == 2) return base + P(5, 3LL * k + s + 1);
            return base + P(6, 2LL * k + 1);
          },
          [&](int k) { return k + s; }, [](int k) { return 2LL * k + 1; },
          sign == 3 ? -1 : 1);
    }
  } else if (theta == 1 && s < 0) {
    const int t = -s;
    twoSum += sum_useries(
        tab, [&](int n) { return P(2, 2LL * n * (n + t)); },
        [](int n) { return n; }, [&](int n) { return 2LL * (n + t); });
    twoSum += sum_useries(
        tab, [&](int n) { return P(3, (2LL * (n + t) + 1) * (n + 1)); },
        [](int n) { return n; }, [&](int n) { return 2LL * (n + t) + 1; });
    for (long long sign : {1, 2, 3}) {
      combined += sum_useries(
          tab,
          [&](int n) {
            const long long base = P(4, 2LL * n * (n + t));
            if (sign == 1) return base;
            if (sign == 2) return base + P(5, 2LL * (n + t) + n + 1);
            return base + P(6, 2LL * (n + t) + 1);
          },
          [](int n) { return n; }, [&](int n) { return 2LL * (n + t) + 1; },
          sign == 3 ? -1 : 1);
    }
  } else if (theta == 0 && s >= 1) {
    // The printed combined display drops the standalone 1/(q)_{s-1} head;
    // both assemblies here carry it, the three-term numerator is verbatim.
    twoSum.add_scaled(tab.inv_pochhammer(s - 1), 0, 1);
    combined.add_scaled(tab.inv_pochhammer(s - 1), 0, 1);
    twoSum += sum_useries(
        tab, [&](int k) { return P(2, (2LL * k + 1) * (k + s)); },
        [](int k) { return 2LL * k + 1; }, [&](int k) { return k + s; });
    twoSum += sum_useries(
        tab, [&](int k) { return P(3, (2LL * k + 2) * (k + s + 1)); },
        [](int k) { return 2LL * k + 2; }, [&](int k) { return k + s; });
    for (long long sign : {1, 2, 3}) {
      combined += sum_useries(
          tab,
          [&](int k) {
            const long long base = P(4, (2LL * k + 1) * (k + s));
            if (sign == 1) return base;
            if (sign == 2) return base + P(5, 3LL * k + s + 2);
            return base + P(6, 2LL * k + 2);
          },
          [&](int k) { return k + s; }, [](int k) { return 2LL * k + 2; },
          sign == 3 ? -1 : 1);
    }
  } else {  // theta == 0, s <= 0
    const int t = -s;
    twoSum += sum_useries(
        tab, [&](int n) { return P(2, 2LL * (n + 1) * (n + t + 1)); },
        [](int n) { return n; }, [&](int n) { return 2LL * (n + t + 1); });
    twoSum += sum_useries(
        tab, [&](int n) { return P(3, (2LL * (n + t) + 1) * n); },
        [](int n) { return n; }, [&](int n) { return 2LL * (n + t) + 1; });
    for (long long sign : {1, 2, 3}) {
      combined += sum_useries(
          tab,
          [&](int n) {
            const long long base = P(4, 2LL * n * (n + t) + n);
            if (sign == 1) return base;
            if (sign == 2) return base + P(5, 2LL * (n + t + 1) + n);
            return base + P(6, 2LL * (n + t + 1));
          },
          [](int n) { return n; }, [&](int n) { return 2LL * (n + t + 1); },
          sign == 3 ? -1 : 1);
    }
  }
  compare_u(rep, lhs, twoSum, D, 2);
  compare_u(rep, lhs, combined, D, 3);
}

}  // namespace

IdentityReport check_zslice(int theta, int l, int s, int D,
                            const QFactorialTable& tab, int faultSlot) {
  if (l < 0 || theta < 0 || theta > l)
    throw BadTheta("check_zslice: need 0 <= theta <= l");
  const Perturb P(faultSlot);
  IdentityReport rep;
  rep.id = "zslice";
  rep.params = {{"theta", theta}, {"l", l}, {"s", s}};
  rep.order = D;

  const USeries lhs = tab.inv_pochhammer_inf();
  const USeries rhs = zslice_rhs(theta, l, s, tab, P);
  compare_u(rep, lhs, rhs, D, 0);
  if (l == 1) check_printed_l1_slices(rep, theta, s, D, tab, P);
  rep.finish();
  return rep;
}

IdentityReport check_final_theta_zero(int l, int D, int zAbs,
                                      const QFactorialTable& tab, int faultSlot) {
  if (l < 0) throw BadArgument("check_final_theta_zero: negative l");
  const Perturb P(faultSlot);
  IdentityReport rep;
  rep.id = "final-theta-zero";
  rep.params = {{"l", l}};
  rep.order = D;
  rep.zMin = -zAbs;
  rep.zMax = zAbs;

  const int bound = static_cast<int>(std::sqrt(2.0 * D / (l + 1))) + 4;
  std::vector<std::pair<int, long long>> slices;
  int lo = 0, hi = 0;
  for (int m = -bound; m <= bound; ++m) {
    const long long f =
        P(0, static_cast<long long>(l + 1) * m * (m - 1) / 2);
    if (f < 0 || f > D) continue;
    slices.push_back({m, f});
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  QSeries lhs(D, lo, hi);
  for (auto [m, f] : slices)
    lhs.add_slice(m, tab.inv_pochhammer_inf(), static_cast<int>(f), 1);

  QSeries rhs(D, 0, 0);
  for (int i = 0; i <= l; ++i) {
    const int delta = i == 0 ? 1 : 0;
    const long long pre = P(1, i - 1 + delta);
    if (pre < 0 || pre > D) continue;
    const QSeries right = sum_series(
        tab, [](int n) { return n; },
        [&](int n) {
          return P(2, static_cast<long long>(l + i) * n +
                          static_cast<long long>(l + 1) * n * (n - 1) / 2);
        },
        [](int n) { return n; });
    const QSeries left = sum_series(
        tab, [](int k) { return -k; },
        [&](int k) {
          return P(3, static_cast<long long>(l + 1) * k * (k + 1) / 2);
        },
        [&](int k) {
          return static_cast<long long>(l + 1) * (k + delta) + i - 1;
        });
    // The derivation's summand prefactor is z q^{i-1} for i >= 1 and 1 for
    // i = 0 (matching the split decomposition).
    rhs = rhs.add(right.mul(left).times_monomial(1, i == 0 ? 0 : 1,
                                                 static_cast<int>(pre)));
  }
  compare_windows(rep, lhs, rhs, zAbs, D);
  rep.finish();
  return rep;
}

IdentityReport check_correspondence(int theta, int l, int s, int D,
                                    const QFactorialTable& tab, int faultSlot) {
  const CorrespondenceEntry e = correspondence(theta, l, s);
  const Perturb P(faultSlot);
  IdentityReport rep;
  rep.id = "correspondence";
  rep.params = {{"theta", theta}, {"l", l},          {"s", s},
                {"n", e.n},       {"m", e.m},        {"modulus", e.modulus}};
  rep.order = D;

  const USeries slice = zslice_rhs(theta, l, s, tab, P);
  // Unperturbed Durfee side: any armed fault must surface as a mismatch.
  USeries durfee = norect_genfun(l, e.n, e.m, tab);
  for (int i = 0; i <= l; ++i) {
    for (int k = 0;; ++k) {
      const long long rows = i == 0 ? k + e.n : k + e.n + 1;
      const long long cols = static_cast<long long>(l + 1) * k + e.m + i;
      if (rows * cols > D) break;
      durfee += class_genfun(l, e.n, e.m, k, i, tab);
    }
  }
  compare_u(rep, slice, durfee, D, 0);
  if (!rep.firstMismatch)
    compare_u(rep, slice, tab.inv_pochhammer_inf(), D, 1);
  rep.finish();
  return rep;
}

std::vector<int> active_fault_slots(const std::string& id, int theta, int l,
                                    int s, int n, int m) {
  (void)theta;
  (void)s;
  if (id == "jacobi") return {0, 1, 2};
  if (id == "l1-explicit") return {0, 1, 2, 3, 4};
  if (id == "zslice") {
    if (l == 1) return {0, 1, 2, 3, 4, 5, 6};
    return {0, 1};
  }
  if (id == "final-theta-zero") return {0, 1, 2, 3};
  if (id == "correspondence") return {0, 1};
  if (id == "durfee") {
    std::vector<int> slots = {1, 2};
    if (n >= 1 && m >= 1) slots.insert(slots.begin(), 0);
    return slots;
  }
  if (id == "line-equivalence") {
    std::vector<int> slots = {1, 2};
    if (n >= 1 && m >= 1) slots.insert(slots.begin(), 0);
    return slots;
  }
  return {};
}

std::vector<IdentityReport> run_suite(const SuiteConfig& config) {
  if (config.order < 0) throw BadArgument("run_suite: negative order");
  QFactorialTable tab(config.order);
  std::vector<IdentityReport> out;

  const auto slot = [&](const std::string& id) {
    return config.faultId == id ? config.faultSlot : -1;
  };
  const auto timed = [&](const std::string& id,
                         const std::function<IdentityReport()>& f) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    try {
      rep = f();
    } catch (const std::exception&) {
      rep.id = id;
      rep.match = false;
      rep.params.push_back({"error", 1});
      rep.firstMismatch = Mismatch{0, 0, 0, 0};
    }
    rep.elapsedMillis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    out.push_back(rep);
  };

  timed("jacobi",
        [&] { return check_jacobi(config.order, config.zAbs, tab, slot("jacobi")); });
  for (int theta : {1, 0})
    timed("l1-explicit", [&] {
      return check_l1_explicit(theta, config.order, config.zAbs, tab,
                               slot("l1-explicit"));
    });
  for (int l = 0; l <= config.lMax; ++l)
    timed("final-theta-zero", [&] {
      return check_final_theta_zero(l, config.order, config.zAbs, tab,
                                    slot("final-theta-zero"));
    });
  for (int l = 0; l <= config.lMax; ++l)
    for (int theta = 0; theta <= l; ++theta)
      timed("split", [&] {
        return split_identity_check(theta, l, config.order, config.zAbs, tab,
                                    config.bruteOrder);
      });
  for (int l = 0; l <= config.lMax; ++l)
    for (int theta = 0; theta <= l; ++theta)
      for (int s = -config.sAbs; s <= config.sAbs; ++s)
        timed("zslice", [&] {
          return check_zslice(theta, l, s, config.order, tab, slot("zslice"));
        });
  for (int l = 0; l <= config.lMax; ++l)
    for (int n = 0; n <= config.nMax; ++n)
      for (int m = 0; m <= config.mMax; ++m)
        timed("durfee", [&] {
          return durfee_identity_check(l, n, m, config.order, config.censusCap,
                                       tab, slot("durfee"));
        });
  for (int l = 0; l <= config.lMax; ++l)
    for (int n = 0; n <= config.nMax; ++n)
      for (int m = 0; m <= config.mMax; ++m)
        timed("line-equivalence", [&] {
          return line_equivalence_check(l, n, m, config.order, tab,
                                        slot("line-equivalence"));
        });
  for (int l = 0; l <= config.lMax; ++l)
    for (int theta = 0; theta <= l; ++theta)
      for (int s = -config.sAbs; s <= config.sAbs; ++s)
        timed("correspondence", [&] {
          return check_correspondence(theta, l, s, config.order, tab,
                                      slot("correspondence"));
        });
  return out;
}

}  // namespace fibchar
