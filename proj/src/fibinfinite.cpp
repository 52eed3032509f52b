#include "fibchar/fibinfinite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fibchar/fibfinite.hpp"

namespace fibchar {

namespace {

void check_type(int theta, int l) {
  if (l < 0 || theta < 0 || theta > l)
    throw BadTheta("configuration type requires 0 <= theta <= l, got theta = " +
                   std::to_string(theta) + ", l = " + std::to_string(l));
}

// Minimal q-exponent of the z^m slice of the bilateral character.
long long slice_floor(int theta, int l, long long m) {
  return theta * m + static_cast<long long>(l + 1) * m * (m - 1) / 2;
}

// Hull of the charges whose slice can contribute below q^D.
std::pair<int, int> charge_support(int theta, int l, int D) {
  const int bound = static_cast<int>(std::sqrt(2.0 * D / (l + 1))) + theta + 3;
  int sMin = 0, sMax = 0;
  for (int m = -bound; m <= bound; ++m)
    if (slice_floor(theta, l, m) <= D) {
      sMin = std::min(sMin, m);
      sMax = std::max(sMax, m);
    }
  return {sMin, sMax};
}

}  // namespace

bool InfFibConfig::is_vacuum_position(int pos) const {
  if (pos > theta - (l + 1)) return false;
  const int d = theta - pos;
  return d % (l + 1) == 0;
}

bool InfFibConfig::occupied(int pos) const {
  if (added.count(pos)) return true;
  if (removed.count(pos)) return false;
  return is_vacuum_position(pos);
}

long long InfFibConfig::charge() const {
  return static_cast<long long>(added.size()) - static_cast<long long>(removed.size());
}

long long InfFibConfig::energy() const {
  long long e = 0;
  for (int p : added) e += p;
  for (int p : removed) e -= p;
  return e;
}

bool InfFibConfig::operator<(const InfFibConfig& o) const {
  return std::tie(theta, l, added, removed) <
         std::tie(o.theta, o.l, o.added, o.removed);
}

void InfFibConfig::validate() const {
  check_type(theta, l);
  for (int p : added)
    if (is_vacuum_position(p))
      throw InvalidConfiguration("added position " + std::to_string(p) +
                                 " is already occupied by the vacuum");
  for (int p : removed)
    if (!is_vacuum_position(p))
      throw InvalidConfiguration("removed position " + std::to_string(p) +
                                 " is not a vacuum position");
  // Separation: collect occupied positions over the disturbed region plus one
  // untouched vacuum particle below it, then check consecutive gaps.
  int lo = theta - (l + 1);
  int hi = theta;
  for (int p : added) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  for (int p : removed) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  lo -= 2 * (l + 1);
  std::vector<int> occ;
  for (int p = hi; p >= lo; --p)
    if (occupied(p)) occ.push_back(p);
  for (std::size_t i = 0; i + 1 < occ.size(); ++i)
    if (occ[i] - occ[i + 1] <= l)
      throw InvalidConfiguration("positions " + std::to_string(occ[i + 1]) +
                                 " and " + std::to_string(occ[i]) +
                                 " violate the distance-" + std::to_string(l) +
                                 " constraint");
}

InfFibConfig vacuum_config(int theta, int l) {
  check_type(theta, l);
  return InfFibConfig{theta, l, {}, {}};
}

namespace {

// Windowed enumeration of all configurations with energy <= D. Positions are
// decided from hi down to lo; below lo the configuration is frozen to the
// vacuum. An exact minimal-completion table prunes the walk:
//   F[i][t] = minimal energy contribution of positions <= i over valid
//             assignments whose topmost particle within [lo, i] (or the
//             frozen vacuum particle vLo) sits at t.
class InfEnumerator {
 public:
  InfEnumerator(int theta, int l, int D, int margin)
      : theta_(theta), l_(l), D_(D) {
    lo_ = -((l + 1) * (D + 2) + theta + l + 1) - margin;
    hi_ = D + margin;
    // Topmost frozen vacuum particle strictly below lo.
    vLo_ = theta_ - (l_ + 1);
    while (vLo_ >= lo_) vLo_ -= (l_ + 1);
    width_ = hi_ - lo_ + 1;
    build_tables();
  }

  std::vector<InfFibConfig> run() {
    std::vector<InfFibConfig> out;
    std::vector<int> particles;
    walk(hi_, sentinel(), 0, particles, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int theta_, l_, D_;
  int lo_, hi_, vLo_, width_;
  // fmin_[i - lo_ + 1] is the prefix-minimum over t of F at position i;
  // index 0 in the t-axis is vLo, index j >= 1 is position lo_ + j - 1.
  std::vector<std::vector<long long>> fmin_;

  static long long infty() { return std::numeric_limits<long long>::max() / 4; }
  int sentinel() const { return hi_ + l_ + 2; }

  bool vac(int pos) const {
    if (pos > theta_ - (l_ + 1)) return false;
    return (theta_ - pos) % (l_ + 1) == 0;
  }
  long long cost_unoccupied(int pos) const { return vac(pos) ? -static_cast<long long>(pos) : 0; }
  long long cost_occupied(int pos) const { return vac(pos) ? 0 : static_cast<long long>(pos); }

  int t_index(int t) const { return t == vLo_ ? 0 : t - lo_ + 1; }

  void build_tables() {
    std::vector<long long> F(static_cast<std::size_t>(width_) + 1, infty());
    F[0] = 0;  // only the frozen vacuum below lo
    fmin_.assign(static_cast<std::size_t>(width_) + 1, {});
    fmin_[0] = prefix_min(F);
    for (int i = lo_; i <= hi_; ++i) {
      std::vector<long long> next(F);
      const long long cu = cost_unoccupied(i);
      for (std::size_t t = 0; t < next.size(); ++t)
        if (next[t] < infty()) next[t] += cu;
      // occupy i: best predecessor with topmost <= i - (l+1)
      const int cut = i - (l_ + 1);
      const long long best = min_upto(fmin_[static_cast<std::size_t>(i - lo_)], cut);
      if (best < infty()) {
        auto& cell = next[static_cast<std::size_t>(t_index(i))];
        cell = std::min(cell, best + cost_occupied(i));
      }
      F = std::move(next);
      fmin_[static_cast<std::size_t>(i - lo_ + 1)] = prefix_min(F);
    }
  }

  static std::vector<long long> prefix_min(const std::vector<long long>& F) {
    std::vector<long long> m(F);
    for (std::size_t i = 1; i < m.size(); ++i) m[i] = std::min(m[i], m[i - 1]);
    return m;
  }

  // Minimum of F over all t <= cut (positions), given the prefix-min row.
  long long min_upto(const std::vector<long long>& row, int cut) const {
    if (cut < vLo_) return infty();
    int idx = cut < lo_ ? 0 : cut - lo_ + 1;
    idx = std::min(idx, static_cast<int>(row.size()) - 1);
    return row[static_cast<std::size_t>(idx)];
  }

  void walk(int i, int last, long long energy, std::vector<int>& particles,
            std::vector<InfFibConfig>& out) {
    if (i < lo_) {
      if (last != sentinel() && last - vLo_ <= l_) return;
      if (energy > D_) return;
      emit(particles, out);
      return;
    }
    // Exact lower bound for any completion of positions <= i.
    const int cut = std::min(i, last - (l_ + 1));
    const long long fut = min_upto(fmin_[static_cast<std::size_t>(i - lo_ + 1)], cut);
    if (fut >= infty() || energy + fut > D_) return;

    walk(i - 1, last, energy + cost_unoccupied(i), particles, out);
    if (last - i >= l_ + 1) {
      particles.push_back(i);
      walk(i - 1, i, energy + cost_occupied(i), particles, out);
      particles.pop_back();
    }
  }

  void emit(const std::vector<int>& particles, std::vector<InfFibConfig>& out) const {
    InfFibConfig cfg{theta_, l_, {}, {}};
    std::set<int> chosen(particles.begin(), particles.end());
    for (int p : particles)
      if (!vac(p)) cfg.added.insert(p);
    for (int p = lo_; p <= hi_; ++p)
      if (vac(p) && !chosen.count(p)) cfg.removed.insert(p);
    out.push_back(std::move(cfg));
  }
};

}  // namespace

std::vector<InfFibConfig> enumerate_upto(int theta, int l, int energyBound,
                                         int windowMargin) {
  check_type(theta, l);
  if (energyBound < 0) throw BadArgument("enumerate_upto: negative energy bound");
  return InfEnumerator(theta, l, energyBound, windowMargin).run();
}

QSeries inf_char_brute(int theta, int l, int D, int zMin, int zMax,
                       int windowMargin) {
  QSeries out(D, zMin, zMax);
  for (const auto& cfg : enumerate_upto(theta, l, D, windowMargin)) {
    const long long c = cfg.charge();
    const long long e = cfg.energy();
    if (!out.window_contains(static_cast<int>(c)))
      throw WindowUnderflow("inf_char_brute: configuration of charge " +
                            std::to_string(c) + " exits window [" +
                            std::to_string(zMin) + ", " + std::to_string(zMax) + "]");
    out.add_term(static_cast<int>(c), static_cast<int>(e), 1);
  }
  return out;
}

QSeries inf_char_closed(int theta, int l, const QFactorialTable& tab, int zMin,
                        int zMax) {
  check_type(theta, l);
  const int D = tab.order();
  // Slices with floor above D vanish; the loop range covers both tails.
  const auto [sMin, sMax] = charge_support(theta, l, D);
  QSeries out(D, std::min(sMin, zMin), std::max(sMax, zMax));
  for (int m = sMin; m <= sMax; ++m) {
    const long long f = slice_floor(theta, l, m);
    if (f > D) continue;
    out.add_slice(m, tab.inv_pochhammer_inf(), static_cast<int>(f), 1);
  }
  return out;
}

QSeries inf_char_closed(int theta, int l, int D, int zMin, int zMax) {
  QFactorialTable tab(D);
  return inf_char_closed(theta, l, tab, zMin, zMax);
}

QSeries inf_char_stabilized(int theta, int l, int k, int D, int zMin, int zMax) {
  check_type(theta, l);
  if (k < 1) throw BadArgument("inf_char_stabilized: stabilization depth k >= 1");
  QFactorialTable tab(D);
  const int bound = static_cast<int>(std::sqrt(2.0 * D / (l + 1))) + theta + k + 3;
  int sMin = -k + 1, sMax = -k + 1;
  for (int m = -k + 1; m <= bound; ++m)
    if (slice_floor(theta, l, m) <= D) sMax = std::max(sMax, m);
  QSeries out(D, std::min(sMin, zMin), std::max(sMax, zMax));
  for (int m = -k + 1; m <= sMax; ++m) {
    const long long f = slice_floor(theta, l, m);
    if (f > D) continue;
    out.add_slice(m, tab.inv_pochhammer(m + k - 1), static_cast<int>(f), 1);
  }
  return out;
}

QSeries right_char(int theta, int l, std::optional<int> slot,
                   const QFactorialTable& tab) {
  check_type(theta, l);
  const int D = tab.order();
  int shift;
  if (slot.has_value()) {
    if (*slot < 0 || *slot >= l)
      throw BadArgument("right_char: slot must lie in 0..l-1");
    shift = *slot + l + 1;
  } else {
    shift = l;
  }
  // P^l_inf(z q^shift): slice n has floor shift*n + (l+1)n(n-1)/2.
  int nMax = 0;
  while (static_cast<long long>(shift) * (nMax + 1) +
             static_cast<long long>(l + 1) * (nMax + 1) * nMax / 2 <=
         D)
    ++nMax;
  QSeries out(D, 0, nMax);
  for (int n = 0; n <= nMax; ++n) {
    const long long f = static_cast<long long>(shift) * n +
                        static_cast<long long>(l + 1) * n * (n - 1) / 2;
    if (f > D) continue;
    out.add_slice(n, tab.inv_pochhammer(n), static_cast<int>(f), 1);
  }
  return out;
}

int left_char_alpha(int theta, int l, int k) {
  const int s = theta + k;
  if (s >= 1 && s <= l + 1) return 0;
  if (s > l + 1 && s <= 2 * l + 1) return 1;
  throw BadArgument("left_char: theta + k = " + std::to_string(s) +
                    " outside 1..2l+1");
}

QSeries left_char(int theta, int l, int k, const QFactorialTable& tab) {
  check_type(theta, l);
  if (k < 1 || k > l + 1) throw BadArgument("left_char: k must lie in 1..l+1");
  const int D = tab.order();
  const int alpha = left_char_alpha(theta, l, k);
  int mMax = alpha;
  while (static_cast<long long>(l + 1) * (mMax + 1) * (mMax + 2) / 2 -
             static_cast<long long>(theta) * (mMax + 1) <=
         D)
    ++mMax;
  QSeries out(D, -mMax, -alpha);
  for (int m = alpha; m <= mMax; ++m) {
    const long long f = static_cast<long long>(l + 1) * m * (m + 1) / 2 -
                        static_cast<long long>(theta) * m;
    if (f > D) continue;
    const long long den = static_cast<long long>(m + 1) * (l + 1) - theta - k;
    out.add_slice(-m, tab.inv_pochhammer(den), static_cast<int>(f), 1);
  }
  return out;
}

namespace {

// One stabilized finite stage of the left-part limit: the q^{-1}-substituted
// finite character with the vacuum-weight prefactor
// z^{-b} q^{(l+1)b(b+1)/2 - theta b}, as an exact Laurent polynomial.
LaurentPoly left_char_stage(int theta, int l, int k, int b) {
  const int n = b * (l + 1) - theta - k + 1;
  if (n < 0) throw BadArgument("left_char_stage: depth too small");
  const LaurentPoly chi = fib_p_poly(n + l, l);
  const LaurentPoly sub = chi.substituted(1, -k, /*qInvert=*/true);
  const long long w = static_cast<long long>(l + 1) * b * (b + 1) / 2 -
                      static_cast<long long>(theta) * b;
  return LaurentPoly::monomial(1, -b, static_cast<int>(w)) * sub;
}

}  // namespace

QSeries left_char_via_limit(int theta, int l, int k, int D) {
  check_type(theta, l);
  if (k < 1 || k > l + 1) throw BadArgument("left_char_via_limit: k in 1..l+1");
  const int b = D + l + k + 2;
  const LaurentPoly p1 = left_char_stage(theta, l, k, b);
  const LaurentPoly p2 = left_char_stage(theta, l, k, b + 1);
  const QSeries s1 = QSeries::from_poly(p1, D, 0, 0);
  const QSeries s2 = QSeries::from_poly(p2, D, 0, 0);
  const int zlo = std::min(s1.z_min(), s2.z_min());
  const int zhi = std::max(s1.z_max(), s2.z_max());
  QSeries a = s1;
  a.ensure_window(zlo, zhi);
  QSeries bq = s2;
  bq.ensure_window(zlo, zhi);
  if (auto mm = first_mismatch(a, bq, zlo, zhi, D))
    throw BadArgument("left_char_via_limit: depths " + std::to_string(b) + " and " +
                      std::to_string(b + 1) + " disagree at z^" +
                      std::to_string(mm->zExp) + " q^" + std::to_string(mm->qExp) +
                      "; depth too small for order " + std::to_string(D));
  return s1;
}

IdentityReport split_identity_check(int theta, int l, int D, int zAbs,
                                    const QFactorialTable& tab, int bruteOrder) {
  check_type(theta, l);
  if (tab.order() < D) throw BadArgument("split_identity_check: table too small");
  if (bruteOrder < 0) bruteOrder = D;
  IdentityReport rep;
  rep.id = "split";
  rep.params = {{"theta", theta}, {"l", l}, {"bruteOrder", bruteOrder}};
  rep.order = D;
  rep.zMin = -zAbs;
  rep.zMax = zAbs;

  QSeries rhs = left_char(theta, l, 1, tab).mul(right_char(theta, l, std::nullopt, tab));
  for (int i = 0; i <= l - 1; ++i) {
    const QSeries part =
        left_char(theta, l, l + 1 - i, tab).mul(right_char(theta, l, i, tab));
    rhs = rhs.add(part.times_monomial(1, 1, i));
  }
  QSeries lhs = inf_char_closed(theta, l, tab, -zAbs, zAbs);
  rhs.ensure_window(lhs.z_min(), lhs.z_max());
  lhs.ensure_window(rhs.z_min(), rhs.z_max());
  rep.record(first_mismatch(lhs, rhs, -zAbs, zAbs, D));

  // Brute enumeration cross-check at two window margins; the window must
  // admit every charge reachable within the energy bound.
  if (!rep.firstMismatch) {
    const auto [cMin, cMax] = charge_support(theta, l, bruteOrder);
    const int blo = std::min(cMin, -zAbs);
    const int bhi = std::max(cMax, zAbs);
    QSeries brute = inf_char_brute(theta, l, bruteOrder, blo, bhi, 0);
    QSeries brute2 = inf_char_brute(theta, l, bruteOrder, blo, bhi, l + 2);
    rep.record(first_mismatch(brute, brute2, blo, bhi, bruteOrder));
    if (!rep.firstMismatch) {
      QSeries closed = inf_char_closed(theta, l, bruteOrder, -zAbs, zAbs);
      brute.ensure_window(closed.z_min(), closed.z_max());
      closed.ensure_window(brute.z_min(), brute.z_max());
      rep.record(first_mismatch(closed, brute,
                                std::min(brute.z_min(), -zAbs),
                                std::max(brute.z_max(), zAbs), bruteOrder));
    }
  }
  rep.finish();
  return rep;
}

}  // namespace fibchar
