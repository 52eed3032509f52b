#include "fibchar/voachar.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fibchar {

Rational Rational::of(long long num, long long den) {
  if (den == 0) throw BadArgument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den == 0 ? 1 : den};
}

ShiftedSeries voa_char(int i, int N, int D, int zMin, int zMax) {
  if (N < 1) throw BadModuleIndex("voa_char: N must be positive");
  if (i < 0 || i >= N)
    throw BadModuleIndex("voa_char: module index i must lie in 0..N-1, got " +
                         std::to_string(i));
  // i^2/(2N) - i/2 = i(i - N)/(2N), exact.
  const Rational offset =
      Rational::of(static_cast<long long>(i) * (i - N), 2LL * N);
  return ShiftedSeries{offset, inf_char_closed(i, N - 1, D, zMin, zMax)};
}

MonomialIndices tau(const InfFibConfig& a) {
  a.validate();
  const int l = a.l;
  // Occupied positions, descending: the finite deviations followed by the
  // untouched vacuum tail. The first tail particle is the topmost vacuum
  // particle below every deviation that was not removed.
  int firstTail = a.theta - (l + 1);
  {
    int low = firstTail;
    for (int p : a.added) low = std::min(low, p);
    for (int p : a.removed) low = std::min(low, p);
    low -= l + 1;
    while (!(a.occupied(firstTail) && firstTail <= low)) {
      firstTail -= (l + 1);
      if (a.theta - firstTail > (1 << 24))
        throw InvalidConfiguration("tau: runaway tail search");
    }
  }
  MonomialIndices out;
  std::vector<int> desc;
  for (int p = a.theta; p > firstTail; --p)
    if (a.occupied(p)) desc.push_back(p);
  // Positions above theta: only finitely many additions.
  for (int p : a.added)
    if (p > a.theta) desc.push_back(p);
  std::sort(desc.begin(), desc.end(), std::greater<int>());
  for (int p : desc) out.prefix.push_back(-static_cast<long long>(p));
  out.tailStart = out.prefix.size();
  out.prefix.push_back(-static_cast<long long>(firstTail));
  out.tailGap = l + 1;
  out.tailResidue = ((-static_cast<long long>(firstTail)) % out.tailGap +
                     out.tailGap) %
                    out.tailGap;
  return out;
}

Theorem2Report theorem2_audit(int i, int N, int D) {
  if (N < 1 || i < 0 || i >= N)
    throw BadModuleIndex("theorem2_audit: need 0 <= i < N");
  Theorem2Report rep;
  rep.i = i;
  rep.N = N;
  rep.order = D;

  const int l = N - 1;
  QSeries counts(D, -D - 2, D + 2);
  for (const auto& cfg : enumerate_upto(i, l, D)) {
    ++rep.configsChecked;
    const MonomialIndices idx = tau(cfg);
    for (std::size_t k = 0; k + 1 < idx.prefix.size(); ++k) {
      if (idx.prefix[k] >= idx.prefix[k + 1]) rep.increasing = false;
      if (idx.prefix[k + 1] - idx.prefix[k] < N) rep.gapsAtLeastN = false;
    }
    if (idx.tailGap != N) rep.tailGapIsN = false;
    const long long wantConfig = ((N - i) % N + N) % N;  // (-i) mod N
    const long long wantPrinted = ((i % N) + N) % N;
    if (idx.tailResidue != wantConfig) rep.tailResidueMatchesConfigs = false;
    if (idx.tailResidue != wantPrinted) rep.tailResidueMatchesPrinted = false;
    counts.add_term(static_cast<int>(cfg.charge()),
                    static_cast<int>(cfg.energy()), 1);
  }

  QSeries body = inf_char_closed(i, l, D, -D - 2, D + 2);
  counts.ensure_window(body.z_min(), body.z_max());
  body.ensure_window(counts.z_min(), counts.z_max());
  if (auto mm = first_mismatch(body, counts, counts.z_min(), counts.z_max(), D)) {
    rep.countsMatch = false;
    rep.firstCountMismatch = mm;
  }
  return rep;
}

}  // namespace fibchar
