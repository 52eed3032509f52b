#include "fibchar/partitions.hpp"

#include <algorithm>
#include <map>

namespace fibchar {

Partition Partition::of(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1)
      throw BadArgument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw BadArgument("Partition: parts must be weakly decreasing");
  }
  return Partition{std::move(parts)};
}

long long Partition::n() const {
  long long s = 0;
  for (int p : parts) s += p;
  return s;
}

namespace {

void descend(int remaining, int maxPart, std::vector<int>& acc,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{acc});
    return;
  }
  for (int p = std::min(remaining, maxPart); p >= 1; --p) {
    acc.push_back(p);
    descend(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int N) {
  if (N < 0) throw BadArgument("enumerate_partitions: negative N");
  if (N > 45)
    throw CapExceeded("enumerate_partitions: N = " + std::to_string(N) +
                      " exceeds exhaustive cap 45");
  std::vector<Partition> out;
  std::vector<int> acc;
  descend(N, N == 0 ? 1 : N, acc, out);
  return out;
}

bool contains_rect(const Partition& p, int rows, int cols) {
  if (rows < 0 || cols < 0) throw BadArgument("contains_rect: negative side");
  if (rows == 0 || cols == 0) return true;
  if (static_cast<int>(p.parts.size()) < rows) return false;
  return p.parts[static_cast<std::size_t>(rows - 1)] >= cols;
}

DurfeeClass durfee_classify(const Partition& p, int l, int n, int m) {
  if (l < 0 || n < 0 || m < 0) throw BadArgument("durfee_classify: negative parameter");
  if (n >= 1 && m >= 1 && !contains_rect(p, n, m)) return DurfeeClass{false, 0, 0};
  int k = 0;
  while (contains_rect(p, k + 1 + n, (l + 1) * (k + 1) + m)) ++k;
  int i = 0;
  while (i < l && contains_rect(p, k + n + 1, (l + 1) * k + m + i + 1)) ++i;
  return DurfeeClass{true, k, i};
}

USeries class_genfun(int l, int n, int m, int k, int i, const QFactorialTable& tab) {
  if (i < 0 || i > l) throw BadArgument("class_genfun: class index outside 0..l");
  USeries out(tab.order());
  const long long rows = i == 0 ? k + n : k + n + 1;
  const long long cols = static_cast<long long>(l + 1) * k + m + i;
  const long long e = rows * cols;
  if (e > tab.order()) return out;
  out.add_scaled(tab.inv_pochhammer(k + n).mul(tab.inv_pochhammer(cols)),
                 static_cast<int>(e), 1);
  return out;
}

USeries norect_genfun(int l, int n, int m, const QFactorialTable& tab) {
  (void)l;
  USeries out(tab.order());
  if (n < 1 || m < 1) return out;
  for (int j = 0; j <= m - 1; ++j) {
    const long long e = static_cast<long long>(n) * j;
    if (e > tab.order()) break;
    out.add_scaled(tab.inv_pochhammer(n - 1).mul(tab.inv_pochhammer(j)),
                   static_cast<int>(e), 1);
  }
  return out;
}

namespace {

// Fault-aware copies of the generating functions; slots:
//   0: no-rectangle exponent n*j
//   1: class-0 exponent (k+n)((l+1)k+m)
//   2: class-i exponent (k+n+1)((l+1)k+m+i)
USeries norect_genfun_f(int l, int n, int m, const QFactorialTable& tab,
                        const Perturb& P) {
  (void)l;
  USeries out(tab.order());
  if (n < 1 || m < 1) return out;
  for (int j = 0; j <= m - 1; ++j) {
    const long long e = P(0, static_cast<long long>(n) * j);
    if (e > tab.order()) continue;
    out.add_scaled(tab.inv_pochhammer(n - 1).mul(tab.inv_pochhammer(j)),
                   static_cast<int>(e), 1);
  }
  return out;
}

USeries class_genfun_f(int l, int n, int m, int k, int i,
                       const QFactorialTable& tab, const Perturb& P) {
  USeries out(tab.order());
  const long long rows = i == 0 ? k + n : k + n + 1;
  const long long cols = static_cast<long long>(l + 1) * k + m + i;
  const long long e = P(i == 0 ? 1 : 2, rows * cols);
  if (e > tab.order()) return out;
  out.add_scaled(tab.inv_pochhammer(k + n).mul(tab.inv_pochhammer(cols)),
                 static_cast<int>(e), 1);
  return out;
}

USeries durfee_rhs(int l, int n, int m, const QFactorialTable& tab, const Perturb& P) {
  USeries rhs = norect_genfun_f(l, n, m, tab, P);
  for (int i = 0; i <= l; ++i) {
    for (int k = 0;; ++k) {
      const long long rows = i == 0 ? k + n : k + n + 1;
      const long long cols = static_cast<long long>(l + 1) * k + m + i;
      if (rows * cols > tab.order() && k > 0) break;
      rhs += class_genfun_f(l, n, m, k, i, tab, P);
      if (rows * cols > tab.order()) break;
    }
  }
  return rhs;
}

}  // namespace

IdentityReport durfee_identity_check(int l, int n, int m, int D, int censusCap,
                                     const QFactorialTable& tab, int faultSlot) {
  if (l < 0 || n < 0 || m < 0 || D < 0)
    throw BadArgument("durfee_identity_check: negative parameter");
  if (tab.order() < D) throw BadArgument("durfee_identity_check: table order too small");
  const Perturb P(faultSlot);
  IdentityReport rep;
  rep.id = "durfee";
  rep.params = {{"l", l}, {"n", n}, {"m", m}, {"censusCap", censusCap}};
  rep.order = D;

  const USeries lhs = tab.inv_pochhammer_inf();
  const USeries rhs = durfee_rhs(l, n, m, tab, P);
  if (auto mm = first_mismatch(lhs, rhs, D))
    rep.record(Mismatch{0, mm->first, mm->second.first, mm->second.second});

  // Independent combinatorial census: classify every partition and compare
  // per-class counts against the generating function coefficients.
  for (int N = 0; N <= std::min(D, censusCap) && !rep.firstMismatch; ++N) {
    std::map<std::pair<int, int>, long long> census;  // (k, i); NoRect = (-1, 0)
    long long total = 0;
    for (const auto& p : enumerate_partitions(N)) {
      const DurfeeClass c = durfee_classify(p, l, n, m);
      census[c.hasRect ? std::pair<int, int>{c.k, c.i} : std::pair<int, int>{-1, 0}]++;
      ++total;
    }
    if (total != tab.inv_pochhammer_inf().at(N)) {
      rep.record(Mismatch{-1, N, total, tab.inv_pochhammer_inf().at(N)});
      break;
    }
    // Verify every class that can contribute at q^N, including empty ones.
    const long long norectCount =
        census.count({-1, 0}) ? census.at({-1, 0}) : 0;
    if (norectCount != norect_genfun(l, n, m, tab).at(N)) {
      rep.record(Mismatch{-1, N, norectCount, norect_genfun(l, n, m, tab).at(N)});
      break;
    }
    for (int i = 0; i <= l && !rep.firstMismatch; ++i) {
      for (int k = 0;; ++k) {
        const long long rows = i == 0 ? k + n : k + n + 1;
        const long long cols = static_cast<long long>(l + 1) * k + m + i;
        if (rows * cols > N) break;
        const long long want = class_genfun(l, n, m, k, i, tab).at(N);
        const long long got =
            census.count({k, i}) ? census.at({k, i}) : 0;
        if (want != got) {
          rep.record(Mismatch{i, N, got, want});
          break;
        }
      }
    }
  }
  rep.finish();
  return rep;
}

IdentityReport line_equivalence_check(int l, int n1, int m1, int D,
                                      const QFactorialTable& tab, int faultSlot) {
  if (l < 0 || n1 < 0 || m1 < 0 || D < 0)
    throw BadArgument("line_equivalence_check: negative parameter");
  const Perturb P(faultSlot);
  IdentityReport rep;
  rep.id = "line-equivalence";
  rep.params = {{"l", l}, {"n1", n1}, {"m1", m1}};
  rep.order = D;

  // Support identity: indicator-guarded j-sum plus the head class equals the
  // shifted j-sum; both sides generate partitions missing (n1+1) x (m1+1).
  USeries lhs = norect_genfun_f(l, n1, m1, tab, P);
  {
    const long long e = P(1, static_cast<long long>(n1) * m1);
    if (e <= tab.order())
      lhs.add_scaled(tab.inv_pochhammer(n1).mul(tab.inv_pochhammer(m1)),
                     static_cast<int>(e), 1);
  }
  USeries rhs(tab.order());
  for (int j = 0; j <= m1; ++j) {
    const long long e = P(2, static_cast<long long>(n1 + 1) * j);
    if (e > tab.order()) continue;
    rhs.add_scaled(tab.inv_pochhammer(n1).mul(tab.inv_pochhammer(j)),
                   static_cast<int>(e), 1);
  }
  if (auto mm = first_mismatch(lhs, rhs, D))
    rep.record(Mismatch{0, mm->first, mm->second.first, mm->second.second});

  // The two neighbouring instances themselves, and their difference.
  const USeries inst1 = durfee_rhs(l, n1, m1, tab, P);
  const USeries inst2 = durfee_rhs(l, n1 + 1, m1 + l + 1, tab, P);
  if (!rep.firstMismatch) {
    if (auto mm = first_mismatch(inst1, inst2, D))
      rep.record(Mismatch{1, mm->first, mm->second.first, mm->second.second});
  }
  if (!rep.firstMismatch) {
    if (auto mm = first_mismatch(inst1, tab.inv_pochhammer_inf(), D))
      rep.record(Mismatch{2, mm->first, mm->second.first, mm->second.second});
  }
  rep.finish();
  return rep;
}

}  // namespace fibchar
