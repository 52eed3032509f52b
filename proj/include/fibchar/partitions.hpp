#pragma once

#include <string>
#include <vector>

#include "fibchar/report.hpp"
#include "fibchar/series.hpp"

namespace fibchar {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, every part >= 1

  static Partition of(std::vector<int> parts);  // validates
  long long n() const;
  bool operator==(const Partition&) const = default;
};

std::vector<Partition> enumerate_partitions(int N);

// True iff the Young diagram of p contains a rows x cols rectangle, i.e. p
// has at least `rows` parts each of size >= cols. Empty rectangles are
// always contained.
bool contains_rect(const Partition& p, int rows, int cols);

// Classification by the Durfee rectangle of slope 1:(l+1) with shifts (n, m):
// either the partition misses the n x m rectangle entirely (NoRect), or
// there is a maximal k with the (k+n) x ((l+1)k+m) rectangle contained, and
// an index i in 0..l locating the largest enveloping rectangle
// (k+n+1) x ((l+1)k+m+i) still contained.
struct DurfeeClass {
  bool hasRect = true;
  int k = 0;
  int i = 0;
  bool operator==(const DurfeeClass&) const = default;
};

DurfeeClass durfee_classify(const Partition& p, int l, int n, int m);

// Generating function of the class (k, i):
//   i = 0: q^{(k+n)((l+1)k+m)} / ((q)_{k+n} (q)_{(l+1)k+m})
//   i >= 1: q^{(k+n+1)((l+1)k+m+i)} / ((q)_{k+n} (q)_{(l+1)k+m+i})
USeries class_genfun(int l, int n, int m, int k, int i, const QFactorialTable& tab);

// Generating function of the partitions missing the n x m rectangle; zero
// whenever n = 0 or m = 0.
USeries norect_genfun(int l, int n, int m, const QFactorialTable& tab);

// Verifies 1/(q)_inf = norect + sum over classes up to q^D, and (when
// censusCap > 0) classifies every partition of every N <= min(D, censusCap),
// checking the per-class census against each generating function coefficient
// and that the census totals p(N).
IdentityReport durfee_identity_check(int l, int n, int m, int D, int censusCap,
                                     const QFactorialTable& tab, int faultSlot = -1);

// Verifies the shift identity connecting the (n1, m1) and (n1+1, m1+l+1)
// instances: the NoRect + head-class tail rearrangement, plus both instances
// outright.
IdentityReport line_equivalence_check(int l, int n1, int m1, int D,
                                      const QFactorialTable& tab, int faultSlot = -1);

}  // namespace fibchar
