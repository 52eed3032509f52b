#pragma once

#include <string>
#include <vector>

#include "fibchar/report.hpp"
#include "fibchar/series.hpp"

namespace fibchar {

// Image of the (theta, l, s) slice identity in the two-parameter Durfee
// family (n, m) at modulus l+1.
struct CorrespondenceEntry {
  int theta = 0;
  int l = 0;
  int s = 0;
  int n = 0;
  int m = 0;
  int modulus = 0;
  bool operator==(const CorrespondenceEntry&) const = default;
};

CorrespondenceEntry correspondence(int theta, int l, int s);

IdentityReport check_jacobi(int D, int zAbs, const QFactorialTable& tab,
                            int faultSlot = -1);

// theta = 1 checks the (1,1) explicit two-product identity, theta = 0 the
// (0,1) one, each against the bilateral character.
IdentityReport check_l1_explicit(int theta, int D, int zAbs,
                                 const QFactorialTable& tab, int faultSlot = -1);

// z^s slice of the (theta, l) character identity, normalized to 1/(q)_inf
// form via the 1/(q)_{n<0} = 0 convention; for l = 1 the printed slice
// families (two-sum and combined three-term numerator forms) are verified
// verbatim as well.
IdentityReport check_zslice(int theta, int l, int s, int D,
                            const QFactorialTable& tab, int faultSlot = -1);

IdentityReport check_final_theta_zero(int l, int D, int zAbs,
                                      const QFactorialTable& tab,
                                      int faultSlot = -1);

IdentityReport check_correspondence(int theta, int l, int s, int D,
                                    const QFactorialTable& tab,
                                    int faultSlot = -1);

// Fault slots available per catalog identity, for sensitivity sweeps.
std::vector<int> active_fault_slots(const std::string& id, int theta, int l,
                                    int s, int n, int m);

struct SuiteConfig {
  int order = 30;
  int zAbs = 5;
  int lMax = 3;
  int sAbs = 3;
  int nMax = 3;
  int mMax = 3;
  int censusCap = 28;
  int bruteOrder = 20;
  std::string faultId;  // empty = no fault injection
  int faultSlot = -1;
};

std::vector<IdentityReport> run_suite(const SuiteConfig& config);

}  // namespace fibchar
