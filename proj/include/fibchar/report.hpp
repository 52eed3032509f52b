#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibchar/series.hpp"

namespace fibchar {

// Result of one coefficientwise LHS-vs-RHS comparison. match == true exactly
// when firstMismatch is absent.
struct IdentityReport {
  std::string id;
  std::vector<std::pair<std::string, long long>> params;
  int order = 0;
  int zMin = 0;
  int zMax = 0;
  bool match = false;
  std::optional<Mismatch> firstMismatch;
  long long elapsedMillis = 0;

  void record(const std::optional<Mismatch>& mm) {
    if (firstMismatch.has_value()) return;  // keep the earliest
    if (mm.has_value()) firstMismatch = mm;
  }
  void finish() { match = !firstMismatch.has_value(); }
};

// Single-exponent fault injection for sensitivity checks: every identity
// builder evaluates its exponent expressions through a Perturb, and slot s
// (when armed) bumps expression s by one.
class Perturb {
 public:
  explicit Perturb(int slot = -1) : slot_(slot) {}
  long long operator()(int slotId, long long e) const {
    return slotId == slot_ ? e + 1 : e;
  }
  int slot() const { return slot_; }

 private:
  int slot_;
};

}  // namespace fibchar
