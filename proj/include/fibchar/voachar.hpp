#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fibchar/fibinfinite.hpp"
#include "fibchar/series.hpp"

namespace fibchar {

// Exact rational with positive denominator, used only for the character's
// q-exponent prefactor. No floating point anywhere in the module grading.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den);
  bool operator==(const Rational&) const = default;
};

// Character of the module indexed by (i, N): rational prefactor exponent
// i^2/(2N) - i/2 times a bilateral body with integer exponents.
struct ShiftedSeries {
  Rational qOffset;
  QSeries body;
};

ShiftedSeries voa_char(int i, int N, int D, int zMin, int zMax);

// Image of a configuration under the index map: the increasing sequence of
// negated occupied positions. The explicit prefix covers every deviation;
// from tailStart on the sequence is arithmetic with gap l+1.
struct MonomialIndices {
  std::vector<long long> prefix;
  std::size_t tailStart = 0;
  long long tailGap = 0;
  long long tailResidue = 0;  // prefix[tailStart] mod tailGap
};

MonomialIndices tau(const InfFibConfig& a);

struct Theorem2Report {
  int i = 0;
  int N = 0;
  int order = 0;
  long long configsChecked = 0;
  bool increasing = true;
  bool gapsAtLeastN = true;
  bool tailGapIsN = true;
  // Tail residue of the index images; the audited condition is
  // residue == (-i) mod N, which matches the configuration space. The
  // residue == i mod N variant is recorded separately.
  bool tailResidueMatchesConfigs = true;
  bool tailResidueMatchesPrinted = true;
  bool countsMatch = true;
  std::optional<Mismatch> firstCountMismatch;

  bool pass() const {
    return increasing && gapsAtLeastN && tailGapIsN &&
           tailResidueMatchesConfigs && countsMatch;
  }
};

Theorem2Report theorem2_audit(int i, int N, int D);

}  // namespace fibchar
