#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fibchar/report.hpp"
#include "fibchar/series.hpp"

namespace fibchar {

/**
 * Infinite Fibonacci configuration of type (theta, l), stored as a finite
 * deviation from the vacuum Vac_{(theta,l)} (particles at theta - (l+1)k for
 * k > 0): `added` holds occupied non-vacuum positions, `removed` holds
 * emptied vacuum positions.
 */
struct InfFibConfig {
  int theta = 0;
  int l = 0;
  std::set<int> added;
  std::set<int> removed;

  bool is_vacuum_position(int pos) const;
  bool occupied(int pos) const;
  long long charge() const;
  long long energy() const;

  // Re-checks the separation constraint and the deviation-set invariants
  // directly from the definition; throws InvalidConfiguration.
  void validate() const;

  bool operator==(const InfFibConfig&) const = default;
  bool operator<(const InfFibConfig& o) const;
};

InfFibConfig vacuum_config(int theta, int l);  // throws BadTheta

// All configurations with energy <= energyBound, enumerated by a windowed
// backtracking walk over positions [-(l+1)(D+2)-theta-l-1-margin, D+margin];
// deviations outside the window do not occur for this energy bound, which
// the two-margin self-consistency invariant guards.
std::vector<InfFibConfig> enumerate_upto(int theta, int l, int energyBound,
                                         int windowMargin = 0);

QSeries inf_char_brute(int theta, int l, int D, int zMin, int zMax,
                       int windowMargin = 0);
QSeries inf_char_closed(int theta, int l, int D, int zMin, int zMax);
QSeries inf_char_closed(int theta, int l, const QFactorialTable& tab, int zMin,
                        int zMax);

// Character of the subset stabilizing on theta - k(l+1):
// sum_{m >= -k+1} (z q^theta)^m q^{(l+1)m(m-1)/2} / (q)_{m+k-1}.
QSeries inf_char_stabilized(int theta, int l, int k, int D, int zMin, int zMax);

// Right-part characters: P^l_inf(z q^l, q) for the empty slot and
// P^l_inf(z q^{i+l+1}, q) for slot i in 0..l-1.
QSeries right_char(int theta, int l, std::optional<int> slot,
                   const QFactorialTable& tab);

// Left-part characters via the bilateral-tail formula
//   sum_{m >= alpha(theta,k)} (z q^theta)^{-m} q^{(l+1)m(m+1)/2}
//        / (q)_{(m+1)(l+1)-theta-k},
// alpha = 0 for 1 <= theta+k <= l+1 and 1 for l+1 < theta+k <= 2l+1.
QSeries left_char(int theta, int l, int k, const QFactorialTable& tab);

int left_char_alpha(int theta, int l, int k);

// Same series obtained through the finite route: the q^{-1}-substituted
// finite character with its vacuum-weight prefactor, stabilized over two
// consecutive depths.
QSeries left_char_via_limit(int theta, int l, int k, int D);

// Splits ch Fib into the (l+1)-summand product decomposition and compares it
// against both the bilateral closed form and the brute enumeration.
IdentityReport split_identity_check(int theta, int l, int D, int zAbs,
                                    const QFactorialTable& tab,
                                    int bruteOrder = -1);

}  // namespace fibchar
