#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibchar/errors.hpp"

namespace fibchar {

/**
 * Exact Laurent polynomial in z^{±1}, q^{±1} with 64-bit integer
 * coefficients (overflow-checked). Terms are kept in a sparse map ordered by
 * (zExp, qExp); zero coefficients are never stored.
 */
class LaurentPoly {
 public:
  using Key = std::pair<int, int>;  // (zExp, qExp)
  using TermMap = std::map<Key, long long>;

  LaurentPoly() = default;

  static LaurentPoly one() { return monomial(1, 0, 0); }
  static LaurentPoly monomial(long long coeff, int zExp, int qExp);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  long long coeff(int zExp, int qExp) const;
  void add_term(int zExp, int qExp, long long c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  int min_q() const;
  int max_q() const;
  int min_z() const;
  int max_z() const;

  // Simultaneous substitution z -> z^{zPow} q^{qShift} and, when qInvert is
  // set, q -> q^{-1}: the monomial z^a q^b maps to z^{a*zPow} q^{a*qShift ± b}.
  LaurentPoly substituted(int zPow, int qShift, bool qInvert) const;

  // Sum of all coefficients; equals the evaluation at z = q = 1.
  long long value_at_one() const;

  // Canonical text form: z-groups in ascending zExp, each group's q-terms in
  // ascending qExp, e.g. "1 + z(1+q+q^2) + z^2 q^2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

// Gaussian binomial coefficient [N m]_q as an exact polynomial in q.
// Zero when m < 0 or m > N.
LaurentPoly qbinom(int N, int m);

// The q-Pochhammer polynomial (q)_n = prod_{i=1..n} (1 - q^i); n < 0 is
// rejected, (q)_0 = 1.
LaurentPoly pochhammer_poly(int n);

// Both sides of [a b]_{q^{-1}} = q^{-(a-b)b} [a b]_q after exact evaluation.
std::pair<LaurentPoly, LaurentPoly> qbinom_invert_check(int a, int b);

}  // namespace fibchar
