#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibchar/laurent.hpp"

namespace fibchar {

/**
 * Univariate truncated q-series: exact coefficients of q^0..q^order. All
 * identity slice checks normalize to comparisons between values of this type.
 */
class USeries {
 public:
  explicit USeries(int order);
  static USeries one(int order);
  static USeries monomial(int order, int qExp, long long coeff = 1);

  int order() const { return order_; }
  long long at(int qExp) const;
  void set(int qExp, long long c);

  // self += coeff * q^shift * other, truncated at order().
  USeries& add_scaled(const USeries& other, int shift, long long coeff = 1);
  USeries& operator+=(const USeries& other) { return add_scaled(other, 0, 1); }
  USeries& operator-=(const USeries& other) { return add_scaled(other, 0, -1); }

  USeries mul(const USeries& other) const;  // order = min of the two
  USeries truncated(int newOrder) const;

  // Exact division by q^shift; every nonzero coefficient below `shift` is an
  // error (the series is then not divisible).
  USeries shifted_down(int shift) const;

  bool is_zero() const;
  std::string to_string() const;  // "1+q+2q^2" style

  const std::vector<long long>& coeffs() const { return c_; }

 private:
  int order_;
  std::vector<long long> c_;
};

std::optional<std::pair<int, std::pair<long long, long long>>> first_mismatch(
    const USeries& lhs, const USeries& rhs, int qMax);

/**
 * Precomputed truncated series 1/(q)_n for 0 <= n <= order and 1/(q)_inf.
 * Honors the convention 1/(q)_n = 0 for n < 0; indices above the truncation
 * order coincide with 1/(q)_inf.
 */
class QFactorialTable {
 public:
  explicit QFactorialTable(int order);

  int order() const { return order_; }
  const USeries& inv_pochhammer(long long n) const;
  const USeries& inv_pochhammer_inf() const { return inv_.back(); }
  const USeries& zero() const { return zero_; }

 private:
  int order_;
  std::vector<USeries> inv_;  // inv_[n], n = 0..order; inv_[order] == inf
  USeries zero_;
};

// Convenience one-off builder; n < 0 yields the zero series, n == nullopt
// (infinity) yields the partition generating series.
USeries inv_pochhammer(std::optional<long long> n, int order);

/**
 * Truncated element of Z[z^{±1}][[q]]: exact coefficients for qExp in
 * [0, order] and zExp in [zMin, zMax]. Every series is truncation-exact: the
 * window always covers the full z-support of the represented object up to
 * q^order, so ring operations stay exact and never corrupt in-window
 * coefficients. Reads outside (order, window) raise WindowUnderflow instead
 * of silently returning 0.
 */
class QSeries {
 public:
  QSeries(int order, int zMin, int zMax);

  static QSeries from_poly(const LaurentPoly& p, int order, int zMin, int zMax);

  int order() const { return order_; }
  int z_min() const { return zMin_; }
  int z_max() const { return zMax_; }
  bool window_contains(int zExp) const { return zExp >= zMin_ && zExp <= zMax_; }

  long long at(int zExp, int qExp) const;
  void add_term(int zExp, int qExp, long long c);  // must lie inside (order, window)
  void ensure_window(int zMin, int zMax);          // widen only

  USeries coeff_of_z(int zExp) const;
  void add_slice(int zExp, const USeries& s, int qShift, long long coeff = 1);

  QSeries add(const QSeries& other) const;  // order = min, window = union
  QSeries mul(const QSeries& other) const;  // order = min, window = sumset
  QSeries times_monomial(long long coeff, int zShift, int qShift) const;

  const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  std::string to_string() const;  // one "[z^k] ..." line per window slice

 private:
  int order_;
  int zMin_, zMax_;
  std::map<std::pair<int, int>, long long> terms_;  // (zExp, qExp) -> coeff
};

struct Mismatch {
  int zExp = 0;
  int qExp = 0;
  long long lhs = 0;
  long long rhs = 0;
  bool operator==(const Mismatch&) const = default;
};

// Coefficientwise comparison over the given window up to q^qMax, scanning in
// (qExp, zExp) order; both series must cover the window.
std::optional<Mismatch> first_mismatch(const QSeries& lhs, const QSeries& rhs,
                                       int zMin, int zMax, int qMax);

QSeries series_from_poly(const LaurentPoly& p, int order, int zMin, int zMax);

}  // namespace fibchar
