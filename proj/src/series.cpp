#include "fibchar/series.hpp"

#include <algorithm>
#include <sstream>

namespace fibchar {

USeries::USeries(int order) : order_(order) {
  if (order < 0) throw BadArgument("USeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, 0);
}

USeries USeries::one(int order) {
  USeries s(order);
  s.c_[0] = 1;
  return s;
}

USeries USeries::monomial(int order, int qExp, long long coeff) {
  if (qExp < 0) throw NegativeQExponent("USeries::monomial: negative exponent");
  USeries s(order);
  if (qExp <= order) s.c_[static_cast<std::size_t>(qExp)] = coeff;
  return s;
}

long long USeries::at(int qExp) const {
  if (qExp < 0 || qExp > order_)
    throw WindowUnderflow("USeries::at: exponent " + std::to_string(qExp) +
                          " outside truncation order " + std::to_string(order_));
  return c_[static_cast<std::size_t>(qExp)];
}

void USeries::set(int qExp, long long c) {
  if (qExp < 0 || qExp > order_)
    throw WindowUnderflow("USeries::set: exponent outside truncation order");
  c_[static_cast<std::size_t>(qExp)] = c;
}

USeries& USeries::add_scaled(const USeries& other, int shift, long long coeff) {
  if (coeff == 0) return *this;
  if (shift < 0) throw NegativeQExponent("USeries::add_scaled: negative shift");
  const int top = std::min(order_, other.order_ + shift);
  for (int i = shift; i <= top; ++i) {
    auto& dst = c_[static_cast<std::size_t>(i)];
    dst = checked_add(dst, checked_mul(coeff, other.c_[static_cast<std::size_t>(i - shift)]));
  }
  return *this;
}

USeries USeries::mul(const USeries& other) const {
  USeries out(std::min(order_, other.order_));
  for (int i = 0; i <= out.order_; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    const long long a = c_[static_cast<std::size_t>(i)];
    const int top = out.order_ - i;
    for (int j = 0; j <= top; ++j) {
      const long long b = other.c_[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      auto& dst = out.c_[static_cast<std::size_t>(i + j)];
      dst = checked_add(dst, checked_mul(a, b));
    }
  }
  return out;
}

USeries USeries::truncated(int newOrder) const {
  if (newOrder > order_)
    throw BadArgument("USeries::truncated: cannot extend truncation order");
  USeries out(newOrder);
  std::copy(c_.begin(), c_.begin() + newOrder + 1, out.c_.begin());
  return out;
}

USeries USeries::shifted_down(int shift) const {
  if (shift < 0) throw BadArgument("USeries::shifted_down: negative shift");
  for (int i = 0; i < std::min(shift, order_ + 1); ++i)
    if (c_[static_cast<std::size_t>(i)] != 0)
      throw BadArgument("USeries::shifted_down: series not divisible by q^" +
                        std::to_string(shift));
  USeries out(order_ - std::min(shift, order_));
  for (int i = 0; i <= out.order_; ++i)
    out.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i + shift)];
  return out;
}

bool USeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 0; });
}

std::string USeries::to_string() const {
  std::vector<std::pair<int, long long>> terms;
  for (int i = 0; i <= order_; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0)
      terms.push_back({i, c_[static_cast<std::size_t>(i)]});
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    auto [e, c] = terms[t];
    std::string piece;
    if (e == 0) {
      piece = std::to_string(c);
    } else {
      if (c == -1)
        piece = "-";
      else if (c != 1)
        piece = std::to_string(c);
      piece += "q";
      if (e != 1) piece += "^" + std::to_string(e);
    }
    if (t == 0) {
      os << piece;
    } else if (piece[0] == '-') {
      os << '-' << piece.substr(1);
    } else {
      os << '+' << piece;
    }
  }
  return os.str();
}

std::optional<std::pair<int, std::pair<long long, long long>>> first_mismatch(
    const USeries& lhs, const USeries& rhs, int qMax) {
  for (int q = 0; q <= qMax; ++q) {
    const long long a = lhs.at(q);
    const long long b = rhs.at(q);
    if (a != b) return {{q, {a, b}}};
  }
  return std::nullopt;
}

QFactorialTable::QFactorialTable(int order) : order_(order), zero_(std::max(order, 0)) {
  if (order < 0) throw BadArgument("QFactorialTable: negative order");
  inv_.reserve(static_cast<std::size_t>(order) + 1);
  USeries cur = USeries::one(order);
  inv_.push_back(cur);
  for (int n = 1; n <= order; ++n) {
    // 1/(q)_n = 1/(q)_{n-1} * (1 + q^n + q^{2n} + ...)
    USeries next(order);
    for (int k = 0; k * n <= order; ++k) next.add_scaled(cur, k * n, 1);
    inv_.push_back(next);
    cur = inv_.back();
  }
  if (order == 0) inv_.push_back(USeries::one(0));
  // 1/(q)_n and 1/(q)_inf first differ at q^{n+1}, so the last entry already
  // equals the truncated 1/(q)_inf.
}

const USeries& QFactorialTable::inv_pochhammer(long long n) const {
  if (n < 0) return zero_;
  if (n >= static_cast<long long>(inv_.size()) - 1) return inv_.back();
  return inv_[static_cast<std::size_t>(n)];
}

USeries inv_pochhammer(std::optional<long long> n, int order) {
  QFactorialTable table(order);
  if (!n.has_value()) return table.inv_pochhammer_inf();
  return table.inv_pochhammer(*n);
}

QSeries::QSeries(int order, int zMin, int zMax) : order_(order), zMin_(zMin), zMax_(zMax) {
  if (order < 0) throw BadArgument("QSeries: negative order");
  if (zMin > zMax) throw BadArgument("QSeries: empty z-window");
}

QSeries QSeries::from_poly(const LaurentPoly& p, int order, int zMin, int zMax) {
  for (const auto& [key, c] : p.terms())
    if (key.second < 0)
      throw NegativeQExponent("series_from_poly: polynomial has q^" +
                              std::to_string(key.second));
  // Widen the requested window so it covers the polynomial's support after
  // q-truncation; truncation-exactness is preserved by construction.
  int lo = zMin, hi = zMax;
  for (const auto& [key, c] : p.terms()) {
    if (key.second > order) continue;
    lo = std::min(lo, key.first);
    hi = std::max(hi, key.first);
  }
  QSeries s(order, lo, hi);
  for (const auto& [key, c] : p.terms())
    if (key.second <= order) s.add_term(key.first, key.second, c);
  return s;
}

long long QSeries::at(int zExp, int qExp) const {
  if (qExp < 0 || qExp > order_)
    throw WindowUnderflow("QSeries::at: q^" + std::to_string(qExp) +
                          " outside truncation order " + std::to_string(order_));
  if (!window_contains(zExp))
    throw WindowUnderflow("QSeries::at: z^" + std::to_string(zExp) +
                          " outside window [" + std::to_string(zMin_) + ", " +
                          std::to_string(zMax_) + "]");
  auto it = terms_.find({zExp, qExp});
  return it == terms_.end() ? 0 : it->second;
}

void QSeries::add_term(int zExp, int qExp, long long c) {
  if (c == 0) return;
  if (qExp < 0) throw NegativeQExponent("QSeries::add_term: negative q exponent");
  if (qExp > order_) return;
  if (!window_contains(zExp))
    throw WindowUnderflow("QSeries::add_term: z^" + std::to_string(zExp) +
                          " outside declared window");
  auto [it, inserted] = terms_.try_emplace({zExp, qExp}, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void QSeries::ensure_window(int zMin, int zMax) {
  zMin_ = std::min(zMin_, zMin);
  zMax_ = std::max(zMax_, zMax);
}

USeries QSeries::coeff_of_z(int zExp) const {
  if (!window_contains(zExp))
    throw WindowUnderflow("coeff_of_z: z^" + std::to_string(zExp) +
                          " outside window [" + std::to_string(zMin_) + ", " +
                          std::to_string(zMax_) + "]");
  USeries out(order_);
  auto it = terms_.lower_bound({zExp, 0});
  for (; it != terms_.end() && it->first.first == zExp; ++it)
    out.set(it->first.second, it->second);
  return out;
}

void QSeries::add_slice(int zExp, const USeries& s, int qShift, long long coeff) {
  if (qShift < 0) throw NegativeQExponent("QSeries::add_slice: negative shift");
  const int top = std::min(order_, s.order() + qShift);
  for (int q = qShift; q <= top; ++q) {
    const long long v = s.at(q - qShift);
    if (v != 0) add_term(zExp, q, checked_mul(coeff, v));
  }
}

QSeries QSeries::add(const QSeries& other) const {
  QSeries out(std::min(order_, other.order_), std::min(zMin_, other.zMin_),
              std::max(zMax_, other.zMax_));
  for (const auto& [key, c] : terms_)
    if (key.second <= out.order_) out.add_term(key.first, key.second, c);
  for (const auto& [key, c] : other.terms_)
    if (key.second <= out.order_) out.add_term(key.first, key.second, c);
  return out;
}

QSeries QSeries::mul(const QSeries& other) const {
  const int order = std::min(order_, other.order_);
  // Truncation-exact factors are zero outside their windows, so the product
  // is exact on the sumset window.
  QSeries out(order, zMin_ + other.zMin_, zMax_ + other.zMax_);
  for (const auto& [ka, ca] : terms_) {
    if (ka.second > order) continue;
    for (const auto& [kb, cb] : other.terms_) {
      const int q = ka.second + kb.second;
      if (q > order) continue;
      out.add_term(ka.first + kb.first, q, checked_mul(ca, cb));
    }
  }
  return out;
}

QSeries QSeries::times_monomial(long long coeff, int zShift, int qShift) const {
  const int order = qShift < 0 ? order_ + qShift : order_;
  if (order < 0)
    throw NegativeQExponent("times_monomial: shift exceeds truncation order");
  QSeries out(order, zMin_ + zShift, zMax_ + zShift);
  for (const auto& [key, c] : terms_) {
    const int q = key.second + qShift;
    if (q < 0)
      throw NegativeQExponent("times_monomial: negative q exponent in result");
    if (q <= order) out.add_term(key.first + zShift, q, checked_mul(coeff, c));
  }
  return out;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  for (int z = zMin_; z <= zMax_; ++z) {
    os << "[z^" << z << "] " << coeff_of_z(z).to_string();
    if (z != zMax_) os << '\n';
  }
  return os.str();
}

std::optional<Mismatch> first_mismatch(const QSeries& lhs, const QSeries& rhs,
                                       int zMin, int zMax, int qMax) {
  for (int q = 0; q <= qMax; ++q) {
    for (int z = zMin; z <= zMax; ++z) {
      const long long a = lhs.at(z, q);
      const long long b = rhs.at(z, q);
      if (a != b) return Mismatch{z, q, a, b};
    }
  }
  return std::nullopt;
}

QSeries series_from_poly(const LaurentPoly& p, int order, int zMin, int zMax) {
  return QSeries::from_poly(p, order, zMin, zMax);
}

}  // namespace fibchar
