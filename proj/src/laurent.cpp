#include "fibchar/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace fibchar {

LaurentPoly LaurentPoly::monomial(long long coeff, int zExp, int qExp) {
  LaurentPoly p;
  p.add_term(zExp, qExp, coeff);
  return p;
}

long long LaurentPoly::coeff(int zExp, int qExp) const {
  auto it = terms_.find({zExp, qExp});
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int zExp, int qExp, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({zExp, qExp}, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_)
    add_term(key.first, key.second, checked_sub(0, c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second,
                   checked_mul(ca, cb));
  return out;
}

namespace {
[[noreturn]] void throw_empty() {
  throw BadArgument("exponent range of the zero polynomial is undefined");
}
}  // namespace

int LaurentPoly::min_q() const {
  if (terms_.empty()) throw_empty();
  int m = std::numeric_limits<int>::max();
  for (const auto& [key, c] : terms_) m = std::min(m, key.second);
  return m;
}

int LaurentPoly::max_q() const {
  if (terms_.empty()) throw_empty();
  int m = std::numeric_limits<int>::min();
  for (const auto& [key, c] : terms_) m = std::max(m, key.second);
  return m;
}

int LaurentPoly::min_z() const {
  if (terms_.empty()) throw_empty();
  return terms_.begin()->first.first;
}

int LaurentPoly::max_z() const {
  if (terms_.empty()) throw_empty();
  return terms_.rbegin()->first.first;
}

LaurentPoly LaurentPoly::substituted(int zPow, int qShift, bool qInvert) const {
  LaurentPoly out;
  for (const auto& [key, c] : terms_) {
    const int a = key.first;
    const int b = key.second;
    const int q = a * qShift + (qInvert ? -b : b);
    out.add_term(a * zPow, q, c);
  }
  return out;
}

long long LaurentPoly::value_at_one() const {
  long long s = 0;
  for (const auto& [key, c] : terms_) s = checked_add(s, c);
  return s;
}

namespace {

std::string q_monomial_text(long long coeff, int qExp) {
  std::ostringstream os;
  if (qExp == 0) {
    os << coeff;
    return os.str();
  }
  if (coeff == -1)
    os << '-';
  else if (coeff != 1)
    os << coeff;
  os << 'q';
  if (qExp != 1) os << '^' << qExp;
  return os.str();
}

// "1+q+q^2" style: terms joined with +/- and no spaces.
std::string q_group_text(const std::vector<std::pair<int, long long>>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string t = q_monomial_text(terms[i].second, terms[i].first);
    if (i == 0) {
      out += t;
    } else if (!t.empty() && t[0] == '-') {
      out += '-';
      out += t.substr(1);
    } else {
      out += '+';
      out += t;
    }
  }
  return out;
}

std::string z_power_text(int zExp) {
  if (zExp == 0) return "";
  std::string s = "z";
  if (zExp != 1) s += "^" + std::to_string(zExp);
  return s;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Collect z-groups in ascending zExp; map iteration is already ordered.
  std::vector<std::pair<int, std::vector<std::pair<int, long long>>>> groups;
  for (const auto& [key, c] : terms_) {
    if (groups.empty() || groups.back().first != key.first)
      groups.push_back({key.first, {}});
    groups.back().second.push_back({key.second, c});
  }
  const bool several_groups = groups.size() > 1;
  std::string out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const int zExp = groups[g].first;
    const auto& qterms = groups[g].second;
    std::string piece;
    const std::string zpart = z_power_text(zExp);
    if (qterms.size() == 1) {
      const auto [qExp, c] = qterms[0];
      if (zpart.empty()) {
        piece = q_monomial_text(c, qExp);
      } else {
        piece = zpart;
        if (c == -1)
          piece = "-" + piece;
        else if (c != 1)
          piece = std::to_string(c) + piece;
        if (qExp != 0) piece += " " + q_monomial_text(1, qExp);
      }
    } else {
      const std::string inner = q_group_text(qterms);
      if (zpart.empty())
        piece = several_groups ? "(" + inner + ")" : inner;
      else
        piece = zpart + "(" + inner + ")";
    }
    if (g == 0) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

LaurentPoly qbinom(int N, int m) {
  if (m < 0 || m > N) return LaurentPoly();
  // Dense build via [N m] = [N m-1] * (1 - q^{N-m+1}) / (1 - q^m); the
  // division is exact and runs as a prefix accumulation.
  std::vector<long long> c{1};
  for (int j = 1; j <= m; ++j) {
    const int grow = N - j + 1;
    std::vector<long long> num(c.size() + static_cast<std::size_t>(grow), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      num[i] = checked_add(num[i], c[i]);
      num[i + static_cast<std::size_t>(grow)] =
          checked_sub(num[i + static_cast<std::size_t>(grow)], c[i]);
    }
    // divide by (1 - q^j): r_i = num_i + r_{i-j}
    const std::size_t deg = num.size() - static_cast<std::size_t>(j);
    std::vector<long long> r(deg, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      r[i] = num[i];
      if (i >= static_cast<std::size_t>(j))
        r[i] = checked_add(r[i], r[i - static_cast<std::size_t>(j)]);
    }
    c = std::move(r);
  }
  LaurentPoly out;
  for (std::size_t i = 0; i < c.size(); ++i)
    out.add_term(0, static_cast<int>(i), c[i]);
  return out;
}

LaurentPoly pochhammer_poly(int n) {
  if (n < 0) throw BadArgument("pochhammer_poly: negative index");
  LaurentPoly p = LaurentPoly::one();
  for (int i = 1; i <= n; ++i) {
    LaurentPoly f = LaurentPoly::one();
    f.add_term(0, i, -1);
    p = p * f;
  }
  return p;
}

std::pair<LaurentPoly, LaurentPoly> qbinom_invert_check(int a, int b) {
  if (b < 0 || b > a) throw BadArgument("qbinom_invert_check: need 0 <= b <= a");
  const LaurentPoly base = qbinom(a, b);
  LaurentPoly lhs = base.substituted(1, 0, /*qInvert=*/true);
  LaurentPoly rhs = LaurentPoly::monomial(1, 0, -(a - b) * b) * base;
  return {lhs, rhs};
}

}  // namespace fibchar
