#include "fibchar/fibfinite.hpp"

#include <string>

namespace fibchar {

bool FibConfig::valid() const {
  int last = -(l + 1);
  bool first = true;
  for (int i = 0; i < static_cast<int>(bits.size()); ++i) {
    if (!bits[static_cast<std::size_t>(i)]) continue;
    if (!first && i - last <= l) return false;
    last = i;
    first = false;
  }
  return true;
}

long long FibConfig::charge() const {
  long long c = 0;
  for (auto b : bits) c += b;
  return c;
}

long long FibConfig::energy() const {
  long long e = 0;
  for (int i = 0; i < static_cast<int>(bits.size()); ++i)
    if (bits[static_cast<std::size_t>(i)]) e += i;
  return e;
}

namespace {

// Exhaustive enumeration cap: the l = 0 space is all 2^n words.
void check_cap(int n, int l) {
  if (n < 0) throw BadArgument("enumerate_fib: negative n");
  if (l < 0) throw BadArgument("enumerate_fib: negative l");
  const int cap = l == 0 ? 22 : 32;
  if (n > cap)
    throw CapExceeded("enumerate_fib: n = " + std::to_string(n) +
                      " exceeds exhaustive cap " + std::to_string(cap) +
                      " for l = " + std::to_string(l));
}

void walk(int n, int l, int pos, int lastParticle, std::vector<std::uint8_t>& bits,
          std::vector<FibConfig>& out) {
  if (pos == n) {
    out.push_back(FibConfig{l, bits});
    return;
  }
  bits[static_cast<std::size_t>(pos)] = 0;
  walk(n, l, pos + 1, lastParticle, bits, out);
  if (lastParticle < 0 || pos - lastParticle > l) {
    bits[static_cast<std::size_t>(pos)] = 1;
    walk(n, l, pos + 1, pos, bits, out);
    bits[static_cast<std::size_t>(pos)] = 0;
  }
}

}  // namespace

std::vector<FibConfig> enumerate_fib(int n, int l) {
  check_cap(n, l);
  std::vector<FibConfig> out;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  walk(n, l, 0, -1, bits, out);
  return out;
}

LaurentPoly fib_char_brute(int n, int l) {
  check_cap(n, l);
  LaurentPoly chi;
  // Accumulate z^{#particles} q^{sum of positions} directly during the walk.
  struct Rec {
    int n, l;
    LaurentPoly* chi;
    void operator()(int pos, int last, long long charge, long long energy) {
      if (pos == n) {
        chi->add_term(static_cast<int>(charge), static_cast<int>(energy), 1);
        return;
      }
      (*this)(pos + 1, last, charge, energy);
      if (last < 0 || pos - last > l)
        (*this)(pos + 1, pos, charge + 1, energy + pos);
    }
  } rec{n, l, &chi};
  rec(0, -1, 0, 0);
  return chi;
}

LaurentPoly fib_char_recurrence(int n, int l) {
  if (n < 0) throw BadArgument("fib_char_recurrence: negative n");
  if (l < 0) throw BadArgument("fib_char_recurrence: negative l");
  // Base cases 0 <= m <= l hold at most one particle:
  // chi_m = 1 + z(1 + q + ... + q^{m-1}).
  std::vector<LaurentPoly> chi(static_cast<std::size_t>(std::max(n, l) + 1));
  for (int m = 0; m <= l; ++m) {
    LaurentPoly p = LaurentPoly::one();
    for (int j = 0; j < m; ++j) p.add_term(1, j, 1);
    chi[static_cast<std::size_t>(m)] = p;
  }
  for (int m = l; m < n; ++m) {
    LaurentPoly next = chi[static_cast<std::size_t>(m)];
    next += LaurentPoly::monomial(1, 1, m) * chi[static_cast<std::size_t>(m - l)];
    chi[static_cast<std::size_t>(m + 1)] = std::move(next);
  }
  return chi[static_cast<std::size_t>(n)];
}

LaurentPoly fib_p_poly(int n, int l) {
  if (n < 0) throw BadArgument("fib_p_poly: negative n");
  LaurentPoly out;
  for (int m = 0; (l + 1) * m <= n; ++m) {
    // (l+1)m(m-1) is even for every l since m(m-1) is.
    const int qexp = (l + 1) * m * (m - 1) / 2;
    out += LaurentPoly::monomial(1, m, qexp) * qbinom(n - l * m, m);
  }
  return out;
}

LaurentPoly fib_char_closed(int n, int l) { return fib_p_poly(n + l, l); }

CharTriple fib_char_triple(int n, int l) {
  return CharTriple{fib_char_brute(n, l), fib_char_recurrence(n, l),
                    fib_char_closed(n, l)};
}

}  // namespace fibchar
