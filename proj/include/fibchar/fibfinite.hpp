#pragma once

#include <cstdint>
#include <vector>

#include "fibchar/laurent.hpp"

namespace fibchar {

// Finite 0/1 word a_0..a_{n-1} in which any two occupied positions are more
// than l apart.
struct FibConfig {
  int l = 0;
  std::vector<std::uint8_t> bits;

  bool valid() const;
  long long charge() const;  // number of particles
  long long energy() const;  // sum of occupied positions
};

// All words of length n satisfying the separation constraint, in
// lexicographic order of the bit string (a_0 most significant).
std::vector<FibConfig> enumerate_fib(int n, int l);

LaurentPoly fib_char_brute(int n, int l);
LaurentPoly fib_char_recurrence(int n, int l);
LaurentPoly fib_char_closed(int n, int l);

// P^l_n(z,q) = sum_m z^m q^{(l+1)m(m-1)/2} [n-lm m]_q.
LaurentPoly fib_p_poly(int n, int l);

struct CharTriple {
  LaurentPoly brute;
  LaurentPoly recur;
  LaurentPoly closed;
  bool all_equal() const { return brute == recur && recur == closed; }
};

CharTriple fib_char_triple(int n, int l);

}  // namespace fibchar
