#pragma once

#include <stdexcept>
#include <string>

namespace fibchar {

// Exact arithmetic must never silently degrade: every coefficient operation
// goes through the checked helpers below and aborts the computation on
// 64-bit overflow.
struct CoeffOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct NegativeQExponent : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised when a coefficient outside the declared (order, z-window) region is
// requested, or when a computation cannot guarantee exact values on the
// requested window.
struct WindowUnderflow : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

struct BadTheta : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadModuleIndex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidConfiguration : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw CoeffOverflow("coefficient overflow in addition");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw CoeffOverflow("coefficient overflow in subtraction");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CoeffOverflow("coefficient overflow in multiplication");
  return r;
}

}  // namespace fibchar
