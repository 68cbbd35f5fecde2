#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace leavitt {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_big(BigInt const& x) { return x < 0 ? BigInt(-x) : x; }

// Nonnegative gcd; gcd(0, 0) = 0.
inline BigInt gcd_big(BigInt a, BigInt b) {
  a = abs_big(a);
  b = abs_big(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline BigInt lcm_big(BigInt const& a, BigInt const& b) {
  if (a == 0 || b == 0) return 0;
  return abs_big(a / gcd_big(a, b) * b);
}

// Representative of x modulo m in [0, m). Requires m > 0.
inline BigInt mod_floor(BigInt const& x, BigInt const& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

struct ExtendedGcd {
  BigInt g;  // gcd(a, b) >= 0
  BigInt s;  // s*a + t*b = g
  BigInt t;
};

inline ExtendedGcd extended_gcd(BigInt const& a, BigInt const& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

inline std::string to_string(BigInt const& x) { return x.str(); }

}  // namespace leavitt
