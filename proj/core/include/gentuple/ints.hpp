#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gentuple {

// Arbitrary-precision integer. Move sequences can grow coordinates far past
// machine-word range, so all group coordinates and matrix entries use this.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

struct Egcd {
  Int g, x, y;  // g = gcd(a,b) = a*x + b*y, g >= 0
};

inline Egcd extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * x; old_x = x; x = t;
    t = old_y - q * y; old_y = y; y = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  return Egcd{old_r, old_x, old_y};
}

// Representative of a mod m in [0, m). Requires m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Quotient q minimizing |a - q*b|. Requires b != 0.
inline Int nearest_quotient(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  Int r = a - q * b;
  if (2 * abs_int(r) > abs_int(b)) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

// Checked narrowing for index arithmetic.
inline long long to_ll(const Int& a) {
  if (a > Int(INT64_MAX) || a < Int(INT64_MIN))
    throw std::overflow_error("integer too large for machine index");
  return a.convert_to<long long>();
}

inline std::string int_to_string(const Int& a) { return a.str(); }

}  // namespace gentuple
