#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stardec {

// Exact rational with a positive-infinity value (den == 0). Edge expansion
// thresholds gate feasibility decisions, so no floating point here.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rational{n, d};
  }

  static Rational infinity() { return Rational{1, 0}; }

  bool is_infinite() const { return den == 0; }

  std::string str() const {
    if (is_infinite()) return "inf";
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline int compare(const Rational& a, const Rational& b) {
  if (a.is_infinite() && b.is_infinite()) return 0;
  if (a.is_infinite()) return 1;
  if (b.is_infinite()) return -1;
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

inline bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }
inline bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
inline bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }

}  // namespace stardec
