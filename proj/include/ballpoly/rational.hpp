#ifndef BALLPOLY_RATIONAL_HPP
#define BALLPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ballpoly {

/// Arbitrary-precision rational; GMP keeps it canonical (lowest terms, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Always "num/den", including integers ("3/1") and zero ("0/1").
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "num/den" or a bare integer.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

/// Shifted factorial (a)_m = a(a+1)...(a+m-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, int m) {
  Rational result = 1;
  for (int i = 0; i < m; ++i) result *= a + i;
  return result;
}

inline Integer factorial(int m) {
  Integer result = 1;
  for (int i = 2; i <= m; ++i) result *= i;
  return result;
}

/// Binomial C(m, r); zero when r < 0 or r > m or m < 0.
inline Integer binomial(long m, long r) {
  if (m < 0 || r < 0 || r > m) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  return result;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ballpoly

#endif  // BALLPOLY_RATIONAL_HPP
