#ifndef BALLPOLY_JACOBI_HPP
#define BALLPOLY_JACOBI_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ballpoly/polynomial.hpp"
#include "ballpoly/rational.hpp"

namespace ballpoly {

/// Dense univariate polynomial, coefficients ascending in t.
struct UnivariatePolynomial {
  std::vector<Rational> coeffs;

  int degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] != 0) return static_cast<int>(i);
    }
    return -1;
  }

  Rational operator()(const Rational& t) const {
    Rational value = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) value = value * t + coeffs[i];
    return value;
  }
};

struct JacobiParams {
  Rational alpha;
  Rational beta;
};

inline bool is_negative_integer(const Rational& q) { return is_integer(q) && q < 0; }

/// P_j^{(alpha,beta)}(t), normalized so P_j(1) = (alpha+1)_j / j!, from the
/// terminating hypergeometric sum
///   (alpha+1)_j/j! * sum_m (-j)_m (j+alpha+beta+1)_m / ((alpha+1)_m m!) ((1-t)/2)^m.
inline UnivariatePolynomial jacobi(int j, const JacobiParams& params) {
  if (j < 0) throw std::invalid_argument("Jacobi degree must be non-negative");
  if (is_negative_integer(params.alpha) || is_negative_integer(params.beta)) {
    throw std::domain_error("Jacobi parameters must not be negative integers");
  }
  const Rational& a = params.alpha;
  const Rational& b = params.beta;
  UnivariatePolynomial p{std::vector<Rational>(static_cast<std::size_t>(j) + 1)};
  const Rational lead = pochhammer(a + 1, j) / Rational(factorial(j));
  for (int m = 0; m <= j; ++m) {
    Rational c = lead * pochhammer(Rational(-j), m) * pochhammer(a + b + j + 1, m) /
                 (pochhammer(a + 1, m) * Rational(factorial(m)));
    c /= Rational(Integer(1) << m);
    // ((1-t))^m = sum_i C(m,i) (-t)^i
    for (int i = 0; i <= m; ++i) {
      Rational term = c * Rational(binomial(m, i));
      if (i % 2 != 0) term = -term;
      p.coeffs[static_cast<std::size_t>(i)] += term;
    }
  }
  return p;
}

/// q(2||x||^2 - 1) as a polynomial in d variables.
inline Polynomial compose_radial(const UnivariatePolynomial& q, int d) {
  Polynomial t = Polynomial::norm_squared(d) * Rational(2) - Polynomial::constant(d, 1);
  Polynomial result(d);
  for (std::size_t i = q.coeffs.size(); i-- > 0;) {
    result = result * t + Polynomial::constant(d, q.coeffs[i]);
  }
  return result;
}

}  // namespace ballpoly

#endif  // BALLPOLY_JACOBI_HPP
