#ifndef BALLPOLY_RANDOM_HPP
#define BALLPOLY_RANDOM_HPP

#include <cstdint>
#include <random>

#include "ballpoly/polynomial.hpp"
#include "ballpoly/rational.hpp"

namespace ballpoly {

/// Seeded generator of small random rational polynomials.
class PolynomialSampler {
 public:
  explicit PolynomialSampler(std::uint64_t seed) : engine_(seed) {}

  /// numerator in [-9, 9], denominator in [1, 6]
  Rational rational() {
    const long num = integer(-9, 9);
    const long den = integer(1, 6);
    return make_rational(num, den);
  }

  Rational nonzero_rational() {
    Rational q;
    do {
      q = rational();
    } while (q == 0);
    return q;
  }

  // Plain modulo reduction of mt19937_64 output, which is identical on every
  // standard library (the std distributions are not).
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  /// Each monomial of degree <= max_degree is kept with probability `density`.
  /// Never returns the zero polynomial.
  Polynomial polynomial(int d, int max_degree, double density = 0.5) {
    const auto threshold = static_cast<std::uint64_t>(density * 1000.0);
    Polynomial p(d);
    while (p.is_zero()) {
      for (const auto& e : monomials_up_to_degree(d, max_degree)) {
        if (engine_() % 1000 < threshold) p.add_term(e, rational());
      }
    }
    return p;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ballpoly

#endif  // BALLPOLY_RANDOM_HPP
