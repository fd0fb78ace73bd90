#ifndef BALLPOLY_QUADRATURE_HPP
#define BALLPOLY_QUADRATURE_HPP

// Closed-form integration over the unit sphere and the weighted unit ball.
// Every integral is divided by the sphere area omega_d, so all values are
// rational and pi never appears.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "ballpoly/polynomial.hpp"
#include "ballpoly/rational.hpp"

namespace ballpoly {

namespace detail {

// Normalized sphere moment of x^(a+b) given the summed powers.
template <typename PowerAt>
Rational sphere_moment_from(int d, PowerAt power_at) {
  Integer num = 1;
  int total = 0;
  for (int i = 0; i < d; ++i) {
    int a = power_at(i);
    if (a % 2 != 0) return 0;
    for (int odd = a - 1; odd > 1; odd -= 2) num *= odd;  // (a-1)!!
    total += a;
  }
  Integer den = 1;
  for (int m = 0; m < total / 2; ++m) den *= d + 2 * m;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// (1/2) B(k+1, (degree+d)/2) via B(a+1,b) = B(a,b) a/(a+b), B(1,b) = 1/b.
inline Rational half_radial_beta(int total_degree, int d, int k) {
  const Rational b = make_rational(total_degree + d, 2);
  Rational beta = 1 / b;
  for (int a = 1; a <= k; ++a) beta = beta * a / (a + b);
  return beta / 2;
}

}  // namespace detail

/// (1/omega_d) * integral over S^{d-1} of x^alpha.
inline Rational sphere_monomial_integral(const Exponent& alpha) {
  return detail::sphere_moment_from(alpha.dimension(), [&](int i) { return alpha[i]; });
}

/// (1/omega_d) * integral over B^d of x^alpha (1 - ||x||^2)^k.
inline Rational ball_weighted_monomial_integral(const Exponent& alpha, int k) {
  if (k < 0) throw std::domain_error("ball weight exponent must be non-negative");
  Rational s = sphere_monomial_integral(alpha);
  if (s == 0) return s;
  return s * detail::half_radial_beta(alpha.degree(), alpha.dimension(), k);
}

inline Rational sphere_integral(const Polynomial& p) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * sphere_monomial_integral(e);
  return sum;
}

inline Rational ball_integral(const Polynomial& p, int k = 0) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * ball_weighted_monomial_integral(e, k);
  return sum;
}

namespace detail {

// Sum over term pairs without forming the product polynomial; pairs whose
// exponent parities differ integrate to zero and are skipped.
template <typename Radial>
Rational paired_integral(const Polynomial& f, const Polynomial& g, Radial radial) {
  if (f.dimension() != g.dimension()) throw DimensionMismatch(f.dimension(), g.dimension());
  const int d = f.dimension();
  std::vector<unsigned> g_masks;
  g_masks.reserve(g.size());
  for (const auto& [e, c] : g.terms()) g_masks.push_back(e.parity_mask());

  Rational sum = 0;
  for (const auto& [ea, ca] : f.terms()) {
    const unsigned mask = ea.parity_mask();
    std::size_t idx = 0;
    for (const auto& [eb, cb] : g.terms()) {
      if (g_masks[idx++] != mask) continue;
      Rational m = sphere_moment_from(d, [&](int i) { return ea[i] + eb[i]; });
      sum += ca * cb * m * radial(ea.degree() + eb.degree());
    }
  }
  return sum;
}

}  // namespace detail

/// (1/omega_d) * integral over S^{d-1} of f g.
inline Rational sphere_inner(const Polynomial& f, const Polynomial& g) {
  return detail::paired_integral(f, g, [](int) { return Rational(1); });
}

/// (1/omega_d) * integral over B^d of f g (1 - ||x||^2)^k.
inline Rational ball_inner(const Polynomial& f, const Polynomial& g, int k = 0) {
  if (k < 0) throw std::domain_error("ball weight exponent must be non-negative");
  const int d = f.dimension();
  return detail::paired_integral(
      f, g, [&](int degree) { return detail::half_radial_beta(degree, d, k); });
}

// ---------------------------------------------------------------------------
// Inner products

/// c_mu * integral f g (1-||x||^2)^mu, normalized so <1,1> = 1.
struct ClassicalForm {
  int mu = 0;
};

/// lambda/omega_d * int_B grad f . grad g + 1/omega_d * int_S f g.
struct GradForm {
  Rational lambda = 1;
};

/// lambda/omega_d * int_B Lap f Lap g + 1/omega_d * int_S f g.
struct BiLaplacianForm {
  Rational lambda = 1;
};

/// a_d * int_B Lap[(1-||x||^2) f] Lap[(1-||x||^2) g], a_d = 1/(4 d^2 vol(B^d)).
struct DeltaForm {};

/// BiLaplacianForm plus mu/omega_d * int_S (d/dr r^s f)(d/dr r^s g) with
/// s = radial_shift(n, d).
struct StarForm {
  Rational lambda = 1;
  Rational mu = 1;
  int n = 1;
};

using InnerProductSpec = std::variant<ClassicalForm, GradForm, BiLaplacianForm, DeltaForm, StarForm>;

/// Exponent s in the radial derivative d/dr[r^s f] of the starred form.
/// s = n + d - 4 is the value for which the middle shell
/// [(1-||x||^2) + 1/(n-3+d/2)] Y_{n-2} has vanishing radial derivative on the sphere.
inline int radial_shift(int n, int d) { return n + d - 4; }

inline void validate(const InnerProductSpec& spec) {
  std::visit(
      [](const auto& form) {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, ClassicalForm>) {
          if (form.mu < 0) throw std::domain_error("classical weight exponent must be >= 0");
        } else if constexpr (std::is_same_v<T, GradForm> || std::is_same_v<T, BiLaplacianForm>) {
          if (form.lambda <= 0) throw std::domain_error("lambda must be positive");
        } else if constexpr (std::is_same_v<T, StarForm>) {
          if (form.lambda <= 0) throw std::domain_error("lambda must be positive");
          if (form.mu <= 0) throw std::domain_error("mu must be positive");
          if (form.n < 1) throw std::domain_error("starred form degree must be >= 1");
        }
      },
      spec);
}

inline std::string describe(const InnerProductSpec& spec) {
  return std::visit(
      [](const auto& form) -> std::string {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, ClassicalForm>) {
          return "classical(mu=" + std::to_string(form.mu) + ")";
        } else if constexpr (std::is_same_v<T, GradForm>) {
          return "grad(lambda=" + to_string(form.lambda) + ")";
        } else if constexpr (std::is_same_v<T, BiLaplacianForm>) {
          return "bilap(lambda=" + to_string(form.lambda) + ")";
        } else if constexpr (std::is_same_v<T, DeltaForm>) {
          return "delta";
        } else {
          return "star(lambda=" + to_string(form.lambda) + ", mu=" + to_string(form.mu) +
                 ", n=" + std::to_string(form.n) + ")";
        }
      },
      spec);
}

inline Rational ip_classical(const Polynomial& f, const Polynomial& g, int mu) {
  if (mu < 0) throw std::domain_error("classical weight exponent must be >= 0");
  return ball_inner(f, g, mu) / ball_weighted_monomial_integral(Exponent(f.dimension()), mu);
}

inline Rational ip_grad(const Polynomial& f, const Polynomial& g, const Rational& lambda) {
  if (lambda <= 0) throw std::domain_error("lambda must be positive");
  if (f.dimension() != g.dimension()) throw DimensionMismatch(f.dimension(), g.dimension());
  Rational solid = 0;
  for (int i = 0; i < f.dimension(); ++i) solid += ball_inner(partial(f, i), partial(g, i));
  return lambda * solid + sphere_inner(f, g);
}

inline Rational ip_bilap(const Polynomial& f, const Polynomial& g, const Rational& lambda) {
  if (lambda <= 0) throw std::domain_error("lambda must be positive");
  return lambda * ball_inner(laplacian(f), laplacian(g)) + sphere_inner(f, g);
}

inline Rational ip_delta_form(const Polynomial& f, const Polynomial& g) {
  const int d = f.dimension();
  // vol(B^d)/omega_d = 1/d, so a_d * int = (normalized int) / (4d).
  return ball_inner(laplacian(one_minus_normsq_times(f, 1)), laplacian(one_minus_normsq_times(g, 1))) /
         (4 * d);
}

/// Restriction to the sphere of d/dr[r^s f(r x')] at r = 1:
/// each homogeneous part f_m picks up the factor (m + s).
inline Polynomial radial_derivative_trace(const Polynomial& f, int shift) {
  Polynomial r(f.dimension());
  for (const auto& [e, c] : f.terms()) r.add_term(e, c * (e.degree() + shift));
  return r;
}

/// The radial surface term alone, without the mu factor.
inline Rational star_radial_term(const Polynomial& f, const Polynomial& g, int n) {
  const int s = radial_shift(n, f.dimension());
  return sphere_inner(radial_derivative_trace(f, s), radial_derivative_trace(g, s));
}

inline Rational ip_star(const Polynomial& f, const Polynomial& g, const Rational& lambda,
                        const Rational& mu, int n) {
  if (mu <= 0) throw std::domain_error("mu must be positive");
  return ip_bilap(f, g, lambda) + mu * star_radial_term(f, g, n);
}

inline Rational inner_product(const InnerProductSpec& spec, const Polynomial& f, const Polynomial& g) {
  return std::visit(
      [&](const auto& form) -> Rational {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, ClassicalForm>) {
          return ip_classical(f, g, form.mu);
        } else if constexpr (std::is_same_v<T, GradForm>) {
          return ip_grad(f, g, form.lambda);
        } else if constexpr (std::is_same_v<T, BiLaplacianForm>) {
          return ip_bilap(f, g, form.lambda);
        } else if constexpr (std::is_same_v<T, DeltaForm>) {
          return ip_delta_form(f, g);
        } else {
          return ip_star(f, g, form.lambda, form.mu, form.n);
        }
      },
      spec);
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix gram_matrix(const std::vector<Polynomial>& family, const InnerProductSpec& spec) {
  validate(spec);
  const std::size_t n = family.size();
  RationalMatrix g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = inner_product(spec, family[i], family[j]);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

}  // namespace ballpoly

#endif  // BALLPOLY_QUADRATURE_HPP
