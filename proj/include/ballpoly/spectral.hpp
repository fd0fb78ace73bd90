#ifndef BALLPOLY_SPECTRAL_HPP
#define BALLPOLY_SPECTRAL_HPP

// The ball operator L_mu = Lap - <x,grad>^2 - (2 mu + d) <x,grad> and the
// checks built on it: eigen-residuals, operator identities, Gram-matrix
// orthogonality, and symmetry with respect to the classical weight.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballpoly/families.hpp"
#include "ballpoly/linalg.hpp"
#include "ballpoly/polynomial.hpp"
#include "ballpoly/quadrature.hpp"
#include "ballpoly/random.hpp"
#include "ballpoly/rational.hpp"

namespace ballpoly {

inline Polynomial apply_L(const Rational& mu, const Polynomial& p) {
  const Polynomial e = euler(p);
  return laplacian(p) - euler(e) - e * Rational(2 * mu + p.dimension());
}

/// lambda_n^(mu) = -n (n + 2 mu + d)
inline Rational eigenvalue(int n, const Rational& mu, int d) {
  if (n < 0) throw std::invalid_argument("eigenvalue degree must be non-negative");
  return -Rational(n) * (n + 2 * mu + d);
}

// ---------------------------------------------------------------------------
// Eigen-residuals

struct EigenReport {
  std::string family;
  int dimension = 0;
  int degree = 0;
  Rational mu;
  Rational eigenvalue;
  std::vector<ElementLabel> labels;
  std::vector<bool> residual_zero;
  /// Failing element with the largest residual, if any.
  std::optional<std::pair<ElementLabel, Polynomial>> worst;
  bool pass = true;
};

inline Polynomial eigen_residual(const Rational& mu, int n, const Polynomial& p) {
  return apply_L(mu, p) - p * eigenvalue(n, mu, p.dimension());
}

/// Residuals are compared to the zero polynomial rather than comparing
/// eigenvalues, so coinciding eigenvalues cannot hide a failure.
inline EigenReport check_eigen(const BasisFamily& family, const Rational& mu) {
  EigenReport report{kind_name(family.kind), family.dimension, family.degree, mu,
                     eigenvalue(family.degree, mu, family.dimension), {}, {}, std::nullopt, true};
  for (const auto& element : family.elements) {
    Polynomial residual = eigen_residual(mu, family.degree, element.poly);
    const bool zero = residual.is_zero();
    report.labels.push_back(element.label);
    report.residual_zero.push_back(zero);
    if (!zero) {
      report.pass = false;
      if (!report.worst || residual.size() > report.worst->second.size()) {
        report.worst.emplace(element.label, std::move(residual));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Operator identities

/// L_mu[(1-|x|^2) P] - { 4(mu+1) P + (1-|x|^2)[-(4(mu+1)+2d) P + L_{mu+2} P] }
inline Polynomial verify_lemma31(const Rational& mu, const Polynomial& p) {
  const int d = p.dimension();
  const Polynomial lhs = apply_L(mu, one_minus_normsq_times(p, 1));
  const Polynomial inner = p * Rational(-(4 * (mu + 1) + 2 * d)) + apply_L(mu + 2, p);
  const Polynomial rhs = p * Rational(4 * (mu + 1)) + one_minus_normsq_times(inner, 1);
  return lhs - rhs;
}

/// L_mu[(1-|x|^2)^k P] - { 4k(mu+k)(1-|x|^2)^{k-1} P
///                         + (1-|x|^2)^k [-(4k(mu+k)+2kd) P + L_{mu+2k} P] }
inline Polynomial verify_power_identity(const Rational& mu, int k, const Polynomial& p) {
  if (k < 1) throw std::invalid_argument("power identity requires k >= 1");
  const int d = p.dimension();
  const Polynomial lhs = apply_L(mu, one_minus_normsq_times(p, k));
  const Rational c = 4 * k * (mu + k);
  const Polynomial inner = p * Rational(-(c + 2 * k * d)) + apply_L(mu + 2 * k, p);
  const Polynomial rhs = one_minus_normsq_times(p * c, k - 1) + one_minus_normsq_times(inner, k);
  return lhs - rhs;
}

// ---------------------------------------------------------------------------
// Orthogonality

struct GramEntry {
  std::string row;
  std::string column;
  Rational value;
};

struct GramReport {
  std::string inner_product;
  std::string mode;
  std::string description;
  std::size_t entries_checked = 0;
  std::vector<GramEntry> nonzero;
  bool pass = true;
};

inline std::string monomial_name(const Exponent& e) {
  std::string s;
  for (int i = 0; i < e.dimension(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

/// ip(p, x^alpha) for every element p and every monomial of degree < n.
inline GramReport check_cross_degree(const BasisFamily& family, const InnerProductSpec& spec) {
  validate(spec);
  GramReport report{describe(spec), "cross", "", 0, {}, true};
  report.description = kind_name(family.kind) + " degree " + std::to_string(family.degree) +
                       " vs monomials of degree < " + std::to_string(family.degree);
  const auto monomials = monomials_up_to_degree(family.dimension, family.degree - 1);
  for (const auto& element : family.elements) {
    for (const auto& e : monomials) {
      Rational v = inner_product(spec, element.poly, Polynomial::monomial(e));
      ++report.entries_checked;
      if (v != 0) {
        report.pass = false;
        report.nonzero.push_back({to_string(element.label), monomial_name(e), v});
      }
    }
  }
  return report;
}

/// Block key for the direct-sum structure: every classical element is its own
/// block; composite families split into harmonic, each shell j, and top.
inline std::string block_of(const ElementLabel& label) {
  if (label.part == "wmu") return to_string(label);
  if (label.part == "shell") return "shell" + std::to_string(label.j);
  return label.part;
}

/// Off-block Gram entries within one degree must vanish.
inline GramReport check_within_degree(const BasisFamily& family, const InnerProductSpec& spec) {
  validate(spec);
  GramReport report{describe(spec), "within", "", 0, {}, true};
  report.description = kind_name(family.kind) + " degree " + std::to_string(family.degree) + " block structure";
  const auto& els = family.elements;
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (block_of(els[i].label) == block_of(els[j].label)) continue;
      Rational v = inner_product(spec, els[i].poly, els[j].poly);
      ++report.entries_checked;
      if (v != 0) {
        report.pass = false;
        report.nonzero.push_back({to_string(els[i].label), to_string(els[j].label), v});
      }
    }
  }
  return report;
}

/// Every ip(a_i, b_j) must vanish.
inline GramReport check_pair(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                             const InnerProductSpec& spec) {
  validate(spec);
  GramReport report{describe(spec), "pair", "all cross entries", 0, {}, true};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Rational v = inner_product(spec, a[i], b[j]);
      ++report.entries_checked;
      if (v != 0) {
        report.pass = false;
        report.nonzero.push_back({"a" + std::to_string(i), "b" + std::to_string(j), v});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Symmetry of L_mu with respect to W_mu

struct SymmetryReport {
  int mu = 1;
  int dimension = 2;
  std::uint64_t seed = 0;
  int trials = 0;
  bool pass = true;
  struct Counterexample {
    Polynomial f;
    Polynomial g;
    Rational lhs;
    Rational rhs;
  };
  std::optional<Counterexample> counterexample;
};

/// <L_mu f, g>_mu = <f, L_mu g>_mu on seeded random pairs of degree <= max_degree.
inline SymmetryReport check_symmetry(int mu, int d, int trials, std::uint64_t seed, int max_degree = 6) {
  if (mu < 1) throw std::domain_error("symmetry check requires integer mu >= 1");
  SymmetryReport report{mu, d, seed, trials, true, std::nullopt};
  PolynomialSampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    Polynomial f = sampler.polynomial(d, sampler.integer(0, max_degree));
    Polynomial g = sampler.polynomial(d, sampler.integer(0, max_degree));
    Rational lhs = ip_classical(apply_L(mu, f), g, mu);
    Rational rhs = ip_classical(f, apply_L(mu, g), mu);
    if (lhs != rhs) {
      report.pass = false;
      report.counterexample = SymmetryReport::Counterexample{f, g, lhs, rhs};
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Eigenspaces and the missing degree-2 eigenpolynomial

/// Basis of {p in Pi_m^d : L_mu p = value * p}.
inline std::vector<Polynomial> eigenspace(const Rational& mu, int d, int max_degree, const Rational& value) {
  const auto monomials = monomials_up_to_degree(d, max_degree);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

  std::vector<RationalVector> rows(monomials.size(), RationalVector(monomials.size()));
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    const Polynomial m = Polynomial::monomial(monomials[c]);
    const Polynomial image = apply_L(mu, m) - m * value;
    for (const auto& [e, coeff] : image.terms()) rows[index.at(e)][c] = coeff;
  }
  std::vector<Polynomial> basis;
  for (const auto& v : nullspace(std::move(rows), monomials.size())) {
    Polynomial p(d);
    for (std::size_t c = 0; c < monomials.size(); ++c) p.add_term(monomials[c], v[c]);
    basis.push_back(std::move(p));
  }
  return basis;
}

struct MissingEigenReport {
  Rational eigenvalue;
  std::vector<std::pair<std::string, bool>> annihilated;
  std::size_t space_dimension = 0;
  std::size_t degree_two_needed = 0;
  std::vector<Polynomial> kernel;
  /// Kernel elements whose degree-2 part is harmonic (no ||x||^2 component).
  bool kernel_top_parts_harmonic = true;
  /// Kernel elements of exact degree 2.
  std::size_t kernel_degree_two = 0;
};

/// d = 2, k = 2: lambda_2^(-2) = 0 coincides with lambda_0^(-2), and the
/// eigenspace of L_{-2} on Pi_2 contains only 1 and H_2.
inline MissingEigenReport missing_eigenpolynomial_demo() {
  constexpr int d = 2;
  const Rational mu = -2;
  MissingEigenReport r;
  r.eigenvalue = eigenvalue(2, mu, d);
  const Polynomial x1 = Polynomial::variable(d, 0);
  const Polynomial x2 = Polynomial::variable(d, 1);
  r.annihilated = {
      {"1", apply_L(mu, Polynomial::constant(d, 1)).is_zero()},
      {"x1^2-x2^2", apply_L(mu, x1 * x1 - x2 * x2).is_zero()},
      {"x1*x2", apply_L(mu, x1 * x2).is_zero()},
  };
  r.space_dimension = monomials_up_to_degree(d, 2).size();
  r.degree_two_needed = static_cast<std::size_t>(homogeneous_dimension(d, 2));
  r.kernel = eigenspace(mu, d, 2, r.eigenvalue);
  for (const auto& p : r.kernel) {
    if (p.degree() != 2) continue;
    ++r.kernel_degree_two;
    for (const auto& [deg, part] : homogeneous_parts(p)) {
      if (deg == 2 && !laplacian(part).is_zero()) r.kernel_top_parts_harmonic = false;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// The gradient form is not induced by a moment functional

struct NonMomentWitness {
  Polynomial f;
  Polynomial g;
  Rational lhs;  // <x1 f, g>_{-1}
  Rational rhs;  // <f, x1 g>_{-1}
};

/// First pair of monomials of degree <= 2, in graded-lex order, with
/// <x1 f, g>_{-1} != <f, x1 g>_{-1}.
inline std::optional<NonMomentWitness> non_moment_witness(int d, const Rational& lambda) {
  const Polynomial x1 = Polynomial::variable(d, 0);
  const auto monomials = monomials_up_to_degree(d, 2);
  for (const auto& a : monomials) {
    for (const auto& b : monomials) {
      const Polynomial f = Polynomial::monomial(a);
      const Polynomial g = Polynomial::monomial(b);
      Rational lhs = ip_grad(x1 * f, g, lambda);
      Rational rhs = ip_grad(f, x1 * g, lambda);
      if (lhs != rhs) return NonMomentWitness{f, g, lhs, rhs};
    }
  }
  return std::nullopt;
}

}  // namespace ballpoly

#endif  // BALLPOLY_SPECTRAL_HPP
