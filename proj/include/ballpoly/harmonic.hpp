#ifndef BALLPOLY_HARMONIC_HPP
#define BALLPOLY_HARMONIC_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "ballpoly/linalg.hpp"
#include "ballpoly/polynomial.hpp"
#include "ballpoly/quadrature.hpp"
#include "ballpoly/rational.hpp"

namespace ballpoly {

/// dim P_n^d = C(n+d-1, d-1); zero for n < 0.
inline long homogeneous_dimension(int d, int n) {
  if (n < 0) return 0;
  return binomial(n + d - 1, d - 1).get_si();
}

/// sigma_n = dim H_n^d = dim P_n^d - dim P_{n-2}^d.
inline long harmonic_dimension(int d, int n) {
  return homogeneous_dimension(d, n) - homogeneous_dimension(d, n - 2);
}

/// Sphere-orthogonal (not unit-normalized) basis of the homogeneous harmonic
/// polynomials of degree n. norms_sq[i] is the normalized sphere norm of elements[i].
struct HarmonicBasis {
  int dimension = 1;
  int degree = 0;
  std::vector<Polynomial> elements;
  std::vector<Rational> norms_sq;

  std::size_t size() const { return elements.size(); }
};

namespace detail {

// Scales to integer coefficients with unit content and positive leading term.
inline Polynomial make_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.terms().rbegin()->second < 0) factor = -factor;
  return p * factor;
}

// Single parity class shared by all terms, if any.
inline std::optional<unsigned> parity_class(const Polynomial& p) {
  std::optional<unsigned> mask;
  for (const auto& [e, c] : p.terms()) {
    if (!mask) {
      mask = e.parity_mask();
    } else if (*mask != e.parity_mask()) {
      return std::nullopt;
    }
  }
  return mask;
}

inline HarmonicBasis compute_harmonic_basis(int d, int n) {
  HarmonicBasis basis{d, n, {}, {}};
  if (n < 0) return basis;

  const auto cols = monomials_of_degree(d, n);
  const auto row_monomials = monomials_of_degree(d, n - 2);
  std::map<Exponent, std::size_t> row_index;
  for (std::size_t r = 0; r < row_monomials.size(); ++r) row_index.emplace(row_monomials[r], r);

  std::vector<RationalVector> matrix(row_monomials.size(), RationalVector(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial image = laplacian(Polynomial::monomial(cols[c]));
    for (const auto& [e, coeff] : image.terms()) {
      matrix[row_index.at(e)][c] = coeff;
    }
  }

  std::vector<Polynomial> kernel;
  for (const auto& v : nullspace(std::move(matrix), cols.size())) {
    Polynomial p(d);
    for (std::size_t c = 0; c < cols.size(); ++c) p.add_term(cols[c], v[c]);
    kernel.push_back(std::move(p));
  }

  // Gram-Schmidt against the normalized sphere form, without normalizing.
  std::vector<std::optional<unsigned>> classes;
  for (const auto& u : kernel) {
    Polynomial v = u;
    const auto cls = parity_class(u);
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      if (cls && classes[i] && *cls != *classes[i]) continue;
      Rational proj = sphere_inner(u, basis.elements[i]);
      if (proj != 0) v -= basis.elements[i] * Rational(proj / basis.norms_sq[i]);
    }
    v = make_primitive(v);
    basis.norms_sq.push_back(sphere_inner(v, v));
    classes.push_back(parity_class(v));
    basis.elements.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Kernel of the Laplacian on P_n^d by exact row reduction in graded-lex
/// monomial order, then sphere Gram-Schmidt. Results are memoized per (d, n).
inline const HarmonicBasis& harmonic_basis(int d, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, HarmonicBasis> cache;
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  const auto key = std::make_pair(d, n < 0 ? -1 : n);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, detail::compute_harmonic_basis(d, key.second)).first;
  return it->second;
}

}  // namespace ballpoly

#endif  // BALLPOLY_HARMONIC_HPP
