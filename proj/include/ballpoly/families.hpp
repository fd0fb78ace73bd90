#ifndef BALLPOLY_FAMILIES_HPP
#define BALLPOLY_FAMILIES_HPP

// Polynomial families on the unit ball: the classical W_mu basis and the
// composite families built from harmonic shells (1-||x||^2)^j H_{n-2j}^d.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "ballpoly/harmonic.hpp"
#include "ballpoly/jacobi.hpp"
#include "ballpoly/polynomial.hpp"
#include "ballpoly/rational.hpp"

namespace ballpoly {

namespace family {
struct WMu {
  int mu = 0;
};
struct WMinus1 {};
struct VDelta {};
struct VMinus2 {};
struct UMinusK {
  int k = 2;
};
}  // namespace family

using FamilyKind = std::variant<family::WMu, family::WMinus1, family::VDelta, family::VMinus2, family::UMinusK>;

inline std::string kind_name(const FamilyKind& kind) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::WMu>) return "wmu";
        else if constexpr (std::is_same_v<T, family::WMinus1>) return "wminus1";
        else if constexpr (std::is_same_v<T, family::VDelta>) return "vdelta";
        else if constexpr (std::is_same_v<T, family::VMinus2>) return "vminus2";
        else return "u";
      },
      kind);
}

/// Provenance of one element. part is one of
///   "wmu"      P_{j,nu}(W_mu)
///   "harmonic" Y_nu in H_n
///   "shell"    j-th shell over Y_nu in H_{n-2j}
///   "top"      (1-||x||^2)^k P_{j,nu} from the innermost classical family
struct ElementLabel {
  std::string part;
  int j = 0;
  int nu = 0;

  friend bool operator==(const ElementLabel&, const ElementLabel&) = default;
};

inline std::string to_string(const ElementLabel& label) {
  return label.part + "(j=" + std::to_string(label.j) + ", nu=" + std::to_string(label.nu) + ")";
}

struct LabeledPolynomial {
  ElementLabel label;
  Polynomial poly;
};

struct BasisFamily {
  FamilyKind kind;
  int dimension = 1;
  int degree = 0;
  std::vector<LabeledPolynomial> elements;

  std::size_t size() const { return elements.size(); }

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.poly);
    return out;
  }
};

/// Raised when a correction coefficient has a vanishing denominator factor
/// n - j - k + nu + d/2 = 0.
class SingularCoefficient : public std::domain_error {
 public:
  SingularCoefficient(int n, int j, int nu, int k, int d)
      : std::domain_error("singular coefficient a_{j,nu}^n at n=" + std::to_string(n) + ", j=" +
                          std::to_string(j) + ", nu=" + std::to_string(nu) + " (k=" + std::to_string(k) +
                          ", d=" + std::to_string(d) + ")"),
        n(n),
        j(j),
        nu(nu),
        k(k),
        d(d) {}

  int n, j, nu, k, d;
};

/// a_{j,nu}^n = (-1)^{j-nu} j! (1-k)_j (n-j-k+d/2)_nu / (nu! (j-nu)! (1-k)_nu (n-j-k+d/2)_j).
/// The Pochhammer ratios telescope to products over nu <= i <= j-1, so the
/// only possible singularity is a vanishing factor n-j-k+i+d/2; the reported
/// nu is that i.
inline Rational a_coefficient(int j, int nu, int n, int k, int d) {
  if (k < 2 || j < 1 || j > k - 1 || nu < 0 || nu > j) {
    throw std::invalid_argument("a_coefficient requires 1 <= j <= k-1 and 0 <= nu <= j");
  }
  const Rational base = Rational(n - j - k) + make_rational(d, 2);
  Rational value = Rational(factorial(j)) / Rational(factorial(nu) * factorial(j - nu));
  if ((j - nu) % 2 != 0) value = -value;
  for (int i = nu; i < j; ++i) {
    const Rational denom = base + i;
    if (denom == 0) throw SingularCoefficient(n, j, i, k, d);
    value *= Rational(1 - k + i) / denom;
  }
  return value;
}

/// sum_nu a_{j,nu}^n (1-||x||^2)^nu
inline Polynomial shell_multiplier(int j, int n, int k, int d) {
  Polynomial m(d);
  for (int nu = 0; nu <= j; ++nu) {
    m += one_minus_normsq_times(Polynomial::constant(d, a_coefficient(j, nu, n, k, d)), nu);
  }
  return m;
}

/// P_{j,nu}^n(W_mu; x) = P_j^{(mu, n-2j+(d-2)/2)}(2||x||^2-1) Y_nu^{n-2j}(x).
inline BasisFamily wmu_basis(int d, int n, int mu) {
  if (mu < 0) throw std::domain_error("wmu_basis requires mu >= 0");
  BasisFamily fam{family::WMu{mu}, d, n, {}};
  for (int j = 0; 2 * j <= n; ++j) {
    const JacobiParams params{Rational(mu), Rational(n - 2 * j) + make_rational(d - 2, 2)};
    const Polynomial radial = compose_radial(jacobi(j, params), d);
    const auto& harmonics = harmonic_basis(d, n - 2 * j);
    for (std::size_t i = 0; i < harmonics.size(); ++i) {
      fam.elements.push_back({{"wmu", j, static_cast<int>(i) + 1}, radial * harmonics.elements[i]});
    }
  }
  return fam;
}

namespace detail {

inline void append_harmonics(BasisFamily& fam, int n) {
  const auto& harmonics = harmonic_basis(fam.dimension, n);
  for (std::size_t i = 0; i < harmonics.size(); ++i) {
    fam.elements.push_back({{"harmonic", 0, static_cast<int>(i) + 1}, harmonics.elements[i]});
  }
}

// (1-||x||^2)^power * V_m(W_mu); empty for m < 0.
inline void append_top(BasisFamily& fam, int m, int mu, int power) {
  if (m < 0) return;
  for (auto& e : wmu_basis(fam.dimension, m, mu).elements) {
    fam.elements.push_back({{"top", e.label.j, e.label.nu}, one_minus_normsq_times(e.poly, power)});
  }
}

// Z_j shells: multiplier * Y for Y in H_{n-2j}.
inline void append_shell(BasisFamily& fam, int j, const Polynomial& multiplier) {
  const auto& harmonics = harmonic_basis(fam.dimension, fam.degree - 2 * j);
  for (std::size_t i = 0; i < harmonics.size(); ++i) {
    fam.elements.push_back({{"shell", j, static_cast<int>(i) + 1}, multiplier * harmonics.elements[i]});
  }
}

}  // namespace detail

/// H_n + (1-||x||^2) V_{n-2}(W_1)
inline BasisFamily vminus1_basis(int d, int n) {
  BasisFamily fam{family::WMinus1{}, d, n, {}};
  detail::append_harmonics(fam, n);
  detail::append_top(fam, n - 2, 1, 1);
  return fam;
}

/// H_n + (1-||x||^2) V_{n-2}(W_2)
inline BasisFamily vdelta_basis(int d, int n) {
  BasisFamily fam{family::VDelta{}, d, n, {}};
  detail::append_harmonics(fam, n);
  detail::append_top(fam, n - 2, 2, 1);
  return fam;
}

/// H_n + (1-||x||^2) H_{n-2} + (1-||x||^2)^2 V_{n-4}(W_2)
inline BasisFamily vminus2_basis(int d, int n) {
  BasisFamily fam{family::VMinus2{}, d, n, {}};
  detail::append_harmonics(fam, n);
  if (n >= 2) detail::append_shell(fam, 1, Polynomial::one_minus_norm_squared(d));
  detail::append_top(fam, n - 4, 2, 2);
  return fam;
}

/// Eigenfunctions of L_{-k}: H_n, the shells [sum_nu a_{j,nu}^n (1-||x||^2)^nu] H_{n-2j}
/// for 1 <= j <= k-1, and (1-||x||^2)^k V_{n-2k}(W_k). Throws SingularCoefficient
/// when a nonempty shell needs an undefined coefficient.
inline BasisFamily u_basis(int d, int n, int k) {
  if (k < 2) throw std::domain_error("u_basis requires k >= 2");
  BasisFamily fam{family::UMinusK{k}, d, n, {}};
  detail::append_harmonics(fam, n);
  for (int j = 1; j <= k - 1 && n - 2 * j >= 0; ++j) {
    detail::append_shell(fam, j, shell_multiplier(j, n, k, d));
  }
  detail::append_top(fam, n - 2 * k, k, k);
  return fam;
}

inline BasisFamily make_family(const FamilyKind& kind, int d, int n) {
  return std::visit(
      [&](const auto& f) -> BasisFamily {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::WMu>) return wmu_basis(d, n, f.mu);
        else if constexpr (std::is_same_v<T, family::WMinus1>) return vminus1_basis(d, n);
        else if constexpr (std::is_same_v<T, family::VDelta>) return vdelta_basis(d, n);
        else if constexpr (std::is_same_v<T, family::VMinus2>) return vminus2_basis(d, n);
        else return u_basis(d, n, f.k);
      },
      kind);
}

struct SingularTriple {
  int n = 0;
  int j = 0;
  int nu = 0;

  friend bool operator==(const SingularTriple&, const SingularTriple&) = default;
};

/// Every (n, j, nu) with 0 <= n <= n_max, 1 <= j <= k-1, 0 <= nu <= j-1 and
/// n - j - k + nu + d/2 = 0. Always empty for odd d.
inline std::vector<SingularTriple> singularity_report(int d, int k, int n_max) {
  if (k < 2) throw std::domain_error("singularity_report requires k >= 2");
  std::vector<SingularTriple> out;
  if (d % 2 != 0) return out;
  for (int n = 0; n <= n_max; ++n) {
    for (int j = 1; j <= k - 1; ++j) {
      for (int nu = 0; nu <= j - 1; ++nu) {
        if (2 * (n - j - k + nu) + d == 0) out.push_back({n, j, nu});
      }
    }
  }
  return out;
}

}  // namespace ballpoly

#endif  // BALLPOLY_FAMILIES_HPP
