#include <gtest/gtest.h>

#include <vector>

#include "ballpoly/families.hpp"
#include "ballpoly/quadrature.hpp"
#include "ballpoly/spectral.hpp"

using namespace ballpoly;

namespace {

Polynomial x(int d, int axis) { return Polynomial::variable(d, axis); }
Polynomial one(int d) { return Polynomial::constant(d, 1); }

// Rank of a set of polynomials via their coefficient vectors.
std::size_t rank_of(const std::vector<Polynomial>& polys) {
  std::map<Exponent, std::size_t> index;
  for (const auto& p : polys) {
    for (const auto& [e, c] : p.terms()) index.emplace(e, index.size());
  }
  std::vector<RationalVector> rows;
  for (const auto& p : polys) {
    RationalVector row(index.size());
    for (const auto& [e, c] : p.terms()) row[index.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return row_reduce(rows, index.size()).size();
}

bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank_of(a) == rank_of(b) && rank_of(both) == rank_of(a);
}

// Normalized int_{-1}^{1} q(t) (1-t)^a (1+t)^b dt / int (1-t)^a (1+t)^b dt, through
// s = (1+t)/2: the moment ratio of s^m is (b+1)_m / (a+b+2)_m.
Rational jacobi_weight_average(const UnivariatePolynomial& q, const Rational& a, const Rational& b) {
  // Re-expand q(t) in powers of s with t = 2s - 1.
  std::vector<Rational> in_s(q.coeffs.size());
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) {
    for (std::size_t m = 0; m <= i; ++m) {
      Rational term = q.coeffs[i] * Rational(binomial(static_cast<long>(i), static_cast<long>(m)));
      for (std::size_t r = 0; r < m; ++r) term *= 2;
      if ((i - m) % 2 != 0) term = -term;
      in_s[m] += term;
    }
  }
  Rational avg = 0;
  for (std::size_t m = 0; m < in_s.size(); ++m) {
    avg += in_s[m] * pochhammer(b + 1, static_cast<int>(m)) / pochhammer(a + b + 2, static_cast<int>(m));
  }
  return avg;
}

UnivariatePolynomial multiply(const UnivariatePolynomial& p, const UnivariatePolynomial& q) {
  UnivariatePolynomial r{std::vector<Rational>(p.coeffs.size() + q.coeffs.size() - 1)};
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Harmonic bases

TEST(HarmonicBasis, Examples) {
  const auto& h22 = harmonic_basis(2, 2);
  EXPECT_TRUE(same_span(h22.elements, {x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1), x(2, 0) * x(2, 1) * Rational(2)}));

  const auto& h31 = harmonic_basis(3, 1);
  EXPECT_EQ(h31.size(), 3u);
  EXPECT_TRUE(same_span(h31.elements, {x(3, 0), x(3, 1), x(3, 2)}));

  EXPECT_EQ(harmonic_dimension(2, 5), 2);
  EXPECT_EQ(harmonic_basis(2, 5).size(), 2u);
  EXPECT_EQ(harmonic_basis(3, -1).size(), 0u);
  EXPECT_EQ(harmonic_basis(1, 2).size(), 0u);
}

TEST(HarmonicBasis, Invariants) {
  for (int d = 1; d <= 5; ++d) {
    for (int n = 0; n <= (d <= 3 ? 7 : 5); ++n) {
      const auto& h = harmonic_basis(d, n);
      ASSERT_EQ(static_cast<long>(h.size()), harmonic_dimension(d, n)) << "d=" << d << " n=" << n;
      for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& e = h.elements[i];
        EXPECT_TRUE(laplacian(e).is_zero());
        EXPECT_EQ(euler(e), e * Rational(n));
        EXPECT_EQ(h.norms_sq[i], sphere_inner(e, e));
        EXPECT_GT(h.norms_sq[i], 0);
        for (std::size_t j = i + 1; j < h.size(); ++j) EXPECT_EQ(sphere_inner(e, h.elements[j]), 0);
      }
    }
  }
}

TEST(HarmonicBasis, DimensionBookkeeping) {
  for (int d = 1; d <= 6; ++d) {
    for (int n = 2; n <= 12; ++n) {
      EXPECT_EQ(harmonic_dimension(d, n) + homogeneous_dimension(d, n - 2), homogeneous_dimension(d, n));
    }
  }
  EXPECT_EQ(homogeneous_dimension(3, 6), 28);
}

// ---------------------------------------------------------------------------
// Jacobi polynomials

TEST(Jacobi, LowDegree) {
  const JacobiParams params{make_rational(3, 2), make_rational(-1, 2)};
  EXPECT_EQ(jacobi(0, params).coeffs, std::vector<Rational>{1});
  // ((a+b+2) t + (a-b)) / 2
  const auto p1 = jacobi(1, params);
  ASSERT_EQ(p1.coeffs.size(), 2u);
  EXPECT_EQ(p1.coeffs[0], (params.alpha - params.beta) / 2);
  EXPECT_EQ(p1.coeffs[1], (params.alpha + params.beta + 2) / 2);
}

TEST(Jacobi, ValueAtOne) {
  for (const auto& params : {JacobiParams{1, make_rational(1, 2)}, JacobiParams{2, 3}, JacobiParams{0, make_rational(5, 2)}}) {
    for (int j = 0; j <= 5; ++j) {
      EXPECT_EQ(jacobi(j, params)(1), pochhammer(params.alpha + 1, j) / Rational(factorial(j)));
    }
  }
}

TEST(Jacobi, MatchesThreeTermRecurrence) {
  for (const auto& params : {JacobiParams{1, make_rational(1, 2)}, JacobiParams{2, make_rational(7, 2)}}) {
    const Rational& a = params.alpha;
    const Rational& b = params.beta;
    std::vector<UnivariatePolynomial> p = {jacobi(0, params), jacobi(1, params)};
    for (int n = 2; n <= 6; ++n) {
      const Rational s = 2 * n + a + b;
      const Rational c0 = 2 * n * (n + a + b) * (s - 2);
      const UnivariatePolynomial t_times{{a * a - b * b, s * (s - 2)}};
      UnivariatePolynomial next = multiply(t_times, p[static_cast<std::size_t>(n - 1)]);
      next.coeffs.resize(static_cast<std::size_t>(n) + 1);
      for (auto& c : next.coeffs) c *= s - 1;
      const Rational c2 = 2 * (n + a - 1) * (n + b - 1) * s;
      for (std::size_t i = 0; i < p[static_cast<std::size_t>(n - 2)].coeffs.size(); ++i) {
        next.coeffs[i] -= c2 * p[static_cast<std::size_t>(n - 2)].coeffs[i];
      }
      for (auto& c : next.coeffs) c /= c0;
      const auto direct = jacobi(n, params);
      EXPECT_EQ(direct.coeffs, next.coeffs) << "n=" << n;
      p.push_back(direct);
    }
  }
}

TEST(Jacobi, OrthogonalForAlphaOneBetaHalf) {
  const JacobiParams params{1, make_rational(1, 2)};
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) {
      const Rational avg = jacobi_weight_average(multiply(jacobi(i, params), jacobi(j, params)), params.alpha, params.beta);
      if (i != j) {
        EXPECT_EQ(avg, 0) << i << "," << j;
      } else {
        EXPECT_GT(avg, 0);
      }
    }
  }
}

TEST(Jacobi, RejectsNegativeIntegerParameters) {
  EXPECT_THROW(jacobi(2, JacobiParams{-1, 0}), std::domain_error);
  EXPECT_THROW(jacobi(2, JacobiParams{0, -3}), std::domain_error);
  EXPECT_NO_THROW(jacobi(2, JacobiParams{make_rational(-1, 2), 0}));
}

// ---------------------------------------------------------------------------
// Classical and composite families

TEST(WMuBasis, Examples) {
  const auto f0 = wmu_basis(3, 0, 2);
  ASSERT_EQ(f0.size(), 1u);
  EXPECT_EQ(f0.elements[0].poly, one(3));

  const auto f1 = wmu_basis(3, 1, 1);
  EXPECT_TRUE(same_span(f1.polynomials(), {x(3, 0), x(3, 1), x(3, 2)}));

  // P_1^{(1,0)}(t) = (3t + 1)/2 at t = 2|x|^2 - 1 gives 3|x|^2 - 1.
  const auto f2 = wmu_basis(2, 2, 1);
  ASSERT_EQ(f2.size(), 3u);
  const auto& last = f2.elements.back();
  EXPECT_EQ(last.label, (ElementLabel{"wmu", 1, 1}));
  EXPECT_TRUE(same_span({last.poly}, {Polynomial::norm_squared(2) * Rational(3) - one(2)}));
}

TEST(WMuBasis, CountAndDiagonalGram) {
  for (int d = 2; d <= 3; ++d) {
    for (int mu = 0; mu <= 2; ++mu) {
      for (int n = 0; n <= 4; ++n) {
        const auto fam = wmu_basis(d, n, mu);
        EXPECT_EQ(static_cast<long>(fam.size()), homogeneous_dimension(d, n));
        const auto g = gram_matrix(fam.polynomials(), ClassicalForm{mu});
        for (std::size_t i = 0; i < g.size(); ++i) {
          for (std::size_t j = 0; j < g.size(); ++j) {
            if (i != j) EXPECT_EQ(g[i][j], 0);
          }
        }
      }
    }
  }
  EXPECT_THROW(wmu_basis(2, 2, -1), std::domain_error);
}

TEST(CompositeFamilies, Counts) {
  EXPECT_EQ(vminus1_basis(3, 0).size(), 1u);
  EXPECT_TRUE(same_span(vminus1_basis(4, 1).polynomials(), {x(4, 0), x(4, 1), x(4, 2), x(4, 3)}));
  EXPECT_EQ(vminus1_basis(2, 2).size(), static_cast<std::size_t>(harmonic_dimension(2, 2) + 1));
  EXPECT_EQ(vdelta_basis(2, 0).size(), 1u);
  EXPECT_EQ(vdelta_basis(3, 1).size(), 3u);
  EXPECT_EQ(vdelta_basis(2, 2).size(), 3u);

  const auto v22 = vminus2_basis(2, 2);
  ASSERT_EQ(v22.size(), 3u);
  EXPECT_EQ(v22.elements[2].poly, Polynomial::one_minus_norm_squared(2));
  EXPECT_EQ(v22.elements[2].label.part, "shell");
  EXPECT_EQ(vminus2_basis(3, 3).size(), static_cast<std::size_t>(harmonic_dimension(3, 3) + harmonic_dimension(3, 1)));
  EXPECT_EQ(vminus2_basis(4, 0).size(), 1u);

  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 6; ++n) {
      const long dim = homogeneous_dimension(d, n);
      EXPECT_EQ(static_cast<long>(vminus1_basis(d, n).size()), dim);
      EXPECT_EQ(static_cast<long>(vdelta_basis(d, n).size()), dim);
      EXPECT_EQ(static_cast<long>(vminus2_basis(d, n).size()), dim);
    }
  }
}

// ---------------------------------------------------------------------------
// Correction coefficients and the U(W_{-k}) family

TEST(ACoefficient, Examples) {
  for (int k = 2; k <= 5; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int d = 1; d <= 5; ++d) EXPECT_EQ(a_coefficient(j, j, 2 * k + 3, k, d), 1);
    }
  }
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(a_coefficient(1, 0, n, 2, 2), Rational(1) / (n - 2));
  }
  for (int n = 7; n <= 12; ++n) {
    EXPECT_EQ(a_coefficient(1, 0, n, 4, 2), Rational(3) / (n - 4));
    EXPECT_EQ(a_coefficient(2, 1, n, 4, 2), Rational(4) / (n - 4));
    // The closed form and its recurrence give 6 here, and only 6 makes the
    // shell an eigenfunction (see Spectral.ShellWithEightIsNotAnEigenfunction).
    EXPECT_EQ(a_coefficient(2, 0, n, 4, 2), Rational(6) / ((n - 4) * (n - 5)));
    EXPECT_EQ(a_coefficient(3, 2, n, 4, 2), Rational(3) / (n - 4));
    EXPECT_EQ(a_coefficient(3, 1, n, 4, 2), Rational(6) / ((n - 4) * (n - 5)));
    EXPECT_EQ(a_coefficient(3, 0, n, 4, 2), Rational(6) / ((n - 4) * (n - 5) * (n - 6)));
  }
  EXPECT_EQ(a_coefficient(1, 0, 5, 2, 3), make_rational(2, 7));
}

TEST(ACoefficient, SingularAndInvalid) {
  try {
    a_coefficient(1, 0, 2, 2, 2);
    FAIL() << "expected SingularCoefficient";
  } catch (const SingularCoefficient& e) {
    EXPECT_EQ(e.j, 1);
    EXPECT_EQ(e.nu, 0);
    EXPECT_EQ(e.n, 2);
  }
  EXPECT_THROW(a_coefficient(0, 0, 5, 2, 3), std::invalid_argument);
  EXPECT_THROW(a_coefficient(2, 0, 5, 2, 3), std::invalid_argument);
  EXPECT_THROW(a_coefficient(1, 2, 5, 3, 3), std::invalid_argument);
}

TEST(ACoefficient, BackwardRecurrence) {
  for (int k = 2; k <= 5; ++k) {
    for (int d = 1; d <= 5; ++d) {
      for (int n = 0; n <= 12; ++n) {
        for (int j = 1; j <= k - 1; ++j) {
          for (int nu = 0; nu < j; ++nu) {
            Rational lhs, next;
            try {
              lhs = a_coefficient(j, nu, n, k, d);
              next = a_coefficient(j, nu + 1, n, k, d);
            } catch (const SingularCoefficient&) {
              continue;
            }
            const Rational ratio = Rational(-2 * (nu + 1) * (-k + nu + 1)) / Rational((j - nu) * (2 * n - 2 * j + 2 * nu - 2 * k + d));
            EXPECT_EQ(lhs, next * ratio);
          }
        }
      }
    }
  }
}

TEST(UBasis, Examples) {
  const auto u = u_basis(3, 4, 2);
  EXPECT_EQ(u.size(), 15u);
  EXPECT_EQ(static_cast<long>(u.size()), harmonic_dimension(3, 4) + harmonic_dimension(3, 2) + 1);

  try {
    u_basis(2, 2, 2);
    FAIL() << "expected SingularCoefficient";
  } catch (const SingularCoefficient& e) {
    EXPECT_EQ(e.j, 1);
    EXPECT_EQ(e.nu, 0);
  }

  for (int n = 3; n <= 7; ++n) {
    const auto fam = u_basis(2, n, 2);
    const Polynomial mult = Polynomial::one_minus_norm_squared(2) + Polynomial::constant(2, Rational(1) / (n - 2));
    std::vector<Polynomial> shell, expected;
    for (const auto& e : fam.elements) {
      if (e.label.part == "shell") shell.push_back(e.poly);
    }
    for (const auto& y : harmonic_basis(2, n - 2).elements) expected.push_back(mult * y);
    EXPECT_EQ(shell, expected);
  }
  EXPECT_THROW(u_basis(3, 4, 1), std::domain_error);
}

TEST(UBasis, FullDimensionInOddDimensions) {
  for (int d : {1, 3, 5}) {
    for (int k = 2; k <= 4; ++k) {
      for (int n = 0; n <= (d == 5 ? 5 : 8); ++n) {
        EXPECT_EQ(static_cast<long>(u_basis(d, n, k).size()), homogeneous_dimension(d, n));
      }
    }
  }
}

TEST(SingularityReport, Examples) {
  EXPECT_TRUE(singularity_report(3, 2, 20).empty());
  EXPECT_TRUE(singularity_report(5, 4, 20).empty());
  EXPECT_EQ(singularity_report(2, 2, 20), (std::vector<SingularTriple>{{2, 1, 0}}));
  const auto k4 = singularity_report(2, 4, 30);
  EXPECT_FALSE(k4.empty());
  for (const auto& t : k4) EXPECT_LE(t.n, 2 * 4 - 1 + 1);
}

TEST(SingularityReport, AgreesWithConstruction) {
  // Exhaustive: u_basis throws exactly when a reported triple has a nonempty shell.
  for (int d : {2, 4}) {
    for (int k = 2; k <= 4; ++k) {
      const auto report = singularity_report(d, k, 10);
      for (int n = 0; n <= 10; ++n) {
        bool expect_singular = false;
        for (const auto& t : report) expect_singular = expect_singular || (t.n == n && n - 2 * t.j >= 0);
        bool threw = false;
        try {
          u_basis(d, n, k);
        } catch (const SingularCoefficient&) {
          threw = true;
        }
        EXPECT_EQ(threw, expect_singular) << "d=" << d << " k=" << k << " n=" << n;
      }
    }
  }
}
