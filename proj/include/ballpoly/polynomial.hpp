#ifndef BALLPOLY_POLYNOMIAL_HPP
#define BALLPOLY_POLYNOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ballpoly/rational.hpp"

namespace ballpoly {

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(int lhs, int rhs)
      : std::invalid_argument("polynomial dimension mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

/// Multi-index x^alpha. Ordered graded-lexicographically: total degree first,
/// then lexicographically with x1 most significant.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(int dimension) : powers_(static_cast<std::size_t>(dimension), 0) {}
  Exponent(std::initializer_list<int> powers) : powers_(powers) { validate(); }
  explicit Exponent(std::vector<int> powers) : powers_(std::move(powers)) { validate(); }

  int dimension() const { return static_cast<int>(powers_.size()); }
  int degree() const { return std::accumulate(powers_.begin(), powers_.end(), 0); }
  int operator[](int axis) const { return powers_[static_cast<std::size_t>(axis)]; }
  std::span<const int> powers() const { return powers_; }

  /// Multi-index with one entry changed; used by differentiation.
  Exponent with(int axis, int power) const {
    Exponent e = *this;
    e.powers_[static_cast<std::size_t>(axis)] = power;
    return e;
  }

  /// Bit i set when the i-th power is odd.
  unsigned parity_mask() const {
    unsigned mask = 0;
    for (std::size_t i = 0; i < powers_.size(); ++i) {
      if (powers_[i] % 2 != 0) mask |= 1u << i;
    }
    return mask;
  }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
    Exponent r = a;
    for (std::size_t i = 0; i < r.powers_.size(); ++i) r.powers_[i] += b.powers_[i];
    return r;
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.powers_ <=> b.powers_;
  }

 private:
  void validate() const {
    for (int p : powers_) {
      if (p < 0) throw std::invalid_argument("negative exponent");
    }
  }

  std::vector<int> powers_;
};

/// All exponents of total degree n in d variables, ascending graded-lex order.
inline std::vector<Exponent> monomials_of_degree(int d, int n) {
  std::vector<Exponent> out;
  if (n < 0 || d < 1) return out;
  std::vector<int> powers(static_cast<std::size_t>(d), 0);
  // Enumerate compositions of n into d parts; collected then sorted.
  auto recurse = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == d - 1) {
      powers[static_cast<std::size_t>(axis)] = remaining;
      out.emplace_back(powers);
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      powers[static_cast<std::size_t>(axis)] = p;
      self(self, axis + 1, remaining - p);
    }
  };
  recurse(recurse, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Exponents of total degree at most n, ascending graded-lex order.
inline std::vector<Exponent> monomials_up_to_degree(int d, int n) {
  std::vector<Exponent> out;
  for (int m = 0; m <= n; ++m) {
    auto layer = monomials_of_degree(d, m);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Sparse polynomial in a fixed number of variables with exact rational
/// coefficients. No stored coefficient is zero; the zero polynomial has no
/// terms but keeps its dimension.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit Polynomial(int dimension) : dimension_(dimension) {
    if (dimension < 1) throw std::invalid_argument("polynomial dimension must be positive");
  }

  static Polynomial constant(int dimension, const Rational& c) {
    Polynomial p(dimension);
    p.add_term(Exponent(dimension), c);
    return p;
  }

  static Polynomial monomial(const Exponent& e, const Rational& c = 1) {
    Polynomial p(e.dimension());
    p.add_term(e, c);
    return p;
  }

  static Polynomial variable(int dimension, int axis) {
    check_axis(dimension, axis);
    return monomial(Exponent(dimension).with(axis, 1));
  }

  /// ||x||^2
  static Polynomial norm_squared(int dimension) {
    Polynomial p(dimension);
    for (int i = 0; i < dimension; ++i) p.add_term(Exponent(dimension).with(i, 2), 1);
    return p;
  }

  /// 1 - ||x||^2
  static Polynomial one_minus_norm_squared(int dimension) {
    Polynomial p = constant(dimension, 1);
    for (int i = 0; i < dimension; ++i) p.add_term(Exponent(dimension).with(i, 2), -1);
    return p;
  }

  int dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  /// Lowest total degree present; -1 for zero.
  int low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  bool is_homogeneous() const { return degree() == low_degree(); }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Accumulates c x^e, erasing the term if it cancels.
  void add_term(const Exponent& e, const Rational& c) {
    if (e.dimension() != dimension_) throw DimensionMismatch(dimension_, e.dimension());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& q) {
    check_same(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& q) {
    check_same(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_same(q);
    Polynomial r(p.dimension_);
    for (const auto& [ea, ca] : p.terms_) {
      for (const auto& [eb, cb] : q.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.dimension_ == q.dimension_ && p.terms_ == q.terms_;
  }

  static void check_axis(int dimension, int axis) {
    if (axis < 0 || axis >= dimension) {
      throw std::out_of_range("axis " + std::to_string(axis) + " out of range for dimension " +
                              std::to_string(dimension));
    }
  }

 private:
  void check_same(const Polynomial& q) const {
    if (q.dimension_ != dimension_) throw DimensionMismatch(dimension_, q.dimension_);
  }

  int dimension_;
  TermMap terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

inline Polynomial pow(const Polynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial r = Polynomial::constant(p.dimension(), 1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Formal partial derivative along a zero-based axis.
inline Polynomial partial(const Polynomial& p, int axis) {
  Polynomial::check_axis(p.dimension(), axis);
  Polynomial r(p.dimension());
  for (const auto& [e, c] : p.terms()) {
    int a = e[axis];
    if (a == 0) continue;
    r.add_term(e.with(axis, a - 1), c * a);
  }
  return r;
}

inline Polynomial laplacian(const Polynomial& p) {
  Polynomial r(p.dimension());
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.dimension(); ++i) {
      int a = e[i];
      if (a < 2) continue;
      r.add_term(e.with(i, a - 2), c * (a * (a - 1)));
    }
  }
  return r;
}

/// Euler operator <x, grad>: scales each term by its total degree.
inline Polynomial euler(const Polynomial& p) {
  Polynomial r(p.dimension());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c * e.degree());
  return r;
}

/// (degree, part) pairs with strictly increasing degree; empty for zero.
inline std::vector<std::pair<int, Polynomial>> homogeneous_parts(const Polynomial& p) {
  std::vector<std::pair<int, Polynomial>> parts;
  for (const auto& [e, c] : p.terms()) {
    if (parts.empty() || parts.back().first != e.degree()) {
      parts.emplace_back(e.degree(), Polynomial(p.dimension()));
    }
    parts.back().second.add_term(e, c);
  }
  return parts;
}

/// (1 - ||x||^2)^power * p
inline Polynomial one_minus_normsq_times(const Polynomial& p, int power) {
  if (power < 0) throw std::invalid_argument("negative power of (1 - ||x||^2)");
  Polynomial r = p;
  const Polynomial factor = Polynomial::one_minus_norm_squared(p.dimension());
  for (int i = 0; i < power; ++i) r = r * factor;
  return r;
}

/// Exact evaluation at a rational point.
inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != p.dimension()) {
    throw DimensionMismatch(p.dimension(), static_cast<int>(point.size()));
  }
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (int i = 0; i < p.dimension(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[static_cast<std::size_t>(i)];
    }
    sum += term;
  }
  return sum;
}

/// Terms in descending graded-lex order, each "num/den * x1^a1*...*xd^ad",
/// joined by " + ". The zero polynomial prints as "0/1".
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0/1";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << to_string(it->second) << " *";
    for (int i = 0; i < p.dimension(); ++i) {
      out << (i == 0 ? " " : "*") << 'x' << (i + 1) << '^' << it->first[i];
    }
  }
  return out.str();
}

/// Inverse of to_string for the given dimension.
inline Polynomial parse_polynomial(std::string_view text, int dimension) {
  Polynomial p(dimension);
  std::string s(text);
  if (s == "0/1" || s == "0") return p;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(" + ", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end + 3;

    std::size_t star = term.find(" * ");
    if (star == std::string::npos) throw std::invalid_argument("malformed term: " + term);
    Rational c = parse_rational(term.substr(0, star));
    std::vector<int> powers;
    std::istringstream factors(term.substr(star + 3));
    std::string factor;
    while (std::getline(factors, factor, '*')) {
      std::size_t caret = factor.find('^');
      if (factor.empty() || factor[0] != 'x' || caret == std::string::npos) {
        throw std::invalid_argument("malformed factor: " + factor);
      }
      int axis = std::stoi(factor.substr(1, caret - 1));
      if (axis != static_cast<int>(powers.size()) + 1) {
        throw std::invalid_argument("variables out of order in term: " + term);
      }
      powers.push_back(std::stoi(factor.substr(caret + 1)));
    }
    if (static_cast<int>(powers.size()) != dimension) {
      throw DimensionMismatch(dimension, static_cast<int>(powers.size()));
    }
    p.add_term(Exponent(std::move(powers)), c);
  }
  return p;
}

}  // namespace ballpoly

#endif  // BALLPOLY_POLYNOMIAL_HPP
