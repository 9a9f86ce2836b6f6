#pragma once

// Sparse multivariate polynomials with exact rational coefficients over a
// fixed, explicitly ordered list of variables.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadforms/rational.hpp"

namespace quadforms {

class VarSetMismatch : public Error {
 public:
  VarSetMismatch() : Error("polynomials live over different variable sets") {}
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Immutable ordered list of distinct variable names. Copies share storage.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  /// {prefix1, ..., prefixN}
  static VarSet indexed(std::string_view prefix, std::size_t count);

  [[nodiscard]] std::size_t size() const { return names_->size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return (*names_)[i]; }
  [[nodiscard]] std::span<const std::string> names() const { return *names_; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws Error when the name is not part of the set.
  [[nodiscard]] std::size_t require(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponent = std::uint32_t;

/// Exponent vector; compares in graded lexicographic order (total degree
/// first, then the first variable with a differing exponent decides).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);

  [[nodiscard]] std::size_t size() const { return exponents_.size(); }
  [[nodiscard]] Exponent operator[](std::size_t i) const { return exponents_[i]; }
  [[nodiscard]] std::span<const Exponent> exponents() const { return exponents_; }
  [[nodiscard]] unsigned degree() const { return degree_; }

  void set(std::size_t i, Exponent e);

  /// Exponent-wise sum.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// True when every exponent of `divisor` is at most the matching one here.
  [[nodiscard]] bool divisible_by(const Monomial& divisor) const;
  [[nodiscard]] Monomial quotient(const Monomial& divisor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exponents_;
  unsigned degree_ = 0;
};

/// Variable-name/exponent pairs over a subset of a VarSet, e.g. z1^2*z3.
using PowerProduct = std::vector<std::pair<std::string, Exponent>>;

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  /// The zero polynomial.
  explicit Polynomial(VarSet vars);

  static Polynomial constant(VarSet vars, const Rational& c);
  static Polynomial variable(VarSet vars, std::string_view name);
  static Polynomial term(VarSet vars, Monomial m, const Rational& c);
  /// Linear form sum_j coeffs[j] * vars.name(j).
  static Polynomial linear(VarSet vars, std::span<const Rational> coeffs);

  [[nodiscard]] const VarSet& vars() const { return vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  /// Total degree; nullopt for the zero polynomial.
  [[nodiscard]] std::optional<unsigned> degree() const;
  /// Zero counts as homogeneous.
  [[nodiscard]] bool is_homogeneous() const;
  /// Largest term in graded lex order. Precondition: nonzero.
  [[nodiscard]] const std::pair<const Monomial, Rational>& leading_term() const;

  /// Adds c*m in place, pruning a resulting zero coefficient.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] Polynomial pow(unsigned e) const;

  /// Canonical text: terms in descending graded lex order, coefficients as
  /// "p" or "p/q", variables joined by '*', exponents with '^'. Zero is "0".
  [[nodiscard]] std::string str() const;

 private:
  VarSet vars_;
  TermMap terms_;
};

/// Coefficient of the power product `pattern` in p: the polynomial in the
/// remaining variables multiplying exactly that pattern (same VarSet).
[[nodiscard]] Polynomial coeff_extract(const Polynomial& p, const PowerProduct& pattern);
/// Full-monomial overload; returns a constant polynomial.
[[nodiscard]] Polynomial coeff_extract(const Polynomial& p, const Monomial& full);

using PolyBindings = std::map<std::string, Polynomial, std::less<>>;
using ValueBindings = std::map<std::string, Rational, std::less<>>;

[[nodiscard]] Polynomial substitute(const Polynomial& p, const PolyBindings& bindings);
[[nodiscard]] Polynomial substitute(const Polynomial& p, const ValueBindings& bindings);

/// Evaluates at a point given one value per variable, in VarSet order.
[[nodiscard]] Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Exact quotient n / d; throws InexactDivision when d does not divide n.
[[nodiscard]] Polynomial exact_divide(const Polynomial& n, const Polynomial& d);

/// Minimum and maximum total degree over the listed variables among the
/// terms of p; nullopt for zero.
[[nodiscard]] std::optional<std::pair<unsigned, unsigned>> degree_range_in(
    const Polynomial& p, std::span<const std::string> names);

/// Parses sums of products of rationals, variables, powers and
/// parenthesised subexpressions, e.g. "2*a1^2*(z1 - 3/7*z2)". Accepts
/// every string produced by Polynomial::str().
[[nodiscard]] Polynomial parse_polynomial(std::string_view text, const VarSet& vars);
[[nodiscard]] PowerProduct parse_power_product(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace quadforms
