#pragma once

// Linear independence of squared linear forms {z_j^2, f_i^2} and of their
// k-fold products.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "quadforms/linalg.hpp"
#include "quadforms/matrix.hpp"
#include "quadforms/polynomial.hpp"

namespace quadforms {

/// Normal form {z_1, ..., z_r, f_1, ..., f_m} with f_i = sum_j A(i, j) z_j.
/// A is m x r; zero rows and repeated rows are legal.
struct LinearFormSystem {
  std::size_t r = 0;
  std::size_t m = 0;
  RationalMatrix A{0, 0, Rational(0)};

  LinearFormSystem() = default;
  LinearFormSystem(std::size_t r, std::size_t m, RationalMatrix a);
  /// Shape taken from the matrix (m = rows, r = cols).
  explicit LinearFormSystem(RationalMatrix a);

  friend bool operator==(const LinearFormSystem&, const LinearFormSystem&) = default;
};

/// Result of reducing an arbitrary list of linear forms to normal form.
struct NormalForm {
  LinearFormSystem system;
  /// Input rows used as the new coordinates z_1..z_r, ascending.
  std::vector<std::size_t> basis_rows;
  /// Remaining input rows, in order; row k of system.A expresses the k-th.
  std::vector<std::size_t> dependent_rows;
  /// Invertible n x n matrix T with new coordinates z' = T z; its first r
  /// rows are the basis forms, the rest completes them with unit vectors.
  RationalMatrix change_of_basis;
};

enum class Verdict { independent, dependent };

[[nodiscard]] std::string_view to_string(Verdict v);

struct IndependenceReport {
  Verdict verdict = Verdict::independent;
  /// Dimension of the span of the polynomial set.
  std::size_t rank = 0;
  /// Present exactly when dependent: nonzero coefficients c with
  /// sum_i c_i p_i = 0.
  std::optional<RationalVector> witness;
};

enum class Cor22Case { independent, condA, condB, rankDefect };

[[nodiscard]] std::string_view to_string(Cor22Case c);

struct Cor22Classification {
  Cor22Case kind = Cor22Case::independent;
  /// Rank-criterion verdict for the same system.
  Verdict verdict = Verdict::independent;
  /// condA: 0-based positions in S_1 (z_1^2..z_r^2, f_1^2..f_m^2) of two
  /// proportional elements.
  std::optional<std::pair<std::size_t, std::size_t>> proportional;
  /// condB: 1-based variable indices (M, N), M < N, carrying both forms.
  std::optional<std::pair<std::size_t, std::size_t>> support;
};

/// z1..zn
[[nodiscard]] VarSet z_vars(std::size_t n);

/// {z_1, ..., z_r, f_1, ..., f_m} as degree-1 polynomials over z1..zr.
[[nodiscard]] std::vector<Polynomial> linear_forms(const LinearFormSystem& sys);
/// S_1 = squares of linear_forms(sys), same order.
[[nodiscard]] std::vector<Polynomial> squares(const LinearFormSystem& sys);

/// Picks the lexicographically first maximal independent subset of rows of
/// an l x n form matrix as the new coordinates.
[[nodiscard]] NormalForm normalize(const RationalMatrix& forms);

/// C(r,2) x m matrix; row for pair (j,k), j<k, in order (1,2),(1,3),...,
/// column i holds A(i,j) * A(i,k).
[[nodiscard]] RationalMatrix pair_matrix(const LinearFormSystem& sys);

/// Rank criterion on the pair matrix. For r < 2 or m < 1 this defers to
/// generic_independent on the materialised squares.
[[nodiscard]] IndependenceReport s1_independent(const LinearFormSystem& sys);

/// Structural classification for m in {1, 2}, r >= 2.
[[nodiscard]] Cor22Classification cor22_classify(const LinearFormSystem& sys);

/// Index subsets of {0..l-1} of size k in lexicographic order.
[[nodiscard]] std::vector<std::vector<std::size_t>> index_subsets(std::size_t l, std::size_t k);

/// One product per index subset, in lexicographic subset order.
[[nodiscard]] std::vector<Polynomial> k_products(std::span<const Polynomial> polys, std::size_t k);

/// Brute force: rank of the coefficient matrix over the union of monomials.
[[nodiscard]] IndependenceReport generic_independent(std::span<const Polynomial> polys);

/// Independence of S_k for the system, through generic_independent.
[[nodiscard]] IndependenceReport sk_independent(const LinearFormSystem& sys, std::size_t k);

/// Monomial-by-coefficient matrix: rows follow the union of monomials in
/// ascending graded lex order, columns follow polys.
[[nodiscard]] RationalMatrix coefficient_matrix(std::span<const Polynomial> polys);

/// True when coeffs is nonzero and sum_i coeffs[i] * polys[i] expands to 0.
[[nodiscard]] bool witness_annihilates(std::span<const Polynomial> polys,
                                       std::span<const Rational> coeffs);

}  // namespace quadforms
