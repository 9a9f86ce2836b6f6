#pragma once

// Polynomial identities on products of squared linear forms, built
// symbolically in one 12-variable ring (a1..a3, b1..b3, c1..c3, z1..z3) and
// verified by full expansion.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadforms/matrix.hpp"
#include "quadforms/polynomial.hpp"

namespace quadforms {

/// a1, a2, a3, b1, b2, b3, c1, c2, c3, z1, z2, z3 (shared storage).
[[nodiscard]] const VarSet& identity_ring();

/// One summand of a product identity: coefficient * prod of base squares.
/// For an n-identity the base squares are z_1^2..z_n^2 (indices 0..n-1)
/// followed by f_1^2..f_n^2 (indices n..2n-1).
struct Summand {
  Polynomial coefficient;
  std::vector<std::size_t> factors;
};

struct IdentityInstance {
  std::string name;
  VarSet vars;
  /// Letters naming the coefficient rows of the forms, e.g. {"a", "b"}.
  std::vector<std::string> letters;
  std::vector<Polynomial> base_squares;
  std::vector<Summand> summands;
  /// Expanded sum of the summands.
  Polynomial lhs;
  /// Expanded right-hand side.
  Polynomial rhs;
};

/// Product identity on n-products of {z_1^2..z_n^2, f_1^2..f_n^2} for
/// n in {1, 2, 3}; f_p = sum_j letters[p]j * z_j. Default letters are a, b, c.
[[nodiscard]] IdentityInstance build_identity(int n);
[[nodiscard]] IdentityInstance build_identity(int n, const std::vector<std::string>& letters);

/// Degree-9 relation between the 3x3 determinant, the permanent and the
/// determinant of the pair-product matrix; right-hand side 0.
[[nodiscard]] IdentityInstance build_det_perm_identity();

/// All catalogued identities in a fixed order.
[[nodiscard]] std::vector<IdentityInstance> identity_catalog();

/// Looks up a catalogued identity by name; nullopt for unknown names.
[[nodiscard]] std::optional<IdentityInstance> find_identity(std::string_view name);

struct Verification {
  bool holds = false;
  Polynomial residual;
};

[[nodiscard]] Verification verify_identity(const IdentityInstance& inst);

/// Number of terms summed over the separately expanded summands, before
/// any cancellation between summands.
[[nodiscard]] std::size_t precancellation_term_count(const IdentityInstance& inst);

/// Copy of inst with summand `index` negated and lhs recomputed.
[[nodiscard]] IdentityInstance flip_summand_sign(const IdentityInstance& inst, std::size_t index);

/// Matrix [[a1, a2, a3], [b1, b2, b3], [c1, c2, c3]] over the identity ring.
[[nodiscard]] PolyMatrix symbolic_form_matrix();
/// Pair-product matrix of the three symbolic forms (rows: pairs 12, 13, 23;
/// columns: forms a, b, c).
[[nodiscard]] PolyMatrix symbolic_pair_matrix();

struct RestrictionTarget {
  std::string variable;
  /// Sign s with coefficient(variable) == s * (restricted form)^2 * LHS of
  /// the smaller identity; 0 when neither sign matches.
  int sign = 0;
  /// Every surviving summand is homogeneous of degree 1 in the last
  /// coefficient column.
  bool linear = false;
  /// Match at the level of summand coefficients (no expansion).
  bool structural_match = false;
  /// Match after full expansion.
  bool expanded_match = false;
};

struct RestrictionReport {
  int n = 0;
  /// LHS of the n-identity with z_n = 0 expands to zero.
  bool restricted_zero = false;
  std::vector<RestrictionTarget> targets;

  [[nodiscard]] bool holds() const;
};

/// Restricts the n-identity (n in {2, 3}) to z_n = 0 and checks that the
/// result is zero and that the coefficient of each of a_n, b_n, c_n is a
/// signed multiple of (restricted form)^2 times the (n-1)-identity LHS.
[[nodiscard]] RestrictionReport restriction_check(int n = 3);

struct PermanentTraceReport {
  /// Coefficient of z1^2 z2^2 z3^2 in the expanded LHS of the 3-identity.
  Polynomial traced;
  Polynomial pair_determinant;
  Polynomial permanent;
  /// traced == 6 * pair_determinant * permanent
  bool symbolic_match = false;
  /// The determinant/permanent relation expands to zero.
  bool det_perm_identity_holds = false;
  /// Both sides vanish at a = e1, b = e2, c = e3.
  bool unit_specialisation_zero = false;
  /// Both sides vanish at the rows (1,1,1), (1,2,3), (5,8,10).
  bool example_specialisation_zero = false;

  [[nodiscard]] bool holds() const {
    return symbolic_match && det_perm_identity_holds && unit_specialisation_zero &&
           example_specialisation_zero;
  }
};

[[nodiscard]] PermanentTraceReport permanent_trace_check();

}  // namespace quadforms
