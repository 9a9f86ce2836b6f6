#pragma once

// Coefficient tracing on the general linear combination of all twenty
// 3-products of {z1^2, z2^2, z3^2, fa^2, fb^2, fc^2}: choosing a set of
// z-monomials and equating their coefficients to zero yields a linear
// system in the combination weights with entries in Q[a, b, c].
//
// Weights are labelled "a" followed by the 1-based positions of the three
// factors, e.g. a145 weights z1^2 * fa^2 * fb^2 and a456 weights
// fa^2 * fb^2 * fc^2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadforms/identities.hpp"
#include "quadforms/matrix.hpp"
#include "quadforms/polynomial.hpp"

namespace quadforms {

/// Traced systems of the sufficiency argument for r = m = 3.
///  C1a  no zero coefficients; z1^6, z1^5 z2, z1^5 z3, z1^4 z2 z3 in a145, a146, a156, a456
///  C1b  no zero coefficients; z1^3 z2^3, z1^3 z2^2 z3, z1^2 z2^3 z3 in a124, a125, a126
///  C2a  a1 = 0; the z2-corner analogue of C1a in a245, a246, a256, a456
///  C2b  a1 = 0; 3x3 system in a234, a235, a236
///  C2c  a1 = 0; 4x4 system in a135, a136, a145, a146
///  C2d  a1 = 0; 2x2 system in a125, a126
///  C3   a1 = b2 = 0; 7x7 system in a124, a125, a126, a145, a146, a245, a256
///  C4   a1 = b2 = c3 = 0; 7x7 system in the C3 unknowns with a456 on the right
///  C4b  a1 = b2 = c3 = 0; z1/z3 analogue of C4
///  C4c  a1 = b2 = c3 = 0; z2/z3 analogue of C4
enum class TraceCase { C1a, C1b, C2a, C2b, C2c, C2d, C3, C4, C4b, C4c };

[[nodiscard]] std::string_view to_string(TraceCase c);
[[nodiscard]] std::optional<TraceCase> parse_trace_case(std::string_view name);
[[nodiscard]] const std::vector<TraceCase>& all_trace_cases();

/// The product polynomial weighted by `label` (e.g. "a145") over the
/// identity ring, before any assumption is applied.
[[nodiscard]] Polynomial weighted_product(std::string_view label);

/// All twenty weight labels a123..a456 in lexicographic order.
[[nodiscard]] const std::vector<std::string>& weight_labels();

struct TracedSystem {
  TraceCase id = TraceCase::C1a;
  /// Coefficient variables fixed to zero by the case.
  ValueBindings assumptions;
  /// Column labels.
  std::vector<std::string> unknowns;
  /// Degree-6 z-monomials traced, one per row (over the identity ring).
  std::vector<Monomial> monomials;
  /// Row i, column t: coefficient of monomials[i] in the product weighted by
  /// unknowns[t], with each row divided by the integer content of its
  /// entries (right-hand side included).
  PolyMatrix matrix{0, 0, Polynomial(identity_ring())};
  /// Weight moved to the right-hand side, if any.
  std::optional<std::string> rhs_unknown;
  /// Right-hand side column: minus the coefficient of rhs_unknown's product,
  /// scaled like its row.
  std::optional<std::vector<Polynomial>> rhs;
  /// Weights still unknown at this stage (neither eliminated earlier nor in
  /// the system) that nevertheless touch a traced monomial. Must be empty.
  std::vector<std::string> leaked_unknowns;
};

/// Builds a traced system. `extra` adds further value bindings for
/// coefficient variables on top of the case's own assumptions.
[[nodiscard]] TracedSystem trace_system(TraceCase id, const ValueBindings& extra = {});

[[nodiscard]] Polynomial system_determinant(const TracedSystem& sys);

/// Unique solution of a square system with right-hand side, by Cramer's
/// rule with exact polynomial division. Values are multiples of the weight
/// on the right-hand side (reported with that weight set to 1). Throws when
/// the determinant vanishes or a division is inexact.
[[nodiscard]] std::vector<Polynomial> solve_traced(const TracedSystem& sys);

struct GoldenDeterminant {
  TraceCase id;
  Polynomial determinant;
  Polynomial expected;
  bool matches = false;
};

/// Determinants of the traced systems against their closed forms.
[[nodiscard]] std::vector<GoldenDeterminant> golden_determinants();

struct Case4Report {
  /// Closed-form solution of C4 satisfies every equation identically.
  bool closed_form_satisfies = false;
  /// The zero vector fails the C4 system when a456 = 1.
  bool zero_vector_rejected = false;
  /// Determinant of C4 is a nonzero polynomial.
  bool determinant_nonzero = false;
  /// Unique solutions of C4, C4b, C4c agree with their closed forms.
  bool solutions_match = false;
  /// Some weight receives two values whose difference is a nonzero monomial
  /// in the nonvanishing coefficients, so a456 and hence every weight
  /// vanishes.
  bool forces_zero = false;
  std::vector<std::string> conflicts;

  [[nodiscard]] bool holds() const {
    return closed_form_satisfies && zero_vector_rejected && determinant_nonzero &&
           solutions_match && forces_zero;
  }
};

[[nodiscard]] Case4Report case4_solution_check();

}  // namespace quadforms
