#include "quadforms/tracing.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "quadforms/linalg.hpp"

namespace quadforms {

namespace {

using ZExp = std::array<Exponent, 3>;

struct CaseSpec {
  TraceCase id;
  std::vector<std::string> zeros;
  std::vector<ZExp> monomials;
  std::vector<std::string> unknowns;
  std::optional<std::string> rhs_unknown;
  /// Weights already shown to vanish before this system is traced.
  std::vector<std::string> eliminated;
};

const std::vector<std::string> kCase1Corners = {"a145", "a146", "a156", "a456", "a245", "a246",
                                                "a256", "a345", "a346", "a356"};
const std::vector<std::string> kCase2Corners = {"a156", "a245", "a246", "a256",
                                                "a345", "a346", "a356", "a456"};

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<CaseSpec>& case_table() {
  static const std::vector<CaseSpec> table = [] {
    const auto c2c_elim = concat(kCase2Corners, {"a234", "a235", "a236"});
    const auto c2d_elim = concat(c2c_elim, {"a135", "a136", "a145", "a146"});
    return std::vector<CaseSpec>{
        {TraceCase::C1a, {}, {{6, 0, 0}, {5, 1, 0}, {5, 0, 1}, {4, 1, 1}},
         {"a145", "a146", "a156", "a456"}, std::nullopt, {}},
        {TraceCase::C1b, {}, {{3, 3, 0}, {3, 2, 1}, {2, 3, 1}}, {"a124", "a125", "a126"},
         std::nullopt, kCase1Corners},
        {TraceCase::C2a, {"a1"}, {{0, 6, 0}, {1, 5, 0}, {0, 5, 1}, {1, 4, 1}},
         {"a245", "a246", "a256", "a456"}, std::nullopt, {"a156"}},
        {TraceCase::C2b, {"a1"}, {{1, 3, 2}, {1, 2, 3}, {0, 3, 3}}, {"a234", "a235", "a236"},
         std::nullopt, kCase2Corners},
        {TraceCase::C2c, {"a1"}, {{4, 1, 1}, {4, 0, 2}, {3, 0, 3}, {3, 1, 2}},
         {"a135", "a136", "a145", "a146"}, std::nullopt, c2c_elim},
        {TraceCase::C2d, {"a1"}, {{3, 2, 1}, {3, 3, 0}}, {"a125", "a126"}, std::nullopt,
         c2d_elim},
        {TraceCase::C3, {"a1", "b2"},
         {{4, 1, 1}, {1, 4, 1}, {2, 4, 0}, {4, 2, 0}, {3, 3, 0}, {3, 2, 1}, {2, 3, 1}},
         {"a124", "a125", "a126", "a145", "a146", "a245", "a256"}, std::nullopt,
         {"a156", "a246", "a345", "a346", "a356", "a456"}},
        {TraceCase::C4, {"a1", "b2", "c3"},
         {{4, 1, 1}, {1, 4, 1}, {3, 2, 1}, {2, 3, 1}, {4, 2, 0}, {3, 3, 0}, {2, 4, 0}},
         {"a124", "a125", "a126", "a145", "a146", "a245", "a256"}, "a456",
         {"a156", "a246", "a345"}},
        {TraceCase::C4b, {"a1", "b2", "c3"},
         {{4, 1, 1}, {1, 1, 4}, {3, 1, 2}, {2, 1, 3}, {4, 0, 2}, {3, 0, 3}, {2, 0, 4}},
         {"a134", "a135", "a136", "a145", "a146", "a346", "a356"}, "a456",
         {"a156", "a246", "a345"}},
        {TraceCase::C4c, {"a1", "b2", "c3"},
         {{1, 1, 4}, {1, 4, 1}, {1, 3, 2}, {1, 2, 3}, {0, 2, 4}, {0, 3, 3}, {0, 4, 2}},
         {"a234", "a235", "a236", "a245", "a256", "a346", "a356"}, "a456",
         {"a156", "a246", "a345"}},
    };
  }();
  return table;
}

const CaseSpec& spec_for(TraceCase id) {
  for (const auto& s : case_table()) {
    if (s.id == id) return s;
  }
  throw Error("unknown trace case");
}

Monomial z_monomial(const ZExp& e) {
  const VarSet& ring = identity_ring();
  Monomial m(ring.size());
  for (std::size_t j = 0; j < 3; ++j) m.set(ring.require("z" + std::to_string(j + 1)), e[j]);
  return m;
}

PowerProduct z_pattern(const ZExp& e) {
  return {{"z1", e[0]}, {"z2", e[1]}, {"z3", e[2]}};
}

// Integer content (gcd of numerators over lcm of denominators) of all
// coefficients appearing in the given polynomials.
Rational content(const std::vector<const Polynomial*>& polys) {
  mpz_class g = 0;
  mpz_class l = 1;
  for (const Polynomial* p : polys) {
    for (const auto& [m, c] : p->terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
  }
  if (g == 0) return Rational(1);
  return Rational(g, l);
}

Polynomial ring_poly(std::string_view text) { return parse_polynomial(text, identity_ring()); }

}  // namespace

std::string_view to_string(TraceCase c) {
  switch (c) {
    case TraceCase::C1a:
      return "C1a";
    case TraceCase::C1b:
      return "C1b";
    case TraceCase::C2a:
      return "C2a";
    case TraceCase::C2b:
      return "C2b";
    case TraceCase::C2c:
      return "C2c";
    case TraceCase::C2d:
      return "C2d";
    case TraceCase::C3:
      return "C3";
    case TraceCase::C4:
      return "C4";
    case TraceCase::C4b:
      return "C4b";
    case TraceCase::C4c:
      return "C4c";
  }
  return "unknown";
}

std::optional<TraceCase> parse_trace_case(std::string_view name) {
  for (auto c : all_trace_cases()) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

const std::vector<TraceCase>& all_trace_cases() {
  static const std::vector<TraceCase> cases = {TraceCase::C1a, TraceCase::C1b, TraceCase::C2a,
                                               TraceCase::C2b, TraceCase::C2c, TraceCase::C2d,
                                               TraceCase::C3,  TraceCase::C4,  TraceCase::C4b,
                                               TraceCase::C4c};
  return cases;
}

const std::vector<std::string>& weight_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (int i = 1; i <= 6; ++i) {
      for (int j = i + 1; j <= 6; ++j) {
        for (int k = j + 1; k <= 6; ++k) {
          out.push_back("a" + std::to_string(i) + std::to_string(j) + std::to_string(k));
        }
      }
    }
    return out;
  }();
  return labels;
}

Polynomial weighted_product(std::string_view label) {
  if (label.size() != 4 || label[0] != 'a') throw Error("malformed weight label");
  static const std::array<const char*, 6> factors = {
      "z1^2", "z2^2", "z3^2", "(a1*z1 + a2*z2 + a3*z3)^2", "(b1*z1 + b2*z2 + b3*z3)^2",
      "(c1*z1 + c2*z2 + c3*z3)^2"};
  Polynomial p = Polynomial::constant(identity_ring(), Rational(1));
  int last = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    const int f = label[i] - '0';
    if (f <= last || f > 6) throw Error("malformed weight label '" + std::string(label) + "'");
    last = f;
    p *= ring_poly(factors[static_cast<std::size_t>(f - 1)]);
  }
  return p;
}

TracedSystem trace_system(TraceCase id, const ValueBindings& extra) {
  const CaseSpec& layout = spec_for(id);
  TracedSystem sys;
  sys.id = id;
  for (const auto& z : layout.zeros) sys.assumptions[z] = Rational(0);
  ValueBindings bindings = sys.assumptions;
  for (const auto& [k, v] : extra) bindings[k] = v;

  sys.unknowns = layout.unknowns;
  sys.rhs_unknown = layout.rhs_unknown;
  for (const auto& e : layout.monomials) sys.monomials.push_back(z_monomial(e));

  std::map<std::string, Polynomial> products;
  auto product = [&](const std::string& label) -> const Polynomial& {
    auto it = products.find(label);
    if (it == products.end()) {
      it = products.emplace(label, substitute(weighted_product(label), bindings)).first;
    }
    return it->second;
  };

  const std::size_t rows = layout.monomials.size();
  const std::size_t cols = layout.unknowns.size();
  sys.matrix = PolyMatrix(rows, cols, Polynomial(identity_ring()));
  std::vector<Polynomial> rhs(rows, Polynomial(identity_ring()));
  for (std::size_t i = 0; i < rows; ++i) {
    const PowerProduct pattern = z_pattern(layout.monomials[i]);
    for (std::size_t t = 0; t < cols; ++t) {
      sys.matrix(i, t) = coeff_extract(product(layout.unknowns[t]), pattern);
    }
    if (layout.rhs_unknown) rhs[i] = -coeff_extract(product(*layout.rhs_unknown), pattern);

    std::vector<const Polynomial*> entries;
    for (std::size_t t = 0; t < cols; ++t) entries.push_back(&sys.matrix(i, t));
    if (layout.rhs_unknown) entries.push_back(&rhs[i]);
    const Rational scale = Rational(1) / content(entries);
    for (std::size_t t = 0; t < cols; ++t) sys.matrix(i, t) *= scale;
    rhs[i] *= scale;
  }
  if (layout.rhs_unknown) sys.rhs = std::move(rhs);

  for (const auto& label : weight_labels()) {
    const bool known = std::find(layout.eliminated.begin(), layout.eliminated.end(), label) !=
                           layout.eliminated.end() ||
                       std::find(layout.unknowns.begin(), layout.unknowns.end(), label) !=
                           layout.unknowns.end() ||
                       (layout.rhs_unknown && *layout.rhs_unknown == label);
    if (known) continue;
    for (const auto& e : layout.monomials) {
      if (!coeff_extract(product(label), z_pattern(e)).is_zero()) {
        sys.leaked_unknowns.push_back(label);
        break;
      }
    }
  }
  return sys;
}

Polynomial system_determinant(const TracedSystem& sys) { return det(sys.matrix); }

std::vector<Polynomial> solve_traced(const TracedSystem& sys) {
  if (!sys.rhs) throw Error("system has no right-hand side");
  if (!sys.matrix.square()) throw NotSquare();
  const Polynomial d = det(sys.matrix);
  if (d.is_zero()) throw Error("traced system is singular");
  std::vector<Polynomial> out;
  for (std::size_t t = 0; t < sys.matrix.cols(); ++t) {
    PolyMatrix replaced = sys.matrix;
    for (std::size_t i = 0; i < replaced.rows(); ++i) replaced(i, t) = (*sys.rhs)[i];
    out.push_back(exact_divide(det(replaced), d));
  }
  return out;
}

std::vector<GoldenDeterminant> golden_determinants() {
  const Polynomial pair_det = det(symbolic_pair_matrix());
  const ValueBindings a1_zero = {{"a1", Rational(0)}};
  const std::vector<std::pair<TraceCase, Polynomial>> expected = {
      {TraceCase::C1a, ring_poly("3*a1^4*b1^4*c1^4") * pair_det},
      {TraceCase::C1b, pair_det},
      {TraceCase::C2a, ring_poly("-3*a2^4*b2^4*c2^4") * substitute(pair_det, a1_zero)},
      {TraceCase::C2b, ring_poly("a2*a3*(b1*b2*c1*c3 - b1*b3*c1*c2)")},
      {TraceCase::C2c, ring_poly("2*a2^2*a3^2*b1^2*c1^2*(b1*c3 - b3*c1)^2")},
      {TraceCase::C2d, ring_poly("b1*c1*(b3*c2 - b2*c3)")},
      {TraceCase::C3, ring_poly("-3*a2^6*a3^2*b1^6*b3^2*c1^3*c2^3")},
      {TraceCase::C4, ring_poly("-a2^6*a3^2*b1^6*b3^2*c1^3*c2^3")},
  };
  std::vector<GoldenDeterminant> out;
  for (const auto& [id, closed] : expected) {
    Polynomial d = system_determinant(trace_system(id));
    const bool ok = d == closed;
    out.push_back({id, std::move(d), closed, ok});
  }
  return out;
}

Case4Report case4_solution_check() {
  Case4Report report;
  const std::vector<std::pair<TraceCase, std::vector<std::string>>> closed = {
      {TraceCase::C4, {"0", "0", "a2^2*b1^2", "0", "-b1^2", "0", "-a2^2"}},
      {TraceCase::C4b, {"0", "a3^2*c1^2", "0", "-c1^2", "0", "0", "-a3^2"}},
      {TraceCase::C4c, {"b3^2*c2^2", "0", "0", "-c2^2", "0", "-b3^2", "0"}},
  };

  bool all_match = true;
  std::map<std::string, std::vector<Polynomial>> values;
  for (const auto& [id, forms] : closed) {
    const TracedSystem sys = trace_system(id);
    std::vector<Polynomial> expected;
    for (const auto& f : forms) expected.push_back(ring_poly(f));

    if (id == TraceCase::C4) {
      bool satisfies = true;
      bool zero_ok = true;
      for (std::size_t i = 0; i < sys.matrix.rows(); ++i) {
        Polynomial lhs(identity_ring());
        for (std::size_t t = 0; t < sys.matrix.cols(); ++t) lhs += sys.matrix(i, t) * expected[t];
        satisfies = satisfies && lhs == (*sys.rhs)[i];
        zero_ok = zero_ok && (*sys.rhs)[i].is_zero();
      }
      report.closed_form_satisfies = satisfies;
      report.zero_vector_rejected = !zero_ok;
      report.determinant_nonzero = !system_determinant(sys).is_zero();
    }

    const std::vector<Polynomial> solved = solve_traced(sys);
    all_match = all_match && solved == expected;
    for (std::size_t t = 0; t < sys.unknowns.size(); ++t) values[sys.unknowns[t]].push_back(solved[t]);
  }
  report.solutions_match = all_match;

  // a2 a3 b1 b3 c1 c2 are nonzero in this case, so a single-term difference
  // built from them cannot vanish.
  const std::vector<std::string> nonzero = {"a2", "a3", "b1", "b3", "c1", "c2"};
  for (const auto& [label, vals] : values) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
      for (std::size_t j = i + 1; j < vals.size(); ++j) {
        const Polynomial diff = vals[i] - vals[j];
        if (diff.term_count() != 1) continue;
        const Monomial& m = diff.terms().begin()->first;
        bool only_nonzero = true;
        for (std::size_t v = 0; v < m.size(); ++v) {
          if (m[v] == 0) continue;
          const auto& name = identity_ring().name(v);
          only_nonzero = only_nonzero &&
                         std::find(nonzero.begin(), nonzero.end(), name) != nonzero.end();
        }
        if (only_nonzero) report.conflicts.push_back(label);
      }
    }
  }
  report.forces_zero = !report.conflicts.empty();
  return report;
}

}  // namespace quadforms
