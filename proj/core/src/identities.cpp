#include "quadforms/identities.hpp"

#include <algorithm>
#include <map>

#include "quadforms/linalg.hpp"

namespace quadforms {

namespace {

const std::vector<std::string> kDefaultLetters = {"a", "b", "c"};

Polynomial var(std::string_view name) { return Polynomial::variable(identity_ring(), name); }
Polynomial num(long v) { return Polynomial::constant(identity_ring(), Rational(v)); }

template <class T>
T det3(const Matrix<T>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Coefficient symbols and forms for one identity.
struct FormRing {
  std::vector<std::string> letters;
  int n;

  [[nodiscard]] Polynomial coef(int p, int j) const {
    return var(letters[static_cast<std::size_t>(p)] + std::to_string(j));
  }
  [[nodiscard]] Polynomial z(int j) const { return var("z" + std::to_string(j)); }
  [[nodiscard]] Polynomial form(int p) const {
    Polynomial f(identity_ring());
    for (int j = 1; j <= n; ++j) f += coef(p, j) * z(j);
    return f;
  }
  // coef(p,i) coef(q,j) - coef(p,j) coef(q,i)
  [[nodiscard]] Polynomial minor(int p, int q, int i, int j) const {
    return coef(p, i) * coef(q, j) - coef(p, j) * coef(q, i);
  }
};

Polynomial expand_summand(const Summand& s, const std::vector<Polynomial>& base) {
  Polynomial p = s.coefficient;
  for (auto f : s.factors) p *= base[f];
  return p;
}

Polynomial expand_lhs(const IdentityInstance& inst) {
  Polynomial sum(inst.vars);
  for (const auto& s : inst.summands) sum += expand_summand(s, inst.base_squares);
  return sum;
}

IdentityInstance make_instance(std::string name, const FormRing& ring,
                               std::vector<Summand> summands, Polynomial rhs) {
  IdentityInstance inst{std::move(name), identity_ring(), ring.letters, {}, std::move(summands),
                        Polynomial(identity_ring()), std::move(rhs)};
  for (int j = 1; j <= ring.n; ++j) inst.base_squares.push_back(ring.z(j).pow(2));
  for (int p = 0; p < ring.n; ++p) inst.base_squares.push_back(ring.form(p).pow(2));
  inst.lhs = expand_lhs(inst);
  return inst;
}

IdentityInstance build_one(const FormRing& r) {
  return make_instance("square-products-1", r,
                       {{r.coef(0, 1).pow(3), {0}}, {-r.coef(0, 1), {1}}},
                       Polynomial(identity_ring()));
}

IdentityInstance build_two(const FormRing& r) {
  const Polynomial d = r.minor(0, 1, 1, 2);  // a1 b2 - a2 b1
  const Polynomial a1 = r.coef(0, 1), a2 = r.coef(0, 2);
  const Polynomial b1 = r.coef(1, 1), b2 = r.coef(1, 2);
  // base: 0 z1^2, 1 z2^2, 2 fa^2, 3 fb^2
  return make_instance("square-products-2", r,
                       {{d.pow(3), {0, 1}},
                        {-(b2 * a1.pow(3)), {0, 3}},
                        {-(a1 * b2.pow(3)), {1, 2}},
                        {a2 * b1.pow(3), {0, 2}},
                        {b1 * a2.pow(3), {1, 3}},
                        {d, {2, 3}}},
                       Polynomial(identity_ring()));
}

IdentityInstance build_three(const FormRing& r) {
  constexpr int A = 0, B = 1, C = 2;
  auto c = [&](int p, int j) { return r.coef(p, j); };
  auto mn = [&](int p, int q, int i, int j) { return r.minor(p, q, i, j); };

  PolyMatrix forms(3, 3, num(0));
  PolyMatrix pairs(3, 3, num(0));
  const int pair_idx[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (int p = 0; p < 3; ++p) {
    for (int j = 0; j < 3; ++j) forms(p, j) = c(p, j + 1);
    for (int k = 0; k < 3; ++k) pairs(k, p) = c(p, pair_idx[k][0]) * c(p, pair_idx[k][1]);
  }
  const Polynomial det = det3(forms);
  const Polynomial det_pair = det3(pairs);

  // base: 0 z1^2, 1 z2^2, 2 z3^2, 3 fa^2, 4 fb^2, 5 fc^2
  std::vector<Summand> s = {
      {det.pow(3), {0, 1, 2}},
      {-(c(C, 3) * mn(A, B, 1, 2).pow(3)), {0, 1, 5}},
      {c(C, 2) * mn(A, B, 1, 3).pow(3), {0, 2, 5}},
      {-(c(C, 1) * mn(A, B, 2, 3).pow(3)), {1, 2, 5}},
      {-(c(B, 3) * mn(A, C, 2, 1).pow(3)), {0, 1, 4}},
      {c(B, 2) * mn(A, C, 3, 1).pow(3), {0, 2, 4}},
      {-(c(B, 1) * mn(A, C, 3, 2).pow(3)), {1, 2, 4}},
      {-(c(A, 3) * mn(B, C, 1, 2).pow(3)), {0, 1, 3}},
      {c(A, 2) * mn(B, C, 1, 3).pow(3), {0, 2, 3}},
      {-(c(A, 1) * mn(B, C, 2, 3).pow(3)), {1, 2, 3}},
      {c(C, 1).pow(3) * mn(A, B, 2, 3), {0, 3, 4}},
      {-(c(C, 2).pow(3) * mn(A, B, 1, 3)), {1, 3, 4}},
      {c(C, 3).pow(3) * mn(A, B, 1, 2), {2, 3, 4}},
      {-(c(B, 1).pow(3) * mn(A, C, 2, 3)), {0, 3, 5}},
      {c(B, 2).pow(3) * mn(A, C, 1, 3), {1, 3, 5}},
      {-(c(B, 3).pow(3) * mn(A, C, 1, 2)), {2, 3, 5}},
      {c(A, 1).pow(3) * mn(B, C, 2, 3), {0, 4, 5}},
      {-(c(A, 2).pow(3) * mn(B, C, 1, 3)), {1, 4, 5}},
      {c(A, 3).pow(3) * mn(B, C, 1, 2), {2, 4, 5}},
      {-det, {3, 4, 5}},
  };
  Polynomial rhs = num(6) * det_pair * r.z(1) * r.z(2) * r.z(3) * r.form(A) * r.form(B) *
                   r.form(C);
  return make_instance("square-products-3", r, std::move(s), std::move(rhs));
}

}  // namespace

const VarSet& identity_ring() {
  static const VarSet ring(
      {"a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "z1", "z2", "z3"});
  return ring;
}

IdentityInstance build_identity(int n) { return build_identity(n, kDefaultLetters); }

IdentityInstance build_identity(int n, const std::vector<std::string>& letters) {
  if (n < 1 || n > 3) throw Error("identities exist here for n in {1, 2, 3} only");
  if (letters.size() < static_cast<std::size_t>(n)) throw Error("not enough form letters");
  for (const auto& l : letters) {
    if (l != "a" && l != "b" && l != "c") throw Error("form letters must be a, b or c");
  }
  FormRing ring{std::vector<std::string>(letters.begin(), letters.begin() + n), n};
  switch (n) {
    case 1:
      return build_one(ring);
    case 2:
      return build_two(ring);
    default:
      return build_three(ring);
  }
}

PolyMatrix symbolic_form_matrix() {
  PolyMatrix m(3, 3, num(0));
  const char* letters[3] = {"a", "b", "c"};
  for (int p = 0; p < 3; ++p) {
    for (int j = 0; j < 3; ++j) m(p, j) = var(std::string(letters[p]) + std::to_string(j + 1));
  }
  return m;
}

PolyMatrix symbolic_pair_matrix() {
  const PolyMatrix f = symbolic_form_matrix();
  PolyMatrix m(3, 3, num(0));
  const int pair_idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 3; ++k) {
    for (int p = 0; p < 3; ++p) m(k, p) = f(p, pair_idx[k][0]) * f(p, pair_idx[k][1]);
  }
  return m;
}

IdentityInstance build_det_perm_identity() {
  auto v = [](const char* n) { return var(n); };
  const Polynomial a1 = v("a1"), a2 = v("a2"), a3 = v("a3");
  const Polynomial b1 = v("b1"), b2 = v("b2"), b3 = v("b3");
  const Polynomial c1 = v("c1"), c2 = v("c2"), c3 = v("c3");

  PolyMatrix forms = symbolic_form_matrix();
  PolyMatrix pairs = symbolic_pair_matrix();
  const Polynomial det = det3(forms);
  const Polynomial det_pair = det3(pairs);
  const Polynomial perm = a3 * b2 * c1 + a2 * b3 * c1 + a3 * b1 * c2 + a1 * b3 * c2 +
                          a2 * b1 * c3 + a1 * b2 * c3;
  const Polynomial sym = a2 * a3 * b1 * b3 * c1 * c2 + a1 * a3 * b2 * b3 * c1 * c2 +
                         a1 * a3 * b1 * b2 * c2 * c3 + a1 * a2 * b1 * b3 * c2 * c3 +
                         a2 * a3 * b1 * b2 * c1 * c3 + a1 * a2 * b2 * b3 * c1 * c3;

  std::vector<Summand> s = {
      {num(2) * a1 * a2 * a3 * (b1 * c2 - b2 * c1) * (b3 * c1 - b1 * c3) * (b2 * c3 - b3 * c2), {}},
      {num(2) * b1 * b2 * b3 * (a2 * c1 - a1 * c2) * (a1 * c3 - a3 * c1) * (a3 * c2 - a2 * c3), {}},
      {num(2) * c1 * c2 * c3 * (a1 * b2 - a2 * b1) * (a3 * b1 - a1 * b3) * (a2 * b3 - a3 * b2), {}},
      {-(perm * det_pair), {}},
      {-(sym * det), {}},
  };
  FormRing ring{kDefaultLetters, 0};
  return make_instance("det-permanent", ring, std::move(s), Polynomial(identity_ring()));
}

std::vector<IdentityInstance> identity_catalog() {
  return {build_identity(1), build_identity(2), build_identity(3), build_det_perm_identity()};
}

std::optional<IdentityInstance> find_identity(std::string_view name) {
  if (name == "square-products-1") return build_identity(1);
  if (name == "square-products-2") return build_identity(2);
  if (name == "square-products-3") return build_identity(3);
  if (name == "det-permanent") return build_det_perm_identity();
  return std::nullopt;
}

Verification verify_identity(const IdentityInstance& inst) {
  Polynomial residual = inst.lhs - inst.rhs;
  const bool holds = residual.is_zero();
  return {holds, std::move(residual)};
}

std::size_t precancellation_term_count(const IdentityInstance& inst) {
  std::size_t total = 0;
  for (const auto& s : inst.summands) total += expand_summand(s, inst.base_squares).term_count();
  return total;
}

IdentityInstance flip_summand_sign(const IdentityInstance& inst, std::size_t index) {
  if (index >= inst.summands.size()) throw Error("summand index out of range");
  IdentityInstance out = inst;
  out.name += "-flipped-" + std::to_string(index);
  out.summands[index].coefficient = -out.summands[index].coefficient;
  out.lhs = expand_lhs(out);
  return out;
}

bool RestrictionReport::holds() const {
  if (!restricted_zero || targets.empty()) return false;
  return std::all_of(targets.begin(), targets.end(), [](const RestrictionTarget& t) {
    return t.sign != 0 && t.linear && t.structural_match && t.expanded_match;
  });
}

RestrictionReport restriction_check(int n) {
  if (n != 2 && n != 3) throw Error("restriction check is defined for n in {2, 3}");
  const IdentityInstance big = build_identity(n);
  const std::string zn = "z" + std::to_string(n);
  const ValueBindings cut = {{zn, Rational(0)}};
  const auto un = static_cast<std::size_t>(n);

  RestrictionReport report;
  report.n = n;
  const Polynomial restricted = substitute(big.lhs, cut);
  report.restricted_zero = restricted.is_zero();

  std::vector<std::string> last_column;
  for (const auto& l : big.letters) last_column.push_back(l + std::to_string(n));

  // Summands that survive z_n = 0 (no z_n^2 factor).
  std::vector<const Summand*> surviving;
  for (const auto& s : big.summands) {
    if (std::find(s.factors.begin(), s.factors.end(), un - 1) == s.factors.end()) {
      surviving.push_back(&s);
    }
  }
  bool linear = true;
  for (const Summand* s : surviving) {
    auto range = degree_range_in(s->coefficient, last_column);
    if (!range || range->first != 1 || range->second != 1) linear = false;
  }

  for (std::size_t p = 0; p < un; ++p) {
    RestrictionTarget target;
    target.variable = last_column[p];
    target.linear = linear;

    std::vector<std::string> rest_letters;
    for (std::size_t q = 0; q < un; ++q) {
      if (q != p) rest_letters.push_back(big.letters[q]);
    }
    const IdentityInstance small = build_identity(n - 1, rest_letters);

    // Coefficient of the target in each surviving summand, keyed by factors.
    const PowerProduct pick = {{target.variable, 1}};
    std::map<std::vector<std::size_t>, Polynomial> actual;
    for (const Summand* s : surviving) {
      Polynomial k = coeff_extract(s->coefficient, pick);
      if (k.is_zero()) continue;
      auto key = s->factors;
      std::sort(key.begin(), key.end());
      auto [it, inserted] = actual.try_emplace(key, big.vars);
      it->second += k;
    }
    // Expected: the smaller identity's summands, re-indexed into the bigger
    // base and multiplied by the restricted f_p^2.
    std::map<std::vector<std::size_t>, Polynomial> expected;
    for (const auto& s : small.summands) {
      std::vector<std::size_t> key;
      for (auto f : s.factors) {
        if (f < un - 1) {
          key.push_back(f);
        } else {
          const std::size_t q = f - (un - 1);
          key.push_back(un + (q < p ? q : q + 1));
        }
      }
      key.push_back(un + p);
      std::sort(key.begin(), key.end());
      expected.emplace(std::move(key), s.coefficient);
    }

    const Polynomial restricted_form_sq = substitute(big.base_squares[un + p], cut);
    const Polynomial expanded_actual = coeff_extract(restricted, pick);
    for (int sign : {1, -1}) {
      bool same = actual.size() == expected.size();
      for (auto it = actual.begin(); same && it != actual.end(); ++it) {
        auto e = expected.find(it->first);
        same = e != expected.end() && it->second == e->second * Rational(sign);
      }
      if (!same) continue;
      target.sign = sign;
      target.structural_match = true;
      target.expanded_match = expanded_actual == restricted_form_sq * small.lhs * Rational(sign);
      break;
    }
    report.targets.push_back(std::move(target));
  }
  return report;
}

PermanentTraceReport permanent_trace_check() {
  PermanentTraceReport report{Polynomial(identity_ring()), Polynomial(identity_ring()),
                              Polynomial(identity_ring())};
  const IdentityInstance three = build_identity(3);
  report.traced = coeff_extract(three.lhs, parse_power_product("z1^2*z2^2*z3^2"));
  report.pair_determinant = det(symbolic_pair_matrix());
  report.permanent = permanent3(symbolic_form_matrix());
  const Polynomial product = Rational(6) * report.pair_determinant * report.permanent;
  report.symbolic_match = report.traced == product;
  report.det_perm_identity_holds = verify_identity(build_det_perm_identity()).holds;

  auto specialise = [&](const std::vector<long>& rows) {
    ValueBindings b;
    const char* letters[3] = {"a", "b", "c"};
    for (int p = 0; p < 3; ++p) {
      for (int j = 0; j < 3; ++j) {
        b[std::string(letters[p]) + std::to_string(j + 1)] = Rational(rows[p * 3 + j]);
      }
    }
    return substitute(report.traced, b).is_zero() && substitute(product, b).is_zero();
  };
  report.unit_specialisation_zero = specialise({1, 0, 0, 0, 1, 0, 0, 0, 1});
  report.example_specialisation_zero = specialise({1, 1, 1, 1, 2, 3, 5, 8, 10});
  return report;
}

}  // namespace quadforms
