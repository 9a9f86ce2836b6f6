#include "quadforms/independence.hpp"

#include <set>
#include <string>

namespace quadforms {

LinearFormSystem::LinearFormSystem(std::size_t r_, std::size_t m_, RationalMatrix a)
    : r(r_), m(m_), A(std::move(a)) {
  if (A.rows() != m || A.cols() != r) {
    throw Error("coefficient matrix must be m x r (" + std::to_string(m) + " x " +
                std::to_string(r) + "), got " + std::to_string(A.rows()) + " x " +
                std::to_string(A.cols()));
  }
  if (r == 0) throw Error("a linear form system needs r >= 1");
}

LinearFormSystem::LinearFormSystem(RationalMatrix a)
    : LinearFormSystem(a.cols(), a.rows(), a) {}

std::string_view to_string(Verdict v) {
  return v == Verdict::independent ? "independent" : "dependent";
}

std::string_view to_string(Cor22Case c) {
  switch (c) {
    case Cor22Case::independent:
      return "independent";
    case Cor22Case::condA:
      return "condA";
    case Cor22Case::condB:
      return "condB";
    case Cor22Case::rankDefect:
      return "rankDefect";
  }
  return "unknown";
}

VarSet z_vars(std::size_t n) { return VarSet::indexed("z", n); }

std::vector<Polynomial> linear_forms(const LinearFormSystem& sys) {
  const VarSet vars = z_vars(sys.r);
  std::vector<Polynomial> out;
  out.reserve(sys.r + sys.m);
  for (std::size_t j = 0; j < sys.r; ++j) out.push_back(Polynomial::variable(vars, vars.name(j)));
  for (std::size_t i = 0; i < sys.m; ++i) out.push_back(Polynomial::linear(vars, sys.A.row(i)));
  return out;
}

std::vector<Polynomial> squares(const LinearFormSystem& sys) {
  std::vector<Polynomial> out = linear_forms(sys);
  for (auto& p : out) p = p * p;
  return out;
}

NormalForm normalize(const RationalMatrix& forms) {
  const std::size_t l = forms.rows();
  const std::size_t n = forms.cols();
  if (l == 0 || n == 0) throw Error("normalize needs at least one form over at least one variable");

  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> basis_rows;
  std::vector<std::size_t> dependent_rows;
  for (std::size_t i = 0; i < l; ++i) {
    auto candidate = basis;
    candidate.emplace_back(forms.row(i).begin(), forms.row(i).end());
    if (rank(RationalMatrix::from_rows(candidate)) == candidate.size()) {
      basis = std::move(candidate);
      basis_rows.push_back(i);
    } else {
      dependent_rows.push_back(i);
    }
  }
  if (basis.empty()) throw Error("all input forms are zero");
  const std::size_t r = basis.size();

  // Each dependent row v solves alpha * B = v, i.e. B^T alpha = v^T.
  const RationalMatrix bt = RationalMatrix::from_rows(basis).transpose();
  RationalMatrix a(dependent_rows.size(), r, Rational(0));
  for (std::size_t k = 0; k < dependent_rows.size(); ++k) {
    RationalMatrix aug(n, r + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < r; ++j) aug(i, j) = bt(i, j);
      aug(i, r) = forms(dependent_rows[k], i);
    }
    const RowEchelon e = rref(aug);
    for (std::size_t j = 0; j < r; ++j) a(k, j) = e.reduced(j, r);
  }

  std::vector<std::vector<Rational>> full = basis;
  for (std::size_t j = 0; j < n && full.size() < n; ++j) {
    auto candidate = full;
    std::vector<Rational> unit(n, Rational(0));
    unit[j] = Rational(1);
    candidate.push_back(unit);
    if (rank(RationalMatrix::from_rows(candidate)) == candidate.size()) full = std::move(candidate);
  }

  return NormalForm{LinearFormSystem(r, dependent_rows.size(), std::move(a)), std::move(basis_rows),
                    std::move(dependent_rows), RationalMatrix::from_rows(full)};
}

RationalMatrix pair_matrix(const LinearFormSystem& sys) {
  if (sys.r < 2) throw Error("pair matrix needs r >= 2");
  const std::size_t pairs = sys.r * (sys.r - 1) / 2;
  RationalMatrix p(pairs, sys.m, Rational(0));
  std::size_t row = 0;
  for (std::size_t j = 0; j < sys.r; ++j) {
    for (std::size_t k = j + 1; k < sys.r; ++k, ++row) {
      for (std::size_t i = 0; i < sys.m; ++i) p(row, i) = sys.A(i, j) * sys.A(i, k);
    }
  }
  return p;
}

IndependenceReport s1_independent(const LinearFormSystem& sys) {
  if (sys.r < 2 || sys.m < 1) {
    const auto s1 = squares(sys);
    return generic_independent(s1);
  }
  const RationalMatrix p = pair_matrix(sys);
  const std::size_t pr = rank(p);
  IndependenceReport report;
  report.rank = sys.r + pr;
  if (pr == sys.m) {
    report.verdict = Verdict::independent;
    return report;
  }
  report.verdict = Verdict::dependent;
  const RationalVector mu = kernel(p).vectors.front();
  RationalVector witness(sys.r + sys.m, Rational(0));
  for (std::size_t j = 0; j < sys.r; ++j) {
    Rational lambda(0);
    for (std::size_t i = 0; i < sys.m; ++i) lambda -= mu[i] * sys.A(i, j) * sys.A(i, j);
    witness[j] = lambda;
  }
  for (std::size_t i = 0; i < sys.m; ++i) witness[sys.r + i] = mu[i];
  report.witness = std::move(witness);
  return report;
}

namespace {

std::vector<std::size_t> support(std::span<const Rational> row) {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) s.push_back(j);
  }
  return s;
}

}  // namespace

Cor22Classification cor22_classify(const LinearFormSystem& sys) {
  if (sys.r < 2) throw Error("classification needs r >= 2");
  if (sys.m != 1 && sys.m != 2) throw Error("classification is defined for m in {1, 2} only");

  Cor22Classification out;
  out.verdict = s1_independent(sys).verdict;
  const bool dependent = out.verdict == Verdict::dependent;
  if (sys.m == 1) {
    out.kind = dependent ? Cor22Case::rankDefect : Cor22Case::independent;
    return out;
  }

  // (a): some f_i^2 proportional to a z_j^2 (f_i has at most one nonzero
  // coefficient), or f_1^2 proportional to f_2^2.
  for (std::size_t i = 0; i < 2 && !out.proportional; ++i) {
    const auto s = support(sys.A.row(i));
    if (s.size() <= 1) out.proportional = std::make_pair(s.empty() ? 0 : s.front(), sys.r + i);
  }
  if (!out.proportional && rank(sys.A) <= 1) out.proportional = std::make_pair(sys.r, sys.r + 1);
  if (out.proportional) {
    out.kind = Cor22Case::condA;
    return out;
  }

  // (b): both forms supported on the same two variables.
  std::set<std::size_t> joint;
  for (std::size_t i = 0; i < 2; ++i) {
    for (auto j : support(sys.A.row(i))) joint.insert(j);
  }
  if (joint.size() == 2) {
    out.kind = Cor22Case::condB;
    out.support = std::make_pair(*joint.begin() + 1, *joint.rbegin() + 1);
    return out;
  }

  out.kind = dependent ? Cor22Case::rankDefect : Cor22Case::independent;
  return out;
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t l, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > l) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == l - k + (i - 1)) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Polynomial> k_products(std::span<const Polynomial> polys, std::size_t k) {
  if (k < 1 || k > polys.size()) {
    throw Error("k must satisfy 1 <= k <= " + std::to_string(polys.size()) + ", got " +
                std::to_string(k));
  }
  std::vector<Polynomial> out;
  for (const auto& subset : index_subsets(polys.size(), k)) {
    Polynomial p = polys[subset.front()];
    for (std::size_t i = 1; i < subset.size(); ++i) p *= polys[subset[i]];
    out.push_back(std::move(p));
  }
  return out;
}

RationalMatrix coefficient_matrix(std::span<const Polynomial> polys) {
  std::set<Monomial> monomials;
  for (const auto& p : polys) {
    if (!(p.vars() == polys.front().vars())) throw VarSetMismatch();
    for (const auto& [m, c] : p.terms()) monomials.insert(m);
  }
  RationalMatrix mat(monomials.size(), polys.size(), Rational(0));
  std::size_t row = 0;
  for (const auto& m : monomials) {
    for (std::size_t j = 0; j < polys.size(); ++j) mat(row, j) = polys[j].coefficient(m);
    ++row;
  }
  return mat;
}

IndependenceReport generic_independent(std::span<const Polynomial> polys) {
  if (polys.empty()) throw Error("independence of an empty set is not defined here");
  const RationalMatrix mat = coefficient_matrix(polys);
  IndependenceReport report;
  report.rank = rank(mat);
  if (report.rank == polys.size()) {
    report.verdict = Verdict::independent;
    return report;
  }
  report.verdict = Verdict::dependent;
  report.witness = kernel(mat).vectors.front();
  return report;
}

IndependenceReport sk_independent(const LinearFormSystem& sys, std::size_t k) {
  const auto s1 = squares(sys);
  const auto sk = k_products(s1, k);
  return generic_independent(sk);
}

bool witness_annihilates(std::span<const Polynomial> polys, std::span<const Rational> coeffs) {
  if (polys.empty() || polys.size() != coeffs.size()) return false;
  bool nonzero = false;
  Polynomial sum(polys.front().vars());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    nonzero = true;
    sum += polys[i] * coeffs[i];
  }
  return nonzero && sum.is_zero();
}

}  // namespace quadforms
