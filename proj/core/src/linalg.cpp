#include "quadforms/linalg.hpp"

#include <utility>

namespace quadforms {

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

mpz_class exact_quotient(const mpz_class& n, const mpz_class& d) {
  if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) == 0) {
    throw InexactDivision("fraction-free elimination produced an inexact integer division");
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// Clears denominators row by row. Returns the integer rows and the product
// of the per-row scale factors.
std::pair<IntRows, mpz_class> integerize(const RationalMatrix& m) {
  IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
  mpz_class total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    for (const auto& q : m.row(i)) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.denominator().get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      rows[i][j] = q.numerator() * (scale / q.denominator());
    }
    total *= scale;
  }
  return {std::move(rows), total};
}

// Fraction-free determinant over an integral domain. `div` must be exact.
template <class T, class IsZero, class Div>
T bareiss_det(std::vector<std::vector<T>> a, const T& one, const T& zero, IsZero is_zero,
              Div div) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a[p][k])) ++p;
    if (p == n) return zero;
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? zero - a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> nested;
  for (const auto& r : rows) nested.emplace_back(r);
  return RationalMatrix::from_rows(nested);
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

std::size_t rank(const RationalMatrix& m) {
  auto [a, scale] = integerize(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = exact_quotient(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Rational det(const RationalMatrix& m) {
  if (!m.square()) throw NotSquare();
  auto [a, scale] = integerize(m);
  const mpz_class one = 1;
  const mpz_class zero = 0;
  mpz_class d = bareiss_det(
      std::move(a), one, zero, [](const mpz_class& x) { return x == 0; },
      [](const mpz_class& n, const mpz_class& q) { return exact_quotient(n, q); });
  return Rational(d, scale);
}

Polynomial det(const PolyMatrix& m) {
  if (!m.square()) throw NotSquare();
  if (m.rows() == 0) throw Error("symbolic determinant needs at least one entry for its ring");
  const VarSet& vars = m(0, 0).vars();
  std::vector<std::vector<Polynomial>> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.emplace_back(m.row(i).begin(), m.row(i).end());
  return bareiss_det(
      std::move(a), Polynomial::constant(vars, Rational(1)), Polynomial(vars),
      [](const Polynomial& x) { return x.is_zero(); },
      [](const Polynomial& n, const Polynomial& d) { return exact_divide(n, d); });
}

RowEchelon rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

KernelBasis kernel(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  KernelBasis basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[f] = Rational(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.vectors.push_back(primitive(v));
  }
  return basis;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  if (v.size() != m.cols()) throw Error("matrix-vector dimension mismatch");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

RationalVector primitive(const RationalVector& v) {
  mpz_class lcm = 1;
  mpz_class gcd = 0;
  const Rational* first = nullptr;
  for (const auto& q : v) {
    if (q.is_zero()) continue;
    if (first == nullptr) first = &q;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.denominator().get_mpz_t());
  }
  if (first == nullptr) return v;
  for (const auto& q : v) {
    if (q.is_zero()) continue;
    const mpz_class n = q.numerator() * (lcm / q.denominator());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational factor(lcm, gcd);
  if (first->sign() < 0) factor = -factor;
  RationalVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q * factor);
  return out;
}

}  // namespace quadforms
