#pragma once

// Seeded generators and small reference implementations shared by the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "quadforms/matrix.hpp"
#include "quadforms/polynomial.hpp"

namespace qtest {

using quadforms::Monomial;
using quadforms::Polynomial;
using quadforms::Rational;
using quadforms::RationalMatrix;
using quadforms::VarSet;

inline long draw(std::mt19937_64& g, long lo, long hi) {
  return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational draw_rational(std::mt19937_64& g, long bound) {
  const long num = draw(g, -bound, bound);
  const long den = draw(g, 1, 5);
  return Rational(num, den);
}

inline Polynomial random_poly(std::mt19937_64& g, const VarSet& vars, int terms, unsigned max_exp) {
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      m.set(i, static_cast<quadforms::Exponent>(draw(g, 0, max_exp)));
    }
    p.add_term(m, draw_rational(g, 9));
  }
  return p;
}

inline Polynomial random_homogeneous(std::mt19937_64& g, const VarSet& vars, int terms,
                                     unsigned degree) {
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(vars.size());
    unsigned left = degree;
    for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
      const auto e = static_cast<unsigned>(draw(g, 0, left));
      m.set(i, e);
      left -= e;
    }
    m.set(vars.size() - 1, left);
    p.add_term(m, draw_rational(g, 9));
  }
  return p;
}

inline RationalMatrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols,
                                    long bound, int zero_percent = 0) {
  RationalMatrix m(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (draw(g, 1, 100) <= zero_percent) continue;
      m(i, j) = Rational(draw(g, -bound, bound));
    }
  }
  return m;
}

/// Laplace expansion along the first row.
inline Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total(0);
  for (std::size_t c = 0; c < n; ++c) {
    RationalMatrix minor(n - 1, n - 1, Rational(0));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = m(i, j);
      }
    }
    const Rational term = m(0, c) * cofactor_det(minor);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// Textbook Gaussian elimination over Q.
inline std::size_t naive_rank(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational f = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace qtest
