#pragma once

// Exact linear algebra: fraction-free (Bareiss) elimination for rank and
// determinants, Gauss-Jordan reduction for kernels, and the 3x3 permanent.

#include <cstddef>
#include <vector>

#include "quadforms/matrix.hpp"

namespace quadforms {

class NotSquare : public Error {
 public:
  NotSquare() : Error("matrix is not square") {}
};

/// Right null-space basis. Each vector has integer entries with content 1
/// and a positive first nonzero entry.
struct KernelBasis {
  std::vector<RationalVector> vectors;
};

/// Reduced row echelon form together with the pivot column of each
/// nonzero row.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RationalMatrix identity_matrix(std::size_t n);

/// Rank over Q via fraction-free elimination on row-scaled integer data.
[[nodiscard]] std::size_t rank(const RationalMatrix& m);
[[nodiscard]] Rational det(const RationalMatrix& m);
/// Symbolic determinant: Bareiss elimination whose divisions by earlier
/// pivots must be exact; throws InexactDivision otherwise.
[[nodiscard]] Polynomial det(const PolyMatrix& m);

/// Plain rational Gauss-Jordan reduction (first nonzero pivot, rows in order).
[[nodiscard]] RowEchelon rref(const RationalMatrix& m);
[[nodiscard]] KernelBasis kernel(const RationalMatrix& m);

[[nodiscard]] RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

/// Scales a nonzero vector to integer entries with content 1 and a positive
/// first nonzero entry. Zero vectors come back unchanged.
[[nodiscard]] RationalVector primitive(const RationalVector& v);

/// Sum over the six permutations of 3x3 entry products; works for any ring
/// with + and *.
template <class T>
[[nodiscard]] T permanent3(const Matrix<T>& m) {
  if (m.rows() != 3 || m.cols() != 3) throw Error("permanent3 requires a 3x3 matrix");
  return m(0, 0) * m(1, 1) * m(2, 2) + m(0, 0) * m(1, 2) * m(2, 1) +
         m(0, 1) * m(1, 0) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0) +
         m(0, 2) * m(1, 0) * m(2, 1) + m(0, 2) * m(1, 1) * m(2, 0);
}

}  // namespace quadforms
