#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "quadforms/polynomial.hpp"
#include "quadforms/rational.hpp"

namespace quadforms {

/// Dense row-major matrix over an exact scalar type. Zero-row or zero-column
/// shapes are allowed.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error("matrix data does not match its shape");
  }

  /// Builds from nested rows, all of the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    std::vector<T> data;
    data.reserve(rows.size() * cols);
    for (const auto& row : rows) {
      if (row.size() != cols) throw Error("ragged matrix rows");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(rows.size(), cols, std::move(data));
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * cols_, cols_);
  }
  [[nodiscard]] std::span<T> row(std::size_t i) { return std::span<T>(data_).subspan(i * cols_, cols_); }
  [[nodiscard]] const std::vector<T>& data() const { return data_; }

  [[nodiscard]] Matrix transpose() const {
    std::vector<T> t;
    t.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) t.push_back((*this)(i, j));
    }
    return Matrix(cols_, rows_, std::move(t));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;
using RationalVector = std::vector<Rational>;

/// Convenience for literals: {{1, 2}, {3, 4}}.
RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<Rational>> rows);

}  // namespace quadforms
