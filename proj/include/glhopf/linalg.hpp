#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "glhopf/field.hpp"

namespace glhopf {

/// Dense exact rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  std::vector<Rational> column(std::size_t j) const;
  std::vector<Rational> row(std::size_t i) const;
  bool is_identity() const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  RationalMatrix& operator+=(const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// First entry (row, col) where the two matrices differ.
  static std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RationalMatrix& a,
                                                                             const RationalMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);
/// Stacks matrices with equal column counts.
RationalMatrix vstack(const std::vector<RationalMatrix>& parts);
RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t nrows);

struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};
EchelonForm rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
/// Reduced-echelon basis of the right kernel: each vector has a 1 at its free
/// column and 0 at the other free columns.
std::vector<std::vector<Rational>> kernel(const RationalMatrix& m);

/// Incremental row space for rank accumulation with early exit.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}
  /// Adds v; returns true if it increased the rank.
  bool insert(std::vector<Rational> v);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  bool full() const noexcept { return rows_.size() == dim_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace glhopf
