#include "glhopf/linalg.hpp"

#include <algorithm>

namespace glhopf {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool RationalMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
  RationalMatrix r(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj == 0) continue;
        t = aik * bkj;
        r(i, j) += t;
      }
    }
  return r;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeError("matrix sum: shapes differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
  return *this;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix r = a;
  return r += b;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference: shapes differ");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix r = a;
  for (auto& x : r.a_) x *= s;
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> RationalMatrix::first_difference(const RationalMatrix& a,
                                                                                    const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return std::pair<std::size_t, std::size_t>{0, 0};
  for (std::size_t j = 0; j < a.cols_; ++j)
    for (std::size_t i = 0; i < a.rows_; ++i)
      if (a(i, j) != b(i, j)) return std::pair{i, j};
  return std::nullopt;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

RationalMatrix vstack(const std::vector<RationalMatrix>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  const std::size_t cols = parts.front().cols();
  for (const auto& p : parts) {
    if (p.cols() != cols) throw ShapeError("vstack: column counts differ");
    rows += p.rows();
  }
  RationalMatrix r(rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) r(off + i, j) = p(i, j);
    off += p.rows();
  }
  return r;
}

RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t nrows) {
  RationalMatrix r(nrows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != nrows) throw ShapeError("from_columns: column length mismatch");
    for (std::size_t i = 0; i < nrows; ++i) r(i, j) = cols[j][i];
  }
  return r;
}

EchelonForm rref(RationalMatrix m) {
  EchelonForm e;
  std::size_t r = 0;
  Rational t;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const Rational inv = 1 / m(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(r, j) == 0) continue;
        t = factor * m(r, j);
        m(i, j) -= t;
      }
    }
    e.pivots.push_back(col);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank(); }

std::vector<std::vector<Rational>> kernel(const RationalMatrix& m) {
  auto e = rref(m);
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (std::find(e.pivots.begin(), e.pivots.end(), free) != e.pivots.end()) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RowSpace::insert(std::vector<Rational> v) {
  if (v.size() != dim_) throw ShapeError("RowSpace: vector length mismatch");
  Rational t;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p] == 0) continue;
    const Rational factor = v[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (rows_[i][j] == 0) continue;
      t = factor * rows_[i][j];
      v[j] -= t;
    }
  }
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (it == v.end()) return false;
  const auto p = static_cast<std::size_t>(it - v.begin());
  const Rational inv = 1 / v[p];
  for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
  // keep earlier rows reduced against the new pivot so elimination above stays valid
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rational factor = row[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (v[j] == 0) continue;
      t = factor * v[j];
      row[j] -= t;
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace glhopf
