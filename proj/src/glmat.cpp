#include "glhopf/glmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace glhopf {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::uint64_t matrix_space_size(int q, int n) {
  std::uint64_t v = 1;
  for (int i = 0; i < n * n; ++i) {
    if (v > UINT64_MAX / static_cast<std::uint64_t>(q)) return UINT64_MAX;
    v *= static_cast<std::uint64_t>(q);
  }
  return v;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const FqContext& ctx, int n) : ctx_(&ctx), n_(n) {
  if (n < 0 || n > kMaxDim) throw ShapeError("matrix size " + std::to_string(n) + " outside [0, 6]");
}

Matrix Matrix::identity(const FqContext& ctx, int n) {
  Matrix m(ctx, n);
  for (int i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_code(const FqContext& ctx, int n, std::uint64_t code) {
  Matrix m(ctx, n);
  const auto q = static_cast<std::uint64_t>(ctx.q());
  for (int idx = n * n - 1; idx >= 0; --idx) {
    m.a_[idx] = static_cast<std::uint8_t>(code % q);
    code /= q;
  }
  return m;
}

Matrix Matrix::parse(const FqContext& ctx, std::string_view text) {
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](char ch) { return ch == ' ' || ch == '\t'; }), t.end());
  if (t.empty()) return Matrix(ctx, 0);
  auto rows = split(t, ';');
  const int n = static_cast<int>(rows.size());
  Matrix m(ctx, n);
  for (int i = 0; i < n; ++i) {
    auto cells = split(rows[i], ',');
    if (static_cast<int>(cells.size()) != n) throw ParseError("matrix is not square: '" + t + "'");
    for (int j = 0; j < n; ++j) m.set(i, j, ctx.parse_elem(cells[j]));
  }
  return m;
}

void Matrix::set(int i, int j, FqElem v) {
  if (v.context() != ctx_ && (!v.context() || !ctx_->same_field(*v.context())))
    throw ContextError("matrix entry from a different field");
  a_[i * n_ + j] = static_cast<std::uint8_t>(v.code());
}

std::uint64_t Matrix::code() const noexcept {
  std::uint64_t c = 0;
  const auto q = static_cast<std::uint64_t>(ctx_->q());
  for (int idx = 0; idx < n_ * n_; ++idx) c = c * q + a_[idx];
  return c;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << static_cast<int>(a_[i * n_ + j]);
  }
  return os.str();
}

Matrix Matrix::transpose() const {
  Matrix t(*ctx_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.a_[j * n_ + i] = a_[i * n_ + j];
  return t;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.begin() + n_ * n_, [](std::uint8_t v) { return v == 0; });
}

FqElem Matrix::trace() const {
  std::uint8_t t = 0;
  for (int i = 0; i < n_; ++i) t = ctx_->add_code(t, a_[i * n_ + i]);
  return ctx_->elem(t);
}

void Matrix::check_compatible(const Matrix& o) const {
  if (n_ != o.n_) throw ShapeError("matrix sizes differ");
  if (!ctx_->same_field(*o.ctx_)) throw ContextError("matrices over different fields");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  a.check_compatible(b);
  Matrix r(*a.ctx_, a.n_);
  for (int i = 0; i < a.n_ * a.n_; ++i) r.a_[i] = a.ctx_->add_code(a.a_[i], b.a_[i]);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  a.check_compatible(b);
  Matrix r(*a.ctx_, a.n_);
  for (int i = 0; i < a.n_ * a.n_; ++i) r.a_[i] = a.ctx_->add_code(a.a_[i], a.ctx_->neg_code(b.a_[i]));
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.check_compatible(b);
  const int n = a.n_;
  const FqContext& f = *a.ctx_;
  Matrix r(f, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::uint8_t aik = a.a_[i * n + k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) r.a_[i * n + j] = f.add_code(r.a_[i * n + j], f.mul_code(aik, b.a_[k * n + j]));
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  return a.n_ == b.n_ && a.ctx_->same_field(*b.ctx_) &&
         std::equal(a.a_.begin(), a.a_.begin() + a.n_ * a.n_, b.a_.begin());
}

namespace {

// Row reduction on a copy; returns determinant and optionally the inverse.
FqElem reduce(const Matrix& m, Matrix* inv_out) {
  const FqContext& f = m.field();
  const int n = m.dim();
  Matrix a = m;
  Matrix inv = Matrix::identity(f, n);
  std::uint8_t det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.raw(r, col)) {
        piv = r;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        auto t = a.raw(col, j);
        a.set_raw(col, j, a.raw(piv, j));
        a.set_raw(piv, j, t);
        t = inv.raw(col, j);
        inv.set_raw(col, j, inv.raw(piv, j));
        inv.set_raw(piv, j, t);
      }
      det = f.neg_code(det);
    }
    const std::uint8_t pv = a.raw(col, col);
    det = f.mul_code(det, pv);
    const std::uint8_t pinv = f.inv_code(pv);
    for (int j = 0; j < n; ++j) {
      a.set_raw(col, j, f.mul_code(a.raw(col, j), pinv));
      inv.set_raw(col, j, f.mul_code(inv.raw(col, j), pinv));
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const std::uint8_t factor = a.raw(r, col);
      if (!factor) continue;
      const std::uint8_t nf = f.neg_code(factor);
      for (int j = 0; j < n; ++j) {
        a.set_raw(r, j, f.add_code(a.raw(r, j), f.mul_code(nf, a.raw(col, j))));
        inv.set_raw(r, j, f.add_code(inv.raw(r, j), f.mul_code(nf, inv.raw(col, j))));
      }
    }
  }
  if (inv_out) *inv_out = inv;
  return f.elem(det);
}

}  // namespace

FqElem determinant(const Matrix& m) { return reduce(m, nullptr); }

std::optional<Matrix> inverse(const Matrix& m) {
  Matrix inv(m.field(), m.dim());
  if (reduce(m, &inv).is_zero()) return std::nullopt;
  return inv;
}

Matrix conjugate(const Matrix& g, const Matrix& x) {
  if (g.dim() != x.dim()) throw ShapeError("conjugate: size mismatch");
  auto gi = inverse(g);
  if (!gi) throw SingularError("conjugate: g is singular");
  return g * x * *gi;
}

Matrix conjugate(const Matrix& g, const Matrix& g_inv, const Matrix& x) noexcept {
  const FqContext& f = g.field();
  const int n = g.dim();
  Matrix t(f, n);
  Matrix r(f, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::uint8_t gik = g.raw(i, k);
      if (!gik) continue;
      for (int j = 0; j < n; ++j) t.set_raw(i, j, f.add_code(t.raw(i, j), f.mul_code(gik, x.raw(k, j))));
    }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::uint8_t tik = t.raw(i, k);
      if (!tik) continue;
      for (int j = 0; j < n; ++j) r.set_raw(i, j, f.add_code(r.raw(i, j), f.mul_code(tik, g_inv.raw(k, j))));
    }
  return r;
}

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ShapeError("composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw ShapeError("composition parts must be positive");
    offsets_.push_back(total_);
    total_ += p;
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  for (auto& s : split(text, '+')) {
    try {
      parts.push_back(std::stoi(s));
    } catch (const std::exception&) {
      throw ParseError("bad composition: '" + std::string(text) + "'");
    }
  }
  return Composition(std::move(parts));
}

std::vector<Composition> Composition::all_of(int n) {
  if (n < 1) throw ShapeError("compositions need n >= 1");
  std::vector<Composition> out;
  // bit i of mask set <=> a cut after position i+1
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Composition::block_of(int r) const noexcept {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), r);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::string Composition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "+" : "") + std::to_string(parts_[i]);
  return s;
}

bool Composition::is_refined_by(const Composition& fine) const {
  if (fine.size() != size()) return false;
  for (int off : offsets_)
    if (std::find(fine.offsets_.begin(), fine.offsets_.end(), off) == fine.offsets_.end()) return false;
  return true;
}

// ---------------------------------------------------------------- shapes

bool in_shape(const Matrix& x, const BlockWitness& w) {
  const auto& c = w.composition;
  if (c.size() != x.dim()) throw ShapeError("in_shape: composition does not match matrix size");
  const int n = x.dim();
  for (int i = 0; i < n; ++i) {
    const int bi = c.block_of(i);
    for (int j = 0; j < n; ++j) {
      if (!x.raw(i, j)) continue;
      const int bj = c.block_of(j);
      switch (w.kind) {
        case BlockKind::levi:
          if (bi != bj) return false;
          break;
        case BlockKind::parabolic_upper:
          if (bi > bj) return false;
          break;
        case BlockKind::parabolic_lower:
          if (bi < bj) return false;
          break;
      }
    }
  }
  return true;
}

std::vector<Matrix> levi_project(const Matrix& x, const Composition& c) {
  if (c.size() != x.dim()) throw ShapeError("levi_project: composition does not match matrix size");
  std::vector<Matrix> out;
  for (int b = 0; b < c.length(); ++b) {
    const int m = c.parts()[b], off = c.offset(b);
    Matrix blk(x.field(), m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) blk.set_raw(i, j, x.raw(off + i, off + j));
    out.push_back(blk);
  }
  return out;
}

Matrix block_embed(const std::vector<Matrix>& blocks, const Composition& c) {
  if (static_cast<int>(blocks.size()) != c.length()) throw ShapeError("block_embed: wrong number of blocks");
  if (blocks.empty()) throw ShapeError("block_embed: no blocks");
  Matrix x(blocks.front().field(), c.size());
  for (int b = 0; b < c.length(); ++b) {
    const int m = c.parts()[b], off = c.offset(b);
    if (blocks[b].dim() != m) throw ShapeError("block_embed: block size does not match composition part");
    if (!blocks[b].field().same_field(x.field())) throw ContextError("block_embed: blocks over different fields");
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) x.set_raw(off + i, off + j, blocks[b].raw(i, j));
  }
  return x;
}

std::vector<std::pair<int, int>> unipotent_positions(const Composition& c, BlockKind kind) {
  std::vector<std::pair<int, int>> pos;
  if (kind == BlockKind::levi) return pos;
  const int n = c.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int bi = c.block_of(i), bj = c.block_of(j);
      if ((kind == BlockKind::parabolic_upper && bi < bj) || (kind == BlockKind::parabolic_lower && bi > bj))
        pos.emplace_back(i, j);
    }
  return pos;
}

// ---------------------------------------------------------------- GL_n

void for_each_gl(const FqContext& ctx, int n, std::uint64_t budget, const std::function<void(const Matrix&)>& fn) {
  const auto total = matrix_space_size(ctx.q(), n);
  if (total > budget) throw ResourceError("GL_" + std::to_string(n) + "(F_" + std::to_string(ctx.q()) + ") scan", total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix m = Matrix::from_code(ctx, n, code);
    if (!determinant(m).is_zero()) fn(m);
  }
}

std::vector<Matrix> enumerate_gl(const FqContext& ctx, int n, std::uint64_t budget) {
  std::vector<Matrix> out;
  for_each_gl(ctx, n, budget, [&](const Matrix& m) { out.push_back(m); });
  return out;
}

std::uint64_t enumerate_gl_order(const FqContext& ctx, int n, std::uint64_t budget) {
  std::uint64_t count = 0;
  for_each_gl(ctx, n, budget, [&](const Matrix&) { ++count; });
  return count;
}

GroupElements enumerate_gl_with_inverses(const FqContext& ctx, int n, std::uint64_t budget) {
  GroupElements g;
  g.n = n;
  const auto total = matrix_space_size(ctx.q(), n);
  if (total > budget) throw ResourceError("GL_" + std::to_string(n) + "(F_" + std::to_string(ctx.q()) + ") scan", total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix m = Matrix::from_code(ctx, n, code);
    Matrix inv(ctx, n);
    if (reduce(m, &inv).is_zero()) continue;
    g.elements.push_back(m);
    g.inverses.push_back(inv);
  }
  return g;
}

WeylRep weyl_rep(const FqContext& ctx, int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) throw ShapeError("weyl_rep: negative block size");
  const int n = a + b + c + d;
  WeylRep w{a, b, c, d, Matrix(ctx, n), std::vector<int>(n)};
  // column block offsets (a, b, c, d) and row block offsets (a, c, b, d)
  const int col_a = 0, col_b = a, col_c = a + b, col_d = a + b + c;
  const int row_a = 0, row_c = a, row_b = a + c, row_d = a + c + b;
  auto place = [&](int rows, int cols, int size) {
    for (int i = 0; i < size; ++i) {
      w.matrix.set_raw(rows + i, cols + i, 1);
      w.image[cols + i] = rows + i;
    }
  };
  place(row_a, col_a, a);
  place(row_c, col_c, c);
  place(row_b, col_b, b);
  place(row_d, col_d, d);
  return w;
}

std::vector<std::vector<std::uint8_t>> nullspace(const FqContext& f, std::vector<std::vector<std::uint8_t>> rows,
                                                 int ncols) {
  std::vector<int> pivot_col;
  int r = 0;
  const int nrows = static_cast<int>(rows.size());
  for (int col = 0; col < ncols && r < nrows; ++col) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (rows[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint8_t inv = f.inv_code(rows[r][col]);
    for (auto& v : rows[r]) v = f.mul_code(v, inv);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || !rows[i][col]) continue;
      const std::uint8_t nf = f.neg_code(rows[i][col]);
      for (int j = 0; j < ncols; ++j) rows[i][j] = f.add_code(rows[i][j], f.mul_code(nf, rows[r][j]));
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<std::vector<std::uint8_t>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<std::uint8_t> v(ncols, 0);
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = f.neg_code(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t centralizer_order_via_commutant(const Matrix& x, std::uint64_t budget) {
  const FqContext& f = x.field();
  const int n = x.dim();
  if (n == 0) return 1;
  // unknown y_{kl} at index k*n+l; equation (yx - xy)_{ij} = 0
  std::vector<std::vector<std::uint8_t>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::uint8_t> row(n * n, 0);
      for (int k = 0; k < n; ++k) {
        // (yx)_{ij} = sum_k y_{ik} x_{kj}
        row[i * n + k] = f.add_code(row[i * n + k], x.raw(k, j));
        // (xy)_{ij} = sum_k x_{ik} y_{kj}
        row[k * n + j] = f.add_code(row[k * n + j], f.neg_code(x.raw(i, k)));
      }
      rows.push_back(std::move(row));
    }
  auto basis = nullspace(f, std::move(rows), n * n);
  const int d = static_cast<int>(basis.size());
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i)
    total = total > UINT64_MAX / static_cast<std::uint64_t>(f.q()) ? UINT64_MAX : total * f.q();
  if (total > budget) throw ResourceError("commutant enumeration", total);
  std::uint64_t count = 0;
  std::vector<int> coef(d, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < d; ++i) {
      coef[i] = static_cast<int>(rest % f.q());
      rest /= f.q();
    }
    Matrix y(f, n);
    for (int i = 0; i < d; ++i) {
      if (!coef[i]) continue;
      for (int e = 0; e < n * n; ++e)
        y.set_raw(e / n, e % n,
                  f.add_code(y.raw(e / n, e % n), f.mul_code(static_cast<std::uint8_t>(coef[i]), basis[i][e])));
    }
    if (!determinant(y).is_zero()) ++count;
  }
  return count;
}

}  // namespace glhopf
