#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glhopf/field.hpp"

namespace glhopf {

/// Default cap on the number of matrices any enumeration may scan.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// q^(n*n), saturating at UINT64_MAX.
std::uint64_t matrix_space_size(int q, int n);

/// Dense n x n matrix over F_q, n <= kMaxDim.
class Matrix {
 public:
  static constexpr int kMaxDim = 6;

  Matrix(const FqContext& ctx, int n);

  static Matrix identity(const FqContext& ctx, int n);
  /// Inverse of code(): digits base q, row-major, entry (0,0) most significant.
  static Matrix from_code(const FqContext& ctx, int n, std::uint64_t code);
  /// Rows separated by ';', entries by ','; entries are field element codes.
  static Matrix parse(const FqContext& ctx, std::string_view text);

  int dim() const noexcept { return n_; }
  const FqContext& field() const noexcept { return *ctx_; }

  FqElem at(int i, int j) const { return ctx_->elem(a_[i * n_ + j]); }
  void set(int i, int j, FqElem v);
  std::uint8_t raw(int i, int j) const noexcept { return a_[i * n_ + j]; }
  void set_raw(int i, int j, std::uint8_t v) noexcept { a_[i * n_ + j] = v; }

  std::uint64_t code() const noexcept;
  std::string to_string() const;
  Matrix transpose() const;
  bool is_zero() const noexcept;
  FqElem trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

 private:
  void check_compatible(const Matrix& o) const;

  const FqContext* ctx_;
  int n_;
  std::array<std::uint8_t, kMaxDim * kMaxDim> a_{};
};

FqElem determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// g x g^{-1}; throws SingularError when g is not invertible.
Matrix conjugate(const Matrix& g, const Matrix& x);
/// g x g_inv with a caller-supplied inverse (hot path, no checks).
Matrix conjugate(const Matrix& g, const Matrix& g_inv, const Matrix& x) noexcept;

/// Ordered list of positive parts (c_1, ..., c_k).
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  /// "c1+c2+...+ck"
  static Composition parse(std::string_view text);
  /// All 2^(n-1) compositions of n >= 1, in lexicographic order of parts.
  static std::vector<Composition> all_of(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return total_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Row index where block i starts.
  int offset(int i) const noexcept { return offsets_[i]; }
  /// Block index containing row r.
  int block_of(int r) const noexcept;
  std::string to_string() const;
  /// True iff every part of *this is a sum of consecutive parts of `fine`.
  bool is_refined_by(const Composition& fine) const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  int total_ = 0;
};

enum class BlockKind { levi, parabolic_upper, parabolic_lower };

struct BlockWitness {
  Composition composition;
  BlockKind kind;
};

bool in_shape(const Matrix& x, const BlockWitness& w);
std::vector<Matrix> levi_project(const Matrix& x, const Composition& c);
Matrix block_embed(const std::vector<Matrix>& blocks, const Composition& c);

/// Positions of the unipotent radical (strictly upper-block for
/// parabolic_upper, strictly lower-block for parabolic_lower, empty for levi).
std::vector<std::pair<int, int>> unipotent_positions(const Composition& c, BlockKind kind);

/// Row-major lexicographic scan of GL_n(F_q). Throws ResourceError when
/// q^(n^2) exceeds the budget.
void for_each_gl(const FqContext& ctx, int n, std::uint64_t budget, const std::function<void(const Matrix&)>& fn);
std::vector<Matrix> enumerate_gl(const FqContext& ctx, int n, std::uint64_t budget = kDefaultBudget);
std::uint64_t enumerate_gl_order(const FqContext& ctx, int n, std::uint64_t budget = kDefaultBudget);

/// Elements of GL_n(F_q) together with their inverses, in enumeration order.
struct GroupElements {
  int n = 0;
  std::vector<Matrix> elements;
  std::vector<Matrix> inverses;
};
GroupElements enumerate_gl_with_inverses(const FqContext& ctx, int n, std::uint64_t budget = kDefaultBudget);

/// Block permutation with identity blocks placed as
///   [ I_a  .    .    .  ]
///   [ .    .    I_c  .  ]
///   [ .    I_b  .    .  ]
///   [ .    .    .    I_d]
/// (column blocks of sizes a, b, c, d; row blocks of sizes a, c, b, d).
struct WeylRep {
  int a, b, c, d;
  Matrix matrix;
  /// Row of the single 1 in column j: w e_j = e_{image[j]}.
  std::vector<int> image;
};
WeylRep weyl_rep(const FqContext& ctx, int a, int b, int c, int d);

/// Basis of the right null space of a matrix over F_q given as rows of codes.
std::vector<std::vector<std::uint8_t>> nullspace(const FqContext& ctx, std::vector<std::vector<std::uint8_t>> rows,
                                                 int ncols);

/// |{g in GL_n : g x = x g}| by enumerating the commutant {y : y x = x y},
/// a linear subspace solved for explicitly.
std::uint64_t centralizer_order_via_commutant(const Matrix& x, std::uint64_t budget = kDefaultBudget);

}  // namespace glhopf
