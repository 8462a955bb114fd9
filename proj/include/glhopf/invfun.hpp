#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "glhopf/field.hpp"
#include "glhopf/kernels.hpp"
#include "glhopf/linalg.hpp"
#include "glhopf/orbits.hpp"

namespace glhopf {

using TablePtr = std::shared_ptr<const OrbitTable>;

bool same_table(const OrbitTable& a, const OrbitTable& b) noexcept;

/// A function on gl_n(F_q) constant on adjoint orbits, stored per orbit in
/// table order. Degree 0 is the scalars (one value).
class InvariantFunction {
 public:
  InvariantFunction(TablePtr table, std::vector<Cyclotomic> values);

  static InvariantFunction zero(TablePtr table);
  static InvariantFunction constant_one(TablePtr table);
  static InvariantFunction indicator(TablePtr table, std::size_t orbit);
  static InvariantFunction indicator(TablePtr table, const OrbitLabel& label);
  static InvariantFunction from_rationals(TablePtr table, const std::vector<Rational>& values);

  int degree() const noexcept { return table_->n(); }
  int prime() const noexcept { return table_->field().p(); }
  const OrbitTable& table() const noexcept { return *table_; }
  const TablePtr& table_ptr() const noexcept { return table_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& operator[](std::size_t i) const { return values_.at(i); }
  const Cyclotomic& value(const OrbitLabel& label) const;

  Cyclotomic evaluate(const Matrix& x) const;
  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRationalError if any value is irrational.
  std::vector<Rational> rational_values() const;

  InvariantFunction& operator+=(const InvariantFunction& o);
  InvariantFunction& operator-=(const InvariantFunction& o);
  friend InvariantFunction operator+(InvariantFunction a, const InvariantFunction& b) { return a += b; }
  friend InvariantFunction operator-(InvariantFunction a, const InvariantFunction& b) { return a -= b; }
  friend InvariantFunction operator*(const Rational& s, InvariantFunction a);
  friend InvariantFunction operator-(InvariantFunction a);
  friend bool operator==(const InvariantFunction& a, const InvariantFunction& b);

 private:
  void check(const InvariantFunction& o) const;

  TablePtr table_;
  std::vector<Cyclotomic> values_;
};

/// |O| / |GL_n(F_q)| per orbit: the weights of the invariant inner product.
std::vector<Rational> gram_weights(const OrbitTable& table);

/// (f, g) = (1/|G|) sum_x f(x) conj(g(x)).
Cyclotomic inner_product(const InvariantFunction& f, const InvariantFunction& g);
/// Same, forced to Q.
Rational rational_inner_product(const InvariantFunction& f, const InvariantFunction& g);

/// Element of C(gl_{n_1}) (x) ... (x) C(gl_{n_k}) over orbit tuples; tuple
/// index is mixed radix with the first factor most significant.
class TensorFunction {
 public:
  TensorFunction(std::vector<TablePtr> factors, std::vector<Cyclotomic> values);

  static TensorFunction outer(const std::vector<InvariantFunction>& fs);
  static TensorFunction indicator(std::vector<TablePtr> factors, std::size_t tuple);

  const std::vector<TablePtr>& factors() const noexcept { return factors_; }
  std::vector<int> degrees() const;
  int prime() const noexcept { return p_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& operator[](std::size_t i) const { return values_.at(i); }

  std::vector<std::size_t> unflatten(std::size_t tuple) const;
  std::size_t flatten(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;

  friend bool operator==(const TensorFunction& a, const TensorFunction& b);

 private:
  std::vector<TablePtr> factors_;
  std::vector<Cyclotomic> values_;
  int p_;
};

std::size_t tuple_count(const std::vector<TablePtr>& factors);
std::vector<Rational> gram_weights(const std::vector<TablePtr>& factors);
Cyclotomic inner_product(const TensorFunction& a, const TensorFunction& b);

/// Finitely supported sum of homogeneous components; zero parts are dropped.
class GradedElement {
 public:
  GradedElement() = default;
  explicit GradedElement(const InvariantFunction& f) { add(f); }

  void add(const InvariantFunction& f);
  const std::map<int, InvariantFunction>& components() const noexcept { return parts_; }
  std::optional<InvariantFunction> component(int n) const;
  bool is_zero() const noexcept { return parts_.empty(); }
  friend bool operator==(const GradedElement& a, const GradedElement& b);

 private:
  std::map<int, InvariantFunction> parts_;
};

/// m * v for a rational matrix acting on a cyclotomic vector.
std::vector<Cyclotomic> apply(const RationalMatrix& m, const std::vector<Cyclotomic>& v, int p);

/// chi_O(x) = sum_{a in O} psi(tr(a x)), one per orbit in table order.
std::vector<InvariantFunction> fourier_character_basis(const TablePtr& table,
                                                       kernels::Backend backend = kernels::default_backend());

/// Coefficients (f, b_i) / (b_i, b_i) against an orthogonal basis.
std::vector<Cyclotomic> coords(const InvariantFunction& f, const std::vector<InvariantFunction>& basis);

}  // namespace glhopf
