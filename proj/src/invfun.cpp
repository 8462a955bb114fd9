#include "glhopf/invfun.hpp"

#include <algorithm>

namespace glhopf {

bool same_table(const OrbitTable& a, const OrbitTable& b) noexcept {
  return &a == &b || (a.n() == b.n() && a.size() == b.size() && a.field().same_field(b.field()));
}

InvariantFunction::InvariantFunction(TablePtr table, std::vector<Cyclotomic> values)
    : table_(std::move(table)), values_(std::move(values)) {
  if (!table_) throw ContextError("invariant function without orbit table");
  if (values_.size() != table_->size())
    throw ShapeError("invariant function: " + std::to_string(values_.size()) + " values for " +
                     std::to_string(table_->size()) + " orbits");
  for (const auto& v : values_)
    if (v.prime() != table_->field().p()) throw ContextError("invariant function: value field mismatch");
}

InvariantFunction InvariantFunction::zero(TablePtr table) {
  const int p = table->field().p();
  std::vector<Cyclotomic> v(table->size(), Cyclotomic(p));
  return {std::move(table), std::move(v)};
}

InvariantFunction InvariantFunction::constant_one(TablePtr table) {
  const int p = table->field().p();
  std::vector<Cyclotomic> v(table->size(), Cyclotomic(p, 1));
  return {std::move(table), std::move(v)};
}

InvariantFunction InvariantFunction::indicator(TablePtr table, std::size_t orbit) {
  if (orbit >= table->size()) throw LookupError("orbit index " + std::to_string(orbit) + " out of range");
  auto f = zero(std::move(table));
  f.values_[orbit] = Cyclotomic(f.prime(), 1);
  return f;
}

InvariantFunction InvariantFunction::indicator(TablePtr table, const OrbitLabel& label) {
  const std::size_t i = table->index_of(label);
  return indicator(std::move(table), i);
}

InvariantFunction InvariantFunction::from_rationals(TablePtr table, const std::vector<Rational>& values) {
  const int p = table->field().p();
  std::vector<Cyclotomic> v;
  v.reserve(values.size());
  for (const auto& r : values) v.emplace_back(p, r);
  return {std::move(table), std::move(v)};
}

const Cyclotomic& InvariantFunction::value(const OrbitLabel& label) const { return values_[table_->index_of(label)]; }

Cyclotomic InvariantFunction::evaluate(const Matrix& x) const {
  if (x.dim() != degree() || !x.field().same_field(table_->field()))
    throw ShapeError("evaluate: matrix does not live in this degree");
  return values_[table_->index_of(x)];
}

bool InvariantFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool InvariantFunction::is_rational() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& c) { return c.is_rational(); });
}

std::vector<Rational> InvariantFunction::rational_values() const {
  std::vector<Rational> r;
  r.reserve(values_.size());
  for (const auto& v : values_) r.push_back(v.as_rational());
  return r;
}

void InvariantFunction::check(const InvariantFunction& o) const {
  if (!table_->field().same_field(o.table_->field())) throw ContextError("invariant functions over different fields");
  if (!same_table(*table_, *o.table_)) throw ShapeError("invariant functions of different degree");
}

InvariantFunction& InvariantFunction::operator+=(const InvariantFunction& o) {
  check(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

InvariantFunction& InvariantFunction::operator-=(const InvariantFunction& o) {
  check(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

InvariantFunction operator*(const Rational& s, InvariantFunction a) {
  for (auto& v : a.values_) v *= s;
  return a;
}

InvariantFunction operator-(InvariantFunction a) {
  for (auto& v : a.values_) v = -v;
  return a;
}

bool operator==(const InvariantFunction& a, const InvariantFunction& b) {
  return same_table(*a.table_, *b.table_) && a.values_ == b.values_;
}

std::vector<Rational> gram_weights(const OrbitTable& table) {
  std::vector<Rational> w;
  w.reserve(table.size());
  const Rational g = from_count(table.group_order());
  for (const auto& e : table.entries()) w.push_back(from_count(e.size) / g);
  return w;
}

namespace {

Cyclotomic weighted_pairing(const std::vector<Rational>& w, const std::vector<Cyclotomic>& a,
                            const std::vector<Cyclotomic>& b, int p) {
  Cyclotomic s(p);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s.add_scaled(w[i], a[i] * b[i].conj());
  }
  return s;
}

}  // namespace

Cyclotomic inner_product(const InvariantFunction& f, const InvariantFunction& g) {
  if (!same_table(f.table(), g.table())) throw ShapeError("inner product of functions of different degree");
  return weighted_pairing(gram_weights(f.table()), f.values(), g.values(), f.prime());
}

Rational rational_inner_product(const InvariantFunction& f, const InvariantFunction& g) {
  return inner_product(f, g).as_rational();
}

std::size_t tuple_count(const std::vector<TablePtr>& factors) {
  std::size_t t = 1;
  for (const auto& f : factors) t *= f->size();
  return t;
}

TensorFunction::TensorFunction(std::vector<TablePtr> factors, std::vector<Cyclotomic> values)
    : factors_(std::move(factors)), values_(std::move(values)) {
  if (factors_.empty()) throw ShapeError("tensor function needs at least one factor");
  p_ = factors_.front()->field().p();
  for (const auto& f : factors_)
    if (!f->field().same_field(factors_.front()->field())) throw ContextError("tensor factors over different fields");
  if (values_.size() != tuple_count(factors_)) throw ShapeError("tensor function: value grid does not match factors");
  for (const auto& v : values_)
    if (v.prime() != p_) throw ContextError("tensor function: value field mismatch");
}

TensorFunction TensorFunction::outer(const std::vector<InvariantFunction>& fs) {
  if (fs.empty()) throw ShapeError("outer product of no functions");
  std::vector<TablePtr> factors;
  for (const auto& f : fs) factors.push_back(f.table_ptr());
  const int p = fs.front().prime();
  std::vector<Cyclotomic> v{Cyclotomic(p, 1)};
  for (const auto& f : fs) {
    std::vector<Cyclotomic> next;
    next.reserve(v.size() * f.size());
    for (const auto& a : v)
      for (const auto& b : f.values()) next.push_back(a * b);
    v = std::move(next);
  }
  return {std::move(factors), std::move(v)};
}

TensorFunction TensorFunction::indicator(std::vector<TablePtr> factors, std::size_t tuple) {
  const std::size_t count = tuple_count(factors);
  if (tuple >= count) throw LookupError("tensor index out of range");
  const int p = factors.front()->field().p();
  std::vector<Cyclotomic> v(count, Cyclotomic(p));
  v[tuple] = Cyclotomic(p, 1);
  return {std::move(factors), std::move(v)};
}

std::vector<int> TensorFunction::degrees() const {
  std::vector<int> d;
  for (const auto& f : factors_) d.push_back(f->n());
  return d;
}

std::vector<std::size_t> TensorFunction::unflatten(std::size_t tuple) const {
  std::vector<std::size_t> idx(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    idx[i] = tuple % factors_[i]->size();
    tuple /= factors_[i]->size();
  }
  return idx;
}

std::size_t TensorFunction::flatten(const std::vector<std::size_t>& idx) const {
  if (idx.size() != factors_.size()) throw ShapeError("tensor index has wrong arity");
  std::size_t t = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) t = t * factors_[i]->size() + idx[i];
  return t;
}

bool TensorFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool operator==(const TensorFunction& a, const TensorFunction& b) {
  if (a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i)
    if (!same_table(*a.factors_[i], *b.factors_[i])) return false;
  return a.values_ == b.values_;
}

std::vector<Rational> gram_weights(const std::vector<TablePtr>& factors) {
  std::vector<Rational> w{Rational(1)};
  for (const auto& f : factors) {
    const auto wf = gram_weights(*f);
    std::vector<Rational> next;
    next.reserve(w.size() * wf.size());
    for (const auto& a : w)
      for (const auto& b : wf) next.push_back(a * b);
    w = std::move(next);
  }
  return w;
}

Cyclotomic inner_product(const TensorFunction& a, const TensorFunction& b) {
  if (a.factors().size() != b.factors().size()) throw ShapeError("tensor inner product: arity mismatch");
  for (std::size_t i = 0; i < a.factors().size(); ++i)
    if (!same_table(*a.factors()[i], *b.factors()[i])) throw ShapeError("tensor inner product: factor mismatch");
  return weighted_pairing(gram_weights(a.factors()), a.values(), b.values(), a.prime());
}

void GradedElement::add(const InvariantFunction& f) {
  auto it = parts_.find(f.degree());
  if (it == parts_.end()) {
    if (!f.is_zero()) parts_.emplace(f.degree(), f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) parts_.erase(it);
}

std::optional<InvariantFunction> GradedElement::component(int n) const {
  auto it = parts_.find(n);
  if (it == parts_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const GradedElement& a, const GradedElement& b) { return a.parts_ == b.parts_; }

std::vector<Cyclotomic> apply(const RationalMatrix& m, const std::vector<Cyclotomic>& v, int p) {
  if (m.cols() != v.size()) throw ShapeError("apply: matrix has " + std::to_string(m.cols()) + " columns, vector " +
                                             std::to_string(v.size()) + " entries");
  std::vector<Cyclotomic> out(m.rows(), Cyclotomic(p));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && !v[j].is_zero()) out[i].add_scaled(m(i, j), v[j]);
  return out;
}

std::vector<InvariantFunction> fourier_character_basis(const TablePtr& table, kernels::Backend backend) {
  const std::size_t norb = table->size();
  const int p = table->field().p();
  const auto counts = kernels::fourier_residue_counts(*table, backend);
  std::vector<InvariantFunction> basis;
  basis.reserve(norb);
  for (std::size_t a = 0; a < norb; ++a) {
    std::vector<Cyclotomic> values;
    values.reserve(norb);
    for (std::size_t x = 0; x < norb; ++x) {
      std::vector<Rational> c(p);
      for (int r = 0; r < p; ++r) c[r] = from_count(counts[(a * norb + x) * p + r]);
      values.push_back(Cyclotomic::from_coords(p, std::move(c)));
    }
    basis.emplace_back(table, std::move(values));
  }
  return basis;
}

std::vector<Cyclotomic> coords(const InvariantFunction& f, const std::vector<InvariantFunction>& basis) {
  std::vector<Cyclotomic> c;
  c.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Cyclotomic norm = inner_product(basis[i], basis[i]);
    if (norm.is_zero()) throw DegeneracyError("basis vector " + std::to_string(i) + " has zero norm");
    // norms of nonzero vectors are positive rationals
    c.push_back(inner_product(f, basis[i]) * (1 / norm.as_rational()));
  }
  return c;
}

}  // namespace glhopf
