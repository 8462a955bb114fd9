#include "glhopf/hc.hpp"

#include <algorithm>
#include <sstream>

#include "glhopf/io.hpp"

namespace glhopf {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char ch : s) out += std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' ? ch : '_';
  return out;
}

std::uint64_t power(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

std::vector<int> nonzero(const std::vector<int>& parts) {
  std::vector<int> nz;
  for (int p : parts) {
    if (p < 0) throw ShapeError("negative part in " + join_parts(parts));
    if (p > 0) nz.push_back(p);
  }
  return nz;
}

}  // namespace

std::string kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::levi:
      return "levi";
    case BlockKind::parabolic_upper:
      return "upper";
    case BlockKind::parabolic_lower:
      return "lower";
  }
  return "?";
}

Algebra::Algebra(std::shared_ptr<const FqContext> f, AlgebraOptions opts) : f_(std::move(f)), opts_(std::move(opts)) {
  if (!f_) throw ContextError("algebra without field");
  if (f_->k() > 2) throw ConfigError("fields with k > 2 are not supported end to end");
  if (opts_.cache_dir) std::filesystem::create_directories(*opts_.cache_dir);
}

int Algebra::max_degree() const noexcept {
  int n = 0;
  while (n < Matrix::kMaxDim && matrix_space_size(q(), n + 1) <= opts_.budget) ++n;
  return n;
}

std::optional<std::filesystem::path> Algebra::cache_file(const std::string& key) const {
  if (!opts_.cache_dir) return std::nullopt;
  return *opts_.cache_dir / (sanitize(f_->to_string()) + "__" + sanitize(key) + ".json");
}

const TablePtr& Algebra::table(int n) {
  std::lock_guard lock(mu_);
  if (auto it = tables_.find(n); it != tables_.end()) return it->second;
  const auto file = cache_file("orbits-" + std::to_string(n));
  std::shared_ptr<const OrbitTable> t;
  if (file && std::filesystem::exists(*file)) {
    const Json j = read_json_file(*file);
    if (j.value("version", "") == kCodeVersion) t = std::make_shared<OrbitTable>(orbit_table_from_json(f_, j.at("data"), opts_.budget));
  }
  if (!t) {
    t = std::make_shared<OrbitTable>(enumerate_orbits(f_, n, opts_.budget));
    if (file) write_json_file(*file, Json{{"version", kCodeVersion}, {"data", to_json(*t)}});
  }
  return tables_.emplace(n, std::move(t)).first->second;
}

std::vector<TablePtr> Algebra::tables(const std::vector<int>& degrees) {
  std::vector<TablePtr> ts;
  for (int d : degrees) ts.push_back(table(d));
  return ts;
}

const GroupElements& Algebra::group(int n) {
  std::lock_guard lock(mu_);
  auto& slot = groups_[n];
  if (!slot) slot = std::make_unique<GroupElements>(enumerate_gl_with_inverses(*f_, n, opts_.budget));
  return *slot;
}

const kernels::ConjugateCodes& Algebra::conjugates(int n) {
  std::lock_guard lock(mu_);
  auto& slot = conj_[n];
  if (!slot) slot = std::make_unique<kernels::ConjugateCodes>(kernels::conjugation_sweep(*table(n), group(n), opts_.backend));
  return *slot;
}

const std::vector<InvariantFunction>& Algebra::fourier_basis(int n) {
  std::lock_guard lock(mu_);
  if (auto it = fourier_.find(n); it != fourier_.end()) return it->second;
  return fourier_.emplace(n, fourier_character_basis(table(n), opts_.backend)).first->second;
}

Rational Algebra::unipotent_order(const Composition& c) {
  return from_count(power(static_cast<std::uint64_t>(q()), unipotent_positions(c, BlockKind::parabolic_upper).size()));
}

Rational Algebra::parabolic_order(const Composition& c) {
  Rational r = unipotent_order(c);
  for (int part : c.parts()) r *= from_count(gl_order_formula(q(), part));
  return r;
}

const RationalMatrix& Algebra::memo(const std::string& key, const std::function<RationalMatrix()>& build) {
  std::lock_guard lock(mu_);
  if (auto it = matrices_.find(key); it != matrices_.end()) return it->second;
  const auto file = cache_file(key);
  if (file && std::filesystem::exists(*file)) {
    const Json j = read_json_file(*file);
    if (j.value("version", "") == kCodeVersion && j.value("key", "") == key)
      return matrices_.emplace(key, matrix_from_json(j.at("matrix"))).first->second;
  }
  RationalMatrix m = build();
  if (file) write_json_file(*file, Json{{"version", kCodeVersion}, {"key", key}, {"matrix", to_json(m)}});
  return matrices_.emplace(key, std::move(m)).first->second;
}

const RationalMatrix& Algebra::induction(const Composition& c, BlockKind kind) {
  if (kind == BlockKind::levi) throw ShapeError("induction needs a parabolic, not a Levi witness");
  return memo("ind-" + kind_name(kind) + "-" + c.to_string(), [&] {
    const int n = c.size();
    const OrbitTable& big = *table(n);
    kernels::LeviLayout layout{c, kind, {}};
    for (int part : c.parts()) layout.factors.push_back(table(part).get());
    const auto counts = kernels::induction_counts(big, conjugates(n), layout, opts_.backend);
    std::uint64_t order = power(static_cast<std::uint64_t>(q()), unipotent_positions(c, kind).size());
    for (int part : c.parts()) order *= gl_order_formula(q(), part);
    const std::size_t tuples = layout.tuple_count();
    RationalMatrix m(big.size(), tuples);
    for (std::size_t o = 0; o < big.size(); ++o)
      for (std::size_t t = 0; t < tuples; ++t) {
        const std::uint64_t cnt = counts[o * tuples + t];
        // the incidence set is a union of left P-cosets
        if (cnt % order != 0)
          throw ExactnessError("induction along " + c.to_string() + ": count " + std::to_string(cnt) +
                               " not divisible by |P| = " + std::to_string(order));
        m(o, t) = from_count(cnt / order);
      }
    return m;
  });
}

const RationalMatrix& Algebra::restriction(const Composition& c, BlockKind kind) {
  if (kind == BlockKind::levi) throw ShapeError("restriction needs a parabolic, not a Levi witness");
  return memo("res-" + kind_name(kind) + "-" + c.to_string(), [&] {
    const OrbitTable& big = *table(c.size());
    kernels::LeviLayout layout{c, kind, {}};
    for (int part : c.parts()) layout.factors.push_back(table(part).get());
    const auto counts = kernels::restriction_counts(big, layout, opts_.backend);
    const Rational u = from_count(power(static_cast<std::uint64_t>(q()), unipotent_positions(c, kind).size()));
    const std::size_t tuples = layout.tuple_count();
    RationalMatrix m(tuples, big.size());
    for (std::size_t t = 0; t < tuples; ++t)
      for (std::size_t o = 0; o < big.size(); ++o) {
        m(t, o) = from_count(counts[t * big.size() + o]) / u;
        m(t, o).canonicalize();
      }
    return m;
  });
}

const RationalMatrix& Algebra::induction(const std::vector<int>& parts) {
  return memo("indw-" + join_parts(parts), [&] {
    const auto nz = nonzero(parts);
    return nz.empty() ? RationalMatrix::identity(1) : induction(Composition(nz));
  });
}

const RationalMatrix& Algebra::restriction(const std::vector<int>& parts) {
  return memo("resw-" + join_parts(parts), [&] {
    const auto nz = nonzero(parts);
    return nz.empty() ? RationalMatrix::identity(1) : restriction(Composition(nz));
  });
}

std::string tuple_description(Algebra& alg, const std::vector<int>& degrees, std::size_t tuple) {
  std::vector<std::string> labels(degrees.size());
  for (std::size_t i = degrees.size(); i-- > 0;) {
    const auto& t = *alg.table(degrees[i]);
    const auto& label = t[tuple % t.size()].label;
    labels[i] = label.parts.empty() ? "()" : label.to_string();
    tuple /= t.size();
  }
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? " ; " : "") + labels[i];
  return s + ")";
}

RationalMatrix tensor_permutation(Algebra& alg, const std::vector<int>& degrees, const std::vector<int>& order) {
  if (order.size() != degrees.size()) throw ShapeError("tensor permutation: arity mismatch");
  std::vector<std::size_t> sizes;
  for (int d : degrees) sizes.push_back(alg.dim(d));
  std::size_t total = 1;
  for (auto s : sizes) total *= s;
  RationalMatrix m(total, total);
  std::vector<std::size_t> idx(sizes.size());
  for (std::size_t src = 0; src < total; ++src) {
    std::size_t r = src;
    for (std::size_t i = sizes.size(); i-- > 0;) {
      idx[i] = r % sizes[i];
      r /= sizes[i];
    }
    std::size_t dst = 0;
    for (std::size_t i = 0; i < order.size(); ++i) dst = dst * sizes[order[i]] + idx[order[i]];
    m(dst, src) = 1;
  }
  return m;
}

RationalMatrix kron_all(const std::vector<RationalMatrix>& ms) {
  RationalMatrix r = RationalMatrix::identity(1);
  for (const auto& m : ms) r = kron(r, m);
  return r;
}

TensorFunction hc_restrict(Algebra& alg, const InvariantFunction& f, const Composition& c, BlockKind kind) {
  if (!same_table(f.table(), *alg.table(c.size())))
    throw ShapeError("restriction along " + c.to_string() + " of a degree " + std::to_string(f.degree()) + " function");
  return {alg.tables(c.parts()), apply(alg.restriction(c, kind), f.values(), f.prime())};
}

InvariantFunction hc_induce(Algebra& alg, const TensorFunction& t, const Composition& c, BlockKind kind) {
  if (t.degrees() != c.parts()) throw ShapeError("induction along " + c.to_string() + ": tensor degrees differ");
  for (std::size_t i = 0; i < t.factors().size(); ++i)
    if (!same_table(*t.factors()[i], *alg.table(c.parts()[i]))) throw ContextError("tensor factor over another field");
  return {alg.table(c.size()), apply(alg.induction(c, kind), t.values(), t.prime())};
}

HCReport compare_matrices(Algebra& alg, std::string identity, const RationalMatrix& lhs, const RationalMatrix& rhs,
                          const std::vector<int>& row_degrees, const std::vector<int>& col_degrees) {
  HCReport r;
  r.identity = std::move(identity);
  r.checks = lhs.rows() * lhs.cols();
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.passed = false;
    r.witness = "shape mismatch";
    return r;
  }
  if (auto d = RationalMatrix::first_difference(lhs, rhs)) {
    r.passed = false;
    r.witness = "row " + tuple_description(alg, row_degrees, d->first) + ", column " +
                tuple_description(alg, col_degrees, d->second) + ": " + to_string(lhs(d->first, d->second)) +
                " != " + to_string(rhs(d->first, d->second));
  }
  return r;
}

HCReport verify_adjunction(Algebra& alg, const TensorFunction& t, const InvariantFunction& g, const Composition& c) {
  HCReport r;
  r.identity = "adjunction";
  r.param("q", alg.q()).param("composition", c.to_string());
  const Cyclotomic lhs = inner_product(hc_induce(alg, t, c), g);
  const Cyclotomic rhs = inner_product(t, hc_restrict(alg, g, c));
  r.record(lhs == rhs, "(R t, g) = " + lhs.to_string() + " but (t, *R g) = " + rhs.to_string());
  return r;
}

HCReport verify_adjunction(Algebra& alg, const Composition& c) {
  // (R e_T, e_O) = w_O Ind[O][T] and (e_T, *R e_O) = W_T Res[T][O]
  const auto& ind = alg.induction(c);
  const auto& res = alg.restriction(c);
  const RationalMatrix lhs = RationalMatrix::diagonal(gram_weights(*alg.table(c.size()))) * ind;
  const RationalMatrix rhs = (RationalMatrix::diagonal(gram_weights(alg.tables(c.parts()))) * res).transpose();
  auto r = compare_matrices(alg, "adjunction", lhs, rhs, {c.size()}, c.parts());
  r.param("q", alg.q()).param("composition", c.to_string());
  return r;
}

HCReport verify_transitivity(Algebra& alg, const Composition& coarse, const Composition& fine) {
  if (!coarse.is_refined_by(fine))
    throw ShapeError(fine.to_string() + " does not refine " + coarse.to_string());
  std::vector<RationalMatrix> inds, ress;
  std::size_t k = 0;
  for (int part : coarse.parts()) {
    std::vector<int> sub;
    for (int acc = 0; acc < part; ++k) {
      sub.push_back(fine.parts()[k]);
      acc += fine.parts()[k];
    }
    inds.push_back(alg.induction(Composition(sub)));
    ress.push_back(alg.restriction(Composition(sub)));
  }
  HCReport r;
  r.identity = "transitivity";
  r.param("q", alg.q()).param("coarse", coarse.to_string()).param("fine", fine.to_string());
  r.absorb(compare_matrices(alg, "induction in stages", alg.induction(coarse) * kron_all(inds), alg.induction(fine),
                            {fine.size()}, fine.parts()));
  r.absorb(compare_matrices(alg, "restriction in stages", kron_all(ress) * alg.restriction(coarse),
                            alg.restriction(fine), fine.parts(), {fine.size()}));
  return r;
}

HCReport verify_parabolic_independence(Algebra& alg, const Composition& c) {
  HCReport r;
  r.identity = "parabolic independence";
  r.param("q", alg.q()).param("composition", c.to_string());
  r.absorb(compare_matrices(alg, "induction upper vs lower", alg.induction(c, BlockKind::parabolic_upper),
                            alg.induction(c, BlockKind::parabolic_lower), {c.size()}, c.parts()));
  r.absorb(compare_matrices(alg, "restriction upper vs lower", alg.restriction(c, BlockKind::parabolic_upper),
                            alg.restriction(c, BlockKind::parabolic_lower), c.parts(), {c.size()}));
  return r;
}

std::vector<std::array<int, 4>> mackey_index_set(int n1, int n2, int s, int t) {
  if (n1 < 0 || n2 < 0 || s < 0 || t < 0 || n1 + n2 != s + t) throw ShapeError("Mackey index set needs n1+n2 = s+t");
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a <= std::min(n1, s); ++a) {
    const int b = n1 - a, c = s - a, d = n2 - c;
    if (d < 0 || b + d != t) continue;
    out.push_back({a, b, c, d});
  }
  return out;
}

RationalMatrix mackey_twisted_restriction(Algebra& alg, int a, int b, int c, int d) {
  const int n = a + b + c + d, n1 = a + b, n2 = c + d, s = a + c;
  const std::vector<int> row_deg{a, c, b, d}, col_deg{n1, n2};
  const auto row_tables = alg.tables(row_deg);
  const std::size_t rows = tuple_count(row_tables);
  const std::size_t cols = alg.dim(n1) * alg.dim(n2);
  if (n == 0) return RationalMatrix::identity(1);

  const FqContext& f = alg.field();
  const WeylRep w = weyl_rep(f, a, b, c, d);
  const Matrix w_inv = w.matrix.transpose();
  std::vector<int> preimage(n);
  for (int col = 0; col < n; ++col) preimage[w.image[col]] = col;

  // U' = strictly upper (s, t)-block positions whose w-preimage stays inside
  // the (n1, n2) Levi
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < s; ++i)
    for (int j = s; j < n; ++j)
      if ((preimage[i] < n1) == (preimage[j] < n1)) positions.emplace_back(i, j);

  const auto row_parts = nonzero(row_deg);
  const auto col_parts = nonzero(col_deg);
  const Composition row_comp(row_parts), col_comp(col_parts);
  const BlockWitness levi{col_comp, BlockKind::levi};
  const auto q = static_cast<std::uint64_t>(f.q());
  const std::uint64_t assignments = power(q, positions.size());

  std::vector<std::uint64_t> counts(rows * cols, 0);
  for (std::size_t row = 0; row < rows; ++row) {
    std::vector<Matrix> reps;
    std::size_t rest = row;
    std::vector<std::size_t> idx(4);
    for (int i = 3; i >= 0; --i) {
      idx[i] = rest % row_tables[i]->size();
      rest /= row_tables[i]->size();
    }
    for (int i = 0; i < 4; ++i)
      if (row_deg[i] > 0) reps.push_back((*row_tables[i])[idx[i]].representative);
    const Matrix x = block_embed(reps, row_comp);
    for (std::uint64_t asg = 0; asg < assignments; ++asg) {
      Matrix z = x;
      std::uint64_t r = asg;
      for (const auto& [i, j] : positions) {
        z.set_raw(i, j, static_cast<std::uint8_t>(r % q));
        r /= q;
      }
      const Matrix zw = conjugate(w_inv, w.matrix, z);
      if (!in_shape(zw, levi)) throw Error("twisted restriction left the Levi subalgebra");
      const auto blocks = levi_project(zw, col_comp);
      std::size_t col = 0, bi = 0;
      for (int deg : col_deg) {
        const std::size_t i = deg > 0 ? alg.table(deg)->index_of(blocks[bi++]) : 0;
        col = col * alg.dim(deg) + i;
      }
      ++counts[row * cols + col];
    }
  }
  RationalMatrix m(rows, cols);
  const Rational denom = from_count(assignments);
  for (std::size_t i = 0; i < rows * cols; ++i)
    if (counts[i]) {
      m(i / cols, i % cols) = from_count(counts[i]) / denom;
      m(i / cols, i % cols).canonicalize();
    }
  return m;
}

RationalMatrix mackey_lhs(Algebra& alg, int n1, int n2, int s, int t) {
  return alg.restriction(std::vector<int>{s, t}) * alg.induction(std::vector<int>{n1, n2});
}

RationalMatrix mackey_rhs(Algebra& alg, int n1, int n2, int s, int t) {
  RationalMatrix sum(alg.dim(s) * alg.dim(t), alg.dim(n1) * alg.dim(n2));
  for (const auto& [a, b, c, d] : mackey_index_set(n1, n2, s, t))
    sum += kron(alg.induction(std::vector<int>{a, c}), alg.induction(std::vector<int>{b, d})) *
           mackey_twisted_restriction(alg, a, b, c, d);
  return sum;
}

HCReport verify_mackey(Algebra& alg, int n1, int n2, int s, int t) {
  auto r = compare_matrices(alg, "mackey", mackey_lhs(alg, n1, n2, s, t), mackey_rhs(alg, n1, n2, s, t), {s, t},
                            {n1, n2});
  r.param("q", alg.q()).param("n1", n1).param("n2", n2).param("s", s).param("t", t);
  return r;
}

HCReport verify_mackey(Algebra& alg, int s, int t, const InvariantFunction& r1, const InvariantFunction& r2) {
  const int n1 = r1.degree(), n2 = r2.degree();
  HCReport r;
  r.identity = "mackey";
  r.param("q", alg.q()).param("n1", n1).param("n2", n2).param("s", s).param("t", t);
  const auto v = TensorFunction::outer({r1, r2}).values();
  const auto lhs = apply(mackey_lhs(alg, n1, n2, s, t), v, r1.prime());
  const auto rhs = apply(mackey_rhs(alg, n1, n2, s, t), v, r1.prime());
  for (std::size_t i = 0; i < lhs.size(); ++i)
    r.record(lhs[i] == rhs[i], "at " + tuple_description(alg, {s, t}, i) + ": " + lhs[i].to_string() +
                                   " != " + rhs[i].to_string());
  return r;
}

}  // namespace glhopf
