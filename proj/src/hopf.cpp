#include "glhopf/hopf.hpp"

namespace glhopf {

InvariantFunction multiply(Algebra& alg, const InvariantFunction& a, const InvariantFunction& b) {
  const std::vector<int> parts{a.degree(), b.degree()};
  const auto v = apply(alg.induction(parts), TensorFunction::outer({a, b}).values(), a.prime());
  return {alg.table(a.degree() + b.degree()), v};
}

GradedElement multiply(Algebra& alg, const GradedElement& a, const GradedElement& b) {
  GradedElement out;
  for (const auto& [i, x] : a.components())
    for (const auto& [j, y] : b.components()) out.add(multiply(alg, x, y));
  return out;
}

CoproductExpansion comultiply(Algebra& alg, const InvariantFunction& f) {
  CoproductExpansion e;
  e.n = f.degree();
  for (int k = 0; k <= e.n; ++k) {
    const std::vector<int> parts{k, e.n - k};
    e.splits.emplace_back(alg.tables(parts), apply(alg.restriction(parts), f.values(), f.prime()));
  }
  return e;
}

GradedElement unit(Algebra& alg, const Rational& scalar) {
  return GradedElement(InvariantFunction(alg.table(0), {Cyclotomic(alg.field().p(), scalar)}));
}

Cyclotomic counit(Algebra& alg, const GradedElement& x) {
  auto c = x.component(0);
  return c ? (*c)[0] : Cyclotomic(alg.field().p());
}

RationalMatrix bialgebra_rhs(Algebra& alg, int n1, int n2, int s, int t) {
  RationalMatrix sum(alg.dim(s) * alg.dim(t), alg.dim(n1) * alg.dim(n2));
  for (const auto& [a, b, c, d] : mackey_index_set(n1, n2, s, t)) {
    const RationalMatrix split = kron(alg.restriction(std::vector<int>{a, b}), alg.restriction(std::vector<int>{c, d}));
    const RationalMatrix swap = tensor_permutation(alg, {a, b, c, d}, {0, 2, 1, 3});
    const RationalMatrix join = kron(alg.induction(std::vector<int>{a, c}), alg.induction(std::vector<int>{b, d}));
    sum += join * (swap * split);
  }
  return sum;
}

HCReport verify_bialgebra(Algebra& alg, int n1, int n2) {
  HCReport r;
  r.identity = "bialgebra";
  r.param("q", alg.q()).param("n1", n1).param("n2", n2);
  const int n = n1 + n2;
  for (int s = 0; s <= n; ++s) {
    const RationalMatrix lhs =
        alg.restriction(std::vector<int>{s, n - s}) * alg.induction(std::vector<int>{n1, n2});
    r.absorb(compare_matrices(alg, "split " + std::to_string(s) + "+" + std::to_string(n - s), lhs,
                              bialgebra_rhs(alg, n1, n2, s, n - s), {s, n - s}, {n1, n2}));
  }
  return r;
}

HCReport verify_bialgebra(Algebra& alg, const InvariantFunction& r1, const InvariantFunction& r2) {
  HCReport r;
  r.identity = "bialgebra";
  const int n1 = r1.degree(), n2 = r2.degree(), n = n1 + n2;
  r.param("q", alg.q()).param("n1", n1).param("n2", n2);
  const auto v = TensorFunction::outer({r1, r2}).values();
  const auto product = multiply(alg, r1, r2);
  for (int s = 0; s <= n; ++s) {
    const auto lhs = apply(alg.restriction(std::vector<int>{s, n - s}), product.values(), r1.prime());
    const auto rhs = apply(bialgebra_rhs(alg, n1, n2, s, n - s), v, r1.prime());
    for (std::size_t i = 0; i < lhs.size(); ++i)
      r.record(lhs[i] == rhs[i], "split " + std::to_string(s) + "+" + std::to_string(n - s) + " at " +
                                     tuple_description(alg, {s, n - s}, i));
  }
  return r;
}

std::vector<HCReport> verify_hopf_axioms(Algebra& alg, int max_n) {
  HCReport comm, cocomm, unit_r, counit_r, assoc, coassoc;
  comm.identity = "commutativity";
  cocomm.identity = "cocommutativity";
  unit_r.identity = "unit";
  counit_r.identity = "counit";
  assoc.identity = "associativity";
  coassoc.identity = "coassociativity";
  for (auto* r : {&comm, &cocomm, &unit_r, &counit_r, &assoc, &coassoc}) r->param("q", alg.q()).param("max_n", max_n);

  using P = std::vector<int>;
  for (int n = 1; n <= max_n; ++n) {
    const auto id = RationalMatrix::identity(alg.dim(n));
    unit_r.absorb(compare_matrices(alg, "1 f = f", alg.induction(P{0, n}), id, {n}, {0, n}));
    unit_r.absorb(compare_matrices(alg, "f 1 = f", alg.induction(P{n, 0}), id, {n}, {n, 0}));
    counit_r.absorb(compare_matrices(alg, "(counit x 1) m*", alg.restriction(P{0, n}), id, {0, n}, {n}));
    counit_r.absorb(compare_matrices(alg, "(1 x counit) m*", alg.restriction(P{n, 0}), id, {n, 0}, {n}));
    for (int k = 0; k <= n; ++k) {
      const int l = n - k;
      const RationalMatrix swap = tensor_permutation(alg, {k, l}, {1, 0});
      comm.absorb(compare_matrices(alg, "m_{k,l} = m_{l,k} swap", alg.induction(P{k, l}), alg.induction(P{l, k}) * swap,
                                   {n}, {k, l}));
      cocomm.absorb(compare_matrices(alg, "m*_{l,k} = swap m*_{k,l}", alg.restriction(P{l, k}),
                                     swap * alg.restriction(P{k, l}), {l, k}, {n}));
    }
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        const int c = n - a - b;
        const auto ia = RationalMatrix::identity(alg.dim(a));
        const auto ic = RationalMatrix::identity(alg.dim(c));
        assoc.absorb(compare_matrices(alg, "m(m x 1) = m(1 x m)",
                                      alg.induction(P{a + b, c}) * kron(alg.induction(P{a, b}), ic),
                                      alg.induction(P{a, b + c}) * kron(ia, alg.induction(P{b, c})), {n}, {a, b, c}));
        coassoc.absorb(compare_matrices(alg, "(m* x 1)m* = (1 x m*)m*",
                                        kron(alg.restriction(P{a, b}), ic) * alg.restriction(P{a + b, c}),
                                        kron(ia, alg.restriction(P{b, c})) * alg.restriction(P{a, b + c}), {a, b, c},
                                        {n}));
      }
  }
  return {comm, cocomm, unit_r, counit_r, assoc, coassoc};
}

namespace {

const RationalMatrix& primitive_columns(Algebra& alg, int n) {
  return alg.memo("prim-" + std::to_string(n), [&] {
    const std::size_t dim = alg.dim(n);
    if (n == 0) return RationalMatrix(dim, 0);
    if (n == 1) return RationalMatrix::identity(dim);
    std::vector<RationalMatrix> stack;
    for (int k = 1; k < n; ++k) stack.push_back(alg.restriction(std::vector<int>{k, n - k}));
    return from_columns(kernel(vstack(stack)), dim);
  });
}

}  // namespace

PrimitiveBasis primitive_subspace(Algebra& alg, int n) {
  const auto& cols = primitive_columns(alg, n);
  PrimitiveBasis b;
  b.n = n;
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    b.vectors.push_back(cols.column(j));
    b.functions.push_back(InvariantFunction::from_rationals(alg.table(n), b.vectors.back()));
  }
  return b;
}

bool is_primitive(Algebra& alg, const InvariantFunction& f) {
  const int n = f.degree();
  if (n == 0) return f.is_zero();
  for (int k = 1; k < n; ++k)
    for (const auto& v : apply(alg.restriction(std::vector<int>{k, n - k}), f.values(), f.prime()))
      if (!v.is_zero()) return false;
  return true;
}

const RationalMatrix& antipode_matrix(Algebra& alg, int n) {
  return alg.memo("antipode-" + std::to_string(n), [&] {
    if (n == 0) return RationalMatrix::identity(1);
    RationalMatrix s = Rational(-1) * RationalMatrix::identity(alg.dim(n));
    for (int k = 1; k < n; ++k) {
      const std::vector<int> parts{k, n - k};
      const RationalMatrix inner = kron(antipode_matrix(alg, k), RationalMatrix::identity(alg.dim(n - k)));
      s = s - alg.induction(parts) * (inner * alg.restriction(parts));
    }
    return s;
  });
}

InvariantFunction antipode(Algebra& alg, const InvariantFunction& f) {
  return {f.table_ptr(), apply(antipode_matrix(alg, f.degree()), f.values(), f.prime())};
}

GradedElement antipode(Algebra& alg, const GradedElement& x) {
  GradedElement out;
  for (const auto& [n, f] : x.components()) out.add(antipode(alg, f));
  return out;
}

std::vector<HCReport> verify_antipode_properties(Algebra& alg, int max_n) {
  HCReport prim, invol, mult;
  prim.identity = "antipode negates primitives";
  invol.identity = "antipode is involutive";
  mult.identity = "antipode is multiplicative";
  for (auto* r : {&prim, &invol, &mult}) r->param("q", alg.q()).param("max_n", max_n);
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& p : primitive_subspace(alg, n).functions)
      prim.record(antipode(alg, p) == -p, "degree " + std::to_string(n));
    const auto& s = antipode_matrix(alg, n);
    invol.absorb(compare_matrices(alg, "S S = 1", s * s, RationalMatrix::identity(alg.dim(n)), {n}, {n}));
    for (int k = 1; k < n; ++k) {
      const std::vector<int> parts{k, n - k};
      mult.absorb(compare_matrices(alg, "S m = m (S x S)", s * alg.induction(parts),
                                   alg.induction(parts) * kron(antipode_matrix(alg, k), antipode_matrix(alg, n - k)),
                                   {n}, parts));
    }
  }
  return {prim, invol, mult};
}

SpanningRank precuspidal_spanning_rank(Algebra& alg, int n) {
  SpanningRank out;
  out.dimension = alg.dim(n);
  if (n == 0) {
    out.rank = 1;
    return out;
  }
  RowSpace span(out.dimension);
  for (const auto& lambda : integer_partitions(n)) {
    std::vector<PrimitiveBasis> bases;
    bool empty = false;
    for (int part : lambda) {
      bases.push_back(primitive_subspace(alg, part));
      empty = empty || bases.back().dimension() == 0;
    }
    if (empty) continue;
    const RationalMatrix& ind = alg.induction(Composition(lambda));
    std::vector<std::size_t> pick(lambda.size(), 0);
    while (true) {
      std::vector<Rational> v{Rational(1)};
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        const auto& w = bases[i].vectors[pick[i]];
        std::vector<Rational> next;
        next.reserve(v.size() * w.size());
        for (const auto& x : v)
          for (const auto& y : w) next.push_back(x * y);
        v = std::move(next);
      }
      std::vector<Rational> image(out.dimension);
      for (std::size_t r = 0; r < out.dimension; ++r)
        for (std::size_t c = 0; c < v.size(); ++c)
          if (ind(r, c) != 0 && v[c] != 0) image[r] += ind(r, c) * v[c];
      ++out.products;
      span.insert(std::move(image));
      if (span.full()) {
        out.rank = span.rank();
        return out;
      }
      std::size_t i = lambda.size();
      while (i > 0 && ++pick[i - 1] == bases[i - 1].dimension()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  out.rank = span.rank();
  return out;
}

HCReport verify_hilbert_series(Algebra& alg, int max_n) {
  HCReport r;
  r.identity = "hilbert series";
  r.param("q", alg.q()).param("max_n", max_n);
  std::vector<mpz_class> c(max_n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= max_n; ++k) {
    const std::size_t d = primitive_subspace(alg, k).dimension();
    for (std::size_t rep = 0; rep < d; ++rep)
      for (int i = k; i <= max_n; ++i) c[i] += c[i - k];
  }
  for (int n = 0; n <= max_n; ++n)
    r.record(c[n] == static_cast<unsigned long>(alg.dim(n)),
             "degree " + std::to_string(n) + ": series gives " + c[n].get_str() + ", orbit count " +
                 std::to_string(alg.dim(n)));
  return r;
}

}  // namespace glhopf
