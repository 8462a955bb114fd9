#include "glhopf/duality.hpp"

#include "glhopf/hopf.hpp"

namespace glhopf {

const RationalMatrix& duality_matrix(Algebra& alg, int n) {
  return alg.memo("duality-" + std::to_string(n), [&] {
    if (n == 0) return RationalMatrix::identity(1);
    RationalMatrix d(alg.dim(n), alg.dim(n));
    for (const auto& c : Composition::all_of(n)) {
      const RationalMatrix term = alg.induction(c) * alg.restriction(c);
      d += (n - c.length()) % 2 == 0 ? term : Rational(-1) * term;
    }
    return d;
  });
}

DualityOperator duality_operator(Algebra& alg, int n) {
  return {n, alg.field().to_string(), duality_matrix(alg, n), n == 0 ? 1 : std::size_t{1} << (n - 1)};
}

Json to_json(const DualityOperator& d) {
  return Json{{"n", d.n}, {"q", d.field}, {"terms", d.terms}, {"matrix", to_json(d.matrix)}};
}

InvariantFunction dual(Algebra& alg, const InvariantFunction& f) {
  return {f.table_ptr(), apply(duality_matrix(alg, f.degree()), f.values(), f.prime())};
}

InvariantFunction steinberg(Algebra& alg, int n) { return dual(alg, InvariantFunction::constant_one(alg.table(n))); }

std::size_t steinberg_constituents(Algebra& alg, int n) {
  std::size_t support = 0;
  for (const auto& c : coords(steinberg(alg, n), alg.fourier_basis(n))) support += c.is_zero() ? 0 : 1;
  return support;
}

HCReport verify_antipode_is_duality(Algebra& alg, int max_n) {
  HCReport r;
  r.identity = "antipode = (-1)^n duality";
  r.param("q", alg.q()).param("max_n", max_n);
  for (int n = 0; n <= max_n; ++n) {
    const Rational sign = n % 2 == 0 ? 1 : -1;
    r.absorb(compare_matrices(alg, "degree " + std::to_string(n), antipode_matrix(alg, n),
                              sign * duality_matrix(alg, n), {n}, {n}));
  }
  return r;
}

HCReport verify_involutive_isometric(Algebra& alg, int n) {
  HCReport r;
  r.identity = "duality involutive and isometric";
  r.param("q", alg.q()).param("n", n);
  const auto& d = duality_matrix(alg, n);
  r.absorb(compare_matrices(alg, "D^2 = 1", d * d, RationalMatrix::identity(alg.dim(n)), {n}, {n}));
  const auto g = RationalMatrix::diagonal(gram_weights(*alg.table(n)));
  r.absorb(compare_matrices(alg, "D^T G D = G", d.transpose() * (g * d), g, {n}, {n}));
  return r;
}

HCReport verify_characterization(Algebra& alg, int max_n) {
  HCReport r;
  r.identity = "duality characterization";
  r.param("q", alg.q()).param("max_n", max_n);
  for (int n1 = 1; n1 < max_n; ++n1)
    for (int n2 = 1; n1 + n2 <= max_n; ++n2) {
      const std::vector<int> parts{n1, n2};
      const auto& ind = alg.induction(parts);
      r.absorb(compare_matrices(alg, "D R = R (D x D) at " + std::to_string(n1) + "+" + std::to_string(n2),
                                duality_matrix(alg, n1 + n2) * ind,
                                ind * kron(duality_matrix(alg, n1), duality_matrix(alg, n2)), {n1 + n2}, parts));
    }
  for (int n = 1; n <= max_n; ++n) {
    const Rational sign = n % 2 == 1 ? 1 : -1;
    for (const auto& p : primitive_subspace(alg, n).functions)
      r.record(dual(alg, p) == sign * p, "D_n p != (-1)^(n-1) p in degree " + std::to_string(n));
    const auto span = precuspidal_spanning_rank(alg, n);
    r.record(span.rank == span.dimension, "primitive inductions span rank " + std::to_string(span.rank) + " of " +
                                              std::to_string(span.dimension) + " in degree " + std::to_string(n));
  }
  return r;
}

HCReport verify_steinberg(Algebra& alg, int max_n) {
  HCReport r;
  r.identity = "steinberg";
  r.param("q", alg.q()).param("max_n", max_n);
  for (int n = 0; n <= max_n; ++n) {
    const auto one = InvariantFunction::constant_one(alg.table(n));
    const auto st = steinberg(alg, n);
    const auto s1 = antipode(alg, one);
    r.record(st == (n % 2 == 0 ? s1 : -s1), "St_" + std::to_string(n) + " != (-1)^n S(1)");
    r.record(dual(alg, st) == one, "D(St_" + std::to_string(n) + ") != 1");
    const std::size_t support = steinberg_constituents(alg, n);
    const std::size_t nilpotent = nilpotent_orbit_count(*alg.table(n));
    r.record(support == nilpotent && nilpotent == integer_partitions(n).size(),
             "degree " + std::to_string(n) + ": support " + std::to_string(support) + ", nilpotent orbits " +
                 std::to_string(nilpotent));
  }
  return r;
}

HCReport verify_worked_example(Algebra& alg) {
  HCReport r;
  r.identity = "degree-2 example";
  r.param("q", alg.q());
  const auto one1 = InvariantFunction::constant_one(alg.table(1));
  const auto one2 = InvariantFunction::constant_one(alg.table(2));
  const auto st = steinberg(alg, 2);
  r.record(multiply(alg, one1, one1) == st + one2, "R(1 x 1) != St_2 + 1");
  r.record(is_primitive(alg, st - one2), "St_2 - 1 is not primitive");
  r.record(dual(alg, st) == one2, "D_2(St_2) != 1");
  r.record(dual(alg, st - one2) == -(st - one2), "D_2(St_2 - 1) != -(St_2 - 1)");
  return r;
}

}  // namespace glhopf
