#include <doctest.h>

#include "glhopf/hopf.hpp"
#include "oracles.hpp"

using namespace glhopf;

namespace {

const std::vector<std::pair<int, int>> kRanges{{2, 4}, {3, 3}};

void check_all(const std::vector<HCReport>& rs) {
  for (const auto& r : rs) {
    CAPTURE(r.identity);
    CAPTURE(r.witness);
    CHECK(r.passed);
    CHECK(r.checks > 0);
  }
}

}  // namespace

TEST_CASE("bialgebra identity on all indicator pairs") {
  for (auto [q, max_n] : kRanges) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    for (int n1 = 0; n1 <= max_n; ++n1)
      for (int n2 = 0; n1 + n2 <= max_n; ++n2) check_all({verify_bialgebra(alg, n1, n2)});
  }
}

TEST_CASE("Hopf axioms") {
  for (auto [q, max_n] : kRanges) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto rs = verify_hopf_axioms(alg, max_n);
    CHECK(rs.size() == 6);
    check_all(rs);
  }
}

TEST_CASE("multiplication is graded, unital and commutative on samples") {
  Algebra alg(FqContext::make(3));
  const auto a = alg.fourier_basis(1)[1], b = alg.fourier_basis(2)[5];
  const auto ab = multiply(alg, a, b);
  CHECK(ab.degree() == 3);
  CHECK(ab == multiply(alg, b, a));
  const auto u = unit(alg);
  CHECK(multiply(alg, u, GradedElement(a)) == GradedElement(a));
  CHECK(counit(alg, u) == Cyclotomic(3, 1));
  CHECK(counit(alg, GradedElement(a)).is_zero());
  const auto co = comultiply(alg, ab);
  CHECK(co.splits.size() == 4);
  CHECK(co.splits[0].degrees() == std::vector<int>{0, 3});
}

TEST_CASE("primitive dimensions follow from the orbit counts") {
  for (auto [q, max_n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {4, 2}, {5, 2}}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto dims = oracle::primitive_dims(oracle::orbit_counts(q, max_n));
    for (int n = 1; n <= max_n; ++n) {
      const auto prim = primitive_subspace(alg, n);
      CHECK(static_cast<long long>(prim.dimension()) == dims[n]);
      for (const auto& p : prim.functions) CHECK(is_primitive(alg, p));
    }
  }
  CHECK(oracle::primitive_dims(oracle::orbit_counts(2, 4)) == std::vector<long long>{0, 2, 3, 4, 6});
  CHECK(oracle::primitive_dims(oracle::orbit_counts(3, 3)) == std::vector<long long>{0, 3, 6, 11});
}

TEST_CASE("a non-primitive is detected") {
  Algebra alg(FqContext::make(2));
  CHECK_FALSE(is_primitive(alg, InvariantFunction::constant_one(alg.table(2))));
  CHECK(is_primitive(alg, InvariantFunction::constant_one(alg.table(1))));
}

TEST_CASE("antipode recursion matches the alternating sum over compositions") {
  for (auto [q, max_n] : kRanges) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    for (int n = 1; n <= max_n; ++n) {
      const auto G = oracle::general_linear(alg.field(), n);
      CAPTURE(q);
      CAPTURE(n);
      CHECK(antipode_matrix(alg, n) == oracle::antipode(alg, G, n));
    }
  }
}

TEST_CASE("antipode properties") {
  for (auto [q, max_n] : kRanges) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto rs = verify_antipode_properties(alg, max_n);
    CHECK(rs.size() == 3);
    check_all(rs);
  }
}

TEST_CASE("antipode convolution identity m (S x 1) m* = u e") {
  Algebra alg(FqContext::make(2));
  for (int n = 1; n <= 3; ++n) {
    RationalMatrix sum(alg.dim(n), alg.dim(n));
    for (int k = 0; k <= n; ++k) {
      const std::vector<int> parts{k, n - k};
      sum += alg.induction(parts) * kron(antipode_matrix(alg, k), RationalMatrix::identity(alg.dim(n - k))) *
             alg.restriction(parts);
    }
    CHECK(sum.is_zero());
  }
}

TEST_CASE("graded antipode acts componentwise") {
  Algebra alg(FqContext::make(3));
  GradedElement x;
  x.add(InvariantFunction::constant_one(alg.table(1)));
  x.add(alg.fourier_basis(2)[3]);
  const auto y = antipode(alg, x);
  CHECK(*y.component(1) == -InvariantFunction::constant_one(alg.table(1)));
  CHECK(*y.component(2) == antipode(alg, alg.fourier_basis(2)[3]));
  CHECK(antipode(alg, y) == x);
}

TEST_CASE("primitive inductions span and the Hilbert series holds") {
  for (auto [q, max_n] : kRanges) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    for (int n = 1; n <= max_n; ++n) {
      const auto s = precuspidal_spanning_rank(alg, n);
      CHECK(s.rank == alg.dim(n));
      CHECK(s.dimension == alg.dim(n));
    }
    check_all({verify_hilbert_series(alg, max_n)});
  }
}
