#include <doctest.h>

#include "glhopf/hc.hpp"
#include "glhopf/io.hpp"
#include "oracles.hpp"

using namespace glhopf;

TEST_CASE("inner product equals the average over the whole matrix space") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto& basis = alg.fourier_basis(n);
    const auto one = InvariantFunction::constant_one(alg.table(n));
    for (std::size_t i = 0; i < basis.size(); i += 2) {
      CHECK(inner_product(basis[i], one) == oracle::inner_product(basis[i], one));
      CHECK(inner_product(basis[i], basis[i]) == oracle::inner_product(basis[i], basis[i]));
    }
  }
}

TEST_CASE("inner product is Hermitian and sesquilinear") {
  Algebra alg(FqContext::make(3));
  const auto& b = alg.fourier_basis(2);
  const auto z = Cyclotomic::zeta_power(3, 1);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      CHECK(inner_product(b[i], b[j]) == inner_product(b[j], b[i]).conj());
      const InvariantFunction sum = b[i] + b[j];
      CHECK(inner_product(sum, b[j]) == inner_product(b[i], b[j]) + inner_product(b[j], b[j]));
    }
  const auto one = InvariantFunction::constant_one(alg.table(2));
  std::vector<Cyclotomic> zv(one.size(), z);
  const InvariantFunction zf(alg.table(2), zv);
  CHECK(inner_product(zf, zf) == inner_product(one, one));
}

TEST_CASE("Fourier characters agree with direct evaluation") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {5, 1}, {2, 3}}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto& t = *alg.table(n);
    const auto& basis = alg.fourier_basis(n);
    REQUIRE(basis.size() == t.size());
    for (std::size_t o = 0; o < t.size(); ++o) CHECK(basis[o].values() == oracle::fourier_character(t, o));
  }
}

TEST_CASE("Fourier characters are orthogonal with norm |O| and form a basis") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 2}}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto& t = *alg.table(n);
    const auto& b = alg.fourier_basis(n);
    // chi_O(0) = |O|, and (chi_O, chi_O') = delta |O| q^{n^2} / |G|
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(b[i].evaluate(Matrix(alg.field(), n)) == Cyclotomic(alg.field().p(), from_count(t[i].size)));
      for (std::size_t j = 0; j < b.size(); ++j) {
        const Rational expected = i == j ? Rational(from_count(t[i].size) * from_count(matrix_space_size(q, n)) /
                                                    from_count(t.group_order()))
                                         : Rational(0);
        CHECK(inner_product(b[i], b[j]) == Cyclotomic(alg.field().p(), expected));
      }
    }
    const auto one = InvariantFunction::constant_one(alg.table(n));
    std::vector<Cyclotomic> c = coords(one, b);
    // 1 is the Fourier character of the zero orbit divided by its size, so it
    // has exactly one nonzero coordinate
    std::size_t nonzero = 0;
    for (const auto& x : c) nonzero += x.is_zero() ? 0 : 1;
    CHECK(nonzero == 1);
  }
}

TEST_CASE("serial and OpenMP Fourier bases coincide") {
  const auto f = FqContext::make(3);
  const auto t = std::make_shared<const OrbitTable>(enumerate_orbits(f, 2));
  CHECK(fourier_character_basis(t, kernels::Backend::serial) == fourier_character_basis(t, kernels::Backend::omp));
}

TEST_CASE("invariant function arithmetic and evaluation") {
  Algebra alg(FqContext::make(2));
  const auto t = alg.table(2);
  const auto one = InvariantFunction::constant_one(t);
  const auto e = InvariantFunction::indicator(t, OrbitLabel::parse("0,1:2"));
  CHECK(e.evaluate(Matrix::parse(alg.field(), "0,1;0,0")) == Cyclotomic(2, 1));
  CHECK(e.evaluate(Matrix::parse(alg.field(), "0,0;1,0")) == Cyclotomic(2, 1));
  CHECK(e.evaluate(Matrix::parse(alg.field(), "1,0;0,0")).is_zero());
  CHECK((one - one).is_zero());
  CHECK(Rational(2) * one == one + one);
  CHECK(-one + one == InvariantFunction::zero(t));
  CHECK(one.is_rational());
  CHECK(one.rational_values() == std::vector<Rational>(t->size(), 1));
  CHECK_THROWS_AS(one + InvariantFunction::constant_one(alg.table(1)), ShapeError);
  Algebra other(FqContext::make(3));
  CHECK_THROWS_AS(one + InvariantFunction::constant_one(other.table(2)), ContextError);
  CHECK_THROWS_AS(InvariantFunction(t, {Cyclotomic(2)}), ShapeError);
}

TEST_CASE("gram weights are |O|/|G| and sum to q^(n^2)/|G|") {
  Algebra alg(FqContext::make(3));
  for (int n = 0; n <= 3; ++n) {
    const auto w = gram_weights(*alg.table(n));
    Rational s = 0;
    for (const auto& x : w) s += x;
    CHECK(s == from_count(matrix_space_size(3, n)) / from_count(gl_order_formula(3, n)));
  }
}

TEST_CASE("coordinates against a degenerate basis are refused") {
  Algebra alg(FqContext::make(2));
  const auto one = InvariantFunction::constant_one(alg.table(1));
  CHECK_THROWS_AS(coords(one, {InvariantFunction::zero(alg.table(1))}), DegeneracyError);
}

TEST_CASE("tensor functions: outer products and flattening") {
  Algebra alg(FqContext::make(3));
  const auto a = alg.fourier_basis(1)[1], b = alg.fourier_basis(2)[3];
  const auto t = TensorFunction::outer({a, b});
  CHECK(t.degrees() == std::vector<int>{1, 2});
  CHECK(t.size() == a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) CHECK(t[i * b.size() + j] == a[i] * b[j]);
  const auto e = TensorFunction::indicator(alg.tables({1, 2}), 5);
  CHECK(e[5] == Cyclotomic(3, 1));
  CHECK(tuple_count(alg.tables({0, 2})) == alg.dim(2));
}

TEST_CASE("JSON round trips for functions, tensors and graded elements") {
  Algebra alg(FqContext::make(3));
  const auto f = alg.fourier_basis(2)[4];
  CHECK(invariant_function_from_json(alg, to_json(f)) == f);
  const auto t = TensorFunction::outer({alg.fourier_basis(1)[2], f});
  CHECK(tensor_function_from_json(alg, to_json(t)) == t);
  GradedElement x;
  x.add(InvariantFunction::constant_one(alg.table(1)));
  x.add(f);
  CHECK(graded_element_from_json(alg, to_json(x, alg.field())) == x);
  CHECK(graded_element_from_json(alg, to_json(f)) == GradedElement(f));
  Json bad = to_json(f);
  bad["values"]["9,9:1"] = "3:[1/1,0/1]";
  CHECK_THROWS_AS(invariant_function_from_json(alg, bad), ParseError);
  Json other = to_json(f);
  other["q"] = "5^1:0,1";
  CHECK_THROWS(invariant_function_from_json(alg, other));
}
