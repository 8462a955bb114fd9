#include <doctest.h>

#include <random>

#include "glhopf/glmat.hpp"
#include "oracles.hpp"

using namespace glhopf;

TEST_CASE("matrix codes round trip, (0,0) most significant") {
  const auto f = FqContext::make(3);
  for (std::uint64_t c = 0; c < matrix_space_size(3, 2); ++c) CHECK(Matrix::from_code(*f, 2, c).code() == c);
  const Matrix m = Matrix::from_code(*f, 2, 1 * 27);
  CHECK(m.raw(0, 0) == 1);
  CHECK(m.raw(0, 1) == 0);
  CHECK(matrix_space_size(2, 8) == UINT64_MAX);
}

TEST_CASE("matrix serialization") {
  const auto f = FqContext::make(2, 2);
  const Matrix m = Matrix::parse(*f, "1,2;3,0");
  CHECK(m.to_string() == "1,2;3,0");
  CHECK(m.raw(1, 0) == 3);
  CHECK(Matrix::parse(*f, m.to_string()) == m);
  CHECK_THROWS_AS(Matrix::parse(*f, "1,2;3"), ParseError);
  CHECK_THROWS_AS(Matrix::parse(*f, "1,4;3,0"), ParseError);
}

TEST_CASE("determinant is multiplicative and detects invertibility") {
  for (int q : {2, 3, 4}) {
    const auto f = FqContext::parse(std::to_string(q));
    std::mt19937_64 rng(q);
    const std::uint64_t size = matrix_space_size(q, 3);
    for (int i = 0; i < 300; ++i) {
      const Matrix a = Matrix::from_code(*f, 3, rng() % size), b = Matrix::from_code(*f, 3, rng() % size);
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
      const auto inv = inverse(a);
      CHECK(inv.has_value() == !determinant(a).is_zero());
      if (inv) {
        CHECK(a * *inv == Matrix::identity(*f, 3));
        CHECK(conjugate(a, b) == a * b * *inv);
      }
    }
    CHECK_THROWS_AS(conjugate(Matrix(*f, 3), Matrix(*f, 3)), SingularError);
  }
}

TEST_CASE("|GL_n(F_q)| by enumeration matches the product formula") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3},
                                                      {4, 2}, {5, 2}}) {
    const auto f = FqContext::parse(std::to_string(q));
    CAPTURE(q);
    CAPTURE(n);
    CHECK(enumerate_gl_order(*f, n) == gl_order_formula(q, n));
    const auto G = enumerate_gl_with_inverses(*f, n);
    CHECK(G.elements.size() == gl_order_formula(q, n));
    for (std::size_t i = 0; i < G.elements.size(); i += 97) CHECK(G.elements[i] * G.inverses[i] == Matrix::identity(*f, n));
  }
  CHECK(gl_order_formula(2, 3) == 168);
  CHECK(gl_order_formula(3, 2) == 48);
  const auto f = FqContext::make(3);
  CHECK_THROWS_AS(enumerate_gl_order(*f, 4), ResourceError);
}

TEST_CASE("compositions") {
  CHECK(Composition::parse("1+2").parts() == std::vector<int>{1, 2});
  CHECK(Composition::parse("1+2").to_string() == "1+2");
  CHECK_THROWS_AS(Composition::parse("1+x"), ParseError);
  CHECK_THROWS_AS(Composition::parse("1+0"), ShapeError);
  for (int n = 1; n <= 6; ++n) {
    const auto all = Composition::all_of(n);
    CHECK(all.size() == std::size_t{1} << (n - 1));
    for (const auto& c : all) {
      CHECK(c.size() == n);
      CHECK(Composition({n}).is_refined_by(c));
      CHECK(c.is_refined_by(Composition(std::vector<int>(n, 1))));
    }
  }
  CHECK(Composition({3, 1}).is_refined_by(Composition({1, 2, 1})));
  CHECK_FALSE(Composition({1, 3}).is_refined_by(Composition({2, 2})));
  const Composition c({2, 1, 3});
  CHECK(c.offset(2) == 3);
  CHECK(c.block_of(4) == 2);
}

TEST_CASE("Levi projection and block embedding are inverse on block diagonals") {
  const auto f = FqContext::make(3);
  std::mt19937_64 rng(11);
  const Composition c({1, 2, 1});
  for (int i = 0; i < 100; ++i) {
    const Matrix x = Matrix::from_code(*f, 4, rng() % matrix_space_size(3, 4));
    const auto blocks = levi_project(x, c);
    const Matrix y = block_embed(blocks, c);
    CHECK(levi_project(y, c) == blocks);
    CHECK(in_shape(y, {c, BlockKind::levi}));
    CHECK(in_shape(x, {c, BlockKind::parabolic_upper}) == oracle::block_upper(x, c));
    CHECK(in_shape(x, {c, BlockKind::parabolic_lower}) == oracle::block_upper(x.transpose(), c));
  }
  CHECK(unipotent_positions(c, BlockKind::parabolic_upper).size() == 5);
  CHECK(unipotent_positions(c, BlockKind::levi).empty());
  CHECK_THROWS_AS(levi_project(Matrix(*f, 3), c), ShapeError);
}

TEST_CASE("Weyl representative permutes blocks (a,b,c,d) to (a,c,b,d)") {
  const auto f = FqContext::make(2);
  for (auto [a, b, c, d] : std::vector<std::array<int, 4>>{{1, 1, 1, 1}, {0, 2, 1, 0}, {2, 0, 0, 1}, {1, 2, 0, 1}}) {
    const auto w = weyl_rep(*f, a, b, c, d);
    const int n = a + b + c + d;
    CHECK(determinant(w.matrix) == f->one());
    for (int j = 0; j < n; ++j) CHECK(w.matrix.raw(w.image[j], j) == 1);
    // the b block lands right after the c block
    for (int j = 0; j < b; ++j) CHECK(w.image[a + j] == a + c + j);
  }
}

TEST_CASE("commutant count equals the centralizer by brute force") {
  const auto f = FqContext::make(2);
  const auto G = oracle::general_linear(*f, 3);
  for (std::uint64_t code : {0ull, 1ull, 84ull, 273ull, 300ull, 511ull}) {
    const Matrix x = Matrix::from_code(*f, 3, code);
    std::uint64_t brute = 0;
    for (const auto& g : G.g) brute += g * x == x * g ? 1 : 0;
    CHECK(centralizer_order_via_commutant(x) == brute);
  }
}
