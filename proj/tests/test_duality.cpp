#include <doctest.h>

#include "glhopf/duality.hpp"
#include "glhopf/hopf.hpp"
#include "oracles.hpp"

using namespace glhopf;

namespace {

const std::vector<std::pair<int, int>> kRanges{{2, 4}, {3, 3}};

}  // namespace

TEST_CASE("St_2 is the number of stable lines minus one") {
  for (int q : {2, 3, 4, 5}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto st = steinberg(alg, 2);
    const auto& t = *alg.table(2);
    for (std::size_t i = 0; i < t.size(); ++i)
      CHECK(st[i] == Cyclotomic(alg.field().p(), oracle::steinberg2(t[i].representative)));
    CHECK(steinberg_constituents(alg, 2) == 2);
  }
}

TEST_CASE("St_2 takes the values q, 1, 0, -1 on scalar, split, unipotent and elliptic classes") {
  Algebra alg(FqContext::make(3));
  const auto st = steinberg(alg, 2);
  CHECK(st.value(OrbitLabel::parse("0,1:1,1")) == Cyclotomic(3, 3));
  CHECK(st.value(OrbitLabel::parse("0,1:1|1,1:1")) == Cyclotomic(3, 1));
  CHECK(st.value(OrbitLabel::parse("0,1:2")) == Cyclotomic(3, 0));
  CHECK(st.value(OrbitLabel::parse("1,0,1:1")) == Cyclotomic(3, -1));
}

TEST_CASE("antipode equals the signed duality") {
  for (auto [q, max_n] : kRanges) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto r = verify_antipode_is_duality(alg, max_n);
    CAPTURE(r.witness);
    CHECK(r.passed);
  }
}

TEST_CASE("duality is an involutive isometry") {
  for (auto [q, max_n] : kRanges) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    for (int n = 0; n <= max_n; ++n) CHECK(verify_involutive_isometric(alg, n).passed);
  }
}

TEST_CASE("isometry check notices a non-isometric operator") {
  Algebra alg(FqContext::make(2));
  const auto& d = duality_matrix(alg, 2);
  const auto g = RationalMatrix::diagonal(gram_weights(*alg.table(2)));
  const RationalMatrix twice = Rational(2) * d;
  CHECK_FALSE(twice.transpose() * (g * twice) == g);
}

TEST_CASE("characterization of the duality") {
  for (auto [q, max_n] : kRanges) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto r = verify_characterization(alg, max_n);
    CAPTURE(r.witness);
    CHECK(r.passed);
  }
}

TEST_CASE("Steinberg functions") {
  for (auto [q, max_n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto r = verify_steinberg(alg, max_n);
    CAPTURE(r.witness);
    CHECK(r.passed);
    for (int n = 1; n <= max_n; ++n) CHECK(steinberg_constituents(alg, n) == integer_partitions(n).size());
  }
}

TEST_CASE("degree-2 example") {
  for (int q : {2, 3, 4, 5}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto r = verify_worked_example(alg);
    CHECK(r.checks == 4);
    CHECK(r.passed);
  }
}

TEST_CASE("duality operator metadata and JSON") {
  Algebra alg(FqContext::make(2));
  const auto d = duality_operator(alg, 3);
  CHECK(d.terms == 4);
  CHECK(d.matrix.rows() == 14);
  const Json j = to_json(d);
  CHECK(j.at("n") == 3);
  CHECK(matrix_from_json(j.at("matrix")) == d.matrix);
  CHECK(duality_matrix(alg, 0).is_identity());
  CHECK(duality_matrix(alg, 1).is_identity());
}
