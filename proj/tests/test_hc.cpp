#include <doctest.h>

#include "glhopf/hc.hpp"
#include "oracles.hpp"

using namespace glhopf;

namespace {

const std::vector<std::pair<int, int>> kRanges{{2, 4}, {3, 3}, {4, 2}, {5, 2}};

}  // namespace

TEST_CASE("induction and restriction matrices agree with the definitions") {
  for (auto [q, max_n] : kRanges) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    for (int n = 2; n <= max_n; ++n) {
      const auto G = oracle::general_linear(alg.field(), n);
      for (const auto& c : Composition::all_of(n)) {
        CAPTURE(q);
        CAPTURE(c.to_string());
        CHECK(alg.induction(c) == oracle::induction(alg, G, c));
        CHECK(alg.restriction(c) == oracle::restriction(alg, c));
      }
    }
  }
}

TEST_CASE("serial and OpenMP backends give identical operators") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
    AlgebraOptions s, o;
    s.backend = kernels::Backend::serial;
    o.backend = kernels::Backend::omp;
    Algebra a(FqContext::parse(std::to_string(q)), s), b(FqContext::parse(std::to_string(q)), o);
    for (const auto& c : Composition::all_of(n)) {
      CHECK(a.induction(c) == b.induction(c));
      CHECK(a.restriction(c) == b.restriction(c));
      CHECK(a.induction(c, BlockKind::parabolic_lower) == b.induction(c, BlockKind::parabolic_lower));
    }
  }
}

TEST_CASE("R(1 x 1) counts stable lines") {
  for (int q : {2, 3, 4, 5}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    const auto one = InvariantFunction::constant_one(alg.table(1));
    const auto r = hc_induce(alg, TensorFunction::outer({one, one}), Composition({1, 1}));
    const auto& t = *alg.table(2);
    for (std::size_t i = 0; i < t.size(); ++i)
      CHECK(r[i] == Cyclotomic(alg.field().p(), oracle::steinberg2(t[i].representative) + 1));
  }
}

TEST_CASE("induction of the trivial Levi composition is the identity") {
  Algebra alg(FqContext::make(3));
  for (int n = 1; n <= 3; ++n) {
    CHECK(alg.induction(Composition({n})).is_identity());
    CHECK(alg.restriction(Composition({n})).is_identity());
    CHECK(alg.induction(std::vector<int>{0, n}).is_identity());
    CHECK(alg.restriction(std::vector<int>{n, 0}).is_identity());
  }
}

TEST_CASE("adjunction, transitivity and parabolic independence for every composition") {
  for (auto [q, max_n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {4, 2}}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    for (int n = 2; n <= max_n; ++n) {
      const auto all = Composition::all_of(n);
      for (const auto& c : all) {
        CAPTURE(c.to_string());
        CHECK(verify_adjunction(alg, c).passed);
        CHECK(verify_parabolic_independence(alg, c).passed);
        for (const auto& coarse : all)
          if (coarse.is_refined_by(c)) CHECK(verify_transitivity(alg, coarse, c).passed);
      }
    }
  }
  Algebra alg(FqContext::make(2));
  CHECK_THROWS_AS(verify_transitivity(alg, Composition({1, 2}), Composition({2, 1})), ShapeError);
}

TEST_CASE("adjunction on random tensor and function pairs") {
  Algebra alg(FqContext::make(3));
  const auto& b1 = alg.fourier_basis(1);
  const auto& b2 = alg.fourier_basis(2);
  const auto& b3 = alg.fourier_basis(3);
  for (std::size_t i = 0; i < b1.size(); ++i)
    for (std::size_t j = 0; j < b2.size(); j += 3)
      for (std::size_t k = 0; k < b3.size(); k += 7)
        CHECK(verify_adjunction(alg, TensorFunction::outer({b1[i], b2[j]}), b3[k], Composition({1, 2})).passed);
}

TEST_CASE("Mackey formula on every split, as operators") {
  for (auto [q, max_n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
    Algebra alg(FqContext::parse(std::to_string(q)));
    for (int n = 1; n <= max_n; ++n)
      for (int n1 = 0; n1 <= n; ++n1)
        for (int s = 0; s <= n; ++s) {
          const auto r = verify_mackey(alg, n1, n - n1, s, n - s);
          CAPTURE(r.witness);
          CHECK(r.passed);
        }
  }
}

TEST_CASE("Mackey left side agrees with the oracle composition") {
  Algebra alg(FqContext::make(2));
  const auto G = oracle::general_linear(alg.field(), 3);
  CHECK(mackey_lhs(alg, 1, 2, 2, 1) == oracle::restriction(alg, Composition({2, 1})) *
                                           oracle::induction(alg, G, Composition({1, 2})));
}

TEST_CASE("Mackey index set") {
  using Q = std::array<int, 4>;
  CHECK(mackey_index_set(1, 1, 1, 1) == std::vector<Q>{{0, 1, 1, 0}, {1, 0, 0, 1}});
  CHECK(mackey_index_set(2, 1, 1, 2).size() == 2);
  CHECK(mackey_index_set(2, 2, 2, 2).size() == 3);
  CHECK_THROWS_AS(mackey_index_set(1, 1, 1, 2), ShapeError);
}

TEST_CASE("Mackey formula on function pairs") {
  Algebra alg(FqContext::make(3));
  const auto& b1 = alg.fourier_basis(1);
  const auto& b2 = alg.fourier_basis(2);
  for (std::size_t i = 0; i < b1.size(); ++i)
    for (std::size_t j = 0; j < b2.size(); j += 2) CHECK(verify_mackey(alg, 2, 1, b1[i], b2[j]).passed);
}

TEST_CASE("a wrong right-hand side produces a witness") {
  Algebra alg(FqContext::make(2));
  RationalMatrix bad = mackey_rhs(alg, 1, 1, 1, 1);
  bad(1, 2) += 1;
  const auto r = compare_matrices(alg, "perturbed", mackey_lhs(alg, 1, 1, 1, 1), bad, {1, 1}, {1, 1});
  CHECK_FALSE(r.passed);
  CHECK(r.witness.find(";") != std::string::npos);
}

TEST_CASE("exact parabolic orders") {
  Algebra alg(FqContext::make(3));
  // |P_{1,2}| = |GL_1| |GL_2| q^2
  CHECK(alg.parabolic_order(Composition({1, 2})) == 2 * 48 * 9);
  CHECK(alg.unipotent_order(Composition({1, 1, 1})) == 27);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(Algebra(FqContext::make(2, 3)), ConfigError);
  Algebra alg(FqContext::make(2));
  CHECK_THROWS_AS(alg.table(5), ResourceError);
  CHECK_THROWS(alg.induction(Composition({1, 1}), BlockKind::levi));
  const auto one = InvariantFunction::constant_one(alg.table(2));
  CHECK_THROWS_AS(hc_restrict(alg, one, Composition({1, 2})), ShapeError);
}

TEST_CASE("cached operators survive a restart") {
  const auto dir = std::filesystem::temp_directory_path() / "glhopf-test-cache";
  std::filesystem::remove_all(dir);
  AlgebraOptions opts;
  opts.cache_dir = dir;
  RationalMatrix first;
  {
    Algebra alg(FqContext::make(3), opts);
    first = alg.induction(Composition({1, 2}));
  }
  CHECK(!std::filesystem::is_empty(dir));
  Algebra again(FqContext::make(3), opts);
  CHECK(again.induction(Composition({1, 2})) == first);
  std::filesystem::remove_all(dir);
}
