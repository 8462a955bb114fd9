#include <doctest.h>

#include <random>
#include <set>

#include "glhopf/field.hpp"
#include "oracles.hpp"

using namespace glhopf;

namespace {

const std::vector<std::pair<int, int>> kFields{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 2}};

}  // namespace

TEST_CASE("F_q tables agree with polynomial arithmetic") {
  for (auto [p, k] : kFields) {
    const auto f = FqContext::make(p, k);
    CAPTURE(f->to_string());
    for (int a = 0; a < f->q(); ++a)
      for (int b = 0; b < f->q(); ++b) {
        CHECK((f->elem(a) + f->elem(b)).code() == oracle::add(*f, a, b));
        CHECK((f->elem(a) * f->elem(b)).code() == oracle::mul(*f, a, b));
      }
  }
}

TEST_CASE("F_q field axioms hold exhaustively") {
  for (auto [p, k] : kFields) {
    const auto f = FqContext::make(p, k);
    CAPTURE(f->to_string());
    const int q = f->q();
    for (int a = 0; a < q; ++a) {
      const FqElem x = f->elem(a);
      CHECK(x + (-x) == f->zero());
      CHECK(x * f->one() == x);
      if (a != 0) CHECK(x * f->inv(x) == f->one());
      CHECK(f->pow(x, q) == x);
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          const FqElem y = f->elem(b), z = f->elem(c);
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
    }
  }
}

TEST_CASE("primitive element generates F_q^*") {
  for (auto [p, k] : kFields) {
    const auto f = FqContext::make(p, k);
    const FqElem g = f->primitive_element();
    std::set<int> seen;
    FqElem x = f->one();
    for (int i = 0; i < f->q() - 1; ++i, x = x * g) seen.insert(x.code());
    CHECK(seen.size() == static_cast<std::size_t>(f->q() - 1));
  }
}

TEST_CASE("absolute trace is additive, surjective and Frobenius invariant") {
  for (auto [p, k] : kFields) {
    const auto f = FqContext::make(p, k);
    std::vector<int> hits(p, 0);
    for (int a = 0; a < f->q(); ++a) {
      const FqElem x = f->elem(a);
      ++hits[f->trace_to_prime(x)];
      CHECK(f->trace_to_prime(f->pow(x, p)) == f->trace_to_prime(x));
      for (int b = 0; b < f->q(); ++b)
        CHECK(f->trace_to_prime(x + f->elem(b)) == (f->trace_to_prime(x) + f->trace_to_prime(f->elem(b))) % p);
    }
    for (int h : hits) CHECK(h == f->q() / p);
  }
}

TEST_CASE("field descriptions round trip") {
  CHECK(FqContext::make(2, 2)->to_string() == "2^2:1,1,1");
  CHECK(FqContext::parse("2^2:1,1,1")->q() == 4);
  CHECK(FqContext::parse("4")->to_string() == "2^2:1,1,1");
  CHECK(FqContext::parse("3^2")->q() == 9);
  CHECK(FqContext::parse("5")->k() == 1);
  for (auto [p, k] : kFields) {
    const auto f = FqContext::make(p, k);
    CHECK(FqContext::parse(f->to_string())->same_field(*f));
  }
  CHECK_THROWS_AS(FqContext::parse("6"), ConfigError);
  CHECK_THROWS_AS(FqContext::parse("2^2:1,0,1"), ConfigError);
  CHECK_THROWS_AS(FqContext::make(4), ConfigError);
  CHECK_THROWS_AS(FqContext::make(2, 9), ConfigError);
}

TEST_CASE("elements of different fields do not mix") {
  const auto f = FqContext::make(3), g = FqContext::make(5);
  CHECK_THROWS_AS(f->add(f->one(), g->one()), ContextError);
  CHECK_THROWS_AS(f->inv(f->zero()), DivisionByZero);
  CHECK_THROWS_AS(f->elem(3), ParseError);
}

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(Rational(2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(is_rational_square(Rational(9, 4)));
  CHECK_FALSE(is_rational_square(Rational(3, 2)));
  CHECK_FALSE(is_rational_square(Rational(-1)));
}

TEST_CASE("cyclotomic arithmetic in Q(zeta_p)") {
  for (int p : {2, 3, 5, 7}) {
    CAPTURE(p);
    Cyclotomic sum(p);
    for (int e = 0; e < p; ++e) sum += Cyclotomic::zeta_power(p, e);
    CHECK(sum.is_zero());
    CHECK(Cyclotomic::zeta_power(p, p) == Cyclotomic(p, 1));
    CHECK(Cyclotomic::zeta_power(p, -1) == Cyclotomic::zeta_power(p, p - 1));
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) CHECK(Cyclotomic::zeta_power(p, a) * Cyclotomic::zeta_power(p, b) ==
                                        Cyclotomic::zeta_power(p, a + b));
    const Cyclotomic z = Cyclotomic::zeta_power(p, 1);
    CHECK(z * z.conj() == Cyclotomic(p, 1));
    CHECK((z + z.conj()).conj() == z + z.conj());
    CHECK(Cyclotomic::parse(z.to_string()) == z);
    const auto x = Cyclotomic(p, Rational(3, 7)) + Rational(-2) * z;
    CHECK(Cyclotomic::parse(x.to_string()) == x);
  }
  CHECK(Cyclotomic::parse("3:[1/2,0/1]").as_rational() == Rational(1, 2));
  CHECK_FALSE(Cyclotomic::zeta_power(3, 1).is_rational());
  CHECK_THROWS_AS(Cyclotomic::zeta_power(3, 1).as_rational(), NotRationalError);
  CHECK_THROWS_AS(Cyclotomic(3) + Cyclotomic(5), ContextError);
  CHECK_THROWS_AS(Cyclotomic::parse("3:1,2"), ParseError);
}

TEST_CASE("Gauss periods: sum of zeta over a nonzero coset vanishes") {
  // psi(a) = zeta^{Tr a}; summing a nontrivial character over F_q gives 0
  for (auto [p, k] : kFields) {
    const auto f = FqContext::make(p, k);
    for (int c = 1; c < f->q(); ++c) {
      Cyclotomic s(p);
      for (int a = 0; a < f->q(); ++a)
        s += Cyclotomic::zeta_power(p, f->trace_to_prime(f->elem(c) * f->elem(a)));
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("SqrtRational multiplies, divides and orders exactly") {
  const auto a = SqrtRational::sqrt(Rational(3, 2));
  CHECK(a.sign() == 1);
  CHECK(a * a == SqrtRational::from_rational(Rational(3, 2)));
  CHECK((a / a) == SqrtRational::from_rational(1));
  CHECK(-a < a);
  CHECK(SqrtRational::sqrt(2) < SqrtRational::from_rational(Rational(3, 2)));
  CHECK_FALSE(a.is_rational());
  CHECK(SqrtRational::sqrt(Rational(4, 9)).is_rational());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const Rational x(d(rng), 1 + std::abs(d(rng))), y(d(rng), 1 + std::abs(d(rng)));
    const auto sx = SqrtRational::from_rational(x), sy = SqrtRational::from_rational(y);
    CHECK((sx * sy) == SqrtRational::from_rational(x * y));
    CHECK(((sx < sy) == (x < y)));
  }
}
