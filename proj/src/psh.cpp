#include "glhopf/psh.hpp"

#include "glhopf/duality.hpp"
#include "glhopf/hopf.hpp"

namespace glhopf {

namespace {

std::string triple(int n1, int n2, std::size_t i, std::size_t j, std::size_t k) {
  return "degrees " + std::to_string(n1) + "+" + std::to_string(n2) + ", basis (" + std::to_string(i) + "," +
         std::to_string(j) + ";" + std::to_string(k) + ")";
}

int sign_of(const Rational& r) { return sgn(r); }

SqrtRational normalized(const Rational& r, const Rational& norms) { return {sign_of(r), r * r / norms}; }

}  // namespace

OmegaBasis omega_basis(Algebra& alg, int n) {
  OmegaBasis b;
  b.n = n;
  b.members = alg.fourier_basis(n);
  for (const auto& m : b.members) b.norms.push_back(rational_inner_product(m, m));
  return b;
}

OmegaBasis dual_omega_basis(Algebra& alg, int n) {
  OmegaBasis b = omega_basis(alg, n);
  for (auto& m : b.members) m = antipode(alg, m);
  return b;
}

StructurePairings structure_pairings(Algebra& alg, const OmegaBasis& b1, const OmegaBasis& b2, const OmegaBasis& b) {
  StructurePairings s;
  s.n1 = b1.n;
  s.n2 = b2.n;
  s.d1 = b1.members.size();
  s.d2 = b2.members.size();
  s.d = b.members.size();
  const int p = alg.field().p();
  const std::vector<int> parts{s.n1, s.n2};
  const auto& ind = alg.induction(parts);
  const auto& res = alg.restriction(parts);
  s.product.assign(s.d1 * s.d2 * s.d, Cyclotomic(p));
  s.coproduct.assign(s.d1 * s.d2 * s.d, Cyclotomic(p));

  std::vector<TensorFunction> pairs;
  pairs.reserve(s.d1 * s.d2);
  for (std::size_t i = 0; i < s.d1; ++i)
    for (std::size_t j = 0; j < s.d2; ++j) pairs.push_back(TensorFunction::outer({b1.members[i], b2.members[j]}));

  const auto& big = alg.table(s.n1 + s.n2);
  for (std::size_t ij = 0; ij < pairs.size(); ++ij) {
    const InvariantFunction prod(big, apply(ind, pairs[ij].values(), p));
    for (std::size_t k = 0; k < s.d; ++k) s.product[ij * s.d + k] = inner_product(prod, b.members[k]);
  }
  for (std::size_t k = 0; k < s.d; ++k) {
    const TensorFunction co(pairs.front().factors(), apply(res, b.members[k].values(), p));
    for (std::size_t ij = 0; ij < pairs.size(); ++ij) s.coproduct[ij * s.d + k] = inner_product(co, pairs[ij]);
  }
  return s;
}

std::vector<Rational> character_structure_constants(Algebra& alg, int n1, int n2) {
  const auto b = omega_basis(alg, n1 + n2);
  const auto s = structure_pairings(alg, omega_basis(alg, n1), omega_basis(alg, n2), b);
  std::vector<Rational> c(s.product.size());
  for (std::size_t x = 0; x < c.size(); ++x) c[x] = s.product[x].as_rational() / b.norms[x % s.d];
  return c;
}

std::vector<Rational> character_costructure_constants(Algebra& alg, int n1, int n2) {
  const auto b1 = omega_basis(alg, n1), b2 = omega_basis(alg, n2);
  const auto s = structure_pairings(alg, b1, b2, omega_basis(alg, n1 + n2));
  std::vector<Rational> c(s.coproduct.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    const std::size_t ij = x / s.d;
    c[x] = s.coproduct[x].as_rational() / (b1.norms[ij / s.d2] * b2.norms[ij % s.d2]);
  }
  return c;
}

std::vector<SqrtRational> omega_structure_constants(Algebra& alg, int n1, int n2, bool coproduct) {
  const auto b1 = omega_basis(alg, n1), b2 = omega_basis(alg, n2), b = omega_basis(alg, n1 + n2);
  const auto s = structure_pairings(alg, b1, b2, b);
  const auto& raw = coproduct ? s.coproduct : s.product;
  std::vector<SqrtRational> out(raw.size());
  for (std::size_t x = 0; x < raw.size(); ++x) {
    const std::size_t ij = x / s.d;
    out[x] = normalized(raw[x].as_rational(), b1.norms[ij / s.d2] * b2.norms[ij % s.d2] * b.norms[x % s.d]);
  }
  return out;
}

PSHReport verify_orthonormality(Algebra& alg, int max_n) {
  PSHReport r{"orthonormality", 0, max_n};
  for (int n = 0; n <= max_n; ++n) {
    const auto b = omega_basis(alg, n);
    for (std::size_t i = 0; i < b.members.size(); ++i)
      for (std::size_t j = 0; j < b.members.size(); ++j) {
        const Cyclotomic g = inner_product(b.members[i], b.members[j]);
        const bool ok = g.is_rational() &&
                        normalized(g.as_rational(), b.norms[i] * b.norms[j]) == SqrtRational::from_rational(i == j);
        r.record(ok, "degree " + std::to_string(n) + ", pair (" + std::to_string(i) + "," + std::to_string(j) +
                         "): " + g.to_string());
      }
  }
  return r;
}

namespace {

// Runs `check` over every bidegree n1 + n2 <= max_n with both bases taken
// from `basis`.
template <typename Basis, typename Check>
void for_each_bidegree(Algebra& alg, int max_n, Basis&& basis, Check&& check) {
  for (int n = 0; n <= max_n; ++n)
    for (int n1 = 0; n1 <= n; ++n1) {
      const auto b1 = basis(alg, n1), b2 = basis(alg, n - n1), b = basis(alg, n);
      check(b1, b2, b, structure_pairings(alg, b1, b2, b));
    }
}

}  // namespace

PSHReport verify_rational_positivity(Algebra& alg, int max_n) {
  PSHReport r{"character constants in Q>=0", 0, max_n};
  for_each_bidegree(alg, max_n, omega_basis, [&](const OmegaBasis& b1, const OmegaBasis& b2, const OmegaBasis&,
                                                 const StructurePairings& s) {
    for (std::size_t i = 0; i < s.d1; ++i)
      for (std::size_t j = 0; j < s.d2; ++j)
        for (std::size_t k = 0; k < s.d; ++k) {
          const auto& m = s.product[s.index(i, j, k)];
          const auto& c = s.coproduct[s.index(i, j, k)];
          r.record(m.is_rational() && m.as_rational() >= 0, "m " + triple(b1.n, b2.n, i, j, k) + ": " + m.to_string());
          r.record(c.is_rational() && c.as_rational() >= 0, "m* " + triple(b1.n, b2.n, i, j, k) + ": " + c.to_string());
        }
  });
  return r;
}

PSHReport verify_positivity(Algebra& alg, int max_n) {
  PSHReport r{"positivity", 0, max_n};
  for_each_bidegree(alg, max_n, omega_basis, [&](const OmegaBasis& b1, const OmegaBasis& b2, const OmegaBasis& b,
                                                 const StructurePairings& s) {
    for (std::size_t i = 0; i < s.d1; ++i)
      for (std::size_t j = 0; j < s.d2; ++j)
        for (std::size_t k = 0; k < s.d; ++k) {
          const Rational norms = b1.norms[i] * b2.norms[j] * b.norms[k];
          for (const auto* raw : {&s.product[s.index(i, j, k)], &s.coproduct[s.index(i, j, k)]}) {
            if (!raw->is_rational()) {
              r.record(false, triple(b1.n, b2.n, i, j, k) + " is irrational: " + raw->to_string());
              continue;
            }
            const SqrtRational v = normalized(raw->as_rational(), norms);
            r.record(v.sign() >= 0, triple(b1.n, b2.n, i, j, k) + ": " + v.to_string() + " is negative");
          }
        }
  });
  return r;
}

PSHReport verify_self_adjointness(Algebra& alg, int max_n) {
  PSHReport r{"self-adjointness", 0, max_n};
  for_each_bidegree(alg, max_n, omega_basis, [&](const OmegaBasis& b1, const OmegaBasis& b2, const OmegaBasis&,
                                                 const StructurePairings& s) {
    for (std::size_t x = 0; x < s.product.size(); ++x)
      r.record(s.product[x] == s.coproduct[x],
               triple(b1.n, b2.n, x / s.d / s.d2, x / s.d % s.d2, x % s.d) + ": " + s.product[x].to_string() +
                   " != " + s.coproduct[x].to_string());
  });
  return r;
}

SqrtRational nondescending_witness(Algebra& alg) {
  const auto one1 = InvariantFunction::constant_one(alg.table(1));
  const auto one2 = InvariantFunction::constant_one(alg.table(2));
  const Rational n1 = rational_inner_product(one1, one1);
  const Rational n2 = rational_inner_product(one2, one2);
  const Rational raw = rational_inner_product(multiply(alg, one1, one1), one2);
  return normalized(raw, n1 * n1 * n2);
}

PSHReport verify_nondescending(Algebra& alg) {
  PSHReport r{"non-descending", 1, 2};
  const SqrtRational v = nondescending_witness(alg);
  r.value = v;
  const Rational expected = Rational(alg.q() + 1, alg.q());
  r.record(v.sign() > 0 && v.square() == expected, "value^2 = " + to_string(v.square()) + ", expected " +
                                                       to_string(expected));
  r.record(!is_rational_square(v.square()), to_string(v.square()) + " is a rational square");
  return r;
}

PSHReport verify_second_psh(Algebra& alg, int max_n) {
  PSHReport r{"second PSH basis", 0, max_n};
  for (int n = 0; n <= max_n; ++n) {
    const auto b = omega_basis(alg, n);
    const auto sb = dual_omega_basis(alg, n);
    for (std::size_t i = 0; i < sb.members.size(); ++i) {
      for (std::size_t j = 0; j < sb.members.size(); ++j) {
        const Cyclotomic g = inner_product(sb.members[i], sb.members[j]);
        r.record(g == Cyclotomic(alg.field().p(), i == j ? b.norms[i] : Rational(0)),
                 "degree " + std::to_string(n) + ": (S b_" + std::to_string(i) + ", S b_" + std::to_string(j) +
                     ") = " + g.to_string());
      }
      if (n == 1) r.record(sb.members[i] == -b.members[i], "degree 1: S b != -b");
    }
  }
  for (int n = 0; n <= max_n; ++n)
    for (int n1 = 0; n1 <= n; ++n1) {
      const auto s = structure_pairings(alg, omega_basis(alg, n1), omega_basis(alg, n - n1), omega_basis(alg, n));
      const auto t = structure_pairings(alg, dual_omega_basis(alg, n1), dual_omega_basis(alg, n - n1),
                                        dual_omega_basis(alg, n));
      for (std::size_t x = 0; x < s.product.size(); ++x) {
        const std::string where = triple(n1, n - n1, x / s.d / s.d2, x / s.d % s.d2, x % s.d);
        r.record(s.product[x] == t.product[x], "m " + where + " differs on S(omega)");
        r.record(s.coproduct[x] == t.coproduct[x], "m* " + where + " differs on S(omega)");
      }
    }
  if (max_n >= 2) {
    const std::size_t support = steinberg_constituents(alg, 2);
    r.record(support >= 2, "St_2 has " + std::to_string(support) + " constituents, so S(omega) might equal omega");
  }
  return r;
}

}  // namespace glhopf
