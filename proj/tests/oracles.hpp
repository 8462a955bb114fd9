#pragma once

// Brute-force reference computations used only by the tests. Each one works
// straight from a definition (sums over whole groups or matrix spaces) and
// shares no code with the kernels it checks.

#include <cstdint>
#include <map>
#include <vector>

#include "glhopf/hc.hpp"

namespace oracle {

using namespace glhopf;

// F_q arithmetic on codes by schoolbook polynomial arithmetic mod (p, modulus).
inline std::vector<int> digits(int code, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i, code /= p) d[i] = code % p;
  return d;
}

inline int undigits(const std::vector<int>& d, int p) {
  int code = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

inline int add(const FqContext& f, int a, int b) {
  auto x = digits(a, f.p(), f.k()), y = digits(b, f.p(), f.k());
  for (int i = 0; i < f.k(); ++i) x[i] = (x[i] + y[i]) % f.p();
  return undigits(x, f.p());
}

inline int mul(const FqContext& f, int a, int b) {
  const int p = f.p(), k = f.k();
  const auto x = digits(a, p, k), y = digits(b, p, k);
  std::vector<int> prod(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  const auto& m = f.modulus();
  for (int d = 2 * k - 1; d >= k; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * m[i]) % p + p) % p;
  }
  prod.resize(k);
  return undigits(prod, p);
}

// Number of adjoint orbits of gl_n(F_q): sum over partitions of q^(parts).
inline std::vector<std::uint64_t> orbit_counts(int q, int max_n) {
  std::vector<std::uint64_t> c(max_n + 1, 0);
  for (int n = 0; n <= max_n; ++n)
    for (const auto& lambda : integer_partitions(n)) {
      std::uint64_t v = 1;
      for (std::size_t i = 0; i < lambda.size(); ++i) v *= q;
      c[n] += v;
    }
  return c;
}

// Dimensions p_k with prod_k (1 - t^k)^(-p_k) = sum_n counts[n] t^n.
inline std::vector<long long> primitive_dims(const std::vector<std::uint64_t>& counts) {
  const int max_n = static_cast<int>(counts.size()) - 1;
  std::vector<long long> p(max_n + 1, 0), series(max_n + 1, 0);
  series[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    p[n] = static_cast<long long>(counts[n]) - series[n];
    // multiply series by (1 - t^n)^(-p[n]) one factor at a time
    for (long long r = 0; r < p[n]; ++r)
      for (int i = n; i <= max_n; ++i) series[i] += series[i - n];
  }
  return p;
}

inline std::vector<Matrix> all_matrices(const FqContext& f, int n) {
  std::vector<Matrix> out;
  const std::uint64_t size = matrix_space_size(f.q(), n);
  for (std::uint64_t c = 0; c < size; ++c) out.push_back(Matrix::from_code(f, n, c));
  return out;
}

struct Group {
  std::vector<Matrix> g, g_inv;
};

inline Group general_linear(const FqContext& f, int n) {
  Group G;
  for (const auto& m : all_matrices(f, n))
    if (auto inv = inverse(m)) {
      G.g.push_back(m);
      G.g_inv.push_back(*inv);
    }
  return G;
}

inline bool block_upper(const Matrix& x, const Composition& c) {
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j)
      if (c.block_of(i) > c.block_of(j) && x.raw(i, j) != 0) return false;
  return true;
}

inline Matrix diagonal_block(const Matrix& x, const Composition& c, int b) {
  Matrix m(x.field(), c.parts()[b]);
  for (int i = 0; i < c.parts()[b]; ++i)
    for (int j = 0; j < c.parts()[b]; ++j) m.set_raw(i, j, x.raw(c.offset(b) + i, c.offset(b) + j));
  return m;
}

inline std::size_t tuple_of(const Matrix& x, const Composition& c, const std::vector<TablePtr>& factors) {
  std::size_t t = 0;
  for (int b = 0; b < c.length(); ++b) t = t * factors[b]->size() + factors[b]->index_of(diagonal_block(x, c, b));
  return t;
}

// Ind[O][T] = #{g in G : g x_O g^-1 in p_c with Levi part in T} / |P_c|.
inline RationalMatrix induction(Algebra& alg, const Group& G, const Composition& c) {
  const auto& big = *alg.table(c.size());
  const auto factors = alg.tables(c.parts());
  std::size_t tuples = 1;
  for (const auto& t : factors) tuples *= t->size();
  std::uint64_t parabolic = 0;
  for (const auto& g : G.g) parabolic += block_upper(g, c) ? 1 : 0;
  RationalMatrix m(big.size(), tuples);
  for (std::size_t o = 0; o < big.size(); ++o) {
    const Matrix& x = big[o].representative;
    for (std::size_t i = 0; i < G.g.size(); ++i) {
      const Matrix y = G.g[i] * x * G.g_inv[i];
      if (block_upper(y, c)) m(o, tuple_of(y, c, factors)) += 1;
    }
  }
  return Rational(1, static_cast<unsigned long>(parabolic)) * m;
}

// Res[T][O] = #{u in u_c : x_T + u in O} / |u_c|, x_T block diagonal.
inline RationalMatrix restriction(Algebra& alg, const Composition& c) {
  const auto& big = *alg.table(c.size());
  const auto factors = alg.tables(c.parts());
  const FqContext& f = alg.field();
  const int n = c.size();
  std::vector<std::pair<int, int>> upos;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c.block_of(i) < c.block_of(j)) upos.emplace_back(i, j);
  std::size_t tuples = 1;
  for (const auto& t : factors) tuples *= t->size();
  std::uint64_t usize = 1;
  for (std::size_t i = 0; i < upos.size(); ++i) usize *= f.q();
  RationalMatrix m(tuples, big.size());
  for (std::size_t t = 0; t < tuples; ++t) {
    Matrix base(f, n);
    std::size_t rest = t;
    for (int b = c.length() - 1; b >= 0; --b) {
      const Matrix& rep = (*factors[b])[rest % factors[b]->size()].representative;
      rest /= factors[b]->size();
      for (int i = 0; i < rep.dim(); ++i)
        for (int j = 0; j < rep.dim(); ++j) base.set_raw(c.offset(b) + i, c.offset(b) + j, rep.raw(i, j));
    }
    for (std::uint64_t u = 0; u < usize; ++u) {
      Matrix y = base;
      std::uint64_t r = u;
      for (const auto& [i, j] : upos) {
        y.set_raw(i, j, static_cast<std::uint8_t>(r % f.q()));
        r /= f.q();
      }
      m(t, big.index_of(y)) += 1;
    }
  }
  return Rational(1, static_cast<unsigned long>(usize)) * m;
}

// chi_O(x) = sum_{a in O} zeta_p^{Tr(tr(a x))}.
inline std::vector<Cyclotomic> fourier_character(const OrbitTable& t, std::size_t orbit) {
  const FqContext& f = t.field();
  const int n = t.n();
  std::vector<Cyclotomic> out;
  const auto all = all_matrices(f, n);
  for (std::size_t x = 0; x < t.size(); ++x) {
    const Matrix& rep = t[x].representative;
    std::vector<Rational> powers(f.p(), 0);
    for (const auto& a : all) {
      if (t.index_of(a) != orbit) continue;
      FqElem tr = f.zero();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tr = tr + a.at(i, j) * rep.at(j, i);
      powers[f.trace_to_prime(tr)] += 1;
    }
    out.push_back(Cyclotomic::from_coords(f.p(), powers));
  }
  return out;
}

// (1/|G|) sum over all of gl_n of f(x) conj(g(x)).
inline Cyclotomic inner_product(const InvariantFunction& f, const InvariantFunction& g) {
  const auto& t = f.table();
  Cyclotomic s(f.prime());
  for (const auto& x : all_matrices(t.field(), t.n())) s += f.evaluate(x) * g.evaluate(x).conj();
  std::uint64_t order = general_linear(t.field(), t.n()).g.size();
  return s * Rational(1, static_cast<unsigned long>(order));
}

// St_2(x) = #(x-stable lines in F_q^2) - 1.
inline long steinberg2(const Matrix& x) {
  const FqContext& f = x.field();
  long vectors = 0;
  for (int a = 0; a < f.q(); ++a)
    for (int b = 0; b < f.q(); ++b) {
      if (a == 0 && b == 0) continue;
      const FqElem v0 = f.elem(a), v1 = f.elem(b);
      const FqElem w0 = x.at(0, 0) * v0 + x.at(0, 1) * v1;
      const FqElem w1 = x.at(1, 0) * v0 + x.at(1, 1) * v1;
      // w parallel to v
      if ((w0 * v1 - w1 * v0).is_zero()) ++vectors;
    }
  return vectors / (f.q() - 1) - 1;
}

// S_n = sum over compositions c of n of (-1)^len(c) Ind_c Res_c.
inline RationalMatrix antipode(Algebra& alg, const Group& G, int n) {
  RationalMatrix s(alg.dim(n), alg.dim(n));
  for (const auto& c : Composition::all_of(n)) {
    const RationalMatrix term = induction(alg, G, c) * restriction(alg, c);
    s += c.length() % 2 == 0 ? term : Rational(-1) * term;
  }
  return s;
}

}  // namespace oracle
