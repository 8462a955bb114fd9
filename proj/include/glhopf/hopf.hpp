#pragma once

#include <vector>

#include "glhopf/hc.hpp"

namespace glhopf {

/// m*(f) split by bidegree: splits[k] lives in C_k ⊗ C_{n-k}, k = 0..n.
struct CoproductExpansion {
  int n = 0;
  std::vector<TensorFunction> splits;
};

InvariantFunction multiply(Algebra& alg, const InvariantFunction& a, const InvariantFunction& b);
GradedElement multiply(Algebra& alg, const GradedElement& a, const GradedElement& b);
CoproductExpansion comultiply(Algebra& alg, const InvariantFunction& f);
GradedElement unit(Algebra& alg, const Rational& scalar = 1);
/// The degree-0 coefficient.
Cyclotomic counit(Algebra& alg, const GradedElement& x);

/// m*_{s,t} ∘ m_{n1,n2} assembled from the tensor-square product of m*.
RationalMatrix bialgebra_rhs(Algebra& alg, int n1, int n2, int s, int t);
/// Every split (s, t) of n1+n2, on all indicator pairs.
HCReport verify_bialgebra(Algebra& alg, int n1, int n2);
HCReport verify_bialgebra(Algebra& alg, const InvariantFunction& r1, const InvariantFunction& r2);

/// Commutativity, cocommutativity, unit, counit, associativity and
/// coassociativity for all degrees up to max_n.
std::vector<HCReport> verify_hopf_axioms(Algebra& alg, int max_n);

struct PrimitiveBasis {
  int n = 0;
  /// Reduced-echelon basis of the joint kernel of all proper restrictions.
  std::vector<std::vector<Rational>> vectors;
  std::vector<InvariantFunction> functions;
  std::size_t dimension() const noexcept { return vectors.size(); }
};
PrimitiveBasis primitive_subspace(Algebra& alg, int n);
/// True if f is killed by every proper restriction.
bool is_primitive(Algebra& alg, const InvariantFunction& f);

/// S on C_n in the indicator basis, from S_n = -1 - sum_{0<k<n} m_{k,n-k} (S_k ⊗ 1) m*_{k,n-k}.
const RationalMatrix& antipode_matrix(Algebra& alg, int n);
InvariantFunction antipode(Algebra& alg, const InvariantFunction& f);
GradedElement antipode(Algebra& alg, const GradedElement& x);
/// S(x) = -x on primitives, S∘S = 1, and S(ab) = S(a)S(b).
std::vector<HCReport> verify_antipode_properties(Algebra& alg, int max_n);

struct SpanningRank {
  std::size_t rank = 0;
  std::size_t dimension = 0;
  std::size_t products = 0;  // inductions evaluated before reaching the rank
};
/// Rank of the inductions of tensor products of primitive basis vectors
/// along all partitions of n (reverse-lex, stopping at full rank).
SpanningRank precuspidal_spanning_rank(Algebra& alg, int n);

/// prod_k (1 - t^k)^(-dim p_k) = sum_n (#orbits of gl_n) t^n up to max_n.
HCReport verify_hilbert_series(Algebra& alg, int max_n);

}  // namespace glhopf
