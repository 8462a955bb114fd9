#pragma once

#include <vector>

#include "glhopf/hc.hpp"

namespace glhopf {

/// The character basis of C_n with its squared norms; the normalized member
/// is members[i] / sqrt(norms[i]). Never stored normalized.
struct OmegaBasis {
  int n = 0;
  std::vector<InvariantFunction> members;
  std::vector<Rational> norms;
};

OmegaBasis omega_basis(Algebra& alg, int n);
/// The image of the omega basis under the antipode.
OmegaBasis dual_omega_basis(Algebra& alg, int n);

/// Unnormalized pairings of basis triples:
///   product[(i*d2 + j)*d + k]   = (m(b_i ⊗ b_j), b_k)
///   coproduct[(i*d2 + j)*d + k] = (m*(b_k), b_i ⊗ b_j)
struct StructurePairings {
  int n1 = 0, n2 = 0;
  std::size_t d1 = 0, d2 = 0, d = 0;
  std::vector<Cyclotomic> product, coproduct;
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept { return (i * d2 + j) * d + k; }
};
StructurePairings structure_pairings(Algebra& alg, const OmegaBasis& b1, const OmegaBasis& b2, const OmegaBasis& b);

/// m(chi_i ⊗ chi_j) = sum_k c[index(i,j,k)] chi_k. Throws NotRationalError.
std::vector<Rational> character_structure_constants(Algebra& alg, int n1, int n2);
/// m*(chi_k) = sum_{i,j} c[index(i,j,k)] chi_i ⊗ chi_j.
std::vector<Rational> character_costructure_constants(Algebra& alg, int n1, int n2);
/// Constants in the orthonormal basis, exact as sign * sqrt(rational).
std::vector<SqrtRational> omega_structure_constants(Algebra& alg, int n1, int n2, bool coproduct = false);

/// Gram matrix of the normalized basis is the identity, n <= max_n.
PSHReport verify_orthonormality(Algebra& alg, int max_n);
/// Character-basis constants of m and m* are nonnegative rationals.
PSHReport verify_rational_positivity(Algebra& alg, int max_n);
/// Every m and m* constant in the omega basis has sign >= 0.
PSHReport verify_positivity(Algebra& alg, int max_n);
/// (m(a ⊗ b), c) = (a ⊗ b, m*(c)) on all basis triples.
PSHReport verify_self_adjointness(Algebra& alg, int max_n);

/// (m(f ⊗ g), h) for the normalized constant functions f = g in degree 1 and
/// h in degree 2.
SqrtRational nondescending_witness(Algebra& alg);
/// The witness squares to (q+1)/q, which is not a rational square.
PSHReport verify_nondescending(Algebra& alg);
/// S(omega) is orthogonal with the same norms and the same structure
/// constants, and differs from omega (St_2 has two constituents).
PSHReport verify_second_psh(Algebra& alg, int max_n);

}  // namespace glhopf
