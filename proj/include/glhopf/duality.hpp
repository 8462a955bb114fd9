#pragma once

#include "glhopf/hc.hpp"
#include "glhopf/io.hpp"

namespace glhopf {

/// D_n = sum over compositions c of n of (-1)^(n - len c) R_c ∘ *R_c, in the
/// indicator basis. D_0 is the identity on scalars.
struct DualityOperator {
  int n = 0;
  std::string field;
  RationalMatrix matrix;
  std::size_t terms = 0;
};

DualityOperator duality_operator(Algebra& alg, int n);
const RationalMatrix& duality_matrix(Algebra& alg, int n);
Json to_json(const DualityOperator& d);

InvariantFunction dual(Algebra& alg, const InvariantFunction& f);
/// St_n = D_n(1).
InvariantFunction steinberg(Algebra& alg, int n);
/// Number of nonzero coordinates of St_n in the Fourier character basis.
std::size_t steinberg_constituents(Algebra& alg, int n);

/// S restricted to C_n equals (-1)^n D_n for every n <= max_n.
HCReport verify_antipode_is_duality(Algebra& alg, int max_n);
/// D_n^2 = 1 and D_n^T G D_n = G for the invariant Gram matrix G.
HCReport verify_involutive_isometric(Algebra& alg, int n);
/// D commutes with induction, acts as (-1)^(n-1) on primitives, and the
/// primitive inductions span every C_n, for n <= max_n.
HCReport verify_characterization(Algebra& alg, int max_n);
/// St_n = (-1)^n S(1), D_n(St_n) = 1 and the support of St_n in the
/// character basis has one element per nilpotent orbit, for n <= max_n.
HCReport verify_steinberg(Algebra& alg, int max_n);
/// The degree-2 example: R(1 ⊠ 1) = St_2 + 1, St_2 - 1 primitive,
/// D_2(St_2) = 1 and D_2(St_2 - 1) = -(St_2 - 1).
HCReport verify_worked_example(Algebra& alg);

}  // namespace glhopf
