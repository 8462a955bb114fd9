#pragma once

#include <cstdint>
#include <vector>

#include "glhopf/field.hpp"

namespace glhopf {

/// Polynomial over F_q as ascending element codes; the zero polynomial is
/// empty and no other value has a trailing zero.
struct FqPoly {
  std::vector<std::uint8_t> c;

  int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const noexcept { return c.empty(); }
  std::uint8_t lead() const noexcept { return c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend bool operator==(const FqPoly&, const FqPoly&) = default;
};

namespace poly {

FqPoly add(const FqContext& f, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FqContext& f, const FqPoly& a, const FqPoly& b);
FqPoly mul(const FqContext& f, const FqPoly& a, const FqPoly& b);
/// Quotient and remainder; b must be nonzero.
void divmod(const FqContext& f, const FqPoly& a, const FqPoly& b, FqPoly& quot, FqPoly& rem);
FqPoly monic(const FqContext& f, const FqPoly& a);
bool divides(const FqContext& f, const FqPoly& d, const FqPoly& a);

/// Monic irreducible polynomials of degree 1..max_deg over F_q, ordered
/// lexicographically on their ascending coefficient lists.
std::vector<FqPoly> monic_irreducibles(const FqContext& f, int max_deg);

}  // namespace poly
}  // namespace glhopf
