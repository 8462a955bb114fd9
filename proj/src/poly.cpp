#include "glhopf/poly.hpp"

#include <algorithm>

namespace glhopf::poly {

FqPoly add(const FqContext& f, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::uint8_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint8_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = f.add_code(x, y);
  }
  r.trim();
  return r;
}

FqPoly sub(const FqContext& f, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::uint8_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint8_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = f.add_code(x, f.neg_code(y));
  }
  r.trim();
  return r;
}

FqPoly mul(const FqContext& f, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  FqPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = f.add_code(r.c[i + j], f.mul_code(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

void divmod(const FqContext& f, const FqPoly& a, const FqPoly& b, FqPoly& quot, FqPoly& rem) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  rem = a;
  quot.c.assign(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, 0);
  const std::uint8_t inv_lead = f.inv_code(b.lead());
  const int db = b.degree();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const std::uint8_t factor = f.mul_code(rem.lead(), inv_lead);
    quot.c[shift] = factor;
    const std::uint8_t nf = f.neg_code(factor);
    for (int j = 0; j <= db; ++j) rem.c[shift + j] = f.add_code(rem.c[shift + j], f.mul_code(nf, b.c[j]));
    rem.trim();
  }
  quot.trim();
}

FqPoly monic(const FqContext& f, const FqPoly& a) {
  if (a.is_zero()) return a;
  FqPoly r = a;
  const std::uint8_t inv = f.inv_code(a.lead());
  for (auto& x : r.c) x = f.mul_code(x, inv);
  return r;
}

bool divides(const FqContext& f, const FqPoly& d, const FqPoly& a) {
  FqPoly q, r;
  divmod(f, a, d, q, r);
  return r.is_zero();
}

std::vector<FqPoly> monic_irreducibles(const FqContext& f, int max_deg) {
  std::vector<FqPoly> irr;
  for (int d = 1; d <= max_deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= f.q();
    for (long long idx = 0; idx < count; ++idx) {
      FqPoly g;
      g.c.resize(d + 1);
      long long rest = idx;
      for (int i = 0; i < d; ++i) {
        g.c[i] = static_cast<std::uint8_t>(rest % f.q());
        rest /= f.q();
      }
      g.c[d] = 1;
      bool irreducible = true;
      for (const auto& h : irr) {
        if (2 * h.degree() > d) break;
        if (divides(f, h, g)) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) irr.push_back(std::move(g));
    }
  }
  std::sort(irr.begin(), irr.end(), [](const FqPoly& a, const FqPoly& b) { return a.c < b.c; });
  return irr;
}

}  // namespace glhopf::poly
