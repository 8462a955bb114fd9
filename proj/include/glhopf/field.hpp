#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "glhopf/error.hpp"

namespace glhopf {

// Arbitrary precision rational, always canonicalized.
using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);
bool is_rational_square(const Rational& r);
inline Rational from_count(std::uint64_t v) { return Rational(static_cast<unsigned long>(v)); }

class FqContext;

/// An element of F_q stored as its code sum_i c_i p^i in the polynomial basis
/// 1, t, ..., t^{k-1} of F_p[t]/(modulus).
class FqElem {
 public:
  FqElem() = default;

  const FqContext* context() const noexcept { return ctx_; }
  int code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  std::vector<int> coeffs() const;

  friend FqElem operator+(FqElem a, FqElem b);
  friend FqElem operator-(FqElem a, FqElem b);
  friend FqElem operator*(FqElem a, FqElem b);
  friend FqElem operator-(FqElem a);
  friend bool operator==(FqElem a, FqElem b) noexcept {
    return a.ctx_ == b.ctx_ && a.code_ == b.code_;
  }

 private:
  friend class FqContext;
  FqElem(const FqContext* ctx, std::uint8_t code) : ctx_(ctx), code_(code) {}

  const FqContext* ctx_ = nullptr;
  std::uint8_t code_ = 0;
};

/// The finite field F_q, q = p^k, with full addition/multiplication tables.
///
/// Elements are small codes (q <= 256), so the hot loops in matrix code use
/// the raw `*_code` accessors directly instead of going through FqElem.
class FqContext {
 public:
  static constexpr int kMaxOrder = 256;

  /// `modulus` is the ascending coefficient list of a monic irreducible
  /// polynomial of degree k over F_p. Irreducibility is checked for k <= 4.
  FqContext(int p, int k, std::vector<int> modulus);

  /// F_{p^k} with the lexicographically first monic irreducible modulus.
  static std::shared_ptr<const FqContext> make(int p, int k = 1);
  /// Accepts "q", "p^k" or "p^k:c0,c1,...,1".
  static std::shared_ptr<const FqContext> parse(std::string_view text);

  int p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  int q() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  std::string to_string() const;
  bool same_field(const FqContext& other) const noexcept;

  FqElem zero() const { return {this, 0}; }
  FqElem one() const { return {this, 1}; }
  FqElem elem(int code) const;
  FqElem from_coeffs(std::span<const int> coeffs) const;
  /// Reduces an integer into the prime field.
  FqElem from_int(long long v) const;
  FqElem parse_elem(std::string_view text) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, long long e) const;
  /// Absolute trace F_q -> F_p, sum of a^{p^i} for i < k.
  int trace_to_prime(FqElem a) const;
  /// A generator of the multiplicative group.
  FqElem primitive_element() const;

  std::uint8_t add_code(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint8_t mul_code(std::uint8_t a, std::uint8_t b) const noexcept { return mul_[a * q_ + b]; }
  std::uint8_t neg_code(std::uint8_t a) const noexcept { return neg_[a]; }
  std::uint8_t inv_code(std::uint8_t a) const noexcept { return inv_[a]; }
  std::uint8_t trace_code(std::uint8_t a) const noexcept { return trace_[a]; }

 private:
  void check(FqElem a) const;

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_, trace_;
};

bool is_prime(long long n);
/// True iff the monic polynomial (ascending coefficients mod p) has no monic
/// factor of degree between 1 and deg/2.
bool is_irreducible_mod_p(std::span<const int> monic, int p);

/// An element of Q(zeta_p) in the basis 1, zeta, ..., zeta^{p-2}.
class Cyclotomic {
 public:
  explicit Cyclotomic(int p);
  Cyclotomic(int p, const Rational& r);

  /// zeta_p^e, any integer e.
  static Cyclotomic zeta_power(int p, long long e);
  /// Accepts p-1 coordinates (already canonical) or p coordinates (the
  /// zeta^{p-1} term is eliminated).
  static Cyclotomic from_coords(int p, std::vector<Rational> coords);
  static Cyclotomic parse(std::string_view text);

  int prime() const noexcept { return p_; }
  const std::vector<Rational>& coords() const noexcept { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational as_rational() const;
  /// Complex conjugation zeta -> zeta^{p-1}.
  Cyclotomic conj() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  /// this += r * o
  void add_scaled(const Rational& r, const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator-(Cyclotomic a);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  void check(const Cyclotomic& o) const;
  static std::vector<Rational> reduce(int p, std::vector<Rational> full);

  int p_;
  std::vector<Rational> c_;
};

/// The real number sign * sqrt(square), square a nonnegative rational.
class SqrtRational {
 public:
  SqrtRational() = default;
  SqrtRational(int sign, Rational square);

  static SqrtRational from_rational(const Rational& r);
  static SqrtRational sqrt(const Rational& r);

  int sign() const noexcept { return sign_; }
  const Rational& square() const noexcept { return square_; }
  bool is_rational() const { return is_rational_square(square_); }
  std::string to_string() const;

  friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b);
  friend SqrtRational operator/(const SqrtRational& a, const SqrtRational& b);
  friend SqrtRational operator-(const SqrtRational& a) { return {-a.sign_, a.square_}; }
  friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
    return a.sign_ == b.sign_ && a.square_ == b.square_;
  }
  friend std::strong_ordering operator<=>(const SqrtRational& a, const SqrtRational& b);

 private:
  int sign_ = 0;
  Rational square_ = 0;
};

}  // namespace glhopf
