#include "glhopf/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace glhopf {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(std::string_view s, const char* what) {
  auto t = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError(std::string("bad ") + what + ": '" + t + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Polynomials over F_p as ascending int vectors; only used for modulus checks
// and table construction, never in hot loops.
std::vector<int> poly_mod(std::vector<int> a, std::span<const int> m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x)
      if (mod(static_cast<long long>(x) * m[dm], p) == 1) return x;
    return 1;
  }();
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = mod(static_cast<long long>(a[i]) * lead_inv, p);
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = mod(a[i - dm + j] - static_cast<long long>(c) * m[j], p);
  }
  a.resize(std::max(dm, 0));
  return a;
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  auto t = trim(text);
  if (t.empty()) throw ParseError("empty rational");
  Rational r;
  if (r.set_str(t, 10) != 0) throw ParseError("bad rational: '" + t + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + t + "'");
  r.canonicalize();
  return r;
}

bool is_rational_square(const Rational& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 && mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(std::span<const int> monic, int p) {
  const int deg = static_cast<int>(monic.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (int d = 1; d <= deg / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> f(d + 1);
      long long rest = idx;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<int>(rest % p);
        rest /= p;
      }
      f[d] = 1;
      auto r = poly_mod(std::vector<int>(monic.begin(), monic.end()), f, p);
      if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- FqElem

std::vector<int> FqElem::coeffs() const {
  if (!ctx_) throw ContextError("FqElem without a field");
  std::vector<int> out(ctx_->k());
  int c = code_;
  for (auto& x : out) {
    x = c % ctx_->p();
    c /= ctx_->p();
  }
  return out;
}

FqElem operator+(FqElem a, FqElem b) {
  if (!a.ctx_) throw ContextError("FqElem without a field");
  return a.ctx_->add(a, b);
}
FqElem operator-(FqElem a, FqElem b) {
  if (!a.ctx_) throw ContextError("FqElem without a field");
  return a.ctx_->sub(a, b);
}
FqElem operator*(FqElem a, FqElem b) {
  if (!a.ctx_) throw ContextError("FqElem without a field");
  return a.ctx_->mul(a, b);
}
FqElem operator-(FqElem a) {
  if (!a.ctx_) throw ContextError("FqElem without a field");
  return a.ctx_->neg(a);
}

// ---------------------------------------------------------------- FqContext

FqContext::FqContext(int p, int k, std::vector<int> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw ConfigError("field degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > kMaxOrder) throw ConfigError("field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxOrder));
  q_ = static_cast<int>(q);
  if (static_cast<int>(modulus_.size()) != k + 1 || modulus_.back() != 1)
    throw ConfigError("modulus must be monic of degree " + std::to_string(k));
  for (auto& c : modulus_) c = mod(c, p);
  if (modulus_.back() != 1) throw ConfigError("modulus must be monic");
  if (k <= 4 && !is_irreducible_mod_p(modulus_, p)) throw ConfigError("modulus is reducible over F_p");

  auto decode = [&](int code) {
    std::vector<int> c(k_);
    for (auto& x : c) {
      x = code % p_;
      code /= p_;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * p_ + c[i];
    return code;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  trace_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto ca = decode(a);
    std::vector<int> na(k_);
    for (int i = 0; i < k_; ++i) na[i] = mod(-ca[i], p_);
    neg_[a] = static_cast<std::uint8_t>(encode(na));
    for (int b = 0; b < q_; ++b) {
      auto cb = decode(b);
      std::vector<int> s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint8_t>(encode(s));
      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      auto r = k_ == 1 ? prod : poly_mod(prod, modulus_, p_);
      r.resize(k_, 0);
      mul_[a * q_ + b] = static_cast<std::uint8_t>(encode(r));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
  for (int a = 0; a < q_; ++a) {
    // sum of Frobenius conjugates a^{p^i}; the result lies in F_p
    int acc = 0;
    int x = a;
    for (int i = 0; i < k_; ++i) {
      acc = add_[acc * q_ + x];
      int y = 1;
      for (int j = 0; j < p_; ++j) y = mul_[y * q_ + x];
      x = y;
    }
    if (acc >= p_) throw Error("internal: trace left the prime field");
    trace_[a] = static_cast<std::uint8_t>(acc);
  }
}

std::shared_ptr<const FqContext> FqContext::make(int p, int k) {
  if (!is_prime(p)) throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1 || k > 8) throw ConfigError("unsupported field degree " + std::to_string(k));
  if (k == 1) return std::make_shared<const FqContext>(p, 1, std::vector<int>{0, 1});
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  if (count > kMaxOrder) throw ConfigError("field order exceeds " + std::to_string(kMaxOrder));
  // ascending lexicographic on (c0, c1, ..., c_{k-1})
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> m(k + 1);
    long long rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      m[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    m[k] = 1;
    if (is_irreducible_mod_p(m, p)) return std::make_shared<const FqContext>(p, k, m);
  }
  throw ConfigError("no irreducible modulus found");
}

std::shared_ptr<const FqContext> FqContext::parse(std::string_view text) {
  auto t = trim(text);
  if (t.empty()) throw ConfigError("empty field description");
  auto colon = t.find(':');
  auto head = t.substr(0, colon);
  auto caret = head.find('^');
  if (caret == std::string::npos) {
    int q = parse_int(head, "field order");
    for (int p = 2; p <= q; ++p) {
      if (!is_prime(p) || q % p != 0) continue;
      int k = 0;
      long long v = 1;
      while (v < q) {
        v *= p;
        ++k;
      }
      if (v != q) break;
      if (colon != std::string::npos) return parse(std::to_string(p) + "^" + std::to_string(k) + t.substr(colon));
      return make(p, k);
    }
    throw ConfigError("'" + t + "' is not a prime power");
  }
  int p = parse_int(head.substr(0, caret), "characteristic");
  int k = parse_int(head.substr(caret + 1), "degree");
  if (colon == std::string::npos) return make(p, k);
  std::vector<int> m;
  for (auto& s : split(t.substr(colon + 1), ',')) m.push_back(parse_int(s, "modulus coefficient"));
  return std::make_shared<const FqContext>(p, k, m);
}

std::string FqContext::to_string() const {
  std::ostringstream os;
  os << p_ << '^' << k_ << ':';
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

bool FqContext::same_field(const FqContext& other) const noexcept {
  return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

void FqContext::check(FqElem a) const {
  if (a.ctx_ == this) return;
  if (!a.ctx_ || !same_field(*a.ctx_)) throw ContextError("F_q element from a different field");
}

FqElem FqContext::elem(int code) const {
  if (code < 0 || code >= q_) throw ParseError("field element code " + std::to_string(code) + " out of range");
  return {this, static_cast<std::uint8_t>(code)};
}

FqElem FqContext::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_) throw ShapeError("too many coefficients for F_q element");
  int code = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) code = code * p_ + mod(coeffs[i], p_);
  return elem(code);
}

FqElem FqContext::from_int(long long v) const { return elem(mod(v, p_)); }

FqElem FqContext::parse_elem(std::string_view text) const { return elem(parse_int(text, "field element")); }

FqElem FqContext::add(FqElem a, FqElem b) const {
  check(a);
  check(b);
  return {this, add_code(a.code_, b.code_)};
}
FqElem FqContext::sub(FqElem a, FqElem b) const {
  check(a);
  check(b);
  return {this, add_code(a.code_, neg_code(b.code_))};
}
FqElem FqContext::mul(FqElem a, FqElem b) const {
  check(a);
  check(b);
  return {this, mul_code(a.code_, b.code_)};
}
FqElem FqContext::neg(FqElem a) const {
  check(a);
  return {this, neg_code(a.code_)};
}
FqElem FqContext::inv(FqElem a) const {
  check(a);
  if (a.is_zero()) throw DivisionByZero("inverse of zero in F_q");
  return {this, inv_code(a.code_)};
}
FqElem FqContext::pow(FqElem a, long long e) const {
  check(a);
  if (e < 0) return pow(inv(a), -e);
  std::uint8_t r = 1, b = a.code_;
  while (e > 0) {
    if (e & 1) r = mul_code(r, b);
    b = mul_code(b, b);
    e >>= 1;
  }
  return {this, r};
}
int FqContext::trace_to_prime(FqElem a) const {
  check(a);
  return trace_code(a.code_);
}
FqElem FqContext::primitive_element() const {
  for (int g = 1; g < q_; ++g) {
    int order = 1;
    std::uint8_t x = static_cast<std::uint8_t>(g);
    while (x != 1) {
      x = mul_code(x, static_cast<std::uint8_t>(g));
      ++order;
    }
    if (order == q_ - 1) return elem(g);
  }
  throw Error("internal: no primitive element");
}

// ---------------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic(int p) : p_(p), c_(static_cast<std::size_t>(std::max(p - 1, 1))) {
  if (!is_prime(p)) throw ContextError("cyclotomic order " + std::to_string(p) + " is not prime");
}

Cyclotomic::Cyclotomic(int p, const Rational& r) : Cyclotomic(p) { c_[0] = r; }

std::vector<Rational> Cyclotomic::reduce(int p, std::vector<Rational> full) {
  // full has length p; zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
  Rational top = full[p - 1];
  full.resize(p - 1);
  if (top != 0)
    for (auto& x : full) x -= top;
  return full;
}

Cyclotomic Cyclotomic::zeta_power(int p, long long e) {
  Cyclotomic z(p);
  std::vector<Rational> full(p);
  full[static_cast<std::size_t>(mod(e, p))] = 1;
  z.c_ = reduce(p, std::move(full));
  return z;
}

Cyclotomic Cyclotomic::from_coords(int p, std::vector<Rational> coords) {
  Cyclotomic z(p);
  if (static_cast<int>(coords.size()) == p - 1) {
    z.c_ = std::move(coords);
  } else if (static_cast<int>(coords.size()) == p) {
    z.c_ = reduce(p, std::move(coords));
  } else {
    throw ShapeError("cyclotomic coordinate count must be p-1 or p");
  }
  return z;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto t = trim(text);
  auto colon = t.find(':');
  if (colon == std::string::npos) throw ParseError("cyclotomic needs 'p:[...]': '" + t + "'");
  int p = parse_int(std::string_view(t).substr(0, colon), "cyclotomic prime");
  auto body = trim(std::string_view(t).substr(colon + 1));
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("cyclotomic coordinates must be bracketed: '" + t + "'");
  std::vector<Rational> coords;
  auto inner = std::string_view(body).substr(1, body.size() - 2);
  if (!trim(inner).empty())
    for (auto& s : split(inner, ',')) coords.push_back(parse_rational(s));
  return from_coords(p, std::move(coords));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw NotRationalError("value " + to_string() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  if (p_ == 2) return *this;
  std::vector<Rational> full(p_);
  for (int i = 0; i < p_ - 1; ++i) full[(p_ - i) % p_] = c_[i];
  Cyclotomic z(p_);
  z.c_ = reduce(p_, std::move(full));
  return z;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << p_ << ":[";
  for (std::size_t i = 0; i < c_.size(); ++i)
    os << (i ? "," : "") << c_[i].get_num().get_str() << '/' << c_[i].get_den().get_str();
  os << ']';
  return os.str();
}

void Cyclotomic::check(const Cyclotomic& o) const {
  if (o.p_ != p_) throw ContextError("cyclotomic fields differ: Q(zeta_" + std::to_string(p_) + ") vs Q(zeta_" +
                                     std::to_string(o.p_) + ")");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

void Cyclotomic::add_scaled(const Rational& r, const Cyclotomic& o) {
  check(o);
  if (r == 0) return;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i] != 0) c_[i] += r * o.c_[i];
}

Cyclotomic operator-(Cyclotomic a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check(b);
  const int p = a.p_;
  if (p == 2) return Cyclotomic(2, a.c_[0] * b.c_[0]);
  std::vector<Rational> full(p);
  for (int i = 0; i < p - 1; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j)
      if (b.c_[j] != 0) full[(i + j) % p] += a.c_[i] * b.c_[j];
  }
  Cyclotomic z(p);
  z.c_ = Cyclotomic::reduce(p, std::move(full));
  return z;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  a.check(b);
  return a.c_ == b.c_;
}

// ---------------------------------------------------------------- SqrtRational

SqrtRational::SqrtRational(int sign, Rational square) : sign_(sign), square_(std::move(square)) {
  if (sign < -1 || sign > 1) throw Error("sign must be -1, 0 or +1");
  if (square_ < 0) throw Error("negative square in SqrtRational");
  if ((sign_ == 0) != (square_ == 0)) throw Error("sign is zero iff the square is zero");
}

SqrtRational SqrtRational::from_rational(const Rational& r) { return {sgn(r), r * r}; }

SqrtRational SqrtRational::sqrt(const Rational& r) {
  if (r < 0) throw Error("square root of a negative rational");
  return {r == 0 ? 0 : 1, r};
}

std::string SqrtRational::to_string() const {
  if (sign_ == 0) return "0";
  return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + square_.get_str() + ")";
}

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
  return {a.sign_ * b.sign_, a.square_ * b.square_};
}

SqrtRational operator/(const SqrtRational& a, const SqrtRational& b) {
  if (b.sign_ == 0) throw DivisionByZero("division by a zero SqrtRational");
  return {a.sign_ * b.sign_, a.square_ / b.square_};
}

std::strong_ordering operator<=>(const SqrtRational& a, const SqrtRational& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ == 0) return std::strong_ordering::equal;
  int c = cmp(a.square_, b.square_);
  if (a.sign_ < 0) c = -c;
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace glhopf
