#include "reltype/field.hpp"

namespace reltype {

std::string FieldDesc::to_string() const {
  if (is_rational()) return "QQ";
  return "GF(" + std::to_string(characteristic) + ")";
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a :
       {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
        31ull, 37ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Coeff Coeff::zero(const FieldDesc& f) { return from_int(0, f); }
Coeff Coeff::one(const FieldDesc& f) { return from_int(1, f); }

Coeff Coeff::from_int(long v, const FieldDesc& f) {
  if (f.is_rational()) return rational(mpq_class(v));
  std::uint64_t p = f.characteristic;
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return residue(static_cast<std::uint64_t>(r), p);
}

Coeff Coeff::rational(mpq_class q) {
  Coeff c;
  q.canonicalize();
  c.q_ = std::move(q);
  return c;
}

Coeff Coeff::residue(std::uint64_t v, std::uint64_t p) {
  Coeff c;
  c.p_ = p;
  c.v_ = v % p;
  return c;
}

Coeff Coeff::parse(const std::string& text, const FieldDesc& f) {
  auto slash = text.find('/');
  if (f.is_rational()) {
    mpq_class q(text);
    q.canonicalize();
    return rational(q);
  }
  std::uint64_t p = f.characteristic;
  auto part = [&](const std::string& s) {
    mpz_class z(s);
    mpz_class r = z % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return r.get_ui();
  };
  if (slash == std::string::npos) return residue(part(text), p);
  std::uint64_t num = part(text.substr(0, slash));
  std::uint64_t den = part(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("division by zero mod p");
  return residue(mod_mul(num, mod_pow(den, p - 2, p), p), p);
}

const mpq_class& Coeff::rat() const {
  static const mpq_class kZero;
  return q_ ? *q_ : kZero;
}

bool Coeff::is_zero() const { return p_ == 0 ? rat() == 0 : v_ == 0; }
bool Coeff::is_one() const { return p_ == 0 ? rat() == 1 : v_ == 1; }

void Coeff::check_same(const Coeff& o) const {
  if (p_ != o.p_) throw std::invalid_argument("coefficient field mismatch");
}

Coeff Coeff::operator+(const Coeff& o) const {
  check_same(o);
  if (p_ == 0) return rational(rat() + o.rat());
  std::uint64_t s = v_ + o.v_;
  if (s >= p_) s -= p_;
  return residue(s, p_);
}

Coeff Coeff::operator-(const Coeff& o) const {
  check_same(o);
  if (p_ == 0) return rational(rat() - o.rat());
  std::uint64_t s = v_ + p_ - o.v_;
  if (s >= p_) s -= p_;
  return residue(s, p_);
}

Coeff Coeff::operator*(const Coeff& o) const {
  check_same(o);
  if (p_ == 0) return rational(rat() * o.rat());
  return residue(mod_mul(v_, o.v_, p_), p_);
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inv(); }

Coeff Coeff::operator-() const {
  if (p_ == 0) return rational(-rat());
  return residue(v_ == 0 ? 0 : p_ - v_, p_);
}

Coeff Coeff::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return rational(1 / rat());
  return residue(mod_pow(v_, p_ - 2, p_), p_);
}

bool Coeff::operator==(const Coeff& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? rat() == o.rat() : v_ == o.v_;
}

std::string Coeff::to_string() const {
  if (p_ == 0) return rat().get_str();
  return std::to_string(v_);
}

}  // namespace reltype
