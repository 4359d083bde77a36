#include "reltype/monomial.hpp"

namespace reltype {

long Monomial::total_degree() const {
  long d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

long Monomial::weighted_degree(const std::vector<long>& weights) const {
  long d = 0;
  for (std::size_t i = 0; i < n_; ++i)
    d += weights[i] * static_cast<long>(e_[i]);
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint32_t s = static_cast<std::uint32_t>(e_[i]) + o.e_[i];
    if (s > UINT16_MAX) throw std::overflow_error("exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (o.e_[i] > e_[i]) throw std::domain_error("inexact monomial division");
    r.e_[i] = e_[i] - o.e_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.n_; ++i)
    if (a.e_[i] && b.e_[i]) return false;
  return true;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo,
            std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_degrevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const RingContext& ring) {
  const std::size_t n = ring.arity();
  switch (ring.order().kind) {
    case OrderSpec::Kind::Lex:
      return cmp_lex(a, b, 0, n);
    case OrderSpec::Kind::DegRevLex:
      return cmp_degrevlex(a, b, 0, n);
    case OrderSpec::Kind::Block: {
      const std::size_t k = ring.order().block;
      if (int c = cmp_degrevlex(a, b, 0, k)) return c;
      return cmp_degrevlex(a, b, k, n);
    }
    case OrderSpec::Kind::WeightDegRevLex: {
      long wa = a.weighted_degree(ring.weights());
      long wb = b.weighted_degree(ring.weights());
      if (wa != wb) return wa > wb ? 1 : -1;
      return cmp_degrevlex(a, b, 0, n);
    }
  }
  return 0;
}

}  // namespace reltype
