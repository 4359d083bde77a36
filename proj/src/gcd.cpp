#include "reltype/polynomial.hpp"

namespace reltype {

namespace {

int first_var_in(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.ring()->arity();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return static_cast<int>(i);
  }
  return -1;
}

// f as a univariate polynomial in variable k: coefficient polynomials
// indexed by the exponent of x_k.
std::vector<Polynomial> coeffs_in(const Polynomial& f, std::size_t k) {
  long d = std::max(0L, f.degree_in(k));
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.m;
    std::uint32_t e = m[k];
    m.set(k, 0);
    buckets[e].push_back({t.c, std::move(m)});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& ts : buckets)
    out.push_back(Polynomial::from_terms(f.ring(), std::move(ts)));
  return out;
}

Polynomial from_coeffs(const RingPtr& ring, std::size_t k,
                       const std::vector<Polynomial>& cs) {
  Polynomial r = Polynomial::zero(ring);
  for (std::size_t d = 0; d < cs.size(); ++d) {
    Monomial m(ring->arity());
    m.set(k, static_cast<std::uint32_t>(d));
    r = r + cs[d].mul_term(Coeff::one(ring->field()), m);
  }
  return r;
}

long deg_of(const std::vector<Polynomial>& cs) {
  for (std::size_t d = cs.size(); d-- > 0;)
    if (!cs[d].is_zero()) return static_cast<long>(d);
  return -1;
}

void trim(std::vector<Polynomial>& cs) {
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
}

// Pseudo-remainder of a by b in the main variable (coefficients are
// polynomials in the remaining variables).
std::vector<Polynomial> prem(std::vector<Polynomial> a,
                             const std::vector<Polynomial>& b) {
  trim(a);
  long db = deg_of(b);
  const Polynomial& lb = b[static_cast<std::size_t>(db)];
  while (true) {
    long da = deg_of(a);
    if (da < db) break;
    Polynomial la = a[static_cast<std::size_t>(da)];
    for (auto& c : a) c = c * lb;
    for (long i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(da - db + i);
      a[idx] = a[idx] - la * b[static_cast<std::size_t>(i)];
    }
    trim(a);
  }
  return a;
}

Polynomial content_of(const std::vector<Polynomial>& cs) {
  Polynomial c = Polynomial::zero(cs.empty() ? nullptr : cs[0].ring());
  for (const auto& f : cs) c = gcd_multivariate(c, f);
  return c;
}

std::vector<Polynomial> divide_all(const std::vector<Polynomial>& cs,
                                   const Polynomial& d) {
  std::vector<Polynomial> out;
  out.reserve(cs.size());
  for (const auto& f : cs) {
    if (f.is_zero()) {
      out.push_back(f);
      continue;
    }
    auto q = divide_exact(f, d);
    if (!q) throw std::logic_error("content division not exact");
    out.push_back(std::move(*q));
  }
  return out;
}

std::vector<Polynomial> primitive_part(const std::vector<Polynomial>& cs) {
  Polynomial c = content_of(cs);
  if (c.is_zero()) return cs;
  return divide_all(cs, c);
}

}  // namespace

Polynomial gcd_multivariate(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (!same_ring(a.ring(), b.ring()))
    throw std::invalid_argument("gcd: ring mismatch");
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(a.ring(), 1);
  int k = first_var_in(a, b);
  if (k < 0) return Polynomial::constant(a.ring(), 1);
  auto ca = coeffs_in(a, static_cast<std::size_t>(k));
  auto cb = coeffs_in(b, static_cast<std::size_t>(k));
  Polynomial cont = gcd_multivariate(content_of(ca), content_of(cb));
  auto u = primitive_part(ca);
  auto v = primitive_part(cb);
  if (deg_of(u) < deg_of(v)) std::swap(u, v);
  while (deg_of(v) >= 0) {
    auto r = prem(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  // u is primitive; a degree-0 primitive polynomial is a unit.
  Polynomial g;
  if (deg_of(u) == 0) {
    g = cont;
  } else {
    g = cont * from_coeffs(a.ring(), static_cast<std::size_t>(k), u);
  }
  return g.monic();
}

}  // namespace reltype
