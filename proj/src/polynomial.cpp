#include "reltype/polynomial.hpp"

#include <algorithm>
#include <map>

namespace reltype {

Coeff convert_coeff(const Coeff& c, const FieldDesc& target) {
  if (target.is_rational()) {
    if (!c.is_rational())
      throw std::invalid_argument("cannot lift GF(p) coefficient to QQ");
    return c;
  }
  if (!c.is_rational()) {
    if (c.characteristic() != target.characteristic)
      throw std::invalid_argument("coefficient field mismatch");
    return c;
  }
  const std::uint64_t p = target.characteristic;
  mpz_class num = c.rat().get_num() % static_cast<long>(p);
  if (num < 0) num += static_cast<long>(p);
  mpz_class den = c.rat().get_den() % static_cast<long>(p);
  if (den == 0) throw std::domain_error("denominator vanishes mod p");
  Coeff n = Coeff::residue(num.get_ui(), p);
  Coeff d = Coeff::residue(den.get_ui(), p);
  return n / d;
}

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial f;
  f.ring_ = std::move(ring);
  return f;
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  Polynomial f;
  f.ring_ = std::move(ring);
  if (!c.is_zero()) f.terms_.push_back({c, Monomial(f.ring_->arity())});
  return f;
}

Polynomial Polynomial::constant(RingPtr ring, long v) {
  Coeff c = Coeff::from_int(v, ring->field());
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t idx) {
  if (idx >= ring->arity()) throw std::out_of_range("variable index");
  Monomial m(ring->arity());
  m.set(idx, 1);
  return term(std::move(ring), Coeff::one(ring->field()), std::move(m));
}

Polynomial Polynomial::term(RingPtr ring, const Coeff& c, Monomial m) {
  if (m.arity() != ring->arity())
    throw std::invalid_argument("monomial arity mismatch");
  Polynomial f;
  f.ring_ = std::move(ring);
  if (!c.is_zero()) f.terms_.push_back({c, std::move(m)});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f;
  f.ring_ = std::move(ring);
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& a, const Term& b) {
                     return mono_cmp(a.m, b.m, *f.ring_) > 0;
                   });
  for (auto& t : terms) {
    if (t.m.arity() != f.ring_->arity())
      throw std::invalid_argument("monomial arity mismatch");
    if (!f.terms_.empty() && f.terms_.back().m == t.m) {
      f.terms_.back().c = f.terms_.back().c + t.c;
      if (f.terms_.back().c.is_zero()) f.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no terms");
  return terms_.front();
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return kDegreeMinusInfinity;
  long d = kDegreeMinusInfinity;
  for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
  return d;
}

long Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return kDegreeMinusInfinity;
  long d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.m[var]));
  return d;
}

long Polynomial::weighted_degree(const std::vector<long>& weights) const {
  if (terms_.empty()) return kDegreeMinusInfinity;
  long d = kDegreeMinusInfinity;
  for (const auto& t : terms_) d = std::max(d, t.m.weighted_degree(weights));
  return d;
}

bool Polynomial::is_homogeneous(const std::vector<long>& weights) const {
  if (terms_.empty()) return true;
  long d = terms_[0].m.weighted_degree(weights);
  for (const auto& t : terms_)
    if (t.m.weighted_degree(weights) != d) return false;
  return true;
}

std::vector<std::pair<long, Polynomial>> Polynomial::homogeneous_components(
    const std::vector<long>& weights) const {
  std::map<long, std::vector<Term>> buckets;
  for (const auto& t : terms_) buckets[t.m.weighted_degree(weights)].push_back(t);
  std::vector<std::pair<long, Polynomial>> out;
  for (auto& [d, ts] : buckets)
    out.emplace_back(d, from_terms(ring_, std::move(ts)));
  return out;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_))
    throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial r;
  r.ring_ = ring_;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].m, o.terms_[j].m, *ring_);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({std::move(s), terms_[i].m});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  Polynomial r = zero(ring_);
  for (const auto& t : terms_) r = r + o.mul_term(t.c, t.m);
  return r;
}

Polynomial Polynomial::mul_term(const Coeff& c, const Monomial& m) const {
  Polynomial r;
  r.ring_ = ring_;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.c * c, t.m * m});
  return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  return mul_term(c, Monomial(ring_->arity()));
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial r = constant(ring_, Coeff::one(ring_->field()));
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coeff().inv());
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m)
      return false;
  return true;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->arity())
    throw std::invalid_argument("substitute: one image per variable required");
  RingPtr target = images[0].ring();
  for (const auto& g : images)
    if (!same_ring(target, g.ring()))
      throw std::invalid_argument("substitute: images in different rings");
  Polynomial r = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial prod =
        Polynomial::constant(target, convert_coeff(t.c, target->field()));
    for (std::size_t i = 0; i < ring_->arity(); ++i)
      if (t.m[i]) prod = prod * images[i].pow(t.m[i]);
    r = r + prod;
  }
  return r;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  std::vector<int> where(ring_->arity());
  for (std::size_t i = 0; i < ring_->arity(); ++i)
    where[i] = target->var_index(ring_->var_name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      if (t.m[i] == 0) continue;
      if (where[i] < 0)
        throw std::invalid_argument("map_to: variable " + ring_->var_name(i) +
                                    " missing in target ring");
      m.set(static_cast<std::size_t>(where[i]), t.m[i]);
    }
    out.push_back({convert_coeff(t.c, target->field()), std::move(m)});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = t.c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string ms;
    for (std::size_t i = 0; i < t.m.arity(); ++i) {
      if (t.m[i] == 0) continue;
      if (!ms.empty()) ms += "*";
      ms += ring_->var_name(i);
      if (t.m[i] > 1) ms += "^" + std::to_string(t.m[i]);
    }
    if (ms.empty()) {
      s += cs;
    } else if (cs == "1") {
      s += ms;
    } else {
      s += cs + "*" + ms;
    }
  }
  return s;
}

std::optional<Polynomial> divide_exact(const Polynomial& f,
                                       const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial q = Polynomial::zero(f.ring());
  Polynomial r = f;
  while (!r.is_zero()) {
    if (!g.leading_monomial().divides(r.leading_monomial()))
      return std::nullopt;
    Coeff c = r.leading_coeff() / g.leading_coeff();
    Monomial m = r.leading_monomial() / g.leading_monomial();
    q = q + Polynomial::term(f.ring(), c, m);
    r = r - g.mul_term(c, m);
  }
  return q;
}

}  // namespace reltype
