#include "reltype/groebner.hpp"
#include <cstdio>
#include <cstdlib>

#include <algorithm>
#include <chrono>
#include <set>

namespace reltype {

namespace {

// Primitive integer form over QQ (bounded big-integer growth), monic
// over GF(p).
Polynomial strip_content(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (!f.ring()->field().is_rational()) return f.monic();
  mpz_class den_lcm = 1;
  for (const auto& t : f.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.c.rat().get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& t : f.terms()) {
    mpz_class n = t.c.rat().get_num() * (den_lcm / t.c.rat().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.leading_coeff().rat() < 0) scale = -scale;
  return f.scaled(Coeff::rational(scale));
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

struct Pair {
  long deg;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (int c = lex_cmp(a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Merge of two descending term lists; equal monomials combine, zero
// coefficients vanish.
std::vector<Term> merge_terms(std::vector<Term> a, std::vector<Term> b,
                              const RingContext& ring) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = mono_cmp(a[i].m, b[j].m, ring);
    if (cmp > 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmp < 0) {
      out.push_back(std::move(b[j++]));
    } else {
      Coeff s = a[i].c + b[j].c;
      if (!s.is_zero()) out.push_back({std::move(s), std::move(a[i].m)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

// Geobucket: bucket k holds at most 4^(k+1) terms, so adding a short
// reducer tail touches only a short bucket instead of the whole tail.
class Geobucket {
 public:
  explicit Geobucket(const RingContext& ring) : ring_(ring) {}

  void add(std::vector<Term> ts) {
    if (ts.empty()) return;
    std::size_t k = 0, cap = 4;
    while (cap < ts.size()) {
      cap *= 4;
      ++k;
    }
    if (b_.size() <= k) b_.resize(k + 1);
    b_[k].merge_in(std::move(ts), ring_);
    while (b_[k].remaining() > cap) {  // carry
      if (b_.size() <= k + 1) b_.resize(k + 2);
      b_[k + 1].merge_in(b_[k].take(), ring_);
      ++k;
      cap *= 4;
    }
  }

  // Removes and returns the leading term (coefficients of equal lead
  // monomials across buckets combined); nullopt when empty.
  std::optional<Term> pop_lead() {
    for (;;) {
      int best = -1;
      for (std::size_t k = 0; k < b_.size(); ++k) {
        if (!b_[k].remaining()) continue;
        if (best < 0 ||
            mono_cmp(b_[k].front().m, b_[best].front().m, ring_) > 0)
          best = static_cast<int>(k);
      }
      if (best < 0) return std::nullopt;
      Term lead = b_[best].pop();
      for (std::size_t k = 0; k < b_.size(); ++k) {
        if (!b_[k].remaining() || b_[k].front().m != lead.m) continue;
        lead.c = lead.c + b_[k].pop().c;
      }
      if (!lead.c.is_zero()) return lead;
    }
  }

 private:
  // Descending term list with a consumed-prefix offset so pops are O(1).
  struct Bucket {
    std::vector<Term> t;
    std::size_t head = 0;

    std::size_t remaining() const { return t.size() - head; }
    const Term& front() const { return t[head]; }
    Term pop() { return std::move(t[head++]); }
    std::vector<Term> take() {
      std::vector<Term> out(std::make_move_iterator(t.begin() + head),
                            std::make_move_iterator(t.end()));
      t.clear();
      head = 0;
      return out;
    }
    void merge_in(std::vector<Term> ts, const RingContext& ring) {
      t = merge_terms(take(), std::move(ts), ring);
      head = 0;
    }
  };

  const RingContext& ring_;
  std::vector<Bucket> b_;
};

class Engine {
 public:
  Engine(RingPtr ring, const GBConfig& config)
      : ring_(std::move(ring)),
        config_(config),
        start_(std::chrono::steady_clock::now()) {}

  GBStats stats;

  void check_budget(long degree) {
    stats.max_degree = std::max(stats.max_degree, degree);
    if (degree > static_cast<long>(config_.degree_bound))
      throw ResourceAbort("degree bound " +
                             std::to_string(config_.degree_bound) +
                             " exceeded at degree " + std::to_string(degree),
                         stats);
    if (config_.timeout_seconds > 0) {
      auto elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
      if (elapsed > config_.timeout_seconds)
        throw ResourceAbort("timeout after " + std::to_string(elapsed) + " s",
                            stats);
    }
  }

  Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                    const std::vector<char>* skip = nullptr) {
    std::vector<long> lead_deg(basis.size());
    std::vector<std::uint32_t> lead_mask(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      lead_deg[i] = basis[i].leading_monomial().total_degree();
      lead_mask[i] = basis[i].leading_monomial().divmask();
    }
    Geobucket bucket(*ring_);
    bucket.add(std::vector<Term>(f.terms()));
    std::vector<Term> out;
    while (auto lt = bucket.pop_lead()) {
      const long deg = lt->m.total_degree();
      const std::uint32_t msk = lt->m.divmask();
      check_budget(deg);
      const Polynomial* divisor = nullptr;
      for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        if (skip && (*skip)[bi]) continue;
        if (lead_deg[bi] > deg || (lead_mask[bi] & ~msk)) continue;
        const Polynomial& g = basis[bi];
        if (!g.leading_monomial().divides(lt->m)) continue;
        // Shortest reducer limits fill-in.
        if (!divisor || g.term_count() < divisor->term_count()) divisor = &g;
      }
      if (!divisor) {
        out.push_back(std::move(*lt));
        continue;
      }
      ++stats.reductions;
      Coeff c = -(lt->c / divisor->leading_coeff());
      Monomial m = lt->m / divisor->leading_monomial();
      const auto& gt = divisor->terms();
      std::vector<Term> mult;
      mult.reserve(gt.size() - 1);
      for (std::size_t j = 1; j < gt.size(); ++j)
        mult.push_back({c * gt[j].c, gt[j].m * m});
      bucket.add(std::move(mult));
    }
    return Polynomial::from_terms(ring_, std::move(out));
  }

 private:
  RingPtr ring_;
  GBConfig config_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis) {
  GBConfig cfg;
  cfg.degree_bound = 1000000;  // plain division, no guard
  Engine e(f.ring(), cfg);
  return e.reduce(f, basis);
}

GroebnerBasis groebner_basis(const RingPtr& ring,
                             const std::vector<Polynomial>& gens,
                             const GBConfig& config) {
  Engine engine(ring, config);
  std::vector<Polynomial> g;
  std::vector<char> redundant;
  std::set<Pair, PairLess> pending;

  // Gebauer-Moller update: prune the new pairs with the M and F
  // criteria and the product criterion, prune old pairs with B, and
  // retire basis elements whose lead the new lead divides.
  auto add_element = [&](Polynomial f) {
    const std::size_t t = g.size();
    const Monomial& h = f.leading_monomial();

    std::vector<Pair> cand;
    cand.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
      if (redundant[i]) continue;
      Monomial l = Monomial::lcm(g[i].leading_monomial(), h);
      cand.push_back({l.total_degree(), std::move(l), i, t});
    }
    // M: drop (i,t) when some lcm(j,t) strictly divides lcm(i,t).
    std::vector<char> drop(cand.size(), 0);
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = 0; b < cand.size() && !drop[a]; ++b)
        if (a != b && !drop[b] && cand[b].lcm != cand[a].lcm &&
            cand[b].lcm.divides(cand[a].lcm))
          drop[a] = 1;
    // F: one pair per lcm value; the group dies entirely when one of
    // its members satisfies the product criterion.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      bool coprime_in_group = false;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (drop[b] || cand[b].lcm != cand[a].lcm) continue;
        if (Monomial::coprime(g[cand[b].i].leading_monomial(), h))
          coprime_in_group = true;
      }
      bool first = true;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (drop[b] || cand[b].lcm != cand[a].lcm) continue;
        if (coprime_in_group || !first) drop[b] = 1;
        first = false;
      }
    }
    // B: discard old pairs the new element subsumes.
    for (auto it = pending.begin(); it != pending.end();) {
      if (h.divides(it->lcm) &&
          Monomial::lcm(g[it->i].leading_monomial(), h) != it->lcm &&
          Monomial::lcm(g[it->j].leading_monomial(), h) != it->lcm)
        it = pending.erase(it);
      else
        ++it;
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (!drop[a]) pending.insert(std::move(cand[a]));

    for (std::size_t i = 0; i < t; ++i)
      if (!redundant[i] && h.divides(g[i].leading_monomial())) redundant[i] = 1;
    g.push_back(std::move(f));
    redundant.push_back(0);
  };

  for (const auto& f : gens) {
    if (!same_ring(f.ring(), ring))
      throw std::invalid_argument("generator in wrong ring");
    if (f.is_zero()) continue;
    add_element(strip_content(f));
  }

  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    if (config.weighted_truncate > 0) {
      long wd = 0;
      const auto& w = ring->weights();
      for (std::size_t v = 0; v < ring->arity(); ++v)
        wd += w[v] * static_cast<long>(pr.lcm[v]);
      if (wd > config.weighted_truncate) continue;
    }
    engine.check_budget(pr.deg);
    const Polynomial& a = g[pr.i];
    const Polynomial& b = g[pr.j];
    ++engine.stats.s_pairs;
    if (std::getenv("RELTYPE_GB_TRACE") && engine.stats.s_pairs % 500 == 0) {
      std::size_t terms = 0, live = 0;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (!redundant[i]) { terms += g[i].term_count(); ++live; }
      std::fprintf(stderr,
                   "[gb] spairs=%llu basis=%zu live=%zu pending=%zu deg=%ld terms=%zu\n",
                   (unsigned long long)engine.stats.s_pairs, g.size(), live,
                   pending.size(), pr.deg, terms);
    }
    Coeff ca = a.leading_coeff().inv();
    Coeff cb = b.leading_coeff().inv();
    Polynomial s = a.mul_term(ca, pr.lcm / a.leading_monomial()) -
                   b.mul_term(cb, pr.lcm / b.leading_monomial());
    Polynomial r = engine.reduce(s, g, &redundant);
    if (!r.is_zero()) add_element(strip_content(r));
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = g[i].leading_monomial();
      const Monomial& lj = g[j].leading_monomial();
      if (lj.divides(li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Tail-reduce each element by the others, make monic.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(engine.reduce(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& x, const Polynomial& y) {
              return mono_cmp(x.leading_monomial(), y.leading_monomial(),
                              *ring) < 0;
            });
  return {ring, std::move(reduced), engine.stats};
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (gens_.empty()) gens_.push_back(Polynomial::zero(ring_));
  for (const auto& f : gens_)
    if (!same_ring(f.ring(), ring_))
      throw std::invalid_argument("ideal generator in wrong ring");
}

const GroebnerBasis& Ideal::gb(const GBConfig& config) const {
  if (!gb_) gb_ = std::make_shared<GroebnerBasis>(
                 groebner_basis(ring_, gens_, config));
  return *gb_;
}

bool Ideal::contains(const Polynomial& f, const GBConfig& config) const {
  return normal_form(f.ring() == ring_ || same_ring(f.ring(), ring_)
                         ? f
                         : f.map_to(ring_),
                     gb(config).elements)
      .is_zero();
}

bool Ideal::is_unit(const GBConfig& config) const {
  const auto& e = gb(config).elements;
  return e.size() == 1 && e[0].is_constant() && !e[0].is_zero();
}

bool Ideal::is_zero_ideal(const GBConfig& config) const {
  return gb(config).elements.empty();
}

bool ideal_membership(const Polynomial& f, const Ideal& I,
                      const GBConfig& config) {
  return I.contains(f, config);
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GBConfig& config) {
  for (const auto& f : I.gens())
    if (!J.contains(f, config)) return false;
  for (const auto& f : J.gens())
    if (!I.contains(f, config)) return false;
  return true;
}

}  // namespace reltype
