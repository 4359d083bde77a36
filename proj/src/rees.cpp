#include "reltype/rees.hpp"

#include <algorithm>
#include <numeric>

namespace reltype {

IdealPresentation::IdealPresentation(RingPtr r, std::vector<Polynomial> g,
                                     std::vector<Polynomial> k)
    : ring(std::move(r)), gens(std::move(g)), relations(std::move(k)) {
  if (gens.empty()) throw PreconditionError("presentation needs generators");
  for (const auto& f : gens) {
    if (!same_ring(f.ring(), ring))
      throw std::invalid_argument("generator in wrong ring");
    if (f.is_zero()) throw PreconditionError("zero generator rejected");
  }
  for (const auto& f : relations)
    if (!same_ring(f.ring(), ring))
      throw std::invalid_argument("relation in wrong ring");
}

std::vector<std::string> rees_t_names(const RingContext& base, std::size_t s) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= s; ++i) {
    std::string nm = "t" + std::to_string(i);
    if (base.var_index(nm) >= 0) nm = fresh_var_name(base, nm);
    out.push_back(nm);
  }
  return out;
}

RingPtr rees_extended_ring(const RingContext& base, std::size_t s) {
  auto tn = rees_t_names(base, s);
  std::vector<std::string> svars(base.var_names());
  svars.insert(svars.end(), tn.begin(), tn.end());
  std::vector<long> sweights(base.arity(), 0);
  sweights.insert(sweights.end(), s, 1);
  return make_ring(base.field(), svars, {}, sweights);
}

std::vector<Polynomial> ReesEquations::generators_of_degree(long q) const {
  std::vector<Polynomial> out;
  for (const auto& f : generators)
    if (t_degree(f) == q) out.push_back(f);
  return out;
}

std::vector<Polynomial> ReesEquations::generators_below_degree(long q) const {
  std::vector<Polynomial> out;
  for (const auto& f : generators)
    if (t_degree(f) < q) out.push_back(f);
  return out;
}

long ReesEquations::max_degree() const {
  long m = 0;
  for (const auto& f : generators) m = std::max(m, t_degree(f));
  return m;
}

long ReesEquations::t_degree(const Polynomial& f) const {
  return f.weighted_degree(s_ring->weights());
}

namespace {

ReesEquations rees_ideal_impl(const IdealPresentation& P,
                              const GBConfig& config0, long truncate) {
  GBConfig config = config0;
  config.weighted_truncate = truncate;
  const RingContext& base = *P.ring;
  const std::size_t n = base.arity();
  const std::size_t s = P.gens.size();
  auto tn = rees_t_names(base, s);
  std::string un = fresh_var_name(base, "u");

  // Elimination ring [u | x..., t...]; weights u,t -> 1, x -> 0 keep
  // the input homogeneous, so Buchberger preserves the t-grading.
  std::vector<std::string> evars{un};
  std::vector<long> eweights{1};
  for (std::size_t i = 0; i < n; ++i) {
    evars.push_back(base.var_name(i));
    eweights.push_back(0);
  }
  for (const auto& nm : tn) {
    evars.push_back(nm);
    eweights.push_back(1);
  }
  auto elim = make_ring(base.field(), evars, {OrderSpec::Kind::Block, 1},
                        eweights);

  Polynomial u = Polynomial::variable(elim, 0);
  std::vector<Polynomial> gens;
  for (const auto& k : P.relations) gens.push_back(k.map_to(elim));
  for (std::size_t i = 0; i < s; ++i) {
    Polynomial ti = Polynomial::variable(elim, 1 + n + i);
    gens.push_back(ti - u * P.gens[i].map_to(elim));
  }
  auto egb = groebner_basis(elim, gens, config);
  std::vector<Polynomial> kept;
  for (const auto& f : egb.elements) {
    bool has_u = false;
    for (const auto& t : f.terms())
      if (t.m[0]) {
        has_u = true;
        break;
      }
    if (!has_u) kept.push_back(f);
  }

  // Canonical form: the reduced GB of the lift L' in the graded ring S.
  auto s_ring = rees_extended_ring(base, s);
  std::vector<Polynomial> mapped;
  for (const auto& f : kept) mapped.push_back(f.map_to(s_ring));
  auto sgb = groebner_basis(s_ring, mapped, config);

  ReesEquations E{P, s_ring, {}, {}, sgb.stats, truncate};
  E.stats.s_pairs += egb.stats.s_pairs;
  E.stats.reductions += egb.stats.reductions;
  E.stats.max_degree = std::max(egb.stats.max_degree, sgb.stats.max_degree);
  for (const auto& f : sgb.elements) {
    if (!f.is_homogeneous(s_ring->weights()))
      throw std::logic_error("Rees generator not t-homogeneous");
    if (E.t_degree(f) == 0)
      E.relations_in_s.push_back(f);
    else
      E.generators.push_back(f);
  }
  std::stable_sort(E.generators.begin(), E.generators.end(),
                   [&](const Polynomial& a, const Polynomial& b) {
                     return E.t_degree(a) < E.t_degree(b);
                   });
  return E;
}

}  // namespace

ReesEquations rees_ideal(const IdealPresentation& P, const GBConfig& config) {
  return rees_ideal_impl(P, config, 0);
}

ReesEquations rees_ideal_truncated(const IdealPresentation& P, long bound,
                                   const GBConfig& config) {
  if (bound < 1)
    throw PreconditionError("truncation bound must be at least 1");
  return rees_ideal_impl(P, config, bound);
}

EquationsProfile relation_type(const ReesEquations& E,
                               const GBConfig& config) {
  EquationsProfile prof;
  std::set<long> degrees;
  for (const auto& f : E.generators) {
    long d = E.t_degree(f);
    ++prof.degree_counts[d];
    if (d >= 2) degrees.insert(d);
  }
  for (long d : degrees) {
    std::vector<Polynomial> base = E.relations_in_s;
    auto below = E.generators_below_degree(d);
    base.insert(base.end(), below.begin(), below.end());
    bool fresh = false;
    if (base.empty()) {
      fresh = true;
    } else {
      auto gb = groebner_basis(E.s_ring, base, config);
      for (const auto& f : E.generators_of_degree(d)) {
        if (!normal_form(f, gb.elements).is_zero()) {
          fresh = true;
          break;
        }
      }
    }
    if (fresh) prof.fresh_degrees.insert(d);
  }
  prof.relation_type =
      prof.fresh_degrees.empty()
          ? 1u
          : static_cast<unsigned>(*prof.fresh_degrees.rbegin());
  prof.is_linear_type = prof.relation_type == 1;
  prof.is_syzygetic = prof.fresh_degrees.count(2) == 0;
  return prof;
}

std::vector<Polynomial> minimal_generators(const RingPtr& ring,
                                           std::vector<Polynomial> gens,
                                           const std::vector<Polynomial>& K,
                                           const GBConfig& config) {
  bool changed = true;
  while (changed && gens.size() > 1) {
    changed = false;
    // Biggest candidates go first.
    std::vector<std::size_t> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (gens[a].total_degree() != gens[b].total_degree())
        return gens[a].total_degree() > gens[b].total_degree();
      return gens[a].term_count() > gens[b].term_count();
    });
    for (std::size_t idx : order) {
      std::vector<Polynomial> others = K;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != idx) others.push_back(gens[j]);
      if (Ideal(ring, others).contains(gens[idx], config)) {
        gens.erase(gens.begin() + static_cast<long>(idx));
        changed = true;
        break;
      }
    }
  }
  return gens;
}

EquationsProfile relation_type(const IdealPresentation& P,
                               const GBConfig& config) {
  auto gens = minimal_generators(P.ring, P.gens, P.relations, config);
  return relation_type(
      rees_ideal(IdealPresentation(P.ring, std::move(gens), P.relations),
                 config),
      config);
}

EquationsProfile relation_type_quotient(const RingPtr& ring,
                                        const std::vector<Polynomial>& K,
                                        const std::vector<Polynomial>& gens,
                                        const GBConfig& config) {
  Ideal k_ideal(ring, K.empty() ? std::vector<Polynomial>{} : K);
  if (!K.empty()) {
    if (k_ideal.is_unit(config))
      throw PreconditionError("quotient by the improper ideal");
    bool all_in = true;
    for (const auto& g : gens)
      if (!k_ideal.contains(g, config)) all_in = false;
    if (all_in) throw PreconditionError("all generators lie in K");
  }
  return relation_type(IdealPresentation(ring, gens, K), config);
}

SyzygyModule linear_equations(const ReesEquations& E) {
  const std::size_t n = E.presentation.ring->arity();
  const std::size_t s = E.t_count();
  SyzygyModule Z{E.presentation.ring, {}};
  for (const auto& f : E.generators) {
    if (E.t_degree(f) != 1) continue;
    std::vector<std::vector<Term>> comps(s);
    for (const auto& t : f.terms()) {
      std::size_t which = s;
      for (std::size_t i = 0; i < s; ++i)
        if (t.m[n + i]) {
          which = i;
          break;
        }
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, t.m[i]);
      comps[which].push_back({t.c, std::move(m)});
    }
    std::vector<Polynomial> vec;
    for (auto& ts : comps)
      vec.push_back(
          Polynomial::from_terms(E.presentation.ring, std::move(ts)));
    Z.vectors.push_back(std::move(vec));
  }
  return Z;
}

IdealPresentation adjoin_variable_presentation(const IdealPresentation& P,
                                               const Polynomial& g) {
  const RingContext& base = *P.ring;
  if (!same_ring(g.ring(), P.ring))
    throw std::invalid_argument("adjoined image in wrong ring");
  std::string yname = fresh_var_name(base, "y1");
  std::vector<std::string> vars = base.var_names();
  vars.push_back(yname);
  std::vector<long> weights = base.weights();
  weights.push_back(0);
  auto ext = make_ring(base.field(), vars, base.order(), weights);
  std::vector<Polynomial> gens;
  for (const auto& f : P.gens) gens.push_back(f.map_to(ext));
  gens.push_back(Polynomial::variable(ext, base.arity()) - g.map_to(ext));
  std::vector<Polynomial> rels;
  for (const auto& f : P.relations) rels.push_back(f.map_to(ext));
  return IdealPresentation(ext, std::move(gens), std::move(rels));
}

bool substitution_check(const ReesEquations& E, const GBConfig& config) {
  const RingContext& base = *E.presentation.ring;
  const std::size_t n = base.arity();
  std::string un = fresh_var_name(base, "u");
  std::vector<std::string> vars = base.var_names();
  vars.push_back(un);
  auto check_ring = make_ring(base.field(), vars);
  Polynomial u = Polynomial::variable(check_ring, n);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(Polynomial::variable(check_ring, i));
  for (const auto& f : E.presentation.gens)
    images.push_back(f.map_to(check_ring) * u);
  std::vector<Polynomial> krel;
  for (const auto& k : E.presentation.relations)
    krel.push_back(k.map_to(check_ring));
  auto kgb = krel.empty()
                 ? GroebnerBasis{check_ring, {}, {}}
                 : groebner_basis(check_ring, krel, config);
  for (const auto& f : E.generators) {
    Polynomial img = f.substitute(images);
    if (!normal_form(img, kgb.elements).is_zero()) return false;
  }
  return true;
}

}  // namespace reltype
