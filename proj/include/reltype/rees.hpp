#pragma once

#include <map>
#include <set>

#include "reltype/ideal_ops.hpp"

namespace reltype {

// An ideal I = (f_1,...,f_s) of R, or of the quotient R/K when
// `relations` is nonempty (generators are then lifts to R).
struct IdealPresentation {
  RingPtr ring;                       // base ring over the x-variables
  std::vector<Polynomial> gens;       // f_1,...,f_s, s >= 1, nonzero
  std::vector<Polynomial> relations;  // K; empty = polynomial ring

  IdealPresentation(RingPtr r, std::vector<Polynomial> g,
                    std::vector<Polynomial> k = {});
  std::size_t generator_count() const { return gens.size(); }
};

// The t-graded equations of I: the reduced Groebner basis of (a lift
// of) L = ker(R[t_1..t_s] -> R[It]), computed by eliminating u from
// (K, t_i - u f_i). Generators are t-homogeneous of degree >= 1;
// t-degree-0 output (the K part) is kept separately.
struct ReesEquations {
  IdealPresentation presentation;
  RingPtr s_ring;  // x-vars + t-vars, t-weights 1, x-weights 0
  std::vector<Polynomial> generators;     // t-degree >= 1, ascending
  std::vector<Polynomial> relations_in_s; // K mapped into s_ring
  GBStats stats;
  // Exact only up to this t-degree; 0 = complete computation.
  long truncated_at = 0;

  std::vector<Polynomial> generators_of_degree(long q) const;
  std::vector<Polynomial> generators_below_degree(long q) const;
  long max_degree() const;  // 0 when L = (0)
  std::size_t t_count() const { return presentation.gens.size(); }
  long t_degree(const Polynomial& f) const;
};

struct EquationsProfile {
  unsigned relation_type = 1;
  std::set<long> fresh_degrees;          // q >= 2 with E(I)_q != 0
  std::map<long, std::size_t> degree_counts;  // diagnostics, non-canonical
  bool is_linear_type = true;
  bool is_syzygetic = true;
};

// Generators of the first syzygy module Z_1: coefficient vectors
// (a_1,...,a_s) in R with sum a_i f_i = 0 (mod K).
struct SyzygyModule {
  RingPtr ring;
  std::vector<std::vector<Polynomial>> vectors;
};

// Names t1..ts (made fresh against the base ring) and the graded ring
// S = R[t1..ts] with t-weights 1. Shared with the Jacobian dual so both
// sides of the expected-equations check live in one ring.
std::vector<std::string> rees_t_names(const RingContext& base, std::size_t s);
RingPtr rees_extended_ring(const RingContext& base, std::size_t s);

// Drops generators lying in the ideal of the others (mod K). The
// relation type and fresh degrees are invariants of the ideal, so the
// smaller presentation is sound — and far cheaper: one t-variable less
// per dropped generator.
std::vector<Polynomial> minimal_generators(const RingPtr& ring,
                                           std::vector<Polynomial> gens,
                                           const std::vector<Polynomial>& K,
                                           const GBConfig& config = {});

ReesEquations rees_ideal(const IdealPresentation& P,
                         const GBConfig& config = {});

// The t-degree <= bound part of the equations, exact in that range. A
// profile computed from it lower-bounds the relation type: fresh
// degrees up to the bound are detected with certainty.
ReesEquations rees_ideal_truncated(const IdealPresentation& P, long bound,
                                   const GBConfig& config = {});

// The least N >= 1 such that L is generated in t-degrees <= N, found by
// descending-degree membership of the t-homogeneous reduced GB of L.
EquationsProfile relation_type(const IdealPresentation& P,
                               const GBConfig& config = {});
EquationsProfile relation_type(const ReesEquations& E,
                               const GBConfig& config = {});

EquationsProfile relation_type_quotient(const RingPtr& ring,
                                        const std::vector<Polynomial>& K,
                                        const std::vector<Polynomial>& gens,
                                        const GBConfig& config = {});

SyzygyModule linear_equations(const ReesEquations& E);

// I·R[y] + (y - g); by the invariance theorem its relation type equals
// rt(I) -- exercised as a property, never assumed.
IdealPresentation adjoin_variable_presentation(const IdealPresentation& P,
                                               const Polynomial& g);

// Exact check that every generator of E dies under t_i ↦ f_i·u mod K.
bool substitution_check(const ReesEquations& E, const GBConfig& config = {});

}  // namespace reltype
