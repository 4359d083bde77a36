// End-to-end acceptance checks: one summary line per criterion.
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "reltype/constructions.hpp"
#include "reltype/parser.hpp"

using namespace reltype;

namespace {

int failures = 0;

void report(int num, const char* what, bool ok, double secs,
            const std::string& detail = "") {
  std::printf("%s  %2d  %-36s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", num, what,
              secs, detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class Fn>
void criterion(int num, const char* what, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  report(num, what, ok, secs, detail);
}

Polynomial P(const std::string& s, const RingPtr& r) {
  return parse_polynomial(s, r);
}

EquationsProfile rt_of(const RingPtr& r, const std::vector<Polynomial>& gens,
                       const GBConfig& cfg = {}) {
  return relation_type(IdealPresentation(r, gens), cfg);
}

// The four linear-type binomial prime curves used throughout.
std::vector<HNIdeal> hn_four() {
  return {herzog_northcott({2, 2, 1}, {1, 1, 1}),
          herzog_northcott({1, 1, 1}, {2, 1, 1}),
          herzog_northcott({1, 1, 1}, {1, 2, 1}),
          herzog_northcott({1, 1, 1}, {1, 1, 2})};
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, unsigned max_terms,
                       unsigned max_deg) {
  std::vector<Term> ts;
  unsigned nterms = 1 + rng() % max_terms;
  FieldDesc fd = r->field();
  for (unsigned t = 0; t < nterms; ++t) {
    unsigned budget = 1 + rng() % max_deg;
    Monomial mm(r->arity());
    unsigned deg = 0;
    while (deg < budget) {
      std::size_t v = rng() % r->arity();
      mm.set(v, mm[v] + 1);
      ++deg;
    }
    int c = 1 + (int)(rng() % 5);
    if (rng() % 2) c = -c;
    ts.push_back({Coeff::from_int(c, fd), std::move(mm)});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

// Small random proper ideals: the corpus source for criteria 8 and 9.
// Randomly drawn ideals occasionally have an intractable Rees
// computation, so callers probe each candidate under a timeout and
// discard the expensive ones; the fixed seed keeps the surviving
// corpus deterministic.
struct CorpusInstance {
  RingPtr ring;
  std::vector<Polynomial> gens;
};

CorpusInstance draw_instance(std::mt19937& rng) {
  std::vector<std::vector<std::string>> var_sets{
      {"x", "y"}, {"x", "y", "z"}};
  for (;;) {
    auto ring = make_ring({}, var_sets[rng() % var_sets.size()]);
    unsigned ngens = 2 + rng() % 2;
    std::vector<Polynomial> gens;
    for (unsigned i = 0; i < ngens; ++i) {
      auto f = random_poly(ring, rng, 4, 3);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    Ideal I(ring, gens);
    if (I.is_unit() || I.is_zero_ideal()) continue;
    return {ring, gens};
  }
}

}  // namespace

int main() {
  criterion(1, "power family rt = p", [](std::string& detail) {
    auto r = make_ring({}, {"x", "y"});
    for (unsigned p = 1; p <= 4; ++p) {
      std::vector<Polynomial> gens{P("x^" + std::to_string(p), r),
                                   P("y^" + std::to_string(p), r)};
      if (p >= 2)
        gens.push_back(P("x^" + std::to_string(p - 1) + "*y", r));
      auto prof = rt_of(r, gens);
      if (prof.relation_type != p) {
        detail = "p=" + std::to_string(p) + " gave rt=" +
                 std::to_string(prof.relation_type);
        return false;
      }
    }
    return true;
  });

  criterion(2, "even cycle edge ideals", [](std::string& detail) {
    auto c4 = cycle_edge_ideal(4);
    auto p4 = rt_of(c4.ring(), c4.gens());
    if (p4.relation_type != 2) {
      detail = "4-cycle rt=" + std::to_string(p4.relation_type);
      return false;
    }
    auto c6 = cycle_edge_ideal(6);
    auto p6 = rt_of(c6.ring(), c6.gens());
    if (p6.relation_type != 3) {
      detail = "6-cycle rt=" + std::to_string(p6.relation_type);
      return false;
    }
    return true;
  });

  criterion(3, "cuspidal cubic quotient ring", [](std::string& detail) {
    auto r = make_ring({}, {"x", "y"});
    std::vector<Polynomial> K{P("x^3 - y^2", r)};
    auto smooth = relation_type_quotient(r, K, {P("x - 1", r), P("y - 1", r)});
    auto cusp = relation_type_quotient(r, K, {P("x", r), P("y", r)});
    if (smooth.relation_type != 1 || cusp.relation_type != 2) {
      detail = "smooth rt=" + std::to_string(smooth.relation_type) +
               ", cusp rt=" + std::to_string(cusp.relation_type);
      return false;
    }
    return true;
  });

  criterion(4, "linear type families", [](std::string& detail) {
    auto r2 = make_ring({}, {"x", "y"});
    if (rt_of(r2, {P("x", r2), P("y", r2)}).relation_type != 1) {
      detail = "(x,y)";
      return false;
    }
    auto r3 = make_ring({}, {"x", "y", "z"});
    if (rt_of(r3, {P("x", r3), P("y", r3), P("z", r3)}).relation_type != 1) {
      detail = "(x,y,z)";
      return false;
    }
    int idx = 0;
    for (const auto& J : hn_four()) {
      ++idx;
      if (!J.gcd_m_is_one) {
        detail = "J" + std::to_string(idx) + " gcd(m) != 1";
        return false;
      }
      if (rt_of(J.ring, J.gens).relation_type != 1) {
        detail = "J" + std::to_string(idx) + " not linear type";
        return false;
      }
    }
    return true;
  });

  criterion(5, "curve intersection pipeline", [](std::string& detail) {
    // I = p(3,4,5) ∩ p(3,4,9): four generators, one fresh cubic equation.
    auto pn = monomial_curve_ideal(3, 4, 5).ideal;
    auto pm = monomial_curve_ideal(3, 4, 9).ideal;
    auto r = pn.ring();
    std::vector<Polynomial> pm_gens;
    for (const auto& f : pm.gens()) pm_gens.push_back(f.map_to(r));
    Ideal I = intersect(pn, Ideal(r, pm_gens));
    if (!I.contains(P("x^4 - y^3", r))) {
      detail = "x^4 - y^3 missing from the intersection";
      return false;
    }
    std::vector<Polynomial> f{
        P("x^4 - y^3", r),
        P("-x^4*z + x^3*y^2 + x*z^2 - y^2*z", r),
        P("-x^6 + x^3*y*z + x^3*z - y*z^2", r),
        P("-x^5*y + x^3*z^2 + x^2*y*z - z^3", r)};
    if (!ideal_equal(I, Ideal(r, f))) {
      detail = "intersection differs from the four stated generators";
      return false;
    }
    PolyMatrix eta(r, 4, 3,
                   {P("z - x^3", r), P("0", r), P("0", r),
                    P("-y", r), P("z", r), P("-x^2", r),
                    P("-x", r), P("-y", r), P("z", r),
                    P("0", r), P("x", r), P("-y", r)});
    auto rep = expected_equations_check(IdealPresentation(r, f), eta);
    if (!rep.holds) {
      detail = "expected equations do not generate";
      return false;
    }
    if (rep.profile.relation_type != 3 ||
        rep.profile.fresh_degrees != std::set<long>{3}) {
      detail = "rt=" + std::to_string(rep.profile.relation_type);
      return false;
    }
    return true;
  });

  criterion(6, "space curves", [](std::string& detail) {
    auto kt = make_ring({}, {"t"});
    Polynomial t = Polynomial::variable(kt, 0);
    auto c1 = parametrized_curve_ideal(
        {t.pow(6), t.pow(8), t.pow(10) + t.pow(11)});
    auto p1 = rt_of(c1.ring(), c1.gens());
    if (p1.relation_type != 3) {
      detail = "(t^6, t^8, t^10 + t^11) rt=" +
               std::to_string(p1.relation_type);
      return false;
    }
    auto c2 = parametrized_curve_ideal(
        {t.pow(6), t.pow(7) + t.pow(10), t.pow(8)});
    auto p2 = rt_of(c2.ring(), c2.gens());
    if (p2.relation_type != 3) {
      detail = "(t^6, t^7 + t^10, t^8) rt=" + std::to_string(p2.relation_type);
      return false;
    }
    auto mc = monomial_curve_ideal(3, 4, 5);
    if (rt_of(mc.ideal.ring(), mc.ideal.gens()).relation_type != 1) {
      detail = "(t^3, t^4, t^5) not linear type";
      return false;
    }
    // Over GF(2) the first curve's vanishing ideal collapses to a
    // regular sequence.
    auto r2 = make_ring({2}, {"x", "y", "z"});
    if (rt_of(r2, {P("x + y", r2), P("z", r2)}).relation_type != 1) {
      detail = "(x + y, z) over GF(2)";
      return false;
    }
    return true;
  });

  criterion(7, "dichotomy for prime intersections", [](std::string& detail) {
    auto four = [](const FieldDesc& fd) {
      return std::vector<HNIdeal>{herzog_northcott({2, 2, 1}, {1, 1, 1}, fd),
                                  herzog_northcott({1, 1, 1}, {2, 1, 1}, fd),
                                  herzog_northcott({1, 1, 1}, {1, 2, 1}, fd),
                                  herzog_northcott({1, 1, 1}, {1, 1, 2}, fd)};
    };
    auto pair_gens = [](const std::vector<HNIdeal>& hs, int i, int j) {
      auto r = hs[0].ring;
      auto gens_in = [&](const HNIdeal& J) {
        std::vector<Polynomial> g;
        for (const auto& f : J.gens) g.push_back(f.map_to(r));
        return g;
      };
      Ideal I =
          intersect(Ideal(r, gens_in(hs[i])), Ideal(r, gens_in(hs[j])));
      return minimal_generators(r, I.gens(), {});
    };

    auto hq = four({});
    // The two tractable pairs compute exactly over the rationals.
    for (auto [i, j] : {std::pair<int, int>{0, 1}, {0, 3}}) {
      auto prof = rt_of(hq[0].ring, pair_gens(hq, i, j));
      if (prof.relation_type != 1) {
        detail = "J" + std::to_string(i + 1) + "*J" + std::to_string(j + 1) +
                 " rt=" + std::to_string(prof.relation_type);
        return false;
      }
    }
    // J1*J3 over the rationals via the t-degree-3 truncation, which
    // reports fresh degrees <= 3 exactly: no fresh quadric (so not rt
    // 2, and syzygetic), and a fresh cubic (so rt >= 3).
    {
      auto E = rees_ideal_truncated(
          IdealPresentation(hq[0].ring, pair_gens(hq, 0, 2)), 3);
      auto prof = relation_type(E);
      if (prof.fresh_degrees.count(2) || !prof.fresh_degrees.count(3)) {
        detail = "J1*J3 violates the dichotomy";
        return false;
      }
    }
    // Remaining pairs over a large prime field: never a fresh quadric.
    auto hp = four(FieldDesc{32003});
    for (auto [i, j] : {std::pair<int, int>{1, 2}, {1, 3}, {2, 3}}) {
      auto E = rees_ideal_truncated(
          IdealPresentation(hp[0].ring, pair_gens(hp, i, j)), 3);
      if (relation_type(E).fresh_degrees.count(2)) {
        detail = "J" + std::to_string(i + 1) + "*J" + std::to_string(j + 1) +
                 " has a fresh quadric";
        return false;
      }
    }
    return true;
  });

  criterion(8, "invariance corpus", [](std::string& detail) {
    std::mt19937 rng(20240817);
    GBConfig budget;
    budget.timeout_seconds = 20;
    int checked = 0, drawn = 0;
    while (checked < 20) {
      if (++drawn > 200) {
        detail = "could not assemble the corpus";
        return false;
      }
      auto inst = draw_instance(rng);
      IdealPresentation pres(inst.ring, inst.gens);
      auto padded = inst.gens;
      padded.push_back(random_poly(inst.ring, rng, 2, 1) * inst.gens[0]);
      if (padded.back().is_zero()) padded.pop_back();
      auto g = random_poly(inst.ring, rng, 2, 2);
      std::string tag = "instance " + std::to_string(checked);
      try {
        auto base = relation_type(pres, budget);

        // (a) a redundant generator changes nothing.
        auto pa =
            relation_type(IdealPresentation(inst.ring, padded), budget);
        if (pa.relation_type != base.relation_type) {
          detail = tag + ": redundant generator changed rt";
          return false;
        }

        // (b) presenting the same quotient with one extra variable.
        auto pb = relation_type(adjoin_variable_presentation(pres, g),
                                budget);
        if (pb.relation_type != base.relation_type) {
          detail = tag + ": adjoined variable changed rt";
          return false;
        }

        // (c) trinomial rewriting of the generators.
        auto tri = trinomialize(pres);
        auto pc = relation_type(
            IdealPresentation(tri.ext_ring, tri.gens), budget);
        if (pc.relation_type != base.relation_type) {
          detail = tag + ": trinomialization changed rt";
          return false;
        }
      } catch (const ResourceAbort&) {
        continue;  // intractable draw; replaced by the next one
      }
      ++checked;
    }
    return true;
  });

  criterion(9, "engine oracles", [](std::string& detail) {
    std::mt19937 rng(987654);
    std::vector<CorpusInstance> corpus;
    while (corpus.size() < 6) corpus.push_back(draw_instance(rng));

    // Reduced bases do not depend on the generator order.
    for (const auto& inst : corpus) {
      auto ref = groebner_basis(inst.ring, inst.gens).elements;
      auto shuffled = inst.gens;
      for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        if (groebner_basis(inst.ring, shuffled).elements != ref) {
          detail = "reduced basis depends on generator order";
          return false;
        }
      }
    }

    // Intersection and colon agree with pointwise membership.
    for (int inst = 0; inst < 3; ++inst) {
      auto r = make_ring({}, {"x", "y", "z"});
      Ideal A(r, {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)});
      Ideal B(r, {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)});
      if (A.is_unit() || B.is_unit()) continue;
      Ideal C = intersect(A, B);
      Polynomial g = random_poly(r, rng, 2, 2);
      if (g.is_zero()) g = P("x", r);
      Ideal Q = colon(A, g);
      for (int s = 0; s < 50; ++s) {
        Polynomial f = random_poly(r, rng, 3, 3);
        if (rng() % 2) f = f * A.gens()[rng() % 2];  // seed some members
        if (C.contains(f) != (A.contains(f) && B.contains(f))) {
          detail = "intersection membership mismatch";
          return false;
        }
        if (Q.contains(f) != A.contains(f * g)) {
          detail = "colon membership mismatch";
          return false;
        }
      }
    }

    // Every emitted equation is t-homogeneous and dies on substitution.
    GBConfig budget;
    budget.timeout_seconds = 20;
    int checked = 0;
    for (const auto& inst : corpus) {
      if (checked == 3) break;
      try {
        auto E = rees_ideal(IdealPresentation(inst.ring, inst.gens), budget);
        for (const auto& f : E.generators)
          if (!f.is_homogeneous(E.s_ring->weights())) {
            detail = "equation not t-homogeneous";
            return false;
          }
        if (!substitution_check(E, budget)) {
          detail = "equation survives the defining substitution";
          return false;
        }
        ++checked;
      } catch (const ResourceAbort&) {
        // Intractable draw; the next corpus member takes its place.
      }
    }
    if (checked < 3) {
      detail = "too few tractable corpus members";
      return false;
    }
    return true;
  });

  criterion(10, "principal factor stripping", [](std::string& detail) {
    std::mt19937 rng(55555);
    GBConfig budget;
    budget.timeout_seconds = 20;
    auto r = make_ring({}, {"x", "y"});
    int done = 0, drawn = 0;
    while (done < 10) {
      if (++drawn > 200) {
        detail = "could not assemble the pair corpus";
        return false;
      }
      // g: a nonconstant polynomial; L: an ideal with coprime generators.
      Polynomial g = random_poly(r, rng, 2, 2);
      if (g.is_zero() || g.is_constant()) continue;
      std::vector<Polynomial> L_gens{random_poly(r, rng, 3, 2),
                                     random_poly(r, rng, 3, 2)};
      if (L_gens[0].is_zero() || L_gens[1].is_zero()) continue;
      if (!gcd_multivariate(L_gens[0], L_gens[1]).is_constant()) continue;
      Ideal L(r, L_gens);
      if (L.is_unit()) continue;
      Ideal gL = product_ideal(g, L);

      try {
        auto a = rt_of(r, gL.gens(), budget);
        auto b = rt_of(r, L.gens(), budget);
        if (a.relation_type != b.relation_type) {
          detail = "rt(gL) != rt(L) at pair " + std::to_string(done);
          return false;
        }
        auto strip = strip_principal_part(gL, budget);
        if (strip.g != g.monic()) {
          detail = "recovered factor differs at pair " + std::to_string(done);
          return false;
        }
        if (!strip.factorization_exact || !ideal_equal(strip.factor, L)) {
          detail = "recovered ideal differs at pair " + std::to_string(done);
          return false;
        }
      } catch (const ResourceAbort&) {
        continue;  // intractable draw; replaced by the next one
      }
      ++done;
    }
    return true;
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed"
                                    : "some criteria FAILED");
  return failures == 0 ? 0 : 1;
}
