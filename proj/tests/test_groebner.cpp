#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "reltype/groebner.hpp"
#include "reltype/parser.hpp"

using namespace reltype;

static Polynomial P(const char* s, const RingPtr& r) {
  return parse_polynomial(s, r);
}

TEST_CASE("textbook example with known reduced basis") {
  // In k[x,y], degrevlex: (x^3 - 2xy, x^2 y - 2y^2 + x) has the reduced
  // basis {x^2, xy, y^2 - x/2}.
  auto r = make_ring({}, {"x", "y"});
  auto gb = groebner_basis(r, {P("x^3 - 2*x*y", r), P("x^2*y - 2*y^2 + x", r)});
  REQUIRE(gb.elements.size() == 3);
  // Ascending leads: x^2 < x*y < y^2 is false under degrevlex
  // (x^2 > x*y > y^2), so sorted ascending: y^2 - 1/2 x first.
  CHECK(gb.elements[0] == P("y^2 - 1/2*x", r));
  CHECK(gb.elements[1] == P("x*y", r));
  CHECK(gb.elements[2] == P("x^2", r));
}

TEST_CASE("normal form properties") {
  auto r = make_ring({}, {"x", "y"});
  auto gb = groebner_basis(r, {P("x^2 - y", r), P("y^2 - x", r)});
  auto f = P("x^4 + x^2*y^2 - 3", r);
  auto nf = normal_form(f, gb.elements);
  // The remainder has no term divisible by a leading term.
  for (const auto& t : nf.terms())
    for (const auto& g : gb.elements)
      CHECK_FALSE(g.leading_monomial().divides(t.m));
  // f - nf lies in the ideal.
  Ideal I(r, gb.elements);
  CHECK(I.contains(f - nf));
  CHECK(normal_form(nf, gb.elements) == nf);
}

TEST_CASE("membership in a simple ideal") {
  auto r = make_ring({}, {"x", "y", "z"});
  Ideal I(r, {P("y^2 - x*z", r), P("x^2*y - z^2", r)});
  CHECK(I.contains(P("y^3 - x*y*z", r)));
  CHECK(I.contains(P("x^2*y^2 - y*z^2", r)));
  CHECK_FALSE(I.contains(P("x", r)));
  CHECK_FALSE(I.contains(P("y^2", r)));
  CHECK(I.contains(Polynomial::zero(r)));
}

TEST_CASE("zero and unit ideals") {
  auto r = make_ring({}, {"x"});
  Ideal Z(r, {});
  CHECK(Z.is_zero_ideal());
  CHECK_FALSE(Z.is_unit());
  Ideal U(r, {P("x", r), P("x - 1", r)});
  CHECK(U.is_unit());
  CHECK(U.contains(P("1", r)));
}

TEST_CASE("reduced basis is unique under generator shuffles") {
  auto r = make_ring({}, {"x", "y", "z"});
  std::vector<Polynomial> gens{
      P("x*y - z", r),       P("y*z - x", r), P("x^2 - y + z^2", r),
      P("z^3 - x*y + y", r), P("x + y + z", r)};
  auto ref = groebner_basis(r, gens).elements;
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 10; ++trial) {
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    // Also rescale randomly: the reduced monic basis must not care.
    for (auto& f : shuffled)
      f = f.scaled(Coeff::from_int(1 + (int)(rng() % 7), {}));
    CHECK(groebner_basis(r, shuffled).elements == ref);
  }
}

TEST_CASE("basis over GF(p) agrees with QQ on a stable example") {
  auto r = make_ring({}, {"x", "y"});
  auto rp = make_ring({32003}, {"x", "y"});
  auto gbq = groebner_basis(r, {P("x^3 - 2*x*y", r),
                                P("x^2*y - 2*y^2 + x", r)});
  auto gbp = groebner_basis(rp, {P("x^3 - 2*x*y", rp),
                                 P("x^2*y - 2*y^2 + x", rp)});
  REQUIRE(gbq.elements.size() == gbp.elements.size());
  for (std::size_t i = 0; i < gbq.elements.size(); ++i) {
    // Compare monomials; coefficients via reduction mod p.
    CHECK(gbq.elements[i].map_to(rp).monic() == gbp.elements[i]);
  }
}

TEST_CASE("degree bound aborts with a report") {
  auto r = make_ring({}, {"x", "y", "z"});
  GBConfig tight;
  tight.degree_bound = 2;
  CHECK_THROWS_AS(groebner_basis(r,
                                 {P("x^5 - y^2*z + x", r),
                                  P("x^2*y^3 - z^4 + y", r),
                                  P("z^5 - x*y + z", r)},
                                 tight),
                  ResourceAbort);
  try {
    groebner_basis(r,
                   {P("x^5 - y^2*z + x", r), P("x^2*y^3 - z^4 + y", r),
                    P("z^5 - x*y + z", r)},
                   tight);
  } catch (const ResourceAbort& e) {
    CHECK(e.stats.max_degree > 2);  // carries partial statistics
  }
}

TEST_CASE("ideal equality ignores presentation") {
  auto r = make_ring({}, {"x", "y"});
  Ideal A(r, {P("x", r), P("y", r)});
  Ideal B(r, {P("x + y", r), P("x - y", r)});
  Ideal C(r, {P("x", r), P("x*y", r)});
  CHECK(ideal_equal(A, B));
  CHECK_FALSE(ideal_equal(A, C));
}

TEST_CASE("homogeneous input stays homogeneous") {
  // Weighted grading preserved by the whole computation.
  auto r = make_ring({}, {"x", "y", "t1", "t2"}, {},
                     std::vector<long>{0, 0, 1, 1});
  std::vector<Polynomial> gens{P("y*t1 - x*t2", r),
                               P("x*t1^2 - y^2*t2^2", r)};
  for (const auto& f : gens) REQUIRE(f.is_homogeneous(r->weights()));
  auto gb = groebner_basis(r, gens);
  for (const auto& f : gb.elements) CHECK(f.is_homogeneous(r->weights()));
}
