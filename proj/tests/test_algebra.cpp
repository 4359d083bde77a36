#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reltype/parser.hpp"
#include "reltype/polynomial.hpp"

using namespace reltype;

static RingPtr qq3() { return make_ring({}, {"x", "y", "z"}); }

static Polynomial P(const char* s, const RingPtr& r) {
  return parse_polynomial(s, r);
}

TEST_CASE("coefficient arithmetic over QQ and GF(p)") {
  FieldDesc q{}, f7{7};
  CHECK(Coeff::parse("2/3", q) + Coeff::parse("1/6", q) ==
        Coeff::parse("5/6", q));
  CHECK(Coeff::parse("-4/6", q) == Coeff::parse("-2/3", q));
  CHECK(Coeff::parse("2/3", f7).to_string() == "3");  // 2 * 3^{-1} = 2*5 = 10
  CHECK(Coeff::from_int(-1, f7).res() == 6);
  CHECK(Coeff::from_int(3, f7).inv() * Coeff::from_int(3, f7) ==
        Coeff::one(f7));
  CHECK_THROWS_AS(Coeff::zero(q).inv(), std::domain_error);
}

TEST_CASE("primality check used by GF(p) validation") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(32003));
  CHECK(is_prime_u64(4294967291ull));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(32001));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime base 2..7
}

TEST_CASE("ring construction validates input") {
  CHECK_THROWS_AS(make_ring({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({}, {"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({4}, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({}, {"x", "y"}, {OrderSpec::Kind::Block, 2}),
                  std::invalid_argument);
  auto r = make_ring({}, {"x", "y"});
  CHECK(r->var_index("y") == 1);
  CHECK(r->var_index("w") == -1);
}

TEST_CASE("polynomial arithmetic identities") {
  auto r = qq3();
  auto f = P("x^2 - 2*x*y + y^2", r);
  auto g = P("x - y", r);
  CHECK(g * g == f);
  CHECK(f - f == Polynomial::zero(r));
  CHECK(g.pow(2) == f);
  CHECK(g.pow(0) == Polynomial::constant(r, 1));
  CHECK((f + g) * g == f * g + g * g);
  CHECK(-g + g == Polynomial::zero(r));
}

TEST_CASE("term order properties") {
  auto lex = make_ring({}, {"x", "y"}, {OrderSpec::Kind::Lex});
  auto drl = make_ring({}, {"x", "y"});
  // lex: x > y^5; degrevlex: y^5 > x.
  CHECK(P("x + y^5", lex).leading_term().m ==
        P("x", lex).leading_term().m);
  CHECK(P("x + y^5", drl).leading_term().m ==
        P("y^5", drl).leading_term().m);
}

TEST_CASE("degrees and homogeneous components") {
  auto r = qq3();
  auto f = P("x^3 + x*y - z + 4", r);
  CHECK(f.total_degree() == 3);
  CHECK(f.degree_in(0) == 3);
  CHECK(f.degree_in(2) == 1);
  CHECK(Polynomial::zero(r).total_degree() == kDegreeMinusInfinity);

  auto comps = f.homogeneous_components({1, 1, 1});
  REQUIRE(comps.size() == 4);
  CHECK(comps[0].first == 0);
  CHECK(comps[1].first == 1);
  CHECK(comps[2].first == 2);
  CHECK(comps[3].first == 3);
  Polynomial sum = Polynomial::zero(r);
  for (auto& [d, p] : comps) sum = sum + p;
  CHECK(sum == f);

  CHECK(P("x^2 + y*z", r).is_homogeneous({1, 1, 1}));
  CHECK_FALSE(f.is_homogeneous({1, 1, 1}));
  // Weighted: x has weight 0, so x^3 - z is homogeneous of degree... no:
  CHECK(P("x^5 + z", r).is_homogeneous({0, 0, 1}) == false);
  CHECK(P("x^5*z + z", r).is_homogeneous({0, 0, 1}));
}

TEST_CASE("substitution is a ring homomorphism") {
  auto r = qq3();
  auto target = make_ring({}, {"t"});
  Polynomial t = Polynomial::variable(target, 0);
  std::vector<Polynomial> im{t.pow(3), t.pow(4), t.pow(5)};
  auto f = P("y^2 - x*z", r);
  CHECK(f.substitute(im).is_zero());
  auto g = P("x*y + 1", r);
  CHECK(g.substitute(im) == parse_polynomial("t^7 + 1", target));
  CHECK((f * g).substitute(im) == f.substitute(im) * g.substitute(im));
  CHECK((f + g).substitute(im) == f.substitute(im) + g.substitute(im));
}

TEST_CASE("map_to re-homes by variable name") {
  auto r = make_ring({}, {"x", "y"});
  auto big = make_ring({}, {"w", "y", "x"});
  auto f = P("x^2 - y", r);
  auto g = f.map_to(big);
  CHECK(g == parse_polynomial("x^2 - y", big));
  CHECK_THROWS(parse_polynomial("w", big).map_to(r));
}

TEST_CASE("string round-trip") {
  auto r = qq3();
  for (const char* s : {"x^2 - 1/3*y + 5", "-x*y*z", "0", "7/2",
                        "x^10 - y^10 + z", "-1/2*x + y^3*z^2"}) {
    auto f = P(s, r);
    CHECK(parse_polynomial(f.to_string(), r) == f);
  }
  auto f7 = make_ring({7}, {"x"});
  auto f = parse_polynomial("5*x - 3", f7);
  CHECK(parse_polynomial(f.to_string(), f7) == f);
}

TEST_CASE("exact division") {
  auto r = qq3();
  auto f = P("x^2 - y^2", r);
  auto g = P("x + y", r);
  auto q = divide_exact(f, g);
  REQUIRE(q.has_value());
  CHECK(*q * g == f);
  CHECK_FALSE(divide_exact(P("x^2 + y", r), g).has_value());
  CHECK_THROWS(divide_exact(f, Polynomial::zero(r)));
}

TEST_CASE("multivariate gcd with divide-back oracle") {
  auto r = qq3();
  auto cases = std::vector<std::pair<const char*, std::pair<const char*, const char*>>>{
      {"x + y", {"x - y", "x^2 + x*y"}},
      {"x^2 + y", {"z - 1", "x*y"}},
      {"x*y*z", {"x^2 - 1", "y + z"}},
  };
  for (auto& [gs, fg] : cases) {
    auto g0 = P(gs, r);
    auto a = g0 * P(fg.first, r);
    auto b = g0 * P(fg.second, r);
    auto g = gcd_multivariate(a, b);
    // g is a common divisor and is divisible by g0.
    CHECK(divide_exact(a, g).has_value());
    CHECK(divide_exact(b, g).has_value());
    CHECK(divide_exact(g, g0.monic()).has_value());
  }
  CHECK(gcd_multivariate(Polynomial::zero(r), Polynomial::zero(r)).is_zero());
  CHECK(gcd_multivariate(P("x", r), Polynomial::zero(r)) == P("x", r));
  // Coprime inputs give a constant.
  CHECK(gcd_multivariate(P("x + 1", r), P("y + 1", r)).is_constant());
}

TEST_CASE("rational to GF(p) coefficient conversion") {
  FieldDesc f5{5};
  // -7/3 mod 5: -7 = 3, 3^{-1} = 2, 3*2 = 6 = 1.
  CHECK(convert_coeff(Coeff::parse("-7/3", {}), f5) == Coeff::from_int(1, f5));
  CHECK(convert_coeff(Coeff::parse("10", {}), f5).is_zero());
  CHECK_THROWS(convert_coeff(Coeff::parse("1/5", {}), f5));
}
