#include <doctest.h>

#include <random>

#include "qmval/monomial.hpp"
#include "qmval/parse.hpp"
#include "support.hpp"

using namespace qmval;

namespace {

const std::vector<std::string> kZ2{"z1", "z2"};

MPoly zpoly(const std::string& text) { return parse_poly(text, kZ2); }

MonomialWeight weight2(Rat a1, Rat a2) {
  return MonomialWeight::make({std::move(a1), std::move(a2)});
}

std::vector<Rat> rv(std::initializer_list<Rat> values) { return values; }

}  // namespace

TEST_CASE("ideal membership") {
  CHECK(ideal_member(zpoly("1"), weight2(1, 1), Rat(1)));       // 2 > 1
  CHECK_FALSE(ideal_member(zpoly("1"), weight2(2, 2), Rat(1))); // 1 <= 1
  CHECK(ideal_member(zpoly("z1"), weight2(1, 1), Rat(2)));      // 3/2 > 1
  CHECK_THROWS_AS(ideal_member(zpoly("z1"), weight2(1, 1), Rat(0)), invalid_input);
  CHECK_THROWS_AS(ideal_member(MPoly(2), weight2(1, 1), Rat(1)), invalid_input);
}

TEST_CASE("jumping numbers") {
  CHECK(jumping_number(zpoly("1"), weight2(1, 1)) == Rat(2));
  CHECK(jumping_number(MPoly::constant(1, Rat(1)),
                       MonomialWeight::make({Rat(2)})) == Rat(1, 2));
  CHECK(jumping_number(zpoly("z1"), weight2(2, 2)) == Rat(3, 2));
  CHECK(jumping_number(zpoly("z1 + z2^2"), weight2(1, 2)) == Rat(5, 2));
}

TEST_CASE("kiselman relative types") {
  CHECK(kiselman_sigma(zpoly("z1^3*z2^2"), weight2(Rat(1, 2), Rat(3))) ==
        Rat(3) / Rat(1, 2) + Rat(2) / Rat(3));
  CHECK(kiselman_sigma(zpoly("z1^4*z2^4"), weight2(1, 1)) == Rat(8));
  CHECK(kiselman_sigma(zpoly("z1^2*z2 - z1*z2^2"), weight2(Rat(1, 3), Rat(1, 2))) ==
        Rat(7));
  CHECK(kiselman_sigma(zpoly("5"), weight2(1, 1)) == Rat(0));
}

TEST_CASE("masked weights ignore inactive variables") {
  MonomialWeight masked =
      MonomialWeight::make_masked({Rat(2), Rat(1)}, {true, false});
  CHECK(kiselman_sigma(zpoly("z1^3*z2^5"), masked) == Rat(3, 2));
  CHECK(jumping_number(zpoly("z2^5"), masked) == Rat(1, 2));
  CHECK_THROWS_AS(MonomialWeight::make_masked({Rat(2)}, {false}), invalid_input);
  CHECK_THROWS_AS(MonomialWeight::make({Rat(0)}), invalid_input);
}

TEST_CASE("tian values") {
  TianValue a = tian_monomial(zpoly("1"), zpoly("z1"), weight2(1, 1), Rat(3));
  CHECK(a.formula == Rat(5));
  REQUIRE(a.exact.has_value());
  CHECK(*a.exact == Rat(5));
  CHECK(a.consistent);

  TianValue b = tian_monomial(zpoly("z1*z2"), zpoly("z1 + z2"), weight2(1, 1), Rat(0));
  CHECK(b.formula == jumping_number(zpoly("z1*z2"), weight2(1, 1)));

  TianValue c = tian_monomial(zpoly("1"), zpoly("z1 + z2"), weight2(1, 2), Rat(2));
  CHECK(c.formula == Rat(3, 2) + Rat(2) * Rat(1, 2));
  REQUIRE(c.exact.has_value());
  CHECK(*c.exact == Rat(5, 2));
  CHECK(c.consistent);

  TianValue d = tian_monomial(zpoly("1"), zpoly("z1"), weight2(1, 1), Rat(7, 2));
  CHECK_FALSE(d.exact.has_value());
  CHECK_THROWS_AS(tian_monomial(zpoly("1"), zpoly("z1"), weight2(1, 1), Rat(-1)),
                  invalid_input);
}

TEST_CASE("tian formula survives cancellation in the product") {
  // (z1+z2)(z1-z2) = z1^2 - z2^2 loses the mixed support point, but the
  // weighted-minimal part of a product is the product of weighted-minimal
  // parts, so the exact jump still matches the affine formula.
  std::mt19937_64 rng(611);
  for (int round = 0; round < 30; ++round) {
    MPoly g = testsupport::random_poly(rng, 3, false);
    MPoly f = testsupport::random_poly(rng, 3, false);
    MonomialWeight w = weight2(testsupport::random_rat(rng, 4, 3),
                               testsupport::random_rat(rng, 4, 3));
    std::uniform_int_distribution<int> exponent(0, 3);
    TianValue v = tian_monomial(g, f, w, Rat(exponent(rng)));
    REQUIRE(v.exact.has_value());
    CHECK(v.consistent);
  }
}

TEST_CASE("newton facets: triangle with an interior generator") {
  NewtonPolyhedron p = newton_facets({rv({Rat(1), Rat(0)}), rv({Rat(0), Rat(1)}),
                                      rv({Rat(1), Rat(1)})});
  REQUIRE(p.facets.size() == 3);
  CHECK(p.facets[0].normal == rv({Rat(0), Rat(1)}));
  CHECK(p.facets[0].offset == Rat(0));
  CHECK(p.facets[1].normal == rv({Rat(1), Rat(0)}));
  CHECK(p.facets[1].offset == Rat(0));
  CHECK(p.facets[2].normal == rv({Rat(1), Rat(1)}));
  CHECK(p.facets[2].offset == Rat(1));
}

TEST_CASE("newton facets: single point") {
  NewtonPolyhedron p = newton_facets({rv({Rat(2), Rat(3)})});
  REQUIRE(p.facets.size() == 2);
  CHECK(p.facets[0].normal == rv({Rat(0), Rat(1)}));
  CHECK(p.facets[0].offset == Rat(3));
  CHECK(p.facets[1].normal == rv({Rat(1), Rat(0)}));
  CHECK(p.facets[1].offset == Rat(2));
}

TEST_CASE("newton facets: segment hull") {
  NewtonPolyhedron p = newton_facets({rv({Rat(2), Rat(0)}), rv({Rat(0), Rat(3)})});
  REQUIRE(p.facets.size() == 3);
  CHECK(p.facets[2].normal == rv({Rat(3), Rat(2)}));
  CHECK(p.facets[2].offset == Rat(6));
}

TEST_CASE("newton facets: dimension guard") {
  CHECK_THROWS_AS(newton_facets({rv({Rat(1)})}, 0), invalid_input);
  CHECK_THROWS_AS(newton_facets({}), invalid_input);
}

TEST_CASE("relative types against fractional monomial weights") {
  FracMonomialWeight single = FracMonomialWeight::make({{Expvec{2, 3}, Rat(5, 2)}});
  CHECK(relative_type_frac({2, 3}, single) == Rat(5, 2));

  FracMonomialWeight counterexample = FracMonomialWeight::make(
      {{Expvec{1, 0}, Rat(1)}, {Expvec{0, 1}, Rat(1)}, {Expvec{1, 1}, Rat(1)}});
  CHECK(relative_type_frac({4, 4}, counterexample) == Rat(8));
  CHECK(relative_type_frac({3, 3}, counterexample) == Rat(6));

  FracMonomialWeight two_points = FracMonomialWeight::make(
      {{Expvec{1, 0}, Rat(1)}, {Expvec{0, 1}, Rat(1)}});
  CHECK(relative_type_frac({3, 3}, two_points) == Rat(6));

  CHECK_THROWS_AS(relative_type_frac({0, 0}, single), invalid_input);
  CHECK_THROWS_AS(FracMonomialWeight::make({{Expvec{0, 0}, Rat(1)}}),
                  invalid_input);
}

TEST_CASE("feasibility: unique solution") {
  LpResult r = feasibility_lp({{Expvec{1, 0}, Rat(1)}, {Expvec{0, 1}, Rat(2)}});
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == rv({Rat(1), Rat(2)}));
}

TEST_CASE("feasibility: infeasible with a checkable certificate") {
  std::vector<std::pair<Expvec, Rat>> rows{{Expvec{1, 1}, Rat(1)},
                                           {Expvec{2, 2}, Rat(3)}};
  LpResult r = feasibility_lp(rows);
  CHECK_FALSE(r.witness.has_value());
  REQUIRE(r.certificate.has_value());
  const auto& lambda = r.certificate->multipliers;
  REQUIRE(lambda.size() == 2);
  // sum lambda_j beta_j >= 0 componentwise while lambda . a < 0
  for (std::size_t c = 0; c < 2; ++c)
    CHECK(lambda[0] * Rat(rows[0].first[c]) + lambda[1] * Rat(rows[1].first[c]) >= 0);
  CHECK(lambda[0] * rows[0].second + lambda[1] * rows[1].second < 0);
}

TEST_CASE("feasibility: deterministic vertex tie-break") {
  LpResult r = feasibility_lp({{Expvec{2, 1}, Rat(4)}});
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == rv({Rat(2), Rat(0)}));
}

TEST_CASE("feasibility: dimension guard") {
  std::vector<std::pair<Expvec, Rat>> rows{{Expvec{1, 0, 0, 0, 0, 0, 0}, Rat(1)}};
  CHECK_THROWS_AS(feasibility_lp(rows), invalid_input);
}

TEST_CASE("monomial decision examples") {
  MonomialDecision yes = monomial_interp_decide(
      {{Expvec{1, 0}, Rat(1)}, {Expvec{0, 1}, Rat(2)}, {Expvec{1, 1}, Rat(3)}});
  REQUIRE(yes.accepted);
  CHECK(yes.witness == rv({Rat(1), Rat(2)}));
  CHECK(yes.criterion_value == Rat(6));

  MonomialDecision no = monomial_interp_decide(
      {{Expvec{1, 0}, Rat(1)}, {Expvec{0, 1}, Rat(2)}, {Expvec{1, 1}, Rat(4)}});
  REQUIRE_FALSE(no.accepted);
  CHECK(no.criterion_value == Rat(8));
  CHECK(no.criterion_required == Rat(7));
  CHECK(no.certificate.has_value());

  MonomialDecision single = monomial_interp_decide({{Expvec{2, 1}, Rat(4)}});
  REQUIRE(single.accepted);
  CHECK(single.witness == rv({Rat(2), Rat(0)}));
}

TEST_CASE("property: weight scaling rescales the values inversely") {
  std::mt19937_64 rng(606);
  for (int round = 0; round < 40; ++round) {
    MPoly f = testsupport::random_poly(rng, 4, false);
    Rat a1 = testsupport::random_rat(rng, 5, 4);
    Rat a2 = testsupport::random_rat(rng, 5, 4);
    Rat c = testsupport::random_rat(rng, 5, 4);
    MonomialWeight base = weight2(a1, a2);
    MonomialWeight scaled = weight2(c * a1, c * a2);
    CHECK(jumping_number(f, scaled) == jumping_number(f, base) / c);
    CHECK(kiselman_sigma(f, scaled) == kiselman_sigma(f, base) / c);
  }
}

TEST_CASE("property: sigma is a valuation on cancellation-free data") {
  std::mt19937_64 rng(607);
  for (int round = 0; round < 40; ++round) {
    MPoly f = testsupport::random_poly(rng, 3, false);
    Rat a1 = testsupport::random_rat(rng, 4, 3);
    Rat a2 = testsupport::random_rat(rng, 4, 3);
    MonomialWeight w = weight2(a1, a2);

    // monomial * generic never cancels
    MPoly m = MPoly::monomial(2, {2, 1}, Rat(3));
    CHECK(kiselman_sigma(m * f, w) ==
          kiselman_sigma(m, w) + kiselman_sigma(f, w));

    // disjoint supports: sigma(f + g) >= min
    MPoly g = MPoly::monomial(2, {9, 7}, Rat(1));
    if (f.coefficient({9, 7}) == 0)
      CHECK(kiselman_sigma(f + g, w) >=
            std::min(kiselman_sigma(f, w), kiselman_sigma(g, w)));
  }
}

TEST_CASE("property: tian is affine with slope sigma; jump-sigma bracket") {
  std::mt19937_64 rng(608);
  for (int round = 0; round < 40; ++round) {
    MPoly g = testsupport::random_poly(rng, 3, false);
    MPoly f = testsupport::random_poly(rng, 3, false);
    Rat a1 = testsupport::random_rat(rng, 4, 3);
    Rat a2 = testsupport::random_rat(rng, 4, 3);
    MonomialWeight w = weight2(a1, a2);

    Rat t1 = testsupport::random_rat(rng, 6, 3);
    Rat t2 = t1 + testsupport::random_rat(rng, 4, 3);
    Rat v1 = tian_monomial(g, f, w, t1).formula;
    Rat v2 = tian_monomial(g, f, w, t2).formula;
    CHECK(v2 >= v1);  // nondecreasing
    CHECK((v2 - v1) / (t2 - t1) == kiselman_sigma(f, w));  // affine slope

    // bracket: jump - sigma = sum over active of 1/a_j, and >= 0
    Rat bracket = jumping_number(f, w) - kiselman_sigma(f, w);
    CHECK(bracket == Rat(1) / a1 + Rat(1) / a2);
    CHECK(bracket >= 0);
  }
}

TEST_CASE("property: membership holds exactly below the jumping number") {
  std::mt19937_64 rng(609);
  for (int round = 0; round < 30; ++round) {
    MPoly f = testsupport::random_poly(rng, 3, false);
    MonomialWeight w = weight2(testsupport::random_rat(rng, 4, 3),
                               testsupport::random_rat(rng, 4, 3));
    Rat jump = jumping_number(f, w);
    for (Rat c : {Rat(jump / 2), Rat(jump - Rat(1, 7)), jump, Rat(jump + Rat(1, 7)),
                  Rat(2 * jump)}) {
      if (c <= 0) continue;
      CHECK(ideal_member(f, w, c) == (c < jump));
    }
  }
}

TEST_CASE("property: decision routes agree on random instances") {
  std::mt19937_64 rng(610);
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> exponent(0, 4);
  std::uniform_int_distribution<int> mode(0, 1);
  int accepted = 0, rejected = 0;
  for (int round = 0; round < 50; ++round) {
    int n = dim(rng);
    int m = count(rng);
    std::vector<std::pair<Expvec, Rat>> pairs;
    std::vector<Rat> witness;
    bool constructed = mode(rng) == 1;
    if (constructed)
      for (int i = 0; i < n; ++i) witness.push_back(testsupport::random_rat(rng, 3, 3));
    for (int j = 0; j < m; ++j) {
      Expvec beta(n, 0);
      bool zero = true;
      while (zero) {
        for (int i = 0; i < n; ++i) {
          beta[i] = exponent(rng);
          if (beta[i] != 0) zero = false;
        }
      }
      Rat a(0);
      if (constructed) {
        for (int i = 0; i < n; ++i) a += Rat(beta[i]) * witness[i];
      } else {
        a = testsupport::random_rat(rng, 6, 6);
      }
      pairs.emplace_back(std::move(beta), std::move(a));
    }
    // internal_error here would mean the two routes disagreed
    MonomialDecision decision = monomial_interp_decide(pairs);
    if (constructed) CHECK(decision.accepted);
    decision.accepted ? ++accepted : ++rejected;
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}
