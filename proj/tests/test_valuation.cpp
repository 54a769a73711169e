#include <doctest.h>

#include <random>

#include "qmval/valuation.hpp"
#include "support.hpp"

using namespace qmval;
using testsupport::germ;

TEST_CASE("skewness: figure-one branch points") {
  CHECK(skewness_pair(germ("y"), germ("y - x^2")) == Rat(2));
  CHECK(skewness_pair(germ("y - x^2"), germ("y^2 - x^3")) == Rat(3, 2));
  CHECK(skewness_pair(germ("(y^2-x^3)^3 - x^10"), germ("y^2 - x^3")) == Rat(5, 3));
  CHECK(skewness_pair(germ("y"), germ("y")).is_infinite());
  CHECK(skewness_pair(germ("y"), germ("2*y")).is_infinite());
}

TEST_CASE("skewness: symmetric and at least one") {
  std::vector<CurveGerm> pool = testsupport::irreducible_pool();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      ExtRat forward = skewness_pair(pool[i], pool[j]);
      CHECK(forward == skewness_pair(pool[j], pool[i]));
      CHECK(forward >= ExtRat{Rat(1)});
      CHECK(forward.is_infinite() ==
            imult(pool[i].poly(), pool[j].poly()).is_infinite());
    }
  }
}

TEST_CASE("inf_skewness") {
  std::vector<CurveGerm> single{germ("y")};
  CHECK(inf_skewness(single).is_infinite());

  std::vector<CurveGerm> pair{germ("y"), germ("y - x^2")};
  CHECK(inf_skewness(pair) == Rat(2));

  std::vector<CurveGerm> triple{germ("y"), germ("y - x^2"), germ("y^2 - x^3")};
  // min{2, 3/2, 3/2}: skew(y, y^2-x^3) = 3/(1*2) = 3/2.
  CHECK(inf_skewness(triple) == Rat(3, 2));

  std::vector<CurveGerm> same{germ("y"), germ("3*y")};
  CHECK(inf_skewness(same).is_infinite());

  CHECK_THROWS_AS(inf_skewness(std::vector<CurveGerm>{}), invalid_input);
}

TEST_CASE("qm_eval_irreducible") {
  QMValuation v(germ("y^2 - x^3"), ExtRat{Rat(3, 2)});
  CHECK(qm_eval_irreducible(v, germ("y - x^2")) == Rat(3, 2));

  QMValuation on_self(germ("y^2 - x^3"), ExtRat{Rat(7, 3)});
  CHECK(qm_eval_irreducible(on_self, germ("y^2 - x^3")) == Rat(14, 3));

  QMValuation curve_val(germ("y^2 - x^3"), ExtRat::infinity());
  CHECK(qm_eval_irreducible(curve_val, germ("y^2 - x^3")).is_infinite());
  // m(g) * skew = 1 * 3/2: the curve valuation I(C,g)/m(C).
  CHECK(qm_eval_irreducible(curve_val, germ("y - x^2")) == Rat(3, 2));

  CHECK_THROWS_AS(QMValuation(germ("y"), ExtRat{Rat(1, 2)}), invalid_input);
}

TEST_CASE("qm_eval_product") {
  QMValuation v(germ("y"), ExtRat{Rat(2)});
  std::vector<WeightedGerm> factors{{germ("x"), 1}, {germ("y"), 1}};
  // skew(y, x) = 1, so 1*min{2,1} + 1*2 = 3.
  CHECK(qm_eval_product(v, factors) == Rat(3));

  CHECK(qm_eval_product(v, std::vector<WeightedGerm>{}) == Rat(0));

  QMValuation w(germ("y^2 - x^3"), ExtRat{Rat(3, 2)});
  std::vector<WeightedGerm> squared{{germ("y - x^2"), 2}};
  CHECK(qm_eval_product(w, squared) == Rat(3));

  std::vector<WeightedGerm> bad{{germ("x"), 0}};
  CHECK_THROWS_AS(qm_eval_product(v, bad), invalid_input);
}

TEST_CASE("qm_equal") {
  CHECK(qm_equal(QMValuation(germ("y"), ExtRat{Rat(3, 2)}),
                 QMValuation(germ("y - x^2"), ExtRat{Rat(3, 2)})));
  CHECK_FALSE(qm_equal(QMValuation(germ("y"), ExtRat{Rat(3)}),
                       QMValuation(germ("y - x^2"), ExtRat{Rat(3)})));
  QMValuation v(germ("y^2 - x^3"), ExtRat{Rat(5, 3)});
  CHECK(qm_equal(v, v));
  CHECK_FALSE(qm_equal(v, QMValuation(germ("y^2 - x^3"), ExtRat{Rat(5, 2)})));
  CHECK_THROWS_AS(qm_equal(v, QMValuation(germ("y"), ExtRat::infinity())),
                  invalid_input);
}

TEST_CASE("property: evaluation is monotone in t and dominates multiplicity") {
  std::mt19937_64 rng(777);
  std::vector<CurveGerm> pool = testsupport::irreducible_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int round = 0; round < 80; ++round) {
    const CurveGerm& curve = pool[pick(rng)];
    const CurveGerm& target = pool[pick(rng)];
    Rat t1 = Rat(1) + testsupport::random_rat(rng, 6, 3);
    Rat t2 = t1 + testsupport::random_rat(rng, 4, 3);
    ExtRat low = qm_eval_irreducible(QMValuation(curve, ExtRat{t1}), target);
    ExtRat high = qm_eval_irreducible(QMValuation(curve, ExtRat{t2}), target);
    CHECK(low <= high);
    CHECK(low >= ExtRat{Rat(target.multiplicity())});
  }
}

TEST_CASE("property: qm_equal is an equivalence at fixed parameter") {
  std::mt19937_64 rng(778);
  std::vector<CurveGerm> pool = testsupport::irreducible_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int round = 0; round < 60; ++round) {
    Rat t = Rat(1) + testsupport::random_rat(rng, 5, 4);
    QMValuation a(pool[pick(rng)], ExtRat{t});
    QMValuation b(pool[pick(rng)], ExtRat{t});
    QMValuation c(pool[pick(rng)], ExtRat{t});
    CHECK(qm_equal(a, a));
    CHECK(qm_equal(a, b) == qm_equal(b, a));
    if (qm_equal(a, b) && qm_equal(b, c)) CHECK(qm_equal(a, c));
  }
}
