#include <cmath>
#include <random>

#include "doctest.h"
#include "resconv/errors.hpp"
#include "resconv/instances.hpp"
#include "resconv/monotones.hpp"
#include "support.hpp"

using namespace resconv;
using resconv::testing::R;

TEST_CASE("value arithmetic mixes exact and real values") {
  const MonotoneValue a = R(1, 3);
  const MonotoneValue b = 1.0 / 3.0;
  CHECK(value_equal(a, b));
  CHECK_FALSE(value_less(a, b));
  CHECK(value_less(MonotoneValue(R(1, 4)), MonotoneValue(R(1, 3))));
  CHECK(std::holds_alternative<Rational>(value_add(MonotoneValue(R(1, 2)), MonotoneValue(R(1, 3)))));
  CHECK(std::get<Rational>(value_add(MonotoneValue(R(1, 2)), MonotoneValue(R(1, 3)))) == R(5, 6));
  CHECK(to_double(value_max(MonotoneValue(R(1, 4)), MonotoneValue(0.5))) == doctest::Approx(0.5));
  CHECK(to_double(value_sub(MonotoneValue(2.5), MonotoneValue(R(1, 2)))) == doctest::Approx(2.0));
}

TEST_CASE("built-in monotones on food") {
  const VectorTheory food = VectorTheory::food();
  const auto box = food.enumerate_up_to(3);
  for (const char *spec : {"component:0", "component:1", "total"}) {
    const Monotone m = builtin_monotone(spec, MonotoneClass::Additive, food);
    // infinite theory: no claim beyond the sample
    CHECK(verify_monotone(m, food, box).status() == "unrefuted on sample");
    CHECK_FALSE(classify(m, food, box).refuted());
  }
  // max is monotone for food but not additive
  const Monotone mx = builtin_monotone("max", MonotoneClass::Additive, food);
  CHECK_FALSE(verify_monotone(mx, food, box).refuted());
  CHECK(classify(mx, food, box).refuted());
  CHECK_THROWS_AS(builtin_monotone("nonsense", MonotoneClass::General, food), InputError);
  CHECK_THROWS_AS(monotone_class_from_string("sideways"), InputError);
}

TEST_CASE("a non-monotone valuation is refuted with a witness pair") {
  const VectorTheory food = VectorTheory::food();
  const Monotone neg("neg", MonotoneClass::General,
                     [&](const Term &t) { return MonotoneValue(Rational(-std::get<NatVector>(t)[0])); });
  const PropertyReport r = verify_monotone(neg, food, food.enumerate_up_to(2));
  REQUIRE(r.refuted());
  REQUIRE(r.witness.size() == 2);
  CHECK(food.geq(r.witness[0], r.witness[1]).is_proven());
}

TEST_CASE("supremal monotones on proficiency are shifted to vanish at zero") {
  const VectorTheory prof = VectorTheory::proficiency();
  const Monotone m = builtin_monotone("max", MonotoneClass::Supremal, prof);
  CHECK(value_equal(m(prof.zero()), MonotoneValue(R(0))));
  CHECK_FALSE(classify(m, prof, prof.enumerate_up_to(3)).refuted());
  CHECK_FALSE(classify(builtin_monotone("total", MonotoneClass::Supremal, prof), prof, prof.enumerate_up_to(3)).decision.is_proven());
}

TEST_CASE("entropy is an additive monotone for randomness") {
  const RandomnessTheory t;
  const auto sample = t.enumerate_up_to(3);
  const Monotone h = builtin_monotone("entropy", MonotoneClass::Additive, t);
  CHECK_FALSE(verify_monotone(h, t, sample).refuted());
  CHECK_FALSE(classify(h, t, sample).refuted());
}

TEST_CASE("complete families on generated tables") {
  std::mt19937_64 rng(50);
  for (int i = 0; i < 60; ++i) {
    const FiniteTheoryTable t = random_theory_table(rng, 6);
    const auto fam = complete_family(t);
    CHECK(fam.size() == t.carrier);
    CHECK_FALSE(completeness_violation(t, fam).has_value());
    // the family is made of monotones
    const TableTheory th(t);
    for (const auto &m : fam) CHECK_FALSE(verify_monotone(m, th, *th.carrier()).refuted());
    // dropping a non-redundant member can break completeness, never the converse
    if (t.carrier > 1) {
      auto partial = fam;
      partial.pop_back();
      const auto v = completeness_violation(t, partial);
      if (v) CHECK_FALSE(t.geq[v->first][v->second]);
    }
  }
}

TEST_CASE("food rate 2 matches the component bounds") {
  const VectorTheory food = VectorTheory::food();
  std::vector<Monotone> ms{builtin_monotone("component:0", MonotoneClass::Additive, food),
                           builtin_monotone("component:1", MonotoneClass::Additive, food)};
  const RateResult r = rate(food, NatVector{2, 3}, NatVector{1, 1}, 8, ms);
  CHECK(r.best == R(2));
  REQUIRE(r.upper_bound.has_value());
  CHECK(value_equal(*r.upper_bound, MonotoneValue(R(2))));
  CHECK(r.exact);
}

TEST_CASE("the monotone bound is never beaten on food") {
  const VectorTheory food = VectorTheory::food();
  std::vector<Monotone> ms{builtin_monotone("component:0", MonotoneClass::Additive, food),
                           builtin_monotone("component:1", MonotoneClass::Additive, food),
                           builtin_monotone("total", MonotoneClass::Additive, food)};
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::int64_t> d(0, 4);
  for (int i = 0; i < 40; ++i) {
    const NatVector a{d(rng), d(rng)};
    const NatVector b{d(rng) + 1, d(rng)};
    const RateResult r = rate(food, a, b, 4, ms);
    for (const auto &m : ms) CHECK(r.best.to_double() * to_double(m(b)) <= to_double(m(a)) + kTolerance);
  }
}

TEST_CASE("randomness rate equals the entropy bound") {
  const RandomnessTheory t;
  const Monotone h = builtin_monotone("entropy", MonotoneClass::Additive, t);
  const RateResult r = rate(t, ProbVector::uniform(4), ProbVector::uniform(2), 8, {h});
  CHECK(r.best == R(2));
  REQUIRE(r.upper_bound.has_value());
  CHECK(std::abs(to_double(*r.upper_bound) - 2.0) < 1e-9);
}

TEST_CASE("minimal rate and activation search") {
  const VectorTheory food = VectorTheory::food();
  const RateResult r = minimal_rate(food, NatVector{2, 2}, NatVector{1, 1}, 4);
  REQUIRE(r.best_pair.has_value());
  CHECK(r.best == R(1, 4));
  // food is catalysis-free and cancellative, so there is no activation
  CHECK_FALSE(find_activation(food, NatVector{1, 0}, NatVector{0, 1}, 4).has_value());
}

TEST_CASE("rate JSON") {
  const VectorTheory food = VectorTheory::food();
  const auto j = to_json(rate(food, NatVector{2, 3}, NatVector{1, 1}, 4));
  CHECK(j.contains("best"));
  CHECK(j.contains("caps"));
}
