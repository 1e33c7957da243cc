#include <random>

#include "doctest.h"
#include "resconv/errors.hpp"
#include "resconv/instances.hpp"
#include "support.hpp"

using namespace resconv;
using resconv::testing::R;

TEST_CASE("food is componentwise and additive") {
  const VectorTheory food = VectorTheory::food();
  CHECK(food.geq(NatVector{2, 3}, NatVector{1, 1}).is_proven());
  CHECK(food.geq(NatVector{1, 1}, NatVector{2, 0}).is_refuted());
  CHECK(std::get<NatVector>(food.combine(NatVector{1, 2}, NatVector{3, 0})) == NatVector{4, 2});
  CHECK(food.enumerate_up_to(4).size() == 25);
  CHECK(food.structural_proof("catalysis-free").has_value());
  CHECK_FALSE(food.structural_proof("quality-like").has_value());
}

TEST_CASE("proficiency combines by maximum") {
  const VectorTheory prof = VectorTheory::proficiency();
  CHECK(std::get<NatVector>(prof.combine(NatVector{1, 2}, NatVector{3, 0})) == NatVector{3, 2});
  CHECK(prof.geq(NatVector{0, 0}, NatVector{1, 0}).is_refuted());
  CHECK(prof.geq(prof.combine(NatVector{0, 0}, NatVector{1, 0}), prof.combine(NatVector{1, 0}, NatVector{1, 0})).is_proven());
  CHECK_FALSE(prof.structural_proof("catalysis-free").has_value());
}

TEST_CASE("vector terms are validated") {
  const VectorTheory food = VectorTheory::food();
  CHECK_THROWS_AS(food.parse_term(nlohmann::json::array({1, 2, 3})), InputError);
  CHECK_THROWS_AS(food.parse_term(nlohmann::json::array({1, -2})), InputError);
}

TEST_CASE("ProbVector rejects bad distributions") {
  CHECK_THROWS_AS(ProbVector({R(1, 2), R(1, 3)}), InputError);
  CHECK_THROWS_AS(ProbVector({R(3, 2), R(-1, 2)}), InputError);
  CHECK(ProbVector::uniform(4).spectrum() == std::vector<Rational>(4, R(1, 4)));
}

TEST_CASE("randomness examples") {
  const auto u4 = ProbVector::uniform(4);
  const auto u2 = ProbVector::uniform(2);
  const auto d = deterministic_convertible(u4, u2);
  REQUIRE(d.decision.is_proven());
  CHECK(d.blocks.size() == 2);
  CHECK(deterministic_convertible(u2, u4).decision.is_refuted());
  // a biased coin cannot be made fair by deterministic processing
  CHECK(deterministic_convertible(ProbVector{R(2, 3), R(1, 3)}, u2).decision.is_refuted());
  const RandomnessTheory t;
  CHECK(t.geq(u4, u2).is_proven());
  CHECK(t.geq(t.combine(u2, u2), u4).is_proven());
}

TEST_CASE("deterministic_convertible agrees with brute-force partitions") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 3; ++m)
      for (const auto &p : resconv::testing::all_vectors(n, 4))
        for (const auto &q : resconv::testing::all_vectors(m, 4)) {
          const auto d = deterministic_convertible(ProbVector(p), ProbVector(q));
          const bool oracle = resconv::testing::pushforward_oracle(p, q);
          CHECK(d.decision.is_proven() == oracle);
          CHECK_FALSE(d.decision.is_unknown());
          if (d.decision.is_proven()) {
            // replay the partition
            std::vector<Rational> acc(q.size(), R(0));
            std::vector<int> used(p.size(), 0);
            for (std::size_t j = 0; j < d.blocks.size(); ++j)
              for (auto i : d.blocks[j]) {
                acc[j] += p[i];
                ++used[i];
              }
            CHECK(acc == q);
            for (int u : used) CHECK(u == 1);
          }
        }
}

TEST_CASE("majorization agrees with the doubly-stochastic oracle") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m)
      for (const auto &x : resconv::testing::all_vectors(n, 4))
        for (const auto &y : resconv::testing::all_vectors(m, 4))
          CHECK(majorizes(x, y) == resconv::testing::doubly_stochastic_oracle(x, y));
}

TEST_CASE("entanglement: a Bell pair converts to any two-qubit spectrum") {
  const EntanglementSpectrumTheory t;
  const ProbVector bell = ProbVector::uniform(2);
  const ProbVector product{R(1)};
  CHECK(t.geq(bell, ProbVector{R(3, 4), R(1, 4)}).is_proven());
  CHECK(t.geq(ProbVector{R(3, 4), R(1, 4)}, bell).is_refuted());
  CHECK(t.geq(bell, product).is_proven());
  CHECK(entanglement_convertible(bell, product));
}

TEST_CASE("entropy in bits") {
  CHECK(shannon_entropy(ProbVector::uniform(4)) == doctest::Approx(2.0));
  CHECK(shannon_entropy(ProbVector{R(1)}) == doctest::Approx(0.0));
  CHECK(shannon_entropy(ProbVector{R(1, 2), R(1, 4), R(1, 4)}) == doctest::Approx(1.5));
}

TEST_CASE("reactions: conservation laws refute what search cannot reach") {
  PresentedSMC s({"N2", "H2", "NH3"});
  s.add_morphism("haber", {{"N2", 1}, {"H2", 3}}, {{"NH3", 2}});
  const ReactionTheory t(s, SearchLimits{6, 0});
  CHECK(t.geq(NatVector{1, 3, 0}, NatVector{0, 0, 2}).is_proven());
  const Decision back = t.geq(NatVector{0, 0, 1}, NatVector{1, 0, 0});
  CHECK(back.is_refuted());
  const auto law = separating_conservation_law(s, NatVector{0, 0, 1}, NatVector{1, 0, 0});
  REQUIRE(law.has_value());
  // invariant under the reaction
  CHECK((*law)[0] * R(-1) + (*law)[1] * R(-3) + (*law)[2] * R(2) == R(0));
  CHECK_THROWS_AS(reaction_convertible({{"O2", 1}}, {{"N2", 1}}, t, 4), InputError);
}

TEST_CASE("enumerate_distributions lists sorted vectors without repeats") {
  const auto all = enumerate_distributions(3, 4);
  for (const auto &p : all) {
    const auto e = p.entries();
    CHECK(std::is_sorted(e.rbegin(), e.rend()));
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
}
