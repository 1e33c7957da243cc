#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "resconv/errors.hpp"
#include "resconv/presented.hpp"

using namespace resconv;

namespace {

PresentedSMC chemistry() {
  PresentedSMC s({"NaOH", "HCl", "NaCl", "H2O", "N2", "H2", "NH3"});
  s.add_morphism("neutralization", {{"NaOH", 1}, {"HCl", 1}}, {{"NaCl", 1}, {"H2O", 1}});
  s.add_morphism("haber", {{"N2", 1}, {"H2", 3}}, {{"NH3", 2}});
  return s;
}

// depth-limited DFS over count vectors
bool reachable(const PresentedSMC &s, const NatVector &from, const NatVector &to, std::size_t depth) {
  if (from == to) return true;
  if (depth == 0) return false;
  for (const auto &g : s.morphisms()) {
    bool fits = true;
    for (std::size_t i = 0; i < from.size(); ++i) fits = fits && from[i] >= g.from[i];
    if (!fits) continue;
    NatVector next = from;
    for (std::size_t i = 0; i < from.size(); ++i) next[i] += g.to[i] - g.from[i];
    if (reachable(s, next, to, depth - 1)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("neutralization is one step") {
  const MultisetTheory t = decategorify(chemistry(), 6);
  const Decision d = t.geq(t.parse_term(nlohmann::json::array({"NaOH", "HCl"})),
                           t.parse_term(nlohmann::json::array({"NaCl", "H2O"})));
  REQUIRE(d.is_proven());
  CHECK(d.witness()->steps.size() == 1);
}

TEST_CASE("Haber process is one step") {
  const MultisetTheory t = decategorify(chemistry(), 6);
  const Decision d = t.geq(t.parse_term(nlohmann::json{{"N2", 1}, {"H2", 3}}), t.parse_term(nlohmann::json{{"NH3", 2}}));
  REQUIRE(d.is_proven());
  CHECK(d.witness()->steps.size() == 1);
}

TEST_CASE("the reverse Haber direction is not found by bare search") {
  const MultisetTheory t = decategorify(chemistry(), 6);
  CHECK(t.geq(t.parse_term(nlohmann::json::array({"NH3"})), t.parse_term(nlohmann::json::array({"N2"}))).is_unknown());
}

TEST_CASE("undeclared objects are input errors") {
  PresentedSMC s({"a"});
  CHECK_THROWS_AS(s.add_morphism("f", {{"b", 1}}, {{"a", 1}}), InputError);
  const MultisetTheory t = decategorify(s, 3);
  CHECK_THROWS_AS(t.parse_term(nlohmann::json::array({"zzz"})), InputError);
}

TEST_CASE("JSON round trip of a presentation") {
  const PresentedSMC s = chemistry();
  const PresentedSMC u = presented_smc_from_json(to_json(s));
  CHECK(u.objects() == s.objects());
  REQUIRE(u.morphisms().size() == s.morphisms().size());
  for (std::size_t i = 0; i < s.morphisms().size(); ++i) {
    CHECK(u.morphisms()[i].from == s.morphisms()[i].from);
    CHECK(u.morphisms()[i].to == s.morphisms()[i].to);
  }
}

TEST_CASE("search agrees with a depth-limited DFS on random presentations") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> small(0, 2);
  for (int round = 0; round < 40; ++round) {
    PresentedSMC s({"x", "y", "z"});
    const int gens = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int g = 0; g < gens; ++g) {
      std::map<std::string, std::int64_t> from{{"x", small(rng)}, {"y", small(rng)}, {"z", small(rng)}};
      std::map<std::string, std::int64_t> to{{"x", small(rng)}, {"y", small(rng)}, {"z", small(rng)}};
      s.add_morphism("g" + std::to_string(g), from, to);
    }
    const std::size_t depth = 3;
    const MultisetTheory t = decategorify(s, depth);
    const auto sample = t.enumerate_up_to(2);
    for (const auto &a : sample)
      for (const auto &b : sample) {
        const Decision d = t.geq(a, b);
        const bool r = reachable(s, std::get<NatVector>(a), std::get<NatVector>(b), depth);
        CHECK(d.is_proven() == r);
        if (d.is_proven()) CHECK(d.witness()->steps.size() <= std::max<std::size_t>(depth, 1));
        CHECK_FALSE(d.is_refuted());
      }
  }
}

TEST_CASE("enumerate_up_to lists each multiset of bounded size once") {
  const MultisetTheory t = decategorify(PresentedSMC({"a", "b"}), 2);
  const auto e = t.enumerate_up_to(2);
  CHECK(e.size() == 6);  // sizes 0,1,2 over two objects: 1 + 2 + 3
  std::set<NatVector> seen;
  for (const auto &x : e) seen.insert(std::get<NatVector>(x));
  CHECK(seen.size() == e.size());
}
