#include <random>

#include "doctest.h"
#include "resconv/analysis.hpp"
#include "resconv/errors.hpp"
#include "resconv/theory.hpp"

using namespace resconv;

namespace {

// {0,1,2} under max, with 2 ⪰ 1 ⪰ 0 but 2 ⋡ 0
FiniteTheoryTable broken_chain() {
  FiniteTheoryTable t;
  t.carrier = 3;
  t.zero = 0;
  t.combine = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  t.geq = {{true, false, false}, {true, true, false}, {false, true, true}};
  return t;
}

FiniteTheoryTable chain() {
  FiniteTheoryTable t = broken_chain();
  t.geq[2][0] = true;
  return t;
}

}  // namespace

TEST_CASE("a non-transitive table yields exactly one violation naming the triple") {
  const auto v = check_axioms(broken_chain());
  REQUIRE(v.size() == 1);
  CHECK(v[0].law == "transitivity");
  CHECK(v[0].elements == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("a valid table has no violations") { CHECK(check_axioms(chain()).empty()); }

TEST_CASE("each law is detected when broken") {
  FiniteTheoryTable t = chain();
  t.geq[1][1] = false;
  bool found = false;
  for (const auto &x : check_axioms(t)) found = found || x.law == "reflexivity";
  CHECK(found);

  t = chain();
  t.combine[1][2] = 1;  // now 1+2 ≠ 2+1
  found = false;
  for (const auto &x : check_axioms(t)) found = found || x.law == "commutativity";
  CHECK(found);

  t = chain();
  t.combine[0][1] = 2;
  t.combine[1][0] = 2;
  found = false;
  for (const auto &x : check_axioms(t)) found = found || x.law == "unit";
  CHECK(found);
}

TEST_CASE("malformed tables are input errors") {
  FiniteTheoryTable t = chain();
  t.combine[0][0] = 7;
  CHECK_THROWS_AS(check_axioms(t), InputError);
  t = chain();
  t.geq.pop_back();
  CHECK_THROWS_AS(t.validate(), InputError);
  CHECK_THROWS_AS(table_from_json(nlohmann::json{{"carrier", 2}}), InputError);
}

TEST_CASE("table JSON round trip") {
  const FiniteTheoryTable t = chain();
  const FiniteTheoryTable u = table_from_json(to_json(t));
  CHECK(u.carrier == t.carrier);
  CHECK(u.combine == t.combine);
  CHECK(u.geq == t.geq);
  CHECK(u.zero == t.zero);
  // booleans are accepted as well as 0/1
  nlohmann::json j = to_json(t);
  j["geq"][0][0] = true;
  CHECK(table_from_json(j).geq[0][0]);
}

TEST_CASE("TableTheory answers from the table") {
  const TableTheory th(chain());
  CHECK(th.geq(TableIndex{2}, TableIndex{0}).is_proven());
  CHECK(th.geq(TableIndex{0}, TableIndex{2}).is_refuted());
  CHECK(th.geq(TableIndex{0}, TableIndex{2}).witness().has_value());
  CHECK(std::get<TableIndex>(th.combine(TableIndex{1}, TableIndex{2})).value == 2);
  CHECK(th.carrier()->size() == 3);
  CHECK(equivalent(th, TableIndex{1}, TableIndex{1}).is_proven());
  CHECK(equivalent(th, TableIndex{1}, TableIndex{2}).is_refuted());
  CHECK(std::get<TableIndex>(replicate(th, 0, TableIndex{2})).value == 0);
  CHECK(std::get<TableIndex>(replicate(th, 3, TableIndex{1})).value == 1);
  CHECK_THROWS_AS(th.parse_term(nlohmann::json(5)), InputError);
}

TEST_CASE("the sampled check agrees with the exhaustive one on tables") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    FiniteTheoryTable t = random_theory_table(rng, 5);
    // break it at random half of the time
    if (i % 2) {
      const auto a = std::uniform_int_distribution<std::size_t>(0, t.carrier - 1)(rng);
      const auto b = std::uniform_int_distribution<std::size_t>(0, t.carrier - 1)(rng);
      t.geq[a][b] = !t.geq[a][b];
    }
    const TableTheory th(t);
    CHECK(check_axioms(t).empty() == check_axioms_on_sample(th, *th.carrier()).empty());
  }
}
