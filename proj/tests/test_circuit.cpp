#include <random>

#include "doctest.h"
#include "resconv/circuit.hpp"
#include "resconv/errors.hpp"
#include "support.hpp"

using namespace resconv;

namespace {

const char *kPad = R"(# one-time pad
types: bit=2
map copy: bit -> bit*bit = [[1,0],[0,0],[0,0],[0,1]] free
map xor: bit*bit -> bit = [[1,0,0,1],[0,1,1,0]] free
map coin: I -> bit = [[1/2],[1/2]] free
input: bit
layer: id[bit] ; coin
layer: id[bit] ; copy
layer: xor ; id[bit]
layer: hole ch(bit -> bit) ; id[bit]
layer: xor
)";

std::size_t error_line(const std::string &text) {
  try {
    parse_circuit(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  return 0;
}

std::string error_text(const std::string &text) {
  try {
    parse_circuit(text);
  } catch (const ParseError &e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("the pad circuit parses and evaluates") {
  const CircuitDiagram c = parse_circuit(kPad);
  CHECK(c.layers.size() == 5);
  REQUIRE(c.holes().size() == 1);
  CHECK(c.holes()[0]->name == "ch");
  const FinSet bit = FinSet(*c.library.find_type("bit"));
  // with the identity in the hole the pad is transparent
  CHECK(evaluate_circuit(c, {{"ch", identity(bit)}}) == identity(bit));
  // with a constant channel it leaks nothing and outputs a fair coin
  const StochMap k = constant(bit, bit, ProbVector::point(2, 0));
  CHECK(evaluate_circuit(c, {{"ch", k}}) == constant(bit, bit, ProbVector::uniform(2)));
  CHECK_THROWS_AS(evaluate_circuit(c, {}), InputError);
  CHECK_THROWS_AS(evaluate_circuit(c, {{"ch", identity(bit * bit)}}), CompositionError);
}

TEST_CASE("normal form of the pad") {
  const CircuitDiagram c = parse_circuit(kPad);
  const OneComb k = normalize_to_comb(c);
  CHECK(k.ancilla().cardinality() == 2);
  const FinSet bit = FinSet(*c.library.find_type("bit"));
  for (const auto &f : all_deterministic_maps(bit, bit)) CHECK(apply_comb(k, f) == evaluate_circuit(c, {{"ch", f}}));
}

TEST_CASE("printing round-trips") {
  const CircuitDiagram c = parse_circuit(kPad);
  const std::string once = print_circuit(c);
  CHECK(print_circuit(parse_circuit(once)) == once);
  std::mt19937_64 rng(30);
  for (int i = 0; i < 40; ++i) {
    const std::string text = resconv::testing::random_one_hole_circuit(rng);
    const CircuitDiagram d = parse_circuit(text);
    const std::string p = print_circuit(d);
    CHECK(print_circuit(parse_circuit(p)) == p);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_line("input: 2\nlayer: nosuchmap\n") == 2);
  CHECK(error_text("input: 2\nlayer: nosuchmap\n").find("nosuchmap") != std::string::npos);
  CHECK(error_line("input: 2\nlayer: hole h(2 -> 2)\nlayer: hole h(2 -> 2)\n") == 3);
  CHECK(error_line("input: 2\nlayer: id[3]\n") == 2);
  CHECK(error_text("input: 2\nlayer: id[3]\n").find("wire") != std::string::npos);
  CHECK(error_line("types: a=2\nfrobnicate\n") == 2);
  CHECK(error_line("input: zz\n") == 1);
  CHECK(error_line("map m: 2 -> 2 = [[1,0],[0,2]] free\n") == 1);
  CHECK(error_line("map m: 2 -> 2 = [[1,0],[0,1]] sometimes\n") == 1);
  CHECK(error_line("input: 2*2\nlayer: id[2]\n") == 2);
  CHECK(error_line("input: 2\nlayer: copy[elsewhere]\n") == 2);
}

TEST_CASE("normalization rejects bad circuits") {
  CHECK_THROWS_AS(normalize_to_comb(parse_circuit("input: 2\nlayer: id[2]\n")), InputError);
  CHECK_THROWS_AS(normalize_to_comb(parse_circuit("input: 2\nlayer: hole a(2 -> 2)\nlayer: hole b(2 -> 2)\n")),
                  InputError);
  CHECK_THROWS_AS(normalize_to_comb(parse_circuit("map n: 2 -> 2 = [[1/2,1/2],[1/2,1/2]] nonfree\n"
                                                  "input: 2*2\nlayer: hole h(2 -> 2) ; n\n")),
                  InputError);
}

TEST_CASE("normal form is sound on generated circuits") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const CircuitDiagram c = parse_circuit(resconv::testing::random_one_hole_circuit(rng));
    const OneComb k = normalize_to_comb(c);
    const CircuitNode &h = *c.holes().front();
    for (const auto &f : all_deterministic_maps(h.dom, h.cod)) CHECK(apply_comb(k, f) == evaluate_circuit(c, {{h.name, f}}));
    const StochMap g = random_stochastic(h.dom, h.cod, rng, 3);
    CHECK(apply_comb(k, g) == evaluate_circuit(c, {{h.name, g}}));
  }
}

TEST_CASE("libraries and DOT export") {
  Library lib;
  load_library(nlohmann::json::parse(R"({"types":{"bit":2,"trit":["a","b","c"]},
    "maps":[{"name":"up","free":false,"dom":["bit"],"cod":["trit"],"matrix":[[1,0],[0,1],[0,0]]}]})"),
               lib);
  REQUIRE(lib.find_map("up") != nullptr);
  CHECK_FALSE(lib.find_map("up")->free);
  CHECK(lib.find_type("trit")->size() == 3);
  CHECK_THROWS_AS(load_library(nlohmann::json::parse(R"({"maps":[{"name":"up","dom":["bit"],"cod":["bit"],"matrix":[[1,0],[0,1]]}]})"), lib),
                  InputError);
  CHECK_THROWS_AS(lib.add_type("bit", Alphabet::of_size("bit", 3)), InputError);

  const std::string dot = circuit_to_dot(parse_circuit(kPad));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.find("ch") != std::string::npos);
}
