#ifndef RESCONV_CLI_HPP_
#define RESCONV_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "resconv/monotones.hpp"
#include "resconv/theory.hpp"

namespace resconv {

/// A theory loaded from JSON together with its declared monotones.
struct LoadedTheory {
  std::unique_ptr<TheoryOracle> oracle;
  std::vector<Monotone> monotones;
  /// Set for {"carrier": ...} tables.
  std::optional<FiniteTheoryTable> table;
};

/// Detects the theory kind by its keys: "carrier" (finite table), "objects"
/// (reaction network, searched to `bound` steps) or "kind" (one of vector,
/// food, proficiency, randomness, entanglement). An optional "monotones"
/// list holds {"name": builtin, "class": general|additive|supremal}.
LoadedTheory load_theory(const nlohmann::json &j, std::size_t bound);
LoadedTheory load_theory_file(const std::string &path, std::size_t bound);

/// Terms to sweep for a theory: its carrier when finite, else
/// enumerate_up_to(box).
std::vector<Term> theory_sample(const TheoryOracle &t, std::size_t box);

/// Graphviz digraph of the covering relation on the quotient by ≃. Each
/// node lists the members of one class.
std::string hasse_dot(const TheoryOracle &t, const std::vector<Term> &sample, std::size_t *nodes = nullptr,
                      std::size_t *edges = nullptr);

/// Command-line entry point. Exit code 0 on success or Proven, 1 on
/// Refuted, Unknown or not found, 2 on input errors.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace resconv

#endif  // RESCONV_CLI_HPP_
