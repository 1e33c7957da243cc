#ifndef RESCONV_ANALYSIS_HPP_
#define RESCONV_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "resconv/theory.hpp"

namespace resconv {

/// Outcome of a property check over a sample.
///
/// Proven is claimed only when the sample covers a finite carrier or the
/// theory supplies a structural proof. Otherwise a check with no
/// counterexample is Unknown; `inconclusive` then says whether some
/// sub-query came back Unknown ("Unknown") or none did ("unrefuted on
/// sample").
struct PropertyReport {
  std::string property;
  Decision decision;
  /// Counterexample (Refuted) or witness (Proven) terms.
  std::vector<Term> witness;
  bool inconclusive = false;

  std::string status() const;
  bool refuted() const { return decision.is_refuted(); }
};

nlohmann::json to_json(const PropertyReport &r, const TheoryOracle &t);

/// True when `sample` contains every element of t's finite carrier.
bool covers_carrier(const TheoryOracle &t, const std::vector<Term> &sample);

struct CatalystResult {
  Decision decision;
  std::optional<Term> catalyst;
};

/// Looks for c among `candidates` with a ⋡ b and a + c ⪰ b + c. Refuted
/// when a ⪰ b already ("no catalyst needed"), or when the search is
/// exhaustive with decisive answers and finds none; Unknown otherwise.
CatalystResult find_catalyst(const TheoryOracle &t, const Term &a, const Term &b, const std::vector<Term> &candidates,
                             std::size_t bound);

PropertyReport check_catalysis_free(const TheoryOracle &t, const std::vector<Term> &sample, std::size_t bound);
/// For every a ⪰ b₁ + b₂ in the sample, looks for a ≃ a₁ + a₂ with a₁ ⪰ b₁
/// and a₂ ⪰ b₂. Decompositions come from the theory when it can list them
/// completely (then a failed search refutes), else from enumerate_up_to(bound).
PropertyReport check_non_interacting(const TheoryOracle &t, const std::vector<Term> &sample, std::size_t bound);
PropertyReport check_quantity_like(const TheoryOracle &t, const std::vector<Term> &sample);
PropertyReport check_quality_like(const TheoryOracle &t, const std::vector<Term> &sample);
/// a ⪰ 0 for every sample element, and then also a + b ⪰ a for every pair.
PropertyReport check_waste_free(const TheoryOracle &t, const std::vector<Term> &sample);
/// Looks for c with aᵢ ⪰ c ⪰ bⱼ for all i, j among enumerate_up_to(bound).
PropertyReport check_riesz_interpolation(const TheoryOracle &t, const std::vector<Term> &as, const std::vector<Term> &bs,
                                         std::size_t bound);

/// Executable consequences over the sample:
///  - non-interacting and quantity-like imply catalysis-free;
///  - quantity-like: a ⪰ a + a iff 0 ⪰ a (no cloning);
///  - quality-like: a + a ⪰ b iff a ⪰ b iff a ⪰ b + b.
/// A Refuted report here means the implementation or the theory is broken.
std::vector<PropertyReport> cross_check_theorems(const TheoryOracle &t, const std::vector<Term> &sample, std::size_t bound);

/// Random finite theory with at most max_n elements that passes check_axioms.
///
/// A strict commutative monoid is drawn from a few families (cyclic groups,
/// truncated addition, max and min chains, products of two of them) and
/// relabelled at random. A random relation is then closed under
/// reflexivity, transitivity and compatibility with +, and some combine
/// results are swapped for ≃-equivalent elements.
FiniteTheoryTable random_theory_table(std::mt19937_64 &rng, std::size_t max_n = 6);

}  // namespace resconv

#endif  // RESCONV_ANALYSIS_HPP_
