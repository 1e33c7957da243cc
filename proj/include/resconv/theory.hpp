#ifndef RESCONV_THEORY_HPP_
#define RESCONV_THEORY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "resconv/decision.hpp"
#include "resconv/term.hpp"

namespace resconv {

/// A theory of resource convertibility (R, +, ⪰, 0), possibly infinite.
///
/// Implementations answer geq exactly where they can and fall back to
/// Unknown with the search bound otherwise. Sameness of resources is always
/// decided with `equivalent`, never with term equality.
class TheoryOracle {
 public:
  virtual ~TheoryOracle() = default;

  virtual std::string name() const = 0;
  virtual Term combine(const Term &a, const Term &b) const = 0;
  virtual Term zero() const = 0;
  virtual Decision geq(const Term &a, const Term &b) const = 0;

  /// Finite list of terms of "size" at most `bound`; the meaning of size is
  /// theory-specific (box side for ℕᵏ, multiset cardinality, denominator).
  virtual std::vector<Term> enumerate_up_to(std::size_t bound) const = 0;

  /// The whole carrier when the theory is finite.
  virtual std::optional<std::vector<Term>> carrier() const { return std::nullopt; }

  /// Every pair (a₁, a₂) with a ≃ a₁ + a₂, up to ≃, when the theory can
  /// enumerate them completely.
  virtual std::optional<std::vector<std::pair<Term, Term>>> decompositions(const Term &) const {
    return std::nullopt;
  }

  /// Argument that the whole theory has a structural property
  /// ("catalysis-free", "non-interacting", "quantity-like", "quality-like",
  /// "waste-free"), for theories where one is known. Analyzers still test
  /// the sample and report any counterexample found.
  virtual std::optional<Certificate> structural_proof(std::string_view) const { return std::nullopt; }

  virtual Term parse_term(const nlohmann::json &j) const = 0;
  virtual nlohmann::json term_to_json(const Term &t) const = 0;
  virtual std::string format(const Term &t) const { return term_to_json(t).dump(); }
};

/// Explicit closed carrier {0..n-1} with a combine table and a preorder matrix.
struct FiniteTheoryTable {
  std::size_t carrier = 0;
  std::vector<std::vector<std::size_t>> combine;
  std::size_t zero = 0;
  std::vector<std::vector<bool>> geq;

  /// Throws InputError on a non-square table or an out-of-range index.
  void validate() const;

  bool equiv(std::size_t a, std::size_t b) const { return geq[a][b] && geq[b][a]; }
};

/// {"carrier":n,"combine":[[...]],"zero":k,"geq":[[...]]}; geq entries are
/// booleans or 0/1. The result is validated.
FiniteTheoryTable table_from_json(const nlohmann::json &j);
nlohmann::json to_json(const FiniteTheoryTable &t);

/// TheoryOracle view of a validated FiniteTheoryTable.
class TableTheory final : public TheoryOracle {
 public:
  explicit TableTheory(FiniteTheoryTable table, std::string name = "table");

  const FiniteTheoryTable &table() const { return table_; }

  std::string name() const override { return name_; }
  Term combine(const Term &a, const Term &b) const override;
  Term zero() const override { return TableIndex{table_.zero}; }
  Decision geq(const Term &a, const Term &b) const override;
  std::vector<Term> enumerate_up_to(std::size_t bound) const override;
  std::optional<std::vector<Term>> carrier() const override;
  std::optional<std::vector<std::pair<Term, Term>>> decompositions(const Term &a) const override;
  Term parse_term(const nlohmann::json &j) const override;
  nlohmann::json term_to_json(const Term &t) const override;

 private:
  std::size_t index(const Term &t) const;

  FiniteTheoryTable table_;
  std::string name_;
};

struct AxiomViolation {
  std::string law;
  std::vector<std::size_t> elements;
  std::string message;
};

/// Exhaustive check of every axiom of a theory of resource convertibility.
/// Throws InputError on a malformed table.
std::vector<AxiomViolation> check_axioms(const FiniteTheoryTable &t);

/// Same laws, checked on every pair/triple of the given sample. A law counts
/// as violated only when the relevant geq answer is Refuted; Unknown answers
/// are skipped. Element indices in the result refer to the sample.
std::vector<AxiomViolation> check_axioms_on_sample(const TheoryOracle &t, const std::vector<Term> &sample);

/// a ≃ b: Proven iff both directions are Proven, Refuted iff either is Refuted.
Decision equivalent(const TheoryOracle &t, const Term &a, const Term &b);

/// n·a as a left fold of combine; replicate(0, a) is the zero resource.
Term replicate(const TheoryOracle &t, std::size_t n, const Term &a);

}  // namespace resconv

#endif  // RESCONV_THEORY_HPP_
