#ifndef RESCONV_INSTANCES_HPP_
#define RESCONV_INSTANCES_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resconv/presented.hpp"
#include "resconv/theory.hpp"

namespace resconv {

// ---------------------------------------------------------------------------
// ℕᵏ theories: food (additive) and proficiency (supremal)
// ---------------------------------------------------------------------------

enum class VectorMode { Additive, Supremal };

/// Resources are k-tuples of naturals ordered componentwise. Additive mode
/// combines by sum, Supremal by componentwise max.
class VectorTheory final : public TheoryOracle {
 public:
  VectorTheory(std::size_t arity, VectorMode mode);

  static VectorTheory food() { return VectorTheory(2, VectorMode::Additive); }
  static VectorTheory proficiency() { return VectorTheory(2, VectorMode::Supremal); }

  std::size_t arity() const { return arity_; }
  VectorMode mode() const { return mode_; }

  std::string name() const override;
  Term combine(const Term &a, const Term &b) const override;
  Term zero() const override { return NatVector(arity_, 0); }
  Decision geq(const Term &a, const Term &b) const override;
  /// The box {0..bound}ᵏ in lexicographic order.
  std::vector<Term> enumerate_up_to(std::size_t bound) const override;
  std::optional<std::vector<std::pair<Term, Term>>> decompositions(const Term &a) const override;
  std::optional<Certificate> structural_proof(std::string_view property) const override;
  Term parse_term(const nlohmann::json &j) const override;
  nlohmann::json term_to_json(const Term &t) const override;

  const NatVector &vec(const Term &t) const;

 private:
  std::size_t arity_;
  VectorMode mode_;
};

// ---------------------------------------------------------------------------
// Randomness and pure bipartite entanglement
// ---------------------------------------------------------------------------

/// Outcome of a deterministic-pushforward search. On success, blocks[j]
/// lists the indices of p sent to outcome j of q.
struct PartitionDecision {
  Decision decision;
  std::vector<std::vector<std::size_t>> blocks;
};

/// Decides whether a deterministic map f with q(y) = Σ_{f(x)=y} p(x) exists.
///
/// Backtracking over p's entries in descending order, placing each into an
/// outcome with enough remaining mass and skipping outcomes whose remaining
/// mass equals one already tried. Exponential in the worst case; intended
/// for |X| ≤ 12 in general, though highly symmetric inputs (uniform
/// distributions) stay linear in |X|.
PartitionDecision deterministic_convertible(const ProbVector &p, const ProbVector &q);

/// True iff the descending partial sums of x dominate those of y at every
/// prefix. Shorter vectors are zero-padded.
bool majorizes(const std::vector<Rational> &x, const std::vector<Rational> &y);
inline bool majorizes(const ProbVector &x, const ProbVector &y) { return majorizes(x.entries(), y.entries()); }

/// Pure-state conversion s → t under LOCC: t majorizes s.
inline bool entanglement_convertible(const ProbVector &s, const ProbVector &t) { return majorizes(t, s); }

/// Enumerates sorted (non-increasing) probability vectors of length ≤
/// max_length whose entries are multiples of 1/d for some d ≤ max_denominator.
std::vector<ProbVector> enumerate_distributions(std::size_t max_length, std::size_t max_denominator,
                                                bool sorted_only = true);

/// Shannon entropy in bits.
double shannon_entropy(const ProbVector &p);

class ProbabilityTheoryBase : public TheoryOracle {
 public:
  Term combine(const Term &a, const Term &b) const override;
  Term zero() const override { return ProbVector{Rational(1)}; }
  /// Sorted distributions of length ≤ 3 with denominators ≤ bound.
  std::vector<Term> enumerate_up_to(std::size_t bound) const override;
  Term parse_term(const nlohmann::json &j) const override;
  nlohmann::json term_to_json(const Term &t) const override;
  std::string format(const Term &t) const override;

  static const ProbVector &dist(const Term &t);
};

/// (X, p) ⪰ (Y, q) iff q is a deterministic pushforward of p.
class RandomnessTheory final : public ProbabilityTheoryBase {
 public:
  std::string name() const override { return "randomness"; }
  Decision geq(const Term &a, const Term &b) const override;
};

/// Schmidt spectra of pure bipartite states; s ⪰ t iff t majorizes s.
class EntanglementSpectrumTheory final : public ProbabilityTheoryBase {
 public:
  std::string name() const override { return "entanglement"; }
  Decision geq(const Term &a, const Term &b) const override;
};

// ---------------------------------------------------------------------------
// Chemistry
// ---------------------------------------------------------------------------

/// Reaction network over declared species.
///
/// geq first searches for a reaction sequence; when that search is
/// inconclusive it looks for a linear functional conserved by every reaction
/// that separates the two sides (an atom count, for instance) and reports
/// Refuted with that functional as the certificate.
class ReactionTheory final : public MultisetTheory {
 public:
  ReactionTheory(PresentedSMC smc, SearchLimits limits) : MultisetTheory(std::move(smc), limits) {}

  std::string name() const override { return "reaction"; }
  Decision geq(const Term &a, const Term &b) const override;
};

/// A rational vector w with w·(to − from) = 0 for every reaction and
/// w·a ≠ w·b, scaled to integers, or nullopt when none exists.
std::optional<std::vector<Rational>> separating_conservation_law(const PresentedSMC &smc, const NatVector &a,
                                                                 const NatVector &b);

/// Reaction-sequence search to the given depth, upgraded to Refuted by a
/// separating conservation law. Throws InputError on undeclared species.
Decision reaction_convertible(const std::map<std::string, std::int64_t> &a,
                              const std::map<std::string, std::int64_t> &b, const ReactionTheory &t,
                              std::size_t bound);

}  // namespace resconv

#endif  // RESCONV_INSTANCES_HPP_
