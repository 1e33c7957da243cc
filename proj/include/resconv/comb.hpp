#ifndef RESCONV_COMB_HPP_
#define RESCONV_COMB_HPP_

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "resconv/finstoch.hpp"

namespace resconv {

/// Process type A → B, the type of a hole.
struct ProcessType {
  FinSet dom;
  FinSet cod;

  std::string str() const { return dom.str() + " → " + cod.str(); }
  friend bool operator==(const ProcessType &, const ProcessType &) = default;
};

/// 1-comb (Z, ξ₁, ξ₂) with ξ₁ : A′ → A ⊗ Z and ξ₂ : B ⊗ Z → B′.
///
/// Membership of ξ₁ and ξ₂ in a free subtheory is the caller's concern
/// (normalize_to_comb only builds combs from maps tagged free).
class OneComb {
 public:
  /// Throws CompositionError when ξ₁ or ξ₂ does not have the stated type.
  OneComb(FinSet ancilla, StochMap pre, StochMap post, ProcessType hole);

  const FinSet &ancilla() const { return ancilla_; }
  const StochMap &pre() const { return pre_; }
  const StochMap &post() const { return post_; }
  const ProcessType &hole() const { return hole_; }
  /// A′ → B′.
  ProcessType outer() const { return {pre_.dom(), post_.cod()}; }

 private:
  FinSet ancilla_;
  StochMap pre_;
  StochMap post_;
  ProcessType hole_;
};

/// ξ₂ ∘ (f ⊗ id_Z) ∘ ξ₁.
StochMap apply_comb(const OneComb &k, const StochMap &f);

/// W(a, b′ | a′, b) = Σ_z ξ₁(a, z | a′) ξ₂(b′ | b, z), rows indexed (a, b′)
/// and columns (a′, b), both lexicographic.
RationalMatrix supermap_tensor(const OneComb &k);

/// Same operational behaviour: equal supermap tensors. Throws
/// CompositionError when hole or outer types differ.
bool comb_equivalent(const OneComb &k1, const OneComb &k2);

/// k2 after k1: k2's hole type must be k1's outer type. Ancilla Z₁ ⊗ Z₂.
OneComb compose_combs_seq(const OneComb &k2, const OneComb &k1);
/// k1 ⊗ k2 acting on processes of type (A₁ ⊗ A₂ → B₁ ⊗ B₂). Ancilla Z₁ ⊗ Z₂.
OneComb compose_combs_par(const OneComb &k1, const OneComb &k2);
/// Comb with trivial ancilla and identity maps.
OneComb identity_comb(const ProcessType &t);
/// Symmetry (A₁→B₁) ⊗ (A₂→B₂) ⇒ (A₂→B₂) ⊗ (A₁→B₁).
OneComb symmetry_comb(const ProcessType &t1, const ProcessType &t2);

/// Random comb over the given types with ancilla of the given size; entries
/// of ξ₁ and ξ₂ are multiples of 1/denominator.
OneComb random_comb(const ProcessType &hole, const ProcessType &outer, std::size_t ancilla_size, std::mt19937_64 &rng,
                    std::int64_t denominator = 2);

/// n-comb: ξ₀ : A′ → A_{σ(0)} ⊗ Z₁, ξₖ : B_{σ(k-1)} ⊗ Zₖ → A_{σ(k)} ⊗ Zₖ₊₁,
/// ξₙ : B_{σ(n-1)} ⊗ Zₙ → B′. Slot k is filled by hole order[k]; holes are
/// addressed by their index in `holes`. n = 0 is a plain process ξ₀.
class NComb {
 public:
  /// Throws CompositionError naming the slot when types do not chain, and
  /// InputError when `order` is not a permutation.
  NComb(std::vector<std::size_t> order, std::vector<StochMap> maps, std::vector<FinSet> ancillas,
        std::vector<ProcessType> holes);

  static NComb from_one_comb(const OneComb &k);

  std::size_t arity() const { return holes_.size(); }
  const std::vector<std::size_t> &order() const { return order_; }
  const std::vector<StochMap> &maps() const { return maps_; }
  const std::vector<FinSet> &ancillas() const { return ancillas_; }
  const std::vector<ProcessType> &holes() const { return holes_; }
  ProcessType outer() const { return {maps_.front().dom(), maps_.back().cod()}; }

 private:
  std::vector<std::size_t> order_;
  std::vector<StochMap> maps_;
  std::vector<FinSet> ancillas_;
  std::vector<ProcessType> holes_;
};

/// Fills hole i with fs[i] and evaluates the chain in slot order.
StochMap apply_ncomb(const NComb &c, const std::vector<StochMap> &fs);

/// Plugs inner[j] into hole j of `outer`. The result's holes are inner[0]'s
/// holes, then inner[1]'s, and so on; inside each outer slot the outer
/// ancilla rides along on the right of the inner ancillas.
NComb plug_ncombs(const NComb &outer, const std::vector<NComb> &inner);

/// Allocation α : {0..n-1} → {0..m-1} with, for each target j, an n-comb
/// whose holes are α⁻¹(j) in increasing source order.
class UCTransformation {
 public:
  /// Throws InputError unless every target comb has exactly |α⁻¹(j)| holes.
  UCTransformation(std::vector<std::size_t> allocation, std::vector<NComb> targets);

  const std::vector<std::size_t> &allocation() const { return allocation_; }
  const std::vector<NComb> &targets() const { return targets_; }

 private:
  std::vector<std::size_t> allocation_;
  std::vector<NComb> targets_;
};

/// Output j is targets[j] applied to the sub-tuple α⁻¹(j). Throws InputError
/// when fs.size() ≠ n.
std::vector<StochMap> apply_uc(const UCTransformation &t, const std::vector<StochMap> &fs);

// JSON. OneComb: {"ancilla", "hole":{"dom","cod"}, "pre", "post"}.
// NComb: {"order":[...], "holes":[{"dom","cod"}...], "ancillas":[...], "maps":[...]}.
// UC: {"allocation":[...], "combs":[NComb...]}. Indices are 0-based.
nlohmann::json to_json(const OneComb &k);
OneComb one_comb_from_json(const nlohmann::json &j);
nlohmann::json to_json(const NComb &c);
NComb ncomb_from_json(const nlohmann::json &j);
nlohmann::json to_json(const UCTransformation &t);
UCTransformation uc_from_json(const nlohmann::json &j);

}  // namespace resconv

#endif  // RESCONV_COMB_HPP_
