#ifndef RESCONV_PRESENTED_HPP_
#define RESCONV_PRESENTED_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "resconv/theory.hpp"

namespace resconv {

/// Generating morphism of a strict SMC; source and target are multisets
/// over the object generators, stored as count vectors.
struct MorphismGenerator {
  std::string name;
  NatVector from;
  NatVector to;
};

/// Finite presentation of a strict symmetric monoidal category. The unit
/// object is the empty multiset.
class PresentedSMC {
 public:
  PresentedSMC() = default;
  explicit PresentedSMC(std::vector<std::string> objects);

  /// Adds a morphism generator; throws InputError on undeclared objects.
  void add_morphism(std::string name, const std::map<std::string, std::int64_t> &from,
                    const std::map<std::string, std::int64_t> &to);

  const std::vector<std::string> &objects() const { return objects_; }
  const std::vector<MorphismGenerator> &morphisms() const { return morphisms_; }

  std::size_t object_index(const std::string &name) const;
  NatVector multiset(const std::map<std::string, std::int64_t> &counts) const;
  std::string format(const NatVector &m) const;

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismGenerator> morphisms_;
};

struct SearchLimits {
  /// Maximum number of generator applications in a witness circuit.
  std::size_t depth = 6;
  /// Largest multiset visited during search; 0 disables the cap.
  std::int64_t max_state_size = 0;
};

/// Multiset theory obtained by forgetting all morphisms of a presented SMC
/// except for their existence.
///
/// geq runs a breadth-first search over multiset states, applying one
/// generator in context per step. Parallel application of generators is a
/// sequence of in-context applications, so single steps suffice and the
/// first hit is a shortest witness. An exhausted search reports Unknown.
class MultisetTheory : public TheoryOracle {
 public:
  MultisetTheory(PresentedSMC smc, SearchLimits limits);

  const PresentedSMC &presentation() const { return smc_; }
  const SearchLimits &limits() const { return limits_; }

  std::string name() const override { return "presented"; }
  Term combine(const Term &a, const Term &b) const override;
  Term zero() const override;
  Decision geq(const Term &a, const Term &b) const override;
  std::vector<Term> enumerate_up_to(std::size_t bound) const override;
  Term parse_term(const nlohmann::json &j) const override;
  nlohmann::json term_to_json(const Term &t) const override;
  std::string format(const Term &t) const override;

 protected:
  const NatVector &counts(const Term &t) const;

 private:
  PresentedSMC smc_;
  SearchLimits limits_;
};

/// Decategorification of a presented SMC with the given search depth.
MultisetTheory decategorify(const PresentedSMC &s, std::size_t bound);

/// Parses {"objects":[...], "morphisms":[{"name","from","to"}]}. Multisets
/// are either name lists (with repetition) or {"name": count} maps.
PresentedSMC presented_smc_from_json(const nlohmann::json &j);
nlohmann::json to_json(const PresentedSMC &s);

}  // namespace resconv

#endif  // RESCONV_PRESENTED_HPP_
