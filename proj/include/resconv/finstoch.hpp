#ifndef RESCONV_FINSTOCH_HPP_
#define RESCONV_FINSTOCH_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "resconv/decision.hpp"
#include "resconv/linalg.hpp"
#include "resconv/term.hpp"

namespace resconv {

/// Atomic finite set: a label and an ordered list of distinct element names.
/// Two alphabets are the same type when their element names agree; the
/// label is for display.
struct Alphabet {
  std::string label;
  std::vector<std::string> names;

  /// Alphabet {0, …, n-1} labelled `label`.
  static Alphabet of_size(std::string label, std::size_t n);

  std::size_t size() const { return names.size(); }
  friend bool operator==(const Alphabet &a, const Alphabet &b) { return a.names == b.names; }
};

/// Object of FinStoch, kept as a list of atomic factors so that ⊗ is
/// strictly associative and the unit is the empty list (a singleton set).
/// Elements of a product are ordered lexicographically in (left, right).
class FinSet {
 public:
  FinSet() = default;
  FinSet(Alphabet a);  // NOLINT(google-explicit-constructor)
  explicit FinSet(std::vector<Alphabet> factors);

  static FinSet unit() { return FinSet(); }
  static FinSet of_size(std::string label, std::size_t n) { return FinSet(Alphabet::of_size(std::move(label), n)); }

  const std::vector<Alphabet> &factors() const { return factors_; }
  std::size_t cardinality() const;
  bool is_unit() const { return factors_.empty(); }

  /// Element names; product elements read "(x,y)".
  std::vector<std::string> element_names() const;
  std::string str() const;

  friend bool operator==(const FinSet &, const FinSet &) = default;

 private:
  std::vector<Alphabet> factors_;
};

FinSet operator*(const FinSet &a, const FinSet &b);

/// Stochastic map P(b|a) between finite sets. The matrix is indexed
/// (output, input) and every column sums to exactly 1.
class StochMap {
 public:
  /// Throws InputError when an entry is negative or a column does not sum to 1.
  StochMap(FinSet dom, FinSet cod, RationalMatrix matrix);

  const FinSet &dom() const { return dom_; }
  const FinSet &cod() const { return cod_; }
  const RationalMatrix &matrix() const { return matrix_; }
  const Rational &operator()(Eigen::Index out, Eigen::Index in) const { return matrix_(out, in); }

  friend bool operator==(const StochMap &a, const StochMap &b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.matrix_ == b.matrix_;
  }

 private:
  FinSet dom_;
  FinSet cod_;
  RationalMatrix matrix_;
};

/// Kronecker product with lexicographic (left, right) indexing.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> kronecker(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
  DenseMatrix<typename DerivedA::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename Derived>
bool is_column_stochastic(const Eigen::MatrixBase<Derived> &m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Scalar s(0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) < Scalar(0)) return false;
      s += m(i, j);
    }
    if (s != Scalar(1)) return false;
  }
  return true;
}

StochMap identity(const FinSet &a);
/// Deterministic map given by out_index[in] for every input element.
StochMap deterministic(const FinSet &dom, const FinSet &cod, const std::vector<std::size_t> &out_index);
/// State I → A with the given distribution.
StochMap state(const FinSet &a, const ProbVector &p);
/// Effect A → I (the unique map to the singleton).
StochMap discard(const FinSet &a);
/// Constant map A → B emitting p whatever the input.
StochMap constant(const FinSet &dom, const FinSet &cod, const ProbVector &p);

/// q ∘ p; throws CompositionError naming both types on mismatch.
StochMap compose_seq(const StochMap &q, const StochMap &p);
/// p ⊗ q: (P ⊗ Q)(bb′|aa′) = P(b|a) Q(b′|a′).
StochMap compose_par(const StochMap &p, const StochMap &q);
/// Symmetry A ⊗ B → B ⊗ A.
StochMap swap(const FinSet &a, const FinSet &b);
/// Reorders blocks: output position k carries input block perm[k].
StochMap permute_blocks(const std::vector<FinSet> &blocks, const std::vector<std::size_t> &perm);
bool is_deterministic(const StochMap &p);

/// Distribution of a state I → A as a probability vector.
ProbVector as_distribution(const StochMap &s);

/// Every deterministic map dom → cod, in lexicographic order of the image
/// tuple (first input varies slowest).
std::vector<StochMap> all_deterministic_maps(const FinSet &dom, const FinSet &cod);

/// Random column-stochastic map with entries k/denominator.
StochMap random_stochastic(const FinSet &dom, const FinSet &cod, std::mt19937_64 &rng, std::int64_t denominator = 4);

/// Joint distribution R(x, y) of shared randomness held by sender and receiver.
struct SharedRandomness {
  FinSet sender;
  FinSet receiver;
  /// Indexed (x, y); entries ≥ 0 summing to 1.
  RationalMatrix joint;

  SharedRandomness(FinSet s, FinSet r, RationalMatrix j);
  static SharedRandomness trivial() { return SharedRandomness(FinSet(), FinSet(), RationalMatrix::Ones(1, 1)); }
};

/// Q(b′|a′) = Σ D(b′|b,y) P(b|a) E(a|a′,x) R(x,y).
/// `encoder` is A′ ⊗ S_A → A and `decoder` is B ⊗ S_B → B′.
StochMap simulate_channel(const StochMap &p, const StochMap &encoder, const StochMap &decoder, const SharedRandomness &r);

struct SimulationCaps {
  std::size_t sender_randomness = 2;
  std::size_t receiver_randomness = 2;
  /// Allow arbitrary stochastic encoders and decoders. Only the
  /// deterministic-given-randomness search is implemented: in this mode a
  /// Proven answer from it still stands (deterministic coders are a special
  /// case) but exhausting it yields Unknown rather than a claim about the
  /// larger class.
  bool stochastic_coders = false;
};

struct SimulationWitness {
  StochMap encoder;
  StochMap decoder;
  SharedRandomness randomness;
};

struct SimulationDecision {
  Decision decision;
  std::optional<SimulationWitness> witness;
};

/// Searches for deterministic-given-randomness coders and shared randomness
/// within the caps that reproduce `target` from `p` exactly.
///
/// Such a protocol mixes pairs (E_x, D_y) with weights R(x, y). The search
/// keeps R diagonal, so it looks for convex combinations of at most
/// min(cap_A, cap_B) coded channels D∘P∘E: it walks affinely independent
/// subsets of the distinct coded channels and solves for the weights
/// exactly. Non-diagonal R within the caps is not searched. Refuted only via the sound rank argument: a rank-one
/// (constant) channel can only simulate constant channels, with any coders
/// or randomness.
SimulationDecision search_exact_simulation(const StochMap &p, const StochMap &target, SimulationCaps caps = {});

/// Circuit step for search_free_transformation: generator `generator`
/// applied at factor position `offset` of the current wire.
struct FreeStep {
  std::size_t generator;
  std::size_t offset;
};

struct FreeTransformationDecision {
  Decision decision;
  std::vector<FreeStep> circuit;
};

/// Breadth-first search for a circuit of free generators ξ with ξ ∘ s = t.
/// Each step applies one generator in context (identities around it) or a
/// symmetry of two adjacent factors; `depth` bounds the number of steps,
/// swaps included. A generator with singleton domain may be inserted at any
/// factor position. Returns Unknown when the search is exhausted.
FreeTransformationDecision search_free_transformation(const StochMap &s, const StochMap &t,
                                                      const std::vector<StochMap> &free_generators, std::size_t depth);

/// Applies a circuit returned by search_free_transformation to s.
StochMap apply_free_circuit(const StochMap &s, const std::vector<StochMap> &free_generators,
                            const std::vector<FreeStep> &circuit);

// JSON: {"dom":[...],"cod":[...],"matrix":[[...]]} with rows indexed by the
// codomain. A type is either a flat list of element names or a list of
// factors, each a list of names.
FinSet finset_from_json(const nlohmann::json &j);
nlohmann::json to_json(const FinSet &s);
StochMap stochmap_from_json(const nlohmann::json &j);
nlohmann::json to_json(const StochMap &m);
RationalMatrix rational_matrix_from_json(const nlohmann::json &j);

}  // namespace resconv

#endif  // RESCONV_FINSTOCH_HPP_
