#ifndef RESCONV_MONOTONES_HPP_
#define RESCONV_MONOTONES_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "resconv/analysis.hpp"
#include "resconv/theory.hpp"

namespace resconv {

enum class MonotoneClass { General, Additive, Supremal };

std::string_view to_string(MonotoneClass c);
MonotoneClass monotone_class_from_string(std::string_view s);

/// Exact rational or real value. Comparisons are exact between rationals and
/// use absolute tolerance kTolerance as soon as a real is involved.
using MonotoneValue = std::variant<Rational, double>;

inline constexpr double kTolerance = 1e-9;

double to_double(const MonotoneValue &v);
std::string to_string(const MonotoneValue &v);
/// x < y, tolerant for reals.
bool value_less(const MonotoneValue &x, const MonotoneValue &y);
bool value_equal(const MonotoneValue &x, const MonotoneValue &y);
MonotoneValue value_add(const MonotoneValue &x, const MonotoneValue &y);
MonotoneValue value_max(const MonotoneValue &x, const MonotoneValue &y);
MonotoneValue value_sub(const MonotoneValue &x, const MonotoneValue &y);

/// A valuation with a declared class. Order preservation and the class law
/// are tested by verify_monotone and classify, never assumed.
class Monotone {
 public:
  using Fn = std::function<MonotoneValue(const Term &)>;

  Monotone(std::string name, MonotoneClass cls, Fn fn) : name_(std::move(name)), cls_(cls), fn_(std::move(fn)) {}

  const std::string &name() const { return name_; }
  MonotoneClass declared_class() const { return cls_; }
  MonotoneValue operator()(const Term &t) const { return fn_(t); }

 private:
  std::string name_;
  MonotoneClass cls_;
  Fn fn_;
};

/// Built-in valuations:
///   "entropy"      Shannon entropy in bits of a probability term
///   "component:k"  k-th entry of an ℕᵏ vector or multiset
///   "total"        sum of the entries of an ℕᵏ vector or multiset
///   "max"          largest entry of an ℕᵏ vector
///   "indicator:i"  1 if a ⪰ i (i a carrier index, given as JSON text), else 0
/// Supremal monotones are shifted so that M(0) = 0. Throws InputError on an
/// unknown name.
Monotone builtin_monotone(const std::string &spec, MonotoneClass cls, const TheoryOracle &t);

/// Shifts M by −M(0).
Monotone normalize_supremal(const Monotone &m, const TheoryOracle &t);

/// Refuted with (a, b) when a ⪰ b is Proven but M(a) < M(b).
PropertyReport verify_monotone(const Monotone &m, const TheoryOracle &t, const std::vector<Term> &sample);

/// Tests the declared class law on every sample pair. General monotones
/// have no law to test.
PropertyReport classify(const Monotone &m, const TheoryOracle &t, const std::vector<Term> &sample);

/// Mᵢ(a) = 1 if a ⪰ i else 0, one per carrier element.
std::vector<Monotone> complete_family(const FiniteTheoryTable &t);

/// Exhaustive check of a ⪰ b ⇔ ∀i Mᵢ(a) ≥ Mᵢ(b); returns the first failing
/// pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> completeness_violation(const FiniteTheoryTable &t,
                                                                          const std::vector<Monotone> &family);

/// M(a)/M(b), or nullopt for ∞ when M(b) = 0.
std::optional<MonotoneValue> rate_upper_bound(const Monotone &m, const Term &a, const Term &b);

struct RateResult {
  /// Best m/n over Proven n·a ⪰ m·b at the caps; 0 when none is Proven.
  Rational best;
  std::optional<std::pair<std::size_t, std::size_t>> best_pair;
  /// Minimum of M(a)/M(b) over the Additive monotones supplied; nullopt when
  /// none was supplied, `bound_infinite` when every bound was ∞.
  std::optional<MonotoneValue> upper_bound;
  bool bound_infinite = false;
  std::string bound_monotone;
  bool exact = false;
  std::size_t caps = 0;
  /// Some (n, m) queries came back Unknown.
  bool inconclusive = false;
};

/// Maximal rate: sup of m/n over 1 ≤ n, m ≤ caps with n·a ⪰ m·b Proven,
/// compared against the bounds from `monotones` (only those declared
/// Additive are used).
RateResult rate(const TheoryOracle &t, const Term &a, const Term &b, std::size_t caps,
                const std::vector<Monotone> &monotones = {});

/// Minimal rate: inf of m/n over the same grid; `best` is 0 and best_pair
/// empty when nothing is Proven. No monotone bound is attached.
RateResult minimal_rate(const TheoryOracle &t, const Term &a, const Term &b, std::size_t caps);

/// Smallest k < n ≤ caps with k·a ⪰ k·b Refuted and n·a ⪰ n·b Proven.
std::optional<std::pair<std::size_t, std::size_t>> find_activation(const TheoryOracle &t, const Term &a, const Term &b,
                                                                   std::size_t caps);

nlohmann::json to_json(const RateResult &r);

}  // namespace resconv

#endif  // RESCONV_MONOTONES_HPP_
