#ifndef RESCONV_DECISION_HPP_
#define RESCONV_DECISION_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace resconv {

enum class Verdict { Proven, Refuted, Unknown };

std::string_view to_string(Verdict v);

/// Replayable evidence for a Proven or Refuted answer: a conversion trace or
/// the reason a conversion is impossible, one line per step.
struct Certificate {
  std::vector<std::string> steps;

  Certificate() = default;
  Certificate(std::initializer_list<std::string> s) : steps(s) {}
  explicit Certificate(std::vector<std::string> s) : steps(std::move(s)) {}
};

/// Three-valued answer to a convertibility query.
///
/// Proven and Refuted always carry a certificate; Unknown always records the
/// search bound at which the search stopped. The factories are the only way
/// to build one, so the invariant holds by construction.
class Decision {
 public:
  static Decision proven(Certificate witness, std::size_t bound = 0) {
    return Decision(Verdict::Proven, std::move(witness), bound);
  }
  static Decision refuted(Certificate witness, std::size_t bound = 0) {
    return Decision(Verdict::Refuted, std::move(witness), bound);
  }
  static Decision unknown(std::size_t bound, std::string reason = {}) {
    Decision d(Verdict::Unknown, std::nullopt, bound);
    d.reason_ = std::move(reason);
    return d;
  }

  Verdict verdict() const { return verdict_; }
  bool is_proven() const { return verdict_ == Verdict::Proven; }
  bool is_refuted() const { return verdict_ == Verdict::Refuted; }
  bool is_unknown() const { return verdict_ == Verdict::Unknown; }

  const std::optional<Certificate> &witness() const { return witness_; }
  std::size_t bound() const { return bound_; }
  const std::string &reason() const { return reason_; }

 private:
  Decision(Verdict v, std::optional<Certificate> w, std::size_t bound)
      : verdict_(v), witness_(std::move(w)), bound_(bound) {}

  Verdict verdict_;
  std::optional<Certificate> witness_;
  std::size_t bound_;
  std::string reason_;
};

/// Conjunction in the three-valued logic: Refuted dominates, then Unknown.
Decision both(const Decision &a, const Decision &b);

}  // namespace resconv

#endif  // RESCONV_DECISION_HPP_
