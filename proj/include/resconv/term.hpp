#ifndef RESCONV_TERM_HPP_
#define RESCONV_TERM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "resconv/rational.hpp"

namespace resconv {

/// Element of an explicit finite carrier.
struct TableIndex {
  std::size_t value = 0;
  friend auto operator<=>(const TableIndex &, const TableIndex &) = default;
};

/// Vector of natural numbers: ℕᵏ resources and multisets over generators.
using NatVector = std::vector<std::int64_t>;

/// Finite probability distribution with exact rational entries summing to 1.
class ProbVector {
 public:
  ProbVector() : entries_{Rational(1)} {}
  /// Throws InputError when an entry is negative or the sum is not exactly 1.
  explicit ProbVector(std::vector<Rational> entries);
  ProbVector(std::initializer_list<Rational> entries) : ProbVector(std::vector<Rational>(entries)) {}

  static ProbVector uniform(std::size_t n);
  static ProbVector point(std::size_t n, std::size_t at);

  std::size_t size() const { return entries_.size(); }
  const Rational &operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational> &entries() const { return entries_; }

  /// Entries sorted in non-increasing order, zeros dropped.
  std::vector<Rational> spectrum() const;

  std::string str() const;

  friend bool operator==(const ProbVector &, const ProbVector &) = default;
  friend auto operator<=>(const ProbVector &a, const ProbVector &b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<Rational> entries_;
};

/// Product distribution, lexicographic in (left, right).
ProbVector tensor(const ProbVector &p, const ProbVector &q);

/// Opaque resource term. Each theory uses exactly one alternative.
using Term = std::variant<TableIndex, NatVector, ProbVector>;

}  // namespace resconv

#endif  // RESCONV_TERM_HPP_
