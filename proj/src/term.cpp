#include "resconv/term.hpp"

#include <algorithm>
#include <functional>

#include "resconv/errors.hpp"

namespace resconv {

ProbVector::ProbVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("probability vector must be non-empty");
  Rational total;
  for (const Rational &e : entries_) {
    if (e < Rational(0)) throw InputError("negative probability " + e.str());
    total += e;
  }
  if (total != Rational(1)) throw InputError("probabilities sum to " + total.str() + ", not 1");
}

ProbVector ProbVector::uniform(std::size_t n) {
  return ProbVector(std::vector<Rational>(n, Rational(1, static_cast<std::int64_t>(n))));
}

ProbVector ProbVector::point(std::size_t n, std::size_t at) {
  std::vector<Rational> e(n);
  e.at(at) = Rational(1);
  return ProbVector(std::move(e));
}

std::vector<Rational> ProbVector::spectrum() const {
  std::vector<Rational> s;
  std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(s), [](const Rational &r) { return !r.is_zero(); });
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

std::string ProbVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].str();
  }
  return out + ")";
}

ProbVector tensor(const ProbVector &p, const ProbVector &q) {
  std::vector<Rational> e;
  e.reserve(p.size() * q.size());
  for (const Rational &x : p.entries())
    for (const Rational &y : q.entries()) e.push_back(x * y);
  return ProbVector(std::move(e));
}

}  // namespace resconv
