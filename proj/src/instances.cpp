#include "resconv/instances.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "resconv/errors.hpp"
#include "resconv/linalg.hpp"

namespace resconv {

// ---------------------------------------------------------------------------
// VectorTheory

VectorTheory::VectorTheory(std::size_t arity, VectorMode mode) : arity_(arity), mode_(mode) {
  if (arity == 0) throw InputError("vector theory needs arity ≥ 1");
}

std::string VectorTheory::name() const {
  return std::string(mode_ == VectorMode::Additive ? "additive" : "supremal") + "-N^" + std::to_string(arity_);
}

const NatVector &VectorTheory::vec(const Term &t) const {
  const auto *v = std::get_if<NatVector>(&t);
  if (!v || v->size() != arity_) throw InputError("term is not a vector of length " + std::to_string(arity_));
  for (auto x : *v)
    if (x < 0) throw InputError("vector theory entries must be non-negative");
  return *v;
}

Term VectorTheory::combine(const Term &a, const Term &b) const {
  NatVector r = vec(a);
  const NatVector &y = vec(b);
  for (std::size_t i = 0; i < arity_; ++i) r[i] = mode_ == VectorMode::Additive ? r[i] + y[i] : std::max(r[i], y[i]);
  return r;
}

Decision VectorTheory::geq(const Term &a, const Term &b) const {
  const NatVector &x = vec(a);
  const NatVector &y = vec(b);
  for (std::size_t i = 0; i < arity_; ++i) {
    if (x[i] < y[i]) {
      return Decision::refuted({"component " + std::to_string(i) + ": " + std::to_string(x[i]) + " < " + std::to_string(y[i])});
    }
  }
  return Decision::proven({"componentwise " + term_to_json(a).dump() + " ≥ " + term_to_json(b).dump()});
}

std::vector<Term> VectorTheory::enumerate_up_to(std::size_t bound) const {
  std::vector<Term> out;
  NatVector cur(arity_, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == arity_) {
      out.emplace_back(cur);
      return;
    }
    for (std::int64_t c = 0; c <= static_cast<std::int64_t>(bound); ++c) {
      cur[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::optional<std::vector<std::pair<Term, Term>>> VectorTheory::decompositions(const Term &a) const {
  const NatVector &x = vec(a);
  std::vector<std::pair<Term, Term>> out;
  NatVector lo(arity_, 0);
  NatVector hi(arity_, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == arity_) {
      out.emplace_back(lo, hi);
      return;
    }
    if (mode_ == VectorMode::Additive) {
      for (std::int64_t c = 0; c <= x[i]; ++c) {
        lo[i] = c;
        hi[i] = x[i] - c;
        rec(i + 1);
      }
    } else {
      // max(l, h) = x[i] with l, h ≤ x[i]
      for (std::int64_t l = 0; l <= x[i]; ++l) {
        for (std::int64_t h = 0; h <= x[i]; ++h) {
          if (std::max(l, h) != x[i]) continue;
          lo[i] = l;
          hi[i] = h;
          rec(i + 1);
        }
      }
    }
  };
  rec(0);
  return out;
}

std::optional<Certificate> VectorTheory::structural_proof(std::string_view property) const {
  if (property == "waste-free") return Certificate{"every entry is ≥ 0, so a ⪰ 0 componentwise"};
  if (mode_ == VectorMode::Additive) {
    if (property == "catalysis-free") return Certificate{"a + c ≥ b + c componentwise cancels to a ≥ b"};
    if (property == "quantity-like") {
      return Certificate{"a₁ + a₂ = b₁ + b₂ and a₁ ≥ b₁ give b₂ − a₂ = a₁ − b₁ ≥ 0"};
    }
    if (property == "non-interacting") {
      return Certificate{"a ≥ b₁ + b₂ splits as a₁ = b₁, a₂ = a − b₁ ≥ b₂"};
    }
  } else {
    if (property == "quality-like") return Certificate{"max(a, a) = a"};
    if (property == "non-interacting") return Certificate{"a ≥ max(b₁, b₂) splits as a = max(a, a) with a ≥ b₁, a ≥ b₂"};
  }
  return std::nullopt;
}

Term VectorTheory::parse_term(const nlohmann::json &j) const {
  if (!j.is_array() || j.size() != arity_) {
    throw InputError("expected an array of " + std::to_string(arity_) + " naturals, got " + j.dump());
  }
  NatVector v;
  for (const auto &e : j) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0) throw InputError("entries must be naturals, got " + e.dump());
    v.push_back(e.get<std::int64_t>());
  }
  return v;
}

nlohmann::json VectorTheory::term_to_json(const Term &t) const { return vec(t); }

// ---------------------------------------------------------------------------
// Deterministic pushforward search

PartitionDecision deterministic_convertible(const ProbVector &p, const ProbVector &q) {
  struct Item {
    Rational mass;
    std::size_t index;
  };
  std::vector<Item> items;
  std::vector<std::size_t> null_items;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) {
      null_items.push_back(i);
    } else {
      items.push_back({p[i], i});
    }
  }
  std::stable_sort(items.begin(), items.end(), [](const Item &a, const Item &b) { return a.mass > b.mass; });

  const std::size_t m = q.size();
  std::vector<Rational> remaining = q.entries();
  std::vector<std::size_t> placed(items.size(), 0);

  auto refute = [&](std::string why) {
    return PartitionDecision{Decision::refuted(Certificate{std::move(why)}, p.size()), {}};
  };

  const auto q_max = *std::max_element(q.entries().begin(), q.entries().end());
  if (items.front().mass > q_max) {
    return refute("largest entry " + items.front().mass.str() + " of p exceeds every entry of q");
  }
  const auto q_support = static_cast<std::size_t>(
      std::count_if(q.entries().begin(), q.entries().end(), [](const Rational &r) { return !r.is_zero(); }));
  if (q_support > items.size()) {
    return refute("q has " + std::to_string(q_support) + " non-zero outcomes but p only " + std::to_string(items.size()));
  }

  // Iterative backtracking; next_try[k] is the next outcome to try for item k.
  std::vector<std::size_t> next_try(items.size() + 1, 0);
  std::size_t k = 0;
  bool found = items.empty();
  while (!found) {
    bool advanced = false;
    for (std::size_t j = next_try[k]; j < m; ++j) {
      if (remaining[j] < items[k].mass) continue;
      bool symmetric = false;
      for (std::size_t j2 = 0; j2 < j && !symmetric; ++j2) {
        symmetric = remaining[j2] == remaining[j] && remaining[j2] >= items[k].mass;
      }
      if (symmetric) continue;
      remaining[j] -= items[k].mass;
      placed[k] = j;
      next_try[k] = j + 1;
      advanced = true;
      break;
    }
    if (advanced) {
      ++k;
      if (k == items.size()) {
        found = true;
        break;
      }
      next_try[k] = 0;
      continue;
    }
    if (k == 0) break;
    --k;
    remaining[placed[k]] += items[k].mass;
  }

  if (!found) return refute("exhaustive partition search: no grouping of p's entries sums to q");

  std::vector<std::vector<std::size_t>> blocks(m);
  for (std::size_t i = 0; i < items.size(); ++i) blocks[placed[i]].push_back(items[i].index);
  if (!null_items.empty()) {
    auto &target = blocks[0];
    target.insert(target.end(), null_items.begin(), null_items.end());
  }
  for (auto &b : blocks) std::sort(b.begin(), b.end());

  std::vector<std::string> steps;
  for (std::size_t j = 0; j < m; ++j) {
    std::string line = "outcome " + std::to_string(j) + " ← {";
    for (std::size_t t = 0; t < blocks[j].size(); ++t) line += (t ? "," : "") + std::to_string(blocks[j][t]);
    steps.push_back(line + "} sums to " + q[j].str());
  }
  return PartitionDecision{Decision::proven(Certificate(std::move(steps)), p.size()), std::move(blocks)};
}

bool majorizes(const std::vector<Rational> &x, const std::vector<Rational> &y) {
  const std::size_t n = std::max(x.size(), y.size());
  std::vector<Rational> a = x;
  std::vector<Rational> b = y;
  a.resize(n);
  b.resize(n);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  Rational sa;
  Rational sb;
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

std::vector<ProbVector> enumerate_distributions(std::size_t max_length, std::size_t max_denominator, bool sorted_only) {
  std::set<std::vector<Rational>> seen;
  std::vector<ProbVector> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::size_t d = 1; d <= max_denominator; ++d) {
      std::vector<std::int64_t> parts(len, 0);
      std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i + 1 == len) {
          parts[i] = left;
          if (sorted_only && i > 0 && parts[i] > parts[i - 1]) return;
          std::vector<Rational> e;
          for (auto v : parts) e.emplace_back(v, static_cast<std::int64_t>(d));
          if (seen.insert(e).second) out.emplace_back(std::move(e));
          return;
        }
        for (std::int64_t c = left; c >= 0; --c) {
          if (sorted_only && i > 0 && c > parts[i - 1]) continue;
          parts[i] = c;
          rec(i + 1, left - c);
        }
      };
      rec(0, static_cast<std::int64_t>(d));
    }
  }
  return out;
}

double shannon_entropy(const ProbVector &p) {
  double h = 0.0;
  for (const Rational &r : p.entries()) {
    if (r.is_zero()) continue;
    const double x = r.to_double();
    h -= x * std::log2(x);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Probability-valued theories

const ProbVector &ProbabilityTheoryBase::dist(const Term &t) {
  const auto *p = std::get_if<ProbVector>(&t);
  if (!p) throw InputError("term is not a probability vector");
  return *p;
}

Term ProbabilityTheoryBase::combine(const Term &a, const Term &b) const { return tensor(dist(a), dist(b)); }

std::vector<Term> ProbabilityTheoryBase::enumerate_up_to(std::size_t bound) const {
  std::vector<Term> out;
  for (auto &p : enumerate_distributions(3, std::max<std::size_t>(bound, 1))) out.emplace_back(std::move(p));
  return out;
}

Term ProbabilityTheoryBase::parse_term(const nlohmann::json &j) const {
  if (!j.is_array() || j.empty()) throw InputError("probability vector must be a non-empty array, got " + j.dump());
  std::vector<Rational> e;
  for (const auto &x : j) {
    if (x.is_string()) {
      e.push_back(Rational::parse(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      e.emplace_back(x.get<std::int64_t>());
    } else {
      throw InputError("probabilities must be rational strings such as \"1/2\", got " + x.dump());
    }
  }
  return ProbVector(std::move(e));
}

nlohmann::json ProbabilityTheoryBase::term_to_json(const Term &t) const {
  nlohmann::json j = nlohmann::json::array();
  for (const Rational &r : dist(t).entries()) j.push_back(r.str());
  return j;
}

std::string ProbabilityTheoryBase::format(const Term &t) const { return dist(t).str(); }

Decision RandomnessTheory::geq(const Term &a, const Term &b) const {
  return deterministic_convertible(dist(a), dist(b)).decision;
}

Decision EntanglementSpectrumTheory::geq(const Term &a, const Term &b) const {
  const ProbVector &s = dist(a);
  const ProbVector &t = dist(b);
  if (entanglement_convertible(s, t)) return Decision::proven({t.str() + " majorizes " + s.str()});
  return Decision::refuted({t.str() + " does not majorize " + s.str()});
}

// ---------------------------------------------------------------------------
// Reactions

std::optional<std::vector<Rational>> separating_conservation_law(const PresentedSMC &smc, const NatVector &a,
                                                                 const NatVector &b) {
  const auto k = static_cast<Eigen::Index>(smc.objects().size());
  const auto &rules = smc.morphisms();
  RationalMatrix deltas = RationalMatrix::Zero(std::max<Eigen::Index>(static_cast<Eigen::Index>(rules.size()), 1), k);
  for (std::size_t r = 0; r < rules.size(); ++r)
    for (Eigen::Index i = 0; i < k; ++i) {
      deltas(static_cast<Eigen::Index>(r), i) = Rational(rules[r].to[static_cast<std::size_t>(i)] - rules[r].from[static_cast<std::size_t>(i)]);
    }
  const RationalMatrix laws = null_space(deltas);
  for (Eigen::Index c = 0; c < laws.cols(); ++c) {
    Rational diff;
    for (Eigen::Index i = 0; i < k; ++i) diff += laws(i, c) * Rational(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]);
    if (diff.is_zero()) continue;
    std::int64_t scale = 1;
    for (Eigen::Index i = 0; i < k; ++i) scale = std::lcm(scale, laws(i, c).den());
    std::vector<Rational> w;
    for (Eigen::Index i = 0; i < k; ++i) w.push_back(laws(i, c) * Rational(scale));
    return w;
  }
  return std::nullopt;
}

Decision ReactionTheory::geq(const Term &a, const Term &b) const {
  Decision search = MultisetTheory::geq(a, b);
  if (!search.is_unknown()) return search;
  const NatVector &x = counts(a);
  const NatVector &y = counts(b);
  const auto law = separating_conservation_law(presentation(), x, y);
  if (!law) return search;
  std::string desc;
  Rational va;
  Rational vb;
  for (std::size_t i = 0; i < law->size(); ++i) {
    const Rational &w = (*law)[i];
    va += w * Rational(x[i]);
    vb += w * Rational(y[i]);
    if (w.is_zero()) continue;
    if (desc.empty()) {
      desc = w.str();
    } else {
      desc += w < Rational(0) ? " - " + (-w).str() : " + " + w.str();
    }
    desc += "·" + presentation().objects()[i];
  }
  desc = "conserved quantity " + desc;
  return Decision::refuted({desc + " is invariant under every reaction", "its value is " + va.str() + " on " + format(a) +
                                                                               " but " + vb.str() + " on " + format(b)},
                           limits().depth);
}

Decision reaction_convertible(const std::map<std::string, std::int64_t> &a,
                              const std::map<std::string, std::int64_t> &b, const ReactionTheory &t,
                              std::size_t bound) {
  const ReactionTheory bounded(t.presentation(), SearchLimits{bound, t.limits().max_state_size});
  return bounded.geq(t.presentation().multiset(a), t.presentation().multiset(b));
}

}  // namespace resconv
