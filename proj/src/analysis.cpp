#include "resconv/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "resconv/errors.hpp"

namespace resconv {

namespace {

/// Shared bookkeeping for the sample checks.
struct Scan {
  const TheoryOracle &t;
  std::string property;
  std::size_t sample_size;
  std::size_t bound;
  bool exhaustive;
  bool unknown = false;

  bool proven(const Decision &d) {
    if (d.is_unknown()) unknown = true;
    return d.is_proven();
  }
  bool refuted(const Decision &d) {
    if (d.is_unknown()) unknown = true;
    return d.is_refuted();
  }

  PropertyReport refute(std::vector<Term> witness, std::vector<std::string> why) const {
    return {property, Decision::refuted(Certificate(std::move(why)), bound), std::move(witness), false};
  }

  PropertyReport finish() const {
    if (exhaustive && !unknown) {
      return {property,
              Decision::proven({"checked exhaustively on all " + std::to_string(sample_size) + " elements"}, bound),
              {},
              false};
    }
    if (auto proof = t.structural_proof(property)) return {property, Decision::proven(std::move(*proof), bound), {}, false};
    const std::string why = unknown ? "some queries were inconclusive at the search bound"
                                    : "unrefuted on a sample of " + std::to_string(sample_size) + " elements";
    return {property, Decision::unknown(bound, why), {}, unknown};
  }
};

Scan scan(const TheoryOracle &t, std::string property, const std::vector<Term> &sample, std::size_t bound) {
  return Scan{t, std::move(property), sample.size(), bound, covers_carrier(t, sample)};
}

}  // namespace

std::string PropertyReport::status() const {
  switch (decision.verdict()) {
    case Verdict::Proven:
      return "Proven";
    case Verdict::Refuted:
      return "Refuted";
    case Verdict::Unknown:
      return inconclusive ? "Unknown" : "unrefuted on sample";
  }
  return "Unknown";
}

nlohmann::json to_json(const PropertyReport &r, const TheoryOracle &t) {
  nlohmann::json j;
  j["property"] = r.property;
  j["status"] = r.status();
  j["verdict"] = std::string(to_string(r.decision.verdict()));
  j["bound"] = r.decision.bound();
  j["witness"] = nlohmann::json::array();
  for (const auto &w : r.witness) j["witness"].push_back(t.term_to_json(w));
  if (r.decision.witness()) j["certificate"] = r.decision.witness()->steps;
  if (!r.decision.reason().empty()) j["reason"] = r.decision.reason();
  return j;
}

bool covers_carrier(const TheoryOracle &t, const std::vector<Term> &sample) {
  const auto carrier = t.carrier();
  if (!carrier) return false;
  return std::all_of(carrier->begin(), carrier->end(),
                     [&](const Term &x) { return std::find(sample.begin(), sample.end(), x) != sample.end(); });
}

// ---------------------------------------------------------------------------
// Catalysis

CatalystResult find_catalyst(const TheoryOracle &t, const Term &a, const Term &b, const std::vector<Term> &candidates,
                             std::size_t bound) {
  const Decision direct = t.geq(a, b);
  if (direct.is_proven()) {
    return {Decision::refuted({"no catalyst needed: " + t.format(a) + " ⪰ " + t.format(b) + " already"}, bound),
            std::nullopt};
  }
  bool unknown = direct.is_unknown();
  for (const Term &c : candidates) {
    const Decision d = t.geq(t.combine(a, c), t.combine(b, c));
    if (d.is_proven()) {
      if (direct.is_refuted()) {
        std::vector<std::string> steps{"without catalyst: " + t.format(a) + " ⋡ " + t.format(b)};
        for (const auto &s : direct.witness()->steps) steps.push_back("  " + s);
        steps.push_back("with catalyst " + t.format(c) + ": " + t.format(t.combine(a, c)) + " ⪰ " + t.format(t.combine(b, c)));
        for (const auto &s : d.witness()->steps) steps.push_back("  " + s);
        return {Decision::proven(Certificate(std::move(steps)), bound), c};
      }
      unknown = true;
    } else if (d.is_unknown()) {
      unknown = true;
    }
  }
  if (!unknown) {
    if (covers_carrier(t, candidates)) {
      return {Decision::refuted({"no element of the carrier catalyses " + t.format(a) + " → " + t.format(b)}, bound),
              std::nullopt};
    }
    if (auto proof = t.structural_proof("catalysis-free")) {
      std::vector<std::string> steps{"theory is catalysis-free:"};
      for (const auto &s : proof->steps) steps.push_back("  " + s);
      return {Decision::refuted(Certificate(std::move(steps)), bound), std::nullopt};
    }
  }
  return {Decision::unknown(bound, "no catalyst among " + std::to_string(candidates.size()) + " candidates"), std::nullopt};
}

PropertyReport check_catalysis_free(const TheoryOracle &t, const std::vector<Term> &sample, std::size_t bound) {
  Scan s = scan(t, "catalysis-free", sample, bound);
  for (const Term &a : sample)
    for (const Term &b : sample) {
      if (!s.refuted(t.geq(a, b))) continue;
      for (const Term &c : sample) {
        if (s.proven(t.geq(t.combine(a, c), t.combine(b, c)))) {
          return s.refute({a, b, c}, {t.format(a) + " ⋡ " + t.format(b),
                                      t.format(a) + " + " + t.format(c) + " ⪰ " + t.format(b) + " + " + t.format(c)});
        }
      }
    }
  return s.finish();
}

PropertyReport check_non_interacting(const TheoryOracle &t, const std::vector<Term> &sample, std::size_t bound) {
  Scan s = scan(t, "non-interacting", sample, bound);
  std::optional<std::vector<Term>> pool;
  for (const Term &a : sample) {
    auto complete = t.decompositions(a);
    std::vector<std::pair<Term, Term>> splits;
    if (complete) {
      splits = std::move(*complete);
    } else {
      if (!pool) pool = t.enumerate_up_to(bound);
      for (const Term &x : *pool)
        for (const Term &y : *pool)
          if (s.proven(equivalent(t, a, t.combine(x, y)))) splits.emplace_back(x, y);
    }
    for (const Term &b1 : sample)
      for (const Term &b2 : sample) {
        if (!s.proven(t.geq(a, t.combine(b1, b2)))) continue;
        bool found = false;
        for (const auto &[a1, a2] : splits) {
          if (s.proven(t.geq(a1, b1)) && s.proven(t.geq(a2, b2))) {
            found = true;
            break;
          }
        }
        if (found) continue;
        if (complete) {
          return s.refute({a, b1, b2}, {t.format(a) + " ⪰ " + t.format(b1) + " + " + t.format(b2),
                                        "none of the " + std::to_string(splits.size()) + " decompositions a ≃ a₁ + a₂ has a₁ ⪰ " +
                                            t.format(b1) + " and a₂ ⪰ " + t.format(b2)});
        }
        s.unknown = true;
      }
  }
  return s.finish();
}

PropertyReport check_quantity_like(const TheoryOracle &t, const std::vector<Term> &sample) {
  Scan s = scan(t, "quantity-like", sample, 0);
  for (const Term &a1 : sample)
    for (const Term &b1 : sample) {
      if (!s.proven(t.geq(a1, b1))) continue;
      for (const Term &a2 : sample) {
        const Term lhs = t.combine(a1, a2);
        for (const Term &b2 : sample) {
          if (!s.proven(equivalent(t, lhs, t.combine(b1, b2)))) continue;
          if (s.refuted(t.geq(b2, a2))) {
            return s.refute({a1, a2, b1, b2},
                            {t.format(a1) + " + " + t.format(a2) + " ≃ " + t.format(b1) + " + " + t.format(b2),
                             t.format(a1) + " ⪰ " + t.format(b1), "but " + t.format(b2) + " ⋡ " + t.format(a2)});
          }
        }
      }
    }
  return s.finish();
}

PropertyReport check_quality_like(const TheoryOracle &t, const std::vector<Term> &sample) {
  Scan s = scan(t, "quality-like", sample, 0);
  for (const Term &a : sample) {
    if (s.refuted(equivalent(t, t.combine(a, a), a))) {
      return s.refute({a}, {t.format(a) + " + " + t.format(a) + " = " + t.format(t.combine(a, a)) + " ≄ " + t.format(a)});
    }
  }
  return s.finish();
}

PropertyReport check_waste_free(const TheoryOracle &t, const std::vector<Term> &sample) {
  Scan s = scan(t, "waste-free", sample, 0);
  bool all_disposable = true;
  for (const Term &a : sample) {
    const Decision d = t.geq(a, t.zero());
    if (s.refuted(d)) return s.refute({a}, {t.format(a) + " ⋡ " + t.format(t.zero())});
    all_disposable = all_disposable && d.is_proven();
  }
  if (all_disposable) {
    for (const Term &a : sample)
      for (const Term &b : sample)
        if (s.refuted(t.geq(t.combine(a, b), a))) {
          return s.refute({a, b}, {"every element is freely disposable but " + t.format(a) + " + " + t.format(b) + " ⋡ " +
                                   t.format(a)});
        }
  }
  return s.finish();
}

PropertyReport check_riesz_interpolation(const TheoryOracle &t, const std::vector<Term> &as, const std::vector<Term> &bs,
                                         std::size_t bound) {
  const std::string name = "Riesz interpolation";
  for (const Term &a : as)
    for (const Term &b : bs) {
      const Decision d = t.geq(a, b);
      if (!d.is_proven()) {
        return {name,
                Decision::unknown(bound, "precondition fails: " + t.format(a) + " ⪰ " + t.format(b) + " is not Proven"),
                {},
                true};
      }
    }
  const std::vector<Term> pool = t.carrier() ? *t.carrier() : t.enumerate_up_to(bound);
  bool unknown = false;
  for (const Term &c : pool) {
    bool ok = true;
    for (const Term &a : as) {
      const Decision d = t.geq(a, c);
      unknown = unknown || d.is_unknown();
      ok = ok && d.is_proven();
    }
    for (const Term &b : bs) {
      if (!ok) break;
      const Decision d = t.geq(c, b);
      unknown = unknown || d.is_unknown();
      ok = ok && d.is_proven();
    }
    if (ok) return {name, Decision::proven({"interpolant " + t.format(c)}, bound), {c}, false};
  }
  if (t.carrier() && !unknown) {
    return {name, Decision::refuted({"no element of the carrier lies between the two families"}, bound), {}, false};
  }
  return {name, Decision::unknown(bound, "no interpolant among " + std::to_string(pool.size()) + " enumerated terms"), {},
          unknown};
}

// ---------------------------------------------------------------------------
// Theorems

std::vector<PropertyReport> cross_check_theorems(const TheoryOracle &t, const std::vector<Term> &sample, std::size_t bound) {
  std::vector<PropertyReport> out;

  const PropertyReport ni = check_non_interacting(t, sample, bound);
  const PropertyReport ql = check_quantity_like(t, sample);
  const PropertyReport qual = check_quality_like(t, sample);

  {
    Scan s = scan(t, "non-interacting and quantity-like imply catalysis-free", sample, bound);
    if (!ni.refuted() && !ql.refuted()) {
      const PropertyReport cf = check_catalysis_free(t, sample, bound);
      s.unknown = ni.inconclusive || ql.inconclusive || cf.inconclusive;
      if (cf.refuted()) {
        out.push_back(s.refute(cf.witness, {"theory is non-interacting and quantity-like on the sample",
                                            "yet a catalyst exists: " + cf.decision.witness()->steps.back()}));
      } else {
        out.push_back(s.finish());
      }
    } else {
      out.push_back({s.property, Decision::proven({"hypothesis fails on the sample"}, bound), {}, false});
    }
  }

  {
    Scan s = scan(t, "no cloning in quantity-like theories", sample, bound);
    bool violated = false;
    if (!ql.refuted()) {
      s.unknown = ql.inconclusive;
      for (const Term &a : sample) {
        const Decision clone = t.geq(a, t.combine(a, a));
        const Decision free = t.geq(t.zero(), a);
        if (clone.is_unknown() || free.is_unknown()) {
          s.unknown = true;
          continue;
        }
        if (clone.is_proven() != free.is_proven()) {
          out.push_back(s.refute({a}, {t.format(a) + " ⪰ 2·" + t.format(a) + " is " + std::string(to_string(clone.verdict())) +
                                           " but 0 ⪰ " + t.format(a) + " is " + std::string(to_string(free.verdict()))}));
          violated = true;
          break;
        }
      }
      if (!violated) out.push_back(s.finish());
    } else {
      out.push_back({s.property, Decision::proven({"hypothesis fails on the sample"}, bound), {}, false});
    }
  }

  {
    Scan s = scan(t, "quality-like equivalences", sample, bound);
    bool violated = false;
    if (!qual.refuted()) {
      s.unknown = qual.inconclusive;
      for (const Term &a : sample) {
        for (const Term &b : sample) {
          const Decision d1 = t.geq(t.combine(a, a), b);
          const Decision d2 = t.geq(a, b);
          const Decision d3 = t.geq(a, t.combine(b, b));
          if (d1.is_unknown() || d2.is_unknown() || d3.is_unknown()) {
            s.unknown = true;
            continue;
          }
          if (d1.is_proven() != d2.is_proven() || d2.is_proven() != d3.is_proven()) {
            out.push_back(s.refute({a, b}, {"a + a ⪰ b, a ⪰ b and a ⪰ b + b disagree for a = " + t.format(a) + ", b = " + t.format(b)}));
            violated = true;
            break;
          }
        }
        if (violated) break;
      }
      if (!violated) out.push_back(s.finish());
    } else {
      out.push_back({s.property, Decision::proven({"hypothesis fails on the sample"}, bound), {}, false});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random finite theories

namespace {

struct Monoid {
  std::size_t n;
  std::vector<std::vector<std::size_t>> op;
  std::size_t zero;
};

Monoid family(int kind, std::size_t k) {
  Monoid m{k, std::vector<std::vector<std::size_t>>(k, std::vector<std::size_t>(k)), 0};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      switch (kind) {
        case 0: m.op[a][b] = (a + b) % k; break;
        case 1: m.op[a][b] = std::min(a + b, k - 1); break;
        case 2: m.op[a][b] = std::max(a, b); break;
        default: m.op[a][b] = std::min(a, b); break;
      }
    }
  if (kind == 3) m.zero = k - 1;
  return m;
}

Monoid product(const Monoid &x, const Monoid &y) {
  Monoid m{x.n * y.n, std::vector<std::vector<std::size_t>>(x.n * y.n, std::vector<std::size_t>(x.n * y.n)),
           x.zero * y.n + y.zero};
  for (std::size_t a = 0; a < m.n; ++a)
    for (std::size_t b = 0; b < m.n; ++b) m.op[a][b] = x.op[a / y.n][b / y.n] * y.n + y.op[a % y.n][b % y.n];
  return m;
}

}  // namespace

FiniteTheoryTable random_theory_table(std::mt19937_64 &rng, std::size_t max_n) {
  if (max_n == 0) throw InputError("random theory needs at least one element");
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  while (true) {
    Monoid m;
    if (max_n >= 4 && uniform(0, 4) == 0) {
      const std::size_t k1 = 2;
      const std::size_t k2 = uniform(2, max_n / 2);
      m = product(family(static_cast<int>(uniform(0, 3)), k1), family(static_cast<int>(uniform(0, 3)), k2));
    } else {
      m = family(static_cast<int>(uniform(0, 3)), uniform(1, max_n));
    }
    const std::size_t n = m.n;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    FiniteTheoryTable t;
    t.carrier = n;
    t.zero = perm[m.zero];
    t.combine.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t.combine[perm[a]][perm[b]] = perm[m.op[a][b]];

    static const double densities[] = {0.0, 0.05, 0.1, 0.2, 0.35, 0.6};
    std::bernoulli_distribution edge(densities[uniform(0, 5)]);
    t.geq.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t.geq[a][b] = a == b || edge(rng);

    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (!t.geq[a][b] && t.geq[a][k] && t.geq[k][b]) t.geq[a][b] = changed = true;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (!t.geq[a][b]) continue;
          for (std::size_t c = 0; c < n; ++c) {
            const std::size_t x = t.combine[a][c];
            const std::size_t y = t.combine[b][c];
            if (!t.geq[x][y]) t.geq[x][y] = changed = true;
          }
        }
    }

    std::bernoulli_distribution relabel(0.3);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        if (!relabel(rng)) continue;
        std::vector<std::size_t> cls;
        for (std::size_t x = 0; x < n; ++x)
          if (t.equiv(x, t.combine[a][b])) cls.push_back(x);
        const std::size_t pick = cls[uniform(0, cls.size() - 1)];
        t.combine[a][b] = t.combine[b][a] = pick;
      }

    if (check_axioms(t).empty()) return t;
  }
}

}  // namespace resconv
