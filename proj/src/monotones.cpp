#include "resconv/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "resconv/errors.hpp"
#include "resconv/instances.hpp"

namespace resconv {

std::string_view to_string(MonotoneClass c) {
  switch (c) {
    case MonotoneClass::General: return "general";
    case MonotoneClass::Additive: return "additive";
    case MonotoneClass::Supremal: return "supremal";
  }
  return "general";
}

MonotoneClass monotone_class_from_string(std::string_view s) {
  if (s == "general") return MonotoneClass::General;
  if (s == "additive") return MonotoneClass::Additive;
  if (s == "supremal") return MonotoneClass::Supremal;
  throw InputError("monotone class must be general, additive or supremal, got '" + std::string(s) + "'");
}

double to_double(const MonotoneValue &v) {
  return std::holds_alternative<Rational>(v) ? std::get<Rational>(v).to_double() : std::get<double>(v);
}

std::string to_string(const MonotoneValue &v) {
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).str();
  std::ostringstream os;
  os.precision(12);
  os << std::get<double>(v);
  return os.str();
}

namespace {

bool both_exact(const MonotoneValue &x, const MonotoneValue &y) {
  return std::holds_alternative<Rational>(x) && std::holds_alternative<Rational>(y);
}

}  // namespace

bool value_less(const MonotoneValue &x, const MonotoneValue &y) {
  if (both_exact(x, y)) return std::get<Rational>(x) < std::get<Rational>(y);
  return to_double(x) < to_double(y) - kTolerance;
}

bool value_equal(const MonotoneValue &x, const MonotoneValue &y) {
  if (both_exact(x, y)) return std::get<Rational>(x) == std::get<Rational>(y);
  return std::abs(to_double(x) - to_double(y)) <= kTolerance;
}

MonotoneValue value_add(const MonotoneValue &x, const MonotoneValue &y) {
  if (both_exact(x, y)) return std::get<Rational>(x) + std::get<Rational>(y);
  return to_double(x) + to_double(y);
}

MonotoneValue value_sub(const MonotoneValue &x, const MonotoneValue &y) {
  if (both_exact(x, y)) return std::get<Rational>(x) - std::get<Rational>(y);
  return to_double(x) - to_double(y);
}

MonotoneValue value_max(const MonotoneValue &x, const MonotoneValue &y) { return value_less(x, y) ? y : x; }

// ---------------------------------------------------------------------------

Monotone normalize_supremal(const Monotone &m, const TheoryOracle &t) {
  const MonotoneValue at_zero = m(t.zero());
  return Monotone(m.name(), m.declared_class(), [m, at_zero](const Term &x) { return value_sub(m(x), at_zero); });
}

Monotone builtin_monotone(const std::string &spec, MonotoneClass cls, const TheoryOracle &t) {
  auto nat = [](const Term &x) -> const NatVector & {
    const auto *v = std::get_if<NatVector>(&x);
    if (!v) throw InputError("monotone expects a vector or multiset resource");
    return *v;
  };
  Monotone::Fn fn;
  if (spec == "entropy") {
    fn = [](const Term &x) -> MonotoneValue { return shannon_entropy(ProbabilityTheoryBase::dist(x)); };
  } else if (spec == "total") {
    fn = [nat](const Term &x) -> MonotoneValue {
      Rational s;
      for (auto e : nat(x)) s += Rational(e);
      return s;
    };
  } else if (spec == "max") {
    fn = [nat](const Term &x) -> MonotoneValue {
      std::int64_t best = 0;
      for (auto e : nat(x)) best = std::max(best, e);
      return Rational(best);
    };
  } else if (spec.rfind("component:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(spec.substr(10));
    } catch (const std::exception &) {
      throw InputError("bad component index in '" + spec + "'");
    }
    fn = [nat, k, spec](const Term &x) -> MonotoneValue {
      const NatVector &v = nat(x);
      if (k >= v.size()) throw InputError("'" + spec + "' is out of range for a vector of length " + std::to_string(v.size()));
      return Rational(v[k]);
    };
  } else if (spec.rfind("indicator:", 0) == 0) {
    Term ref;
    try {
      ref = t.parse_term(nlohmann::json::parse(spec.substr(10)));
    } catch (const nlohmann::json::exception &) {
      throw InputError("bad reference resource in '" + spec + "'");
    }
    const TheoryOracle *theory = &t;
    fn = [theory, ref](const Term &x) -> MonotoneValue { return Rational(theory->geq(x, ref).is_proven() ? 1 : 0); };
  } else {
    throw InputError("unknown monotone '" + spec + "'; expected entropy, total, max, component:k or indicator:i");
  }
  Monotone m(spec, cls, std::move(fn));
  return cls == MonotoneClass::Supremal ? normalize_supremal(m, t) : m;
}

PropertyReport verify_monotone(const Monotone &m, const TheoryOracle &t, const std::vector<Term> &sample) {
  const std::string name = "monotone " + m.name();
  bool unknown = false;
  std::vector<MonotoneValue> values;
  for (const Term &x : sample) values.push_back(m(x));
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const Decision d = t.geq(sample[i], sample[j]);
      unknown = unknown || d.is_unknown();
      if (d.is_proven() && value_less(values[i], values[j])) {
        return {name,
                Decision::refuted({t.format(sample[i]) + " ⪰ " + t.format(sample[j]),
                                   "but M = " + to_string(values[i]) + " < " + to_string(values[j])}),
                {sample[i], sample[j]},
                false};
      }
    }
  if (covers_carrier(t, sample) && !unknown) {
    return {name, Decision::proven({"order preserved on the whole carrier"}), {}, false};
  }
  return {name, Decision::unknown(0, unknown ? "some queries were inconclusive" : "unrefuted on sample"), {}, unknown};
}

PropertyReport classify(const Monotone &m, const TheoryOracle &t, const std::vector<Term> &sample) {
  const std::string name = std::string(to_string(m.declared_class())) + " law for " + m.name();
  if (m.declared_class() == MonotoneClass::General) {
    return {name, Decision::proven({"general monotones obey no combination law"}), {}, false};
  }
  const bool additive = m.declared_class() == MonotoneClass::Additive;
  std::vector<MonotoneValue> values;
  for (const Term &x : sample) values.push_back(m(x));
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const MonotoneValue lhs = m(t.combine(sample[i], sample[j]));
      const MonotoneValue rhs = additive ? value_add(values[i], values[j]) : value_max(values[i], values[j]);
      if (!value_equal(lhs, rhs)) {
        return {name,
                Decision::refuted({"M(" + t.format(sample[i]) + " + " + t.format(sample[j]) + ") = " + to_string(lhs),
                                   std::string(additive ? "M(a) + M(b)" : "max(M(a), M(b))") + " = " + to_string(rhs)}),
                {sample[i], sample[j]},
                false};
      }
    }
  if (covers_carrier(t, sample)) return {name, Decision::proven({"law holds on every pair of the carrier"}), {}, false};
  return {name, Decision::unknown(0, "unrefuted on sample"), {}, false};
}

std::vector<Monotone> complete_family(const FiniteTheoryTable &t) {
  t.validate();
  std::vector<Monotone> out;
  const auto table = std::make_shared<FiniteTheoryTable>(t);
  for (std::size_t i = 0; i < t.carrier; ++i) {
    out.emplace_back("M_" + std::to_string(i), MonotoneClass::General, [table, i](const Term &x) -> MonotoneValue {
      const auto *a = std::get_if<TableIndex>(&x);
      if (!a || a->value >= table->carrier) throw InputError("indicator monotone expects a carrier index");
      return Rational(table->geq[a->value][i] ? 1 : 0);
    });
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> completeness_violation(const FiniteTheoryTable &t,
                                                                          const std::vector<Monotone> &family) {
  for (std::size_t a = 0; a < t.carrier; ++a)
    for (std::size_t b = 0; b < t.carrier; ++b) {
      bool dominates = true;
      for (const auto &m : family)
        if (value_less(m(TableIndex{a}), m(TableIndex{b}))) dominates = false;
      if (dominates != static_cast<bool>(t.geq[a][b])) return std::make_pair(a, b);
    }
  return std::nullopt;
}

std::optional<MonotoneValue> rate_upper_bound(const Monotone &m, const Term &a, const Term &b) {
  const MonotoneValue ma = m(a);
  const MonotoneValue mb = m(b);
  if (std::holds_alternative<Rational>(ma) && std::holds_alternative<Rational>(mb)) {
    if (std::get<Rational>(mb).is_zero()) return std::nullopt;
    return std::get<Rational>(ma) / std::get<Rational>(mb);
  }
  if (std::abs(to_double(mb)) <= kTolerance) return std::nullopt;
  return to_double(ma) / to_double(mb);
}

namespace {

/// Replicas 1·x .. caps·x.
std::vector<Term> replicas(const TheoryOracle &t, const Term &x, std::size_t caps) {
  std::vector<Term> out{x};
  for (std::size_t k = 2; k <= caps; ++k) out.push_back(t.combine(out.back(), x));
  return out;
}

}  // namespace

RateResult rate(const TheoryOracle &t, const Term &a, const Term &b, std::size_t caps, const std::vector<Monotone> &monotones) {
  if (caps == 0) throw InputError("rate caps must be at least 1");
  RateResult r;
  r.caps = caps;
  const auto na = replicas(t, a, caps);
  const auto mb = replicas(t, b, caps);
  for (std::size_t n = 1; n <= caps; ++n)
    for (std::size_t m = 1; m <= caps; ++m) {
      const Rational q(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
      if (r.best_pair && q <= r.best) continue;
      const Decision d = t.geq(na[n - 1], mb[m - 1]);
      if (d.is_unknown()) r.inconclusive = true;
      if (d.is_proven()) {
        r.best = q;
        r.best_pair = std::make_pair(n, m);
      }
    }

  bool any = false;
  for (const auto &mono : monotones) {
    if (mono.declared_class() != MonotoneClass::Additive) continue;
    any = true;
    auto bound = rate_upper_bound(mono, a, b);
    if (!bound) continue;
    if (!r.upper_bound || value_less(*bound, *r.upper_bound)) {
      r.upper_bound = bound;
      r.bound_monotone = mono.name();
    }
  }
  r.bound_infinite = any && !r.upper_bound;
  r.exact = r.upper_bound && value_equal(*r.upper_bound, MonotoneValue(r.best));
  return r;
}

RateResult minimal_rate(const TheoryOracle &t, const Term &a, const Term &b, std::size_t caps) {
  if (caps == 0) throw InputError("rate caps must be at least 1");
  RateResult r;
  r.caps = caps;
  const auto na = replicas(t, a, caps);
  const auto mb = replicas(t, b, caps);
  for (std::size_t n = 1; n <= caps; ++n)
    for (std::size_t m = 1; m <= caps; ++m) {
      const Rational q(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
      if (r.best_pair && q >= r.best) continue;
      const Decision d = t.geq(na[n - 1], mb[m - 1]);
      if (d.is_unknown()) r.inconclusive = true;
      if (d.is_proven()) {
        r.best = q;
        r.best_pair = std::make_pair(n, m);
      }
    }
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> find_activation(const TheoryOracle &t, const Term &a, const Term &b,
                                                                   std::size_t caps) {
  if (caps == 0) return std::nullopt;
  const auto na = replicas(t, a, caps);
  const auto nb = replicas(t, b, caps);
  std::vector<Verdict> v;
  for (std::size_t k = 0; k < caps; ++k) v.push_back(t.geq(na[k], nb[k]).verdict());
  for (std::size_t k = 1; k <= caps; ++k) {
    if (v[k - 1] != Verdict::Refuted) continue;
    for (std::size_t n = k + 1; n <= caps; ++n)
      if (v[n - 1] == Verdict::Proven) return std::make_pair(k, n);
  }
  return std::nullopt;
}

nlohmann::json to_json(const RateResult &r) {
  nlohmann::json j;
  j["best"] = r.best.str();
  j["best_pair"] = r.best_pair ? nlohmann::json{{"n", r.best_pair->first}, {"m", r.best_pair->second}} : nlohmann::json();
  if (r.upper_bound) {
    j["upper_bound"] = to_string(*r.upper_bound);
    j["bound_monotone"] = r.bound_monotone;
  } else {
    j["upper_bound"] = r.bound_infinite ? nlohmann::json("inf") : nlohmann::json();
  }
  j["exact"] = r.exact;
  j["caps"] = r.caps;
  j["inconclusive"] = r.inconclusive;
  return j;
}

}  // namespace resconv
