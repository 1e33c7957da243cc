#include "resconv/presented.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "resconv/errors.hpp"

namespace resconv {

namespace {

std::map<std::string, std::int64_t> multiset_counts(const nlohmann::json &j) {
  std::map<std::string, std::int64_t> counts;
  if (j.is_array()) {
    for (const auto &e : j) {
      if (!e.is_string()) throw InputError("multiset list entries must be names, got " + e.dump());
      ++counts[e.get<std::string>()];
    }
  } else if (j.is_object()) {
    for (const auto &[k, v] : j.items()) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw InputError("multiset count for '" + k + "' must be a non-negative integer");
      }
      counts[k] += v.get<std::int64_t>();
    }
  } else {
    throw InputError("multiset must be a list of names or a {name: count} object, got " + j.dump());
  }
  return counts;
}

std::int64_t total(const NatVector &v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

PresentedSMC::PresentedSMC(std::vector<std::string> objects) : objects_(std::move(objects)) {
  std::set<std::string> seen;
  for (const auto &o : objects_) {
    if (!seen.insert(o).second) throw InputError("duplicate object generator '" + o + "'");
  }
}

std::size_t PresentedSMC::object_index(const std::string &name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  throw InputError("undeclared object generator '" + name + "'");
}

NatVector PresentedSMC::multiset(const std::map<std::string, std::int64_t> &counts) const {
  NatVector v(objects_.size(), 0);
  for (const auto &[name, c] : counts) {
    if (c < 0) throw InputError("negative multiplicity for '" + name + "'");
    v[object_index(name)] += c;
  }
  return v;
}

void PresentedSMC::add_morphism(std::string name, const std::map<std::string, std::int64_t> &from,
                                const std::map<std::string, std::int64_t> &to) {
  morphisms_.push_back({std::move(name), multiset(from), multiset(to)});
}

std::string PresentedSMC::format(const NatVector &m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out += ", ";
    first = false;
    if (m[i] != 1) out += std::to_string(m[i]) + "·";
    out += objects_[i];
  }
  return out + "}";
}

MultisetTheory::MultisetTheory(PresentedSMC smc, SearchLimits limits) : smc_(std::move(smc)), limits_(limits) {}

const NatVector &MultisetTheory::counts(const Term &t) const {
  const auto *v = std::get_if<NatVector>(&t);
  if (!v || v->size() != smc_.objects().size()) throw InputError("term is not a multiset over the declared objects");
  for (auto c : *v)
    if (c < 0) throw InputError("multiset with negative multiplicity");
  return *v;
}

Term MultisetTheory::combine(const Term &a, const Term &b) const {
  NatVector r = counts(a);
  const NatVector &y = counts(b);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Term MultisetTheory::zero() const { return NatVector(smc_.objects().size(), 0); }

Decision MultisetTheory::geq(const Term &a, const Term &b) const {
  const NatVector &start = counts(a);
  const NatVector &goal = counts(b);
  if (start == goal) return Decision::proven({"identity: empty circuit"}, limits_.depth);

  struct Node {
    NatVector state;
    std::size_t parent;
    std::size_t rule;
    std::size_t depth;
  };
  std::vector<Node> nodes{{start, 0, 0, 0}};
  std::set<NatVector> seen{start};
  std::deque<std::size_t> queue{0};
  const auto &rules = smc_.morphisms();

  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (nodes[cur].depth == limits_.depth) continue;
    const NatVector state = nodes[cur].state;
    const std::size_t depth = nodes[cur].depth;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      bool applicable = true;
      for (std::size_t i = 0; i < state.size() && applicable; ++i) applicable = state[i] >= rules[r].from[i];
      if (!applicable) continue;
      NatVector next = state;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += rules[r].to[i] - rules[r].from[i];
      if (limits_.max_state_size > 0 && total(next) > limits_.max_state_size) continue;
      if (!seen.insert(next).second) continue;
      nodes.push_back({next, cur, r, depth + 1});
      if (next == goal) {
        std::vector<std::string> steps;
        for (std::size_t k = nodes.size() - 1; k != 0; k = nodes[k].parent) {
          const Node &n = nodes[k];
          steps.push_back("apply " + rules[n.rule].name + ": " + smc_.format(nodes[n.parent].state) + " → " +
                          smc_.format(n.state));
        }
        std::reverse(steps.begin(), steps.end());
        return Decision::proven(Certificate(std::move(steps)), limits_.depth);
      }
      queue.push_back(nodes.size() - 1);
    }
  }
  return Decision::unknown(limits_.depth, "no generator circuit of depth ≤ " + std::to_string(limits_.depth) + " reaches " +
                                              smc_.format(goal));
}

std::vector<Term> MultisetTheory::enumerate_up_to(std::size_t bound) const {
  std::vector<Term> out;
  const std::size_t k = smc_.objects().size();
  NatVector cur(k, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == k) {
      out.emplace_back(cur);
      return;
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      cur[i] = c;
      rec(i + 1, left - c);
    }
    cur[i] = 0;
  };
  rec(0, static_cast<std::int64_t>(bound));
  return out;
}

Term MultisetTheory::parse_term(const nlohmann::json &j) const { return smc_.multiset(multiset_counts(j)); }

nlohmann::json MultisetTheory::term_to_json(const Term &t) const {
  const NatVector &v = counts(t);
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) j[smc_.objects()[i]] = v[i];
  return j;
}

std::string MultisetTheory::format(const Term &t) const { return smc_.format(counts(t)); }

MultisetTheory decategorify(const PresentedSMC &s, std::size_t bound) {
  return MultisetTheory(s, SearchLimits{bound, 0});
}

PresentedSMC presented_smc_from_json(const nlohmann::json &j) {
  if (!j.contains("objects") || !j["objects"].is_array()) throw InputError("presentation needs an \"objects\" array");
  std::vector<std::string> objects;
  for (const auto &o : j["objects"]) {
    if (!o.is_string()) throw InputError("object generators must be strings");
    objects.push_back(o.get<std::string>());
  }
  PresentedSMC s(std::move(objects));
  if (j.contains("morphisms")) {
    for (const auto &m : j["morphisms"]) {
      if (!m.contains("name") || !m.contains("from") || !m.contains("to")) {
        throw InputError("morphism generator needs \"name\", \"from\" and \"to\"");
      }
      s.add_morphism(m["name"].get<std::string>(), multiset_counts(m["from"]), multiset_counts(m["to"]));
    }
  }
  return s;
}

nlohmann::json to_json(const PresentedSMC &s) {
  nlohmann::json j;
  j["objects"] = s.objects();
  j["morphisms"] = nlohmann::json::array();
  auto counts = [&](const NatVector &v) {
    nlohmann::json o = nlohmann::json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) o[s.objects()[i]] = v[i];
    return o;
  };
  for (const auto &m : s.morphisms()) j["morphisms"].push_back({{"name", m.name}, {"from", counts(m.from)}, {"to", counts(m.to)}});
  return j;
}

}  // namespace resconv
