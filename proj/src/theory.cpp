#include "resconv/theory.hpp"

#include <sstream>

#include "resconv/errors.hpp"

namespace resconv {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

void FiniteTheoryTable::validate() const {
  if (carrier == 0) throw InputError("finite theory must have a non-empty carrier");
  if (combine.size() != carrier) throw InputError("combine table must have " + std::to_string(carrier) + " rows");
  if (geq.size() != carrier) throw InputError("geq matrix must have " + std::to_string(carrier) + " rows");
  for (std::size_t i = 0; i < carrier; ++i) {
    if (combine[i].size() != carrier) throw InputError("combine row " + std::to_string(i) + " is not square");
    if (geq[i].size() != carrier) throw InputError("geq row " + std::to_string(i) + " is not square");
    for (std::size_t j = 0; j < carrier; ++j) {
      if (combine[i][j] >= carrier) {
        throw InputError("combine[" + std::to_string(i) + "][" + std::to_string(j) + "] out of range");
      }
    }
  }
  if (zero >= carrier) throw InputError("zero index out of range");
}

std::vector<AxiomViolation> check_axioms(const FiniteTheoryTable &t) {
  t.validate();
  const std::size_t n = t.carrier;
  const auto &add = t.combine;
  std::vector<AxiomViolation> out;

  for (std::size_t a = 0; a < n; ++a) {
    if (!t.geq[a][a]) out.push_back({"reflexivity", {a}, std::to_string(a) + " is not ⪰ itself"});
    if (!t.equiv(add[a][t.zero], a)) {
      out.push_back({"unit", {a}, "a + 0 ≄ a for a = " + std::to_string(a)});
    }
    if (!t.equiv(add[t.zero][a], a)) {
      out.push_back({"unit", {a}, "0 + a ≄ a for a = " + std::to_string(a)});
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (!t.equiv(add[a][b], add[b][a])) {
        out.push_back({"commutativity", {a, b}, "a + b ≄ b + a for (a,b) = (" + std::to_string(a) + "," + std::to_string(b) + ")"});
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (!t.equiv(add[a][add[b][c]], add[add[a][b]][c])) {
          out.push_back({"associativity", {a, b, c}, "a + (b + c) ≄ (a + b) + c for " + triple(a, b, c)});
        }
        if (t.geq[a][b] && t.geq[b][c] && !t.geq[a][c]) {
          out.push_back({"transitivity", {a, b, c}, "a ⪰ b and b ⪰ c but a ⋡ c for " + triple(a, b, c)});
        }
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!t.geq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (t.geq[c][d] && !t.geq[add[a][c]][add[b][d]]) {
            out.push_back({"compatibility",
                           {a, b, c, d},
                           "a ⪰ b, c ⪰ d but a + c ⋡ b + d for (a,b,c,d) = (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")"});
          }
        }
    }
  return out;
}

std::vector<AxiomViolation> check_axioms_on_sample(const TheoryOracle &t, const std::vector<Term> &sample) {
  std::vector<AxiomViolation> out;
  const std::size_t n = sample.size();
  auto refuted_equiv = [&](const Term &x, const Term &y) { return equivalent(t, x, y).is_refuted(); };

  // Cache the pairwise preorder on the sample; it is reused by the
  // transitivity and compatibility loops.
  std::vector<std::vector<Verdict>> ge(n, std::vector<Verdict>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ge[a][b] = t.geq(sample[a], sample[b]).verdict();

  for (std::size_t a = 0; a < n; ++a) {
    if (ge[a][a] == Verdict::Refuted) out.push_back({"reflexivity", {a}, t.format(sample[a]) + " is not ⪰ itself"});
    if (refuted_equiv(t.combine(sample[a], t.zero()), sample[a])) {
      out.push_back({"unit", {a}, "a + 0 ≄ a for a = " + t.format(sample[a])});
    }
    for (std::size_t b = 0; b < n; ++b) {
      const Term ab = t.combine(sample[a], sample[b]);
      if (refuted_equiv(ab, t.combine(sample[b], sample[a]))) {
        out.push_back({"commutativity", {a, b}, "a + b ≄ b + a"});
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (refuted_equiv(t.combine(sample[a], t.combine(sample[b], sample[c])), t.combine(ab, sample[c]))) {
          out.push_back({"associativity", {a, b, c}, "a + (b + c) ≄ (a + b) + c for " + triple(a, b, c)});
        }
        if (ge[a][b] == Verdict::Proven && ge[b][c] == Verdict::Proven && ge[a][c] == Verdict::Refuted) {
          out.push_back({"transitivity", {a, b, c}, "a ⪰ b and b ⪰ c but a ⋡ c for " + triple(a, b, c)});
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (ge[a][b] != Verdict::Proven) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (ge[c][d] != Verdict::Proven) continue;
          if (t.geq(t.combine(sample[a], sample[c]), t.combine(sample[b], sample[d])).is_refuted()) {
            out.push_back({"compatibility", {a, b, c, d}, "a ⪰ b, c ⪰ d but a + c ⋡ b + d"});
          }
        }
    }
  return out;
}

Decision equivalent(const TheoryOracle &t, const Term &a, const Term &b) {
  return both(t.geq(a, b), t.geq(b, a));
}

Term replicate(const TheoryOracle &t, std::size_t n, const Term &a) {
  if (n == 0) return t.zero();
  Term acc = a;
  for (std::size_t i = 1; i < n; ++i) acc = t.combine(acc, a);
  return acc;
}

TableTheory::TableTheory(FiniteTheoryTable table, std::string name) : table_(std::move(table)), name_(std::move(name)) {
  table_.validate();
}

std::size_t TableTheory::index(const Term &t) const {
  const auto *i = std::get_if<TableIndex>(&t);
  if (!i || i->value >= table_.carrier) throw InputError("term is not an element of the finite carrier");
  return i->value;
}

Term TableTheory::combine(const Term &a, const Term &b) const {
  return TableIndex{table_.combine[index(a)][index(b)]};
}

Decision TableTheory::geq(const Term &a, const Term &b) const {
  const std::size_t i = index(a);
  const std::size_t j = index(b);
  const std::string pair = std::to_string(i) + " ⪰ " + std::to_string(j);
  if (table_.geq[i][j]) return Decision::proven({"table entry: " + pair});
  return Decision::refuted({"table entry: not " + pair});
}

std::vector<Term> TableTheory::enumerate_up_to(std::size_t) const { return *carrier(); }

std::optional<std::vector<Term>> TableTheory::carrier() const {
  std::vector<Term> all;
  for (std::size_t i = 0; i < table_.carrier; ++i) all.emplace_back(TableIndex{i});
  return all;
}

std::optional<std::vector<std::pair<Term, Term>>> TableTheory::decompositions(const Term &a) const {
  const std::size_t k = index(a);
  std::vector<std::pair<Term, Term>> out;
  for (std::size_t i = 0; i < table_.carrier; ++i)
    for (std::size_t j = 0; j < table_.carrier; ++j)
      if (table_.equiv(table_.combine[i][j], k)) out.emplace_back(TableIndex{i}, TableIndex{j});
  return out;
}

Term TableTheory::parse_term(const nlohmann::json &j) const {
  if (!j.is_number_unsigned()) throw InputError("finite-theory term must be a non-negative index, got " + j.dump());
  const auto v = j.get<std::size_t>();
  if (v >= table_.carrier) throw InputError("index " + std::to_string(v) + " outside carrier");
  return TableIndex{v};
}

nlohmann::json TableTheory::term_to_json(const Term &t) const { return index(t); }

FiniteTheoryTable table_from_json(const nlohmann::json &j) {
  for (const char *key : {"carrier", "combine", "zero", "geq"})
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("finite theory needs \"") + key + "\"");
  if (!j["carrier"].is_number_unsigned()) throw InputError("\"carrier\" must be a natural number");
  if (!j["zero"].is_number_unsigned()) throw InputError("\"zero\" must be a carrier index");
  FiniteTheoryTable t;
  t.carrier = j["carrier"].get<std::size_t>();
  t.zero = j["zero"].get<std::size_t>();
  for (const auto &row : j["combine"]) {
    if (!row.is_array()) throw InputError("\"combine\" must be a list of rows");
    std::vector<std::size_t> r;
    for (const auto &e : row) {
      if (!e.is_number_unsigned()) throw InputError("combine entries must be carrier indices, got " + e.dump());
      r.push_back(e.get<std::size_t>());
    }
    t.combine.push_back(std::move(r));
  }
  for (const auto &row : j["geq"]) {
    if (!row.is_array()) throw InputError("\"geq\" must be a list of rows");
    std::vector<bool> r;
    for (const auto &e : row) {
      if (e.is_boolean()) {
        r.push_back(e.get<bool>());
      } else if (e.is_number_integer() && (e.get<std::int64_t>() == 0 || e.get<std::int64_t>() == 1)) {
        r.push_back(e.get<std::int64_t>() == 1);
      } else {
        throw InputError("geq entries must be booleans or 0/1, got " + e.dump());
      }
    }
    t.geq.push_back(std::move(r));
  }
  t.validate();
  return t;
}

nlohmann::json to_json(const FiniteTheoryTable &t) {
  nlohmann::json geq = nlohmann::json::array();
  for (const auto &row : t.geq) {
    nlohmann::json r = nlohmann::json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    geq.push_back(std::move(r));
  }
  return {{"carrier", t.carrier}, {"combine", t.combine}, {"zero", t.zero}, {"geq", std::move(geq)}};
}

}  // namespace resconv
