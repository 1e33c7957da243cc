#include "resconv/finstoch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "resconv/errors.hpp"

namespace resconv {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

/// Splits `whole` as prefix ⊗ suffix. Falls back to a fresh alphabet of the
/// right size when the factor lists do not line up but the cardinalities do.
FinSet strip_suffix(const FinSet &whole, const FinSet &suffix, const std::string &what) {
  const auto &wf = whole.factors();
  const auto &sf = suffix.factors();
  if (sf.size() <= wf.size() && std::equal(sf.begin(), sf.end(), wf.end() - static_cast<std::ptrdiff_t>(sf.size()))) {
    return FinSet(std::vector<Alphabet>(wf.begin(), wf.end() - static_cast<std::ptrdiff_t>(sf.size())));
  }
  const std::size_t s = suffix.cardinality();
  if (whole.cardinality() % s != 0) {
    throw CompositionError(what + " has type " + whole.str() + ", which does not factor through " + suffix.str());
  }
  return FinSet::of_size(what, whole.cardinality() / s);
}

}  // namespace

// ---------------------------------------------------------------------------
// Types

Alphabet Alphabet::of_size(std::string label, std::size_t n) {
  Alphabet a{std::move(label), {}};
  for (std::size_t i = 0; i < n; ++i) a.names.push_back(std::to_string(i));
  return a;
}

FinSet::FinSet(Alphabet a) : factors_{std::move(a)} {
  if (factors_.front().names.empty()) throw InputError("finite set must have at least one element");
  std::set<std::string> seen(factors_.front().names.begin(), factors_.front().names.end());
  if (seen.size() != factors_.front().names.size()) throw InputError("element names must be distinct");
}

FinSet::FinSet(std::vector<Alphabet> factors) : factors_(std::move(factors)) {
  for (const auto &f : factors_) {
    if (f.names.empty()) throw InputError("finite set must have at least one element");
    std::set<std::string> seen(f.names.begin(), f.names.end());
    if (seen.size() != f.names.size()) throw InputError("element names must be distinct in " + f.label);
  }
}

std::size_t FinSet::cardinality() const {
  std::size_t n = 1;
  for (const auto &f : factors_) n *= f.size();
  return n;
}

std::vector<std::string> FinSet::element_names() const {
  if (factors_.empty()) return {"*"};
  if (factors_.size() == 1) return factors_.front().names;
  std::vector<std::string> out{""};
  for (const auto &f : factors_) {
    std::vector<std::string> next;
    for (const auto &prefix : out)
      for (const auto &n : f.names) next.push_back(prefix.empty() ? n : prefix + "," + n);
    out = std::move(next);
  }
  for (auto &n : out) n = "(" + n + ")";
  return out;
}

std::string FinSet::str() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "⊗";
    out += factors_[i].label.empty() ? "{" + std::to_string(factors_[i].size()) + "}" : factors_[i].label;
  }
  return out;
}

FinSet operator*(const FinSet &a, const FinSet &b) {
  std::vector<Alphabet> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return FinSet(std::move(f));
}

// ---------------------------------------------------------------------------
// Maps

StochMap::StochMap(FinSet dom, FinSet cod, RationalMatrix matrix)
    : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != idx(cod_.cardinality()) || matrix_.cols() != idx(dom_.cardinality())) {
    throw InputError("matrix of shape " + std::to_string(matrix_.rows()) + "×" + std::to_string(matrix_.cols()) +
                     " does not match " + dom_.str() + " → " + cod_.str());
  }
  if (!is_column_stochastic(matrix_)) throw InputError("matrix is not column-stochastic");
}

StochMap identity(const FinSet &a) {
  const auto n = idx(a.cardinality());
  return StochMap(a, a, RationalMatrix::Identity(n, n));
}

StochMap deterministic(const FinSet &dom, const FinSet &cod, const std::vector<std::size_t> &out_index) {
  if (out_index.size() != dom.cardinality()) throw InputError("deterministic map needs one image per input");
  RationalMatrix m = RationalMatrix::Zero(idx(cod.cardinality()), idx(dom.cardinality()));
  for (std::size_t i = 0; i < out_index.size(); ++i) {
    if (out_index[i] >= cod.cardinality()) throw InputError("image index out of range");
    m(idx(out_index[i]), idx(i)) = Rational(1);
  }
  return StochMap(dom, cod, std::move(m));
}

StochMap state(const FinSet &a, const ProbVector &p) { return constant(FinSet::unit(), a, p); }

StochMap discard(const FinSet &a) { return StochMap(a, FinSet::unit(), RationalMatrix::Ones(1, idx(a.cardinality()))); }

StochMap constant(const FinSet &dom, const FinSet &cod, const ProbVector &p) {
  if (p.size() != cod.cardinality()) throw InputError("distribution length does not match " + cod.str());
  RationalMatrix m(idx(cod.cardinality()), idx(dom.cardinality()));
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = p[static_cast<std::size_t>(i)];
  return StochMap(dom, cod, std::move(m));
}

StochMap compose_seq(const StochMap &q, const StochMap &p) {
  if (!(p.cod() == q.dom())) {
    throw CompositionError("cannot compose " + q.dom().str() + " → " + q.cod().str() + " after " + p.dom().str() + " → " +
                           p.cod().str() + ": " + p.cod().str() + " ≠ " + q.dom().str());
  }
  return StochMap(p.dom(), q.cod(), q.matrix() * p.matrix());
}

StochMap compose_par(const StochMap &p, const StochMap &q) {
  return StochMap(p.dom() * q.dom(), p.cod() * q.cod(), kronecker(p.matrix(), q.matrix()));
}

StochMap permute_blocks(const std::vector<FinSet> &blocks, const std::vector<std::size_t> &perm) {
  if (perm.size() != blocks.size()) throw InputError("permutation size does not match block count");
  std::vector<bool> used(blocks.size(), false);
  for (auto p : perm) {
    if (p >= blocks.size() || used[p]) throw InputError("not a permutation");
    used[p] = true;
  }
  FinSet dom;
  FinSet cod;
  for (const auto &b : blocks) dom = dom * b;
  for (auto p : perm) cod = cod * blocks[p];

  const std::size_t n = blocks.size();
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = blocks[i].cardinality();
  std::vector<std::size_t> image(dom.cardinality());
  std::vector<std::size_t> digits(n);
  for (std::size_t in = 0; in < image.size(); ++in) {
    std::size_t rest = in;
    for (std::size_t i = n; i-- > 0;) {
      digits[i] = rest % sizes[i];
      rest /= sizes[i];
    }
    std::size_t out = 0;
    for (std::size_t k = 0; k < n; ++k) out = out * sizes[perm[k]] + digits[perm[k]];
    image[in] = out;
  }
  return deterministic(dom, cod, image);
}

StochMap swap(const FinSet &a, const FinSet &b) { return permute_blocks({a, b}, {1, 0}); }

bool is_deterministic(const StochMap &p) {
  const auto &m = p.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j).is_zero() || m(i, j) == Rational(1))) return false;
  return true;
}

ProbVector as_distribution(const StochMap &s) {
  if (!s.dom().is_unit()) throw InputError("expected a state with singleton domain, got domain " + s.dom().str());
  std::vector<Rational> e;
  for (Eigen::Index i = 0; i < s.matrix().rows(); ++i) e.push_back(s.matrix()(i, 0));
  return ProbVector(std::move(e));
}

std::vector<StochMap> all_deterministic_maps(const FinSet &dom, const FinSet &cod) {
  const std::size_t n = dom.cardinality();
  const std::size_t m = cod.cardinality();
  std::vector<StochMap> out;
  std::vector<std::size_t> image(n, 0);
  while (true) {
    out.push_back(deterministic(dom, cod, image));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++image[i] < m) break;
      image[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

StochMap random_stochastic(const FinSet &dom, const FinSet &cod, std::mt19937_64 &rng, std::int64_t denominator) {
  const auto rows = idx(cod.cardinality());
  RationalMatrix m = RationalMatrix::Zero(rows, idx(dom.cardinality()));
  std::uniform_int_distribution<Eigen::Index> pick(0, rows - 1);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (std::int64_t u = 0; u < denominator; ++u) m(pick(rng), j) += Rational(1, denominator);
  return StochMap(dom, cod, std::move(m));
}

// ---------------------------------------------------------------------------
// Channels

SharedRandomness::SharedRandomness(FinSet s, FinSet r, RationalMatrix j)
    : sender(std::move(s)), receiver(std::move(r)), joint(std::move(j)) {
  if (joint.rows() != idx(sender.cardinality()) || joint.cols() != idx(receiver.cardinality())) {
    throw InputError("shared randomness table does not match " + sender.str() + " × " + receiver.str());
  }
  Rational total;
  for (Eigen::Index x = 0; x < joint.rows(); ++x)
    for (Eigen::Index y = 0; y < joint.cols(); ++y) {
      if (joint(x, y) < Rational(0)) throw InputError("negative shared-randomness probability");
      total += joint(x, y);
    }
  if (total != Rational(1)) throw InputError("shared randomness sums to " + total.str() + ", not 1");
}

StochMap simulate_channel(const StochMap &p, const StochMap &encoder, const StochMap &decoder, const SharedRandomness &r) {
  if (!(encoder.cod() == p.dom())) {
    throw CompositionError("encoder output " + encoder.cod().str() + " does not match channel input " + p.dom().str());
  }
  const FinSet a_prime = strip_suffix(encoder.dom(), r.sender, "A'");
  const FinSet b_side = strip_suffix(decoder.dom(), r.receiver, "B");
  if (b_side.cardinality() != p.cod().cardinality()) {
    throw CompositionError("decoder input " + decoder.dom().str() + " does not match channel output " + p.cod().str() +
                           " ⊗ " + r.receiver.str());
  }
  const auto sa = idx(r.sender.cardinality());
  const auto sb = idx(r.receiver.cardinality());
  const auto na = idx(a_prime.cardinality());
  const auto nb = idx(p.cod().cardinality());
  const auto nbp = idx(decoder.cod().cardinality());

  RationalMatrix q = RationalMatrix::Zero(nbp, na);
  for (Eigen::Index x = 0; x < sa; ++x) {
    for (Eigen::Index y = 0; y < sb; ++y) {
      const Rational w = r.joint(x, y);
      if (w.is_zero()) continue;
      RationalMatrix ex(encoder.matrix().rows(), na);
      for (Eigen::Index a = 0; a < na; ++a) ex.col(a) = encoder.matrix().col(a * sa + x);
      RationalMatrix dy(nbp, nb);
      for (Eigen::Index b = 0; b < nb; ++b) dy.col(b) = decoder.matrix().col(b * sb + y);
      q += w * (dy * p.matrix() * ex);
    }
  }
  return StochMap(a_prime, decoder.cod(), std::move(q));
}

SimulationDecision search_exact_simulation(const StochMap &p, const StochMap &target, SimulationCaps caps) {
  const std::size_t bound = std::min(caps.sender_randomness, caps.receiver_randomness);
  if (exact_rank(p.matrix()) == 1 && exact_rank(target.matrix()) > 1) {
    return {Decision::refuted({"channel has rank 1: every input yields the same output distribution",
                               "Σ D P E R stays rank 1 for any coders and shared randomness, target has rank " +
                                   std::to_string(exact_rank(target.matrix()))},
                              bound),
            std::nullopt};
  }

  const FinSet &a_prime = target.dom();
  const FinSet &b_prime = target.cod();
  // Distinct coded channels D∘P∘E with the first (E, D) pair producing each.
  std::vector<RationalMatrix> coded;
  std::vector<std::pair<StochMap, StochMap>> coders;
  for (const StochMap &e : all_deterministic_maps(a_prime, p.dom())) {
    const RationalMatrix pe = p.matrix() * e.matrix();
    for (const StochMap &d : all_deterministic_maps(p.cod(), b_prime)) {
      RationalMatrix c = d.matrix() * pe;
      if (std::find(coded.begin(), coded.end(), c) != coded.end()) continue;
      coded.push_back(std::move(c));
      coders.emplace_back(e, d);
    }
  }

  const auto entries = target.matrix().size();
  auto flatten = [&](const RationalMatrix &m) {
    RationalVector v(entries + 1);
    for (Eigen::Index k = 0; k < entries; ++k) v(k) = m(k % m.rows(), k / m.rows());
    v(entries) = Rational(1);
    return v;
  };
  const RationalVector goal = flatten(target.matrix());

  std::vector<std::size_t> chosen;
  std::optional<SimulationWitness> witness;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t want) -> bool {
    if (chosen.size() == want) {
      RationalMatrix a(entries + 1, idx(want));
      for (std::size_t k = 0; k < want; ++k) a.col(idx(k)) = flatten(coded[chosen[k]]);
      if (exact_rank(a) != idx(want)) return false;
      const auto w = solve_exact(a, goal);
      if (!w) return false;
      for (Eigen::Index k = 0; k < w->size(); ++k)
        if ((*w)(k) <= Rational(0)) return false;
      // Build the witness with diagonal shared randomness x = y = k.
      const FinSet s = FinSet::of_size("S", want);
      RationalMatrix joint = RationalMatrix::Zero(idx(want), idx(want));
      RationalMatrix enc = RationalMatrix::Zero(idx(p.dom().cardinality()), idx(a_prime.cardinality() * want));
      RationalMatrix dec = RationalMatrix::Zero(idx(b_prime.cardinality()), idx(p.cod().cardinality() * want));
      for (std::size_t k = 0; k < want; ++k) {
        joint(idx(k), idx(k)) = (*w)(idx(k));
        const auto &[e, d] = coders[chosen[k]];
        for (std::size_t a = 0; a < a_prime.cardinality(); ++a) enc.col(idx(a * want + k)) = e.matrix().col(idx(a));
        for (std::size_t b = 0; b < p.cod().cardinality(); ++b) dec.col(idx(b * want + k)) = d.matrix().col(idx(b));
      }
      witness = SimulationWitness{StochMap(a_prime * s, p.dom(), enc), StochMap(p.cod() * s, b_prime, dec),
                                  SharedRandomness(s, s, joint)};
      return true;
    }
    for (std::size_t i = start; i < coded.size(); ++i) {
      chosen.push_back(i);
      if (rec(i + 1, want)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t want = 1; want <= bound && want <= coded.size(); ++want) {
    chosen.clear();
    if (rec(0, want)) {
      const std::size_t used = chosen.size();
      return {Decision::proven({"mixture of " + std::to_string(used) + " deterministic coder pair(s) over shared randomness",
                                "verified by simulate_channel"},
                               bound),
              std::move(witness)};
    }
  }
  std::string reason = "no exact simulation with shared randomness of size ≤ " + std::to_string(bound);
  if (caps.stochastic_coders) reason += " (stochastic coders searched only as deterministic mixtures)";
  return {Decision::unknown(bound, std::move(reason)), std::nullopt};
}

// ---------------------------------------------------------------------------
// Free-transformation search over states

namespace {

struct WireState {
  FinSet type;
  std::vector<Rational> dist;

  bool operator<(const WireState &o) const {
    std::vector<std::vector<std::string>> a;
    std::vector<std::vector<std::string>> b;
    for (const auto &f : type.factors()) a.push_back(f.names);
    for (const auto &f : o.type.factors()) b.push_back(f.names);
    if (a != b) return a < b;
    return dist < o.dist;
  }
};

constexpr std::size_t kSwapStep = static_cast<std::size_t>(-1);

std::optional<WireState> apply_step(const WireState &s, const std::vector<StochMap> &gens, const FreeStep &step) {
  const auto &f = s.type.factors();
  if (step.generator == kSwapStep) {
    if (step.offset + 1 >= f.size()) return std::nullopt;
    std::vector<FinSet> blocks;
    for (const auto &a : f) blocks.emplace_back(a);
    std::vector<std::size_t> perm(f.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::swap(perm[step.offset], perm[step.offset + 1]);
    const StochMap sw = permute_blocks(blocks, perm);
    WireState out{sw.cod(), std::vector<Rational>(s.dist.size())};
    for (Eigen::Index i = 0; i < sw.matrix().rows(); ++i)
      for (Eigen::Index j = 0; j < sw.matrix().cols(); ++j)
        if (!sw.matrix()(i, j).is_zero()) out.dist[static_cast<std::size_t>(i)] = s.dist[static_cast<std::size_t>(j)];
    return out;
  }
  const StochMap &g = gens[step.generator];
  const auto &gf = g.dom().factors();
  if (step.offset + gf.size() > f.size()) return std::nullopt;
  if (!std::equal(gf.begin(), gf.end(), f.begin() + static_cast<std::ptrdiff_t>(step.offset))) return std::nullopt;

  std::size_t left = 1;
  for (std::size_t i = 0; i < step.offset; ++i) left *= f[i].size();
  std::size_t right = 1;
  for (std::size_t i = step.offset + gf.size(); i < f.size(); ++i) right *= f[i].size();
  const std::size_t mid_in = g.dom().cardinality();
  const std::size_t mid_out = g.cod().cardinality();

  std::vector<Alphabet> nf(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(step.offset));
  nf.insert(nf.end(), g.cod().factors().begin(), g.cod().factors().end());
  nf.insert(nf.end(), f.begin() + static_cast<std::ptrdiff_t>(step.offset + gf.size()), f.end());
  WireState out{FinSet(std::move(nf)), std::vector<Rational>(left * mid_out * right)};
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t m = 0; m < mid_in; ++m)
      for (std::size_t r = 0; r < right; ++r) {
        const Rational &v = s.dist[(l * mid_in + m) * right + r];
        if (v.is_zero()) continue;
        for (std::size_t o = 0; o < mid_out; ++o) {
          const Rational &gv = g.matrix()(idx(o), idx(m));
          if (!gv.is_zero()) out.dist[(l * mid_out + o) * right + r] += gv * v;
        }
      }
  return out;
}

WireState to_wire(const StochMap &s) {
  if (!s.dom().is_unit()) throw InputError("free-transformation search expects states with singleton domain");
  std::vector<Rational> d;
  for (Eigen::Index i = 0; i < s.matrix().rows(); ++i) d.push_back(s.matrix()(i, 0));
  return {s.cod(), std::move(d)};
}

}  // namespace

FreeTransformationDecision search_free_transformation(const StochMap &s, const StochMap &t,
                                                      const std::vector<StochMap> &free_generators, std::size_t depth) {
  const WireState start = to_wire(s);
  const WireState goal = to_wire(t);
  auto same = [](const WireState &a, const WireState &b) { return !(a < b) && !(b < a); };
  if (same(start, goal)) return {Decision::proven({"empty circuit"}, depth), {}};

  struct Node {
    WireState state;
    std::size_t parent;
    FreeStep step;
    std::size_t depth;
  };
  std::vector<Node> nodes{{start, 0, {}, 0}};
  std::set<WireState> seen{start};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth == depth) continue;
    const WireState cur = nodes[head].state;
    const std::size_t d = nodes[head].depth;
    const std::size_t width = cur.type.factors().size();
    std::vector<FreeStep> moves;
    for (std::size_t g = 0; g < free_generators.size(); ++g)
      for (std::size_t off = 0; off <= width; ++off) moves.push_back({g, off});
    for (std::size_t off = 0; off + 1 < width; ++off) moves.push_back({kSwapStep, off});

    for (const FreeStep &mv : moves) {
      auto next = apply_step(cur, free_generators, mv);
      if (!next || !seen.insert(*next).second) continue;
      nodes.push_back({*next, head, mv, d + 1});
      if (same(*next, goal)) {
        std::vector<FreeStep> circuit;
        std::vector<std::string> steps;
        for (std::size_t k = nodes.size() - 1; k != 0; k = nodes[k].parent) {
          circuit.push_back(nodes[k].step);
          const auto &st = nodes[k].step;
          steps.push_back(st.generator == kSwapStep
                              ? "swap factors " + std::to_string(st.offset) + "," + std::to_string(st.offset + 1)
                              : "generator " + std::to_string(st.generator) + " at factor " + std::to_string(st.offset));
        }
        std::reverse(circuit.begin(), circuit.end());
        std::reverse(steps.begin(), steps.end());
        return {Decision::proven(Certificate(std::move(steps)), depth), std::move(circuit)};
      }
    }
  }
  return {Decision::unknown(depth, "no free circuit of depth ≤ " + std::to_string(depth) + " reaches the target"), {}};
}

StochMap apply_free_circuit(const StochMap &s, const std::vector<StochMap> &free_generators,
                            const std::vector<FreeStep> &circuit) {
  WireState cur = to_wire(s);
  for (const auto &step : circuit) {
    auto next = apply_step(cur, free_generators, step);
    if (!next) throw CompositionError("circuit step does not type-check against the current wire " + cur.type.str());
    cur = std::move(*next);
  }
  return state(cur.type, ProbVector(cur.dist));
}

// ---------------------------------------------------------------------------
// JSON

FinSet finset_from_json(const nlohmann::json &j) {
  if (!j.is_array()) throw InputError("finite set must be a list of names or a list of factors, got " + j.dump());
  if (j.empty()) return FinSet::unit();
  auto names = [](const nlohmann::json &a) {
    std::vector<std::string> out;
    for (const auto &e : a) {
      if (!e.is_string()) throw InputError("element names must be strings, got " + e.dump());
      out.push_back(e.get<std::string>());
    }
    return out;
  };
  if (j.front().is_array()) {
    std::vector<Alphabet> factors;
    for (const auto &f : j) {
      if (!f.is_array()) throw InputError("mixed factor list in finite set");
      factors.push_back({"", names(f)});
    }
    return FinSet(std::move(factors));
  }
  return FinSet(Alphabet{"", names(j)});
}

nlohmann::json to_json(const FinSet &s) {
  if (s.is_unit()) return nlohmann::json::array();
  if (s.factors().size() == 1) return s.factors().front().names;
  nlohmann::json j = nlohmann::json::array();
  for (const auto &f : s.factors()) j.push_back(f.names);
  return j;
}

RationalMatrix rational_matrix_from_json(const nlohmann::json &j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) throw InputError("matrix must be a non-empty list of rows");
  const auto rows = idx(j.size());
  const auto cols = idx(j.front().size());
  RationalMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto &row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || idx(row.size()) != cols) throw InputError("matrix rows must all have length " + std::to_string(cols));
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto &e = row[static_cast<std::size_t>(c)];
      if (e.is_string()) {
        m(r, c) = Rational::parse(e.get<std::string>());
      } else if (e.is_number_integer()) {
        m(r, c) = Rational(e.get<std::int64_t>());
      } else {
        throw InputError("matrix entries must be integers or rational strings, got " + e.dump());
      }
    }
  }
  return m;
}

StochMap stochmap_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("matrix")) {
    throw InputError("stochastic map needs \"dom\", \"cod\" and \"matrix\"");
  }
  const FinSet dom = finset_from_json(j["dom"]);
  const FinSet cod = finset_from_json(j["cod"]);
  return StochMap(dom, cod, rational_matrix_from_json(j["matrix"]));
}

nlohmann::json to_json(const StochMap &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.matrix().rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.matrix().cols(); ++c) row.push_back(m.matrix()(r, c).str());
    rows.push_back(std::move(row));
  }
  return {{"dom", to_json(m.dom())}, {"cod", to_json(m.cod())}, {"matrix", std::move(rows)}};
}

}  // namespace resconv
