// Test-side oracles and generators. Nothing here calls the decision
// procedures under test; the oracles are deliberately naive.
#ifndef RESCONV_TESTS_SUPPORT_HPP_
#define RESCONV_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "resconv/comb.hpp"
#include "resconv/finstoch.hpp"
#include "resconv/linalg.hpp"
#include "resconv/theory.hpp"

namespace resconv::testing {

inline Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// --- distributions ---------------------------------------------------------

/// Every probability vector of exactly `len` entries (unsorted) whose entries
/// are k/d for a common d ≤ max_den, deduplicated.
inline std::vector<std::vector<Rational>> all_vectors(std::size_t len, std::int64_t max_den) {
  std::vector<std::vector<Rational>> out;
  for (std::int64_t d = 1; d <= max_den; ++d) {
    std::vector<std::int64_t> k(len, 0);
    // compositions of d into len non-negative parts
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
      if (i + 1 == len) {
        k[i] = left;
        std::vector<Rational> v;
        for (auto x : k) v.push_back(Rational(x, d));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        return;
      }
      for (std::int64_t x = 0; x <= left; ++x) {
        k[i] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, d);
  }
  return out;
}

/// Brute force over every function f : X → Y: is q the pushforward of p?
inline bool pushforward_oracle(const std::vector<Rational> &p, const std::vector<Rational> &q) {
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  std::vector<std::size_t> f(n, 0);
  while (true) {
    std::vector<Rational> acc(m, Rational(0));
    for (std::size_t x = 0; x < n; ++x) acc[f[x]] += p[x];
    if (acc == q) return true;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return false;
  }
}

/// y lies in the convex hull of the coordinate permutations of x (equal
/// length after zero padding): Carathéodory over affinely independent
/// subsets of permutation points, weights solved exactly.
inline bool doubly_stochastic_oracle(std::vector<Rational> x, std::vector<Rational> y) {
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, Rational(0));
  y.resize(n, Rational(0));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Rational>> points;
  do {
    std::vector<Rational> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = x[perm[i]];
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::size_t k = points.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (idx.size() > n + 1) continue;
    RationalMatrix a(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(idx.size()));
    RationalVector b(static_cast<Eigen::Index>(n + 1));
    for (std::size_t c = 0; c < idx.size(); ++c) {
      for (std::size_t r = 0; r < n; ++r) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = points[idx[c]][r];
      a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(c)) = Rational(1);
    }
    for (std::size_t r = 0; r < n; ++r) b(static_cast<Eigen::Index>(r)) = y[r];
    b(static_cast<Eigen::Index>(n)) = Rational(1);
    if (exact_rank(a) != static_cast<Eigen::Index>(idx.size())) continue;
    const auto w = solve_exact(a, b);
    if (!w) continue;
    bool ok = true;
    for (Eigen::Index i = 0; i < w->size(); ++i) ok = ok && (*w)(i) >= Rational(0);
    if (ok) return true;
  }
  return false;
}

// --- stochastic maps by nested loops --------------------------------------

inline std::size_t card(const FinSet &s) { return s.cardinality(); }

inline RationalMatrix loop_compose(const RationalMatrix &q, const RationalMatrix &p) {
  RationalMatrix out = RationalMatrix::Zero(q.rows(), p.cols());
  for (Eigen::Index c = 0; c < q.rows(); ++c)
    for (Eigen::Index a = 0; a < p.cols(); ++a)
      for (Eigen::Index b = 0; b < p.rows(); ++b) out(c, a) += q(c, b) * p(b, a);
  return out;
}

inline RationalMatrix loop_tensor(const RationalMatrix &p, const RationalMatrix &q) {
  RationalMatrix out(p.rows() * q.rows(), p.cols() * q.cols());
  for (Eigen::Index b = 0; b < p.rows(); ++b)
    for (Eigen::Index b2 = 0; b2 < q.rows(); ++b2)
      for (Eigen::Index a = 0; a < p.cols(); ++a)
        for (Eigen::Index a2 = 0; a2 < q.cols(); ++a2) out(b * q.rows() + b2, a * q.cols() + a2) = p(b, a) * q(b2, a2);
  return out;
}

/// Σ_{a,z,b} ξ₂(b′|b,z) f(b|a) ξ₁(a,z|a′).
inline RationalMatrix loop_apply_comb(const OneComb &k, const StochMap &f) {
  const auto na = static_cast<Eigen::Index>(card(k.hole().dom));
  const auto nb = static_cast<Eigen::Index>(card(k.hole().cod));
  const auto nz = static_cast<Eigen::Index>(card(k.ancilla()));
  const auto nap = static_cast<Eigen::Index>(card(k.outer().dom));
  const auto nbp = static_cast<Eigen::Index>(card(k.outer().cod));
  RationalMatrix out = RationalMatrix::Zero(nbp, nap);
  for (Eigen::Index ap = 0; ap < nap; ++ap)
    for (Eigen::Index bp = 0; bp < nbp; ++bp)
      for (Eigen::Index a = 0; a < na; ++a)
        for (Eigen::Index z = 0; z < nz; ++z)
          for (Eigen::Index b = 0; b < nb; ++b)
            out(bp, ap) += k.post()(bp, b * nz + z) * f(b, a) * k.pre()(a * nz + z, ap);
  return out;
}

/// The comb applied to f : A⊗W → B⊗W with a side wire W passing alongside:
/// R(b′,w′|a′,w) = Σ ξ₂(b′|b,z) f(b,w′|a,w) ξ₁(a,z|a′).
inline RationalMatrix loop_apply_with_side(const OneComb &k, const RationalMatrix &f, Eigen::Index nw) {
  const auto na = static_cast<Eigen::Index>(card(k.hole().dom));
  const auto nb = static_cast<Eigen::Index>(card(k.hole().cod));
  const auto nz = static_cast<Eigen::Index>(card(k.ancilla()));
  const auto nap = static_cast<Eigen::Index>(card(k.outer().dom));
  const auto nbp = static_cast<Eigen::Index>(card(k.outer().cod));
  RationalMatrix out = RationalMatrix::Zero(nbp * nw, nap * nw);
  for (Eigen::Index ap = 0; ap < nap; ++ap)
    for (Eigen::Index w = 0; w < nw; ++w)
      for (Eigen::Index bp = 0; bp < nbp; ++bp)
        for (Eigen::Index wp = 0; wp < nw; ++wp) {
          Rational s(0);
          for (Eigen::Index a = 0; a < na; ++a)
            for (Eigen::Index z = 0; z < nz; ++z)
              for (Eigen::Index b = 0; b < nb; ++b)
                s += k.post()(bp, b * nz + z) * f(b * nw + wp, a * nw + w) * k.pre()(a * nz + z, ap);
          out(bp * nw + wp, ap * nw + w) = s;
        }
  return out;
}

/// Definitional sameness: the combs act identically on every deterministic
/// process A⊗W → B⊗W with a side wire of size |A|. Deterministic processes
/// span all processes, and a side wire as large as A already separates
/// combs, so this is exact (if slow).
inline bool side_wire_equivalent(const OneComb &k1, const OneComb &k2) {
  const FinSet w = FinSet::of_size("W", card(k1.hole().dom));
  const auto nw = static_cast<Eigen::Index>(card(w));
  for (const auto &f : all_deterministic_maps(k1.hole().dom * w, k1.hole().cod * w))
    if (loop_apply_with_side(k1, f.matrix(), nw) != loop_apply_with_side(k2, f.matrix(), nw)) return false;
  return true;
}

// --- tables ----------------------------------------------------------------

/// Catalysis-freeness by direct loops over the table arrays.
inline bool table_catalysis_free(const FiniteTheoryTable &t) {
  for (std::size_t a = 0; a < t.carrier; ++a)
    for (std::size_t b = 0; b < t.carrier; ++b) {
      if (t.geq[a][b]) continue;
      for (std::size_t c = 0; c < t.carrier; ++c)
        if (t.geq[t.combine[a][c]][t.combine[b][c]]) return false;
    }
  return true;
}

inline bool table_quantity_like(const FiniteTheoryTable &t) {
  const std::size_t n = t.carrier;
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t b1 = 0; b1 < n; ++b1)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          if (!t.equiv(t.combine[a1][a2], t.combine[b1][b2])) continue;
          if (t.geq[a1][b1] && !t.geq[b2][a2]) return false;
        }
  return true;
}

inline bool table_non_interacting(const FiniteTheoryTable &t) {
  const std::size_t n = t.carrier;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t b2 = 0; b2 < n; ++b2) {
        if (!t.geq[a][t.combine[b1][b2]]) continue;
        bool found = false;
        for (std::size_t a1 = 0; a1 < n && !found; ++a1)
          for (std::size_t a2 = 0; a2 < n && !found; ++a2)
            found = t.equiv(a, t.combine[a1][a2]) && t.geq[a1][b1] && t.geq[a2][b2];
        if (!found) return false;
      }
  return true;
}

// --- circuits --------------------------------------------------------------

/// Random matrix text for the DSL: a column-stochastic dom × cod matrix with
/// entries k/den.
inline std::string random_matrix_text(std::size_t dom, std::size_t cod, std::mt19937_64 &rng, std::int64_t den) {
  std::vector<std::vector<std::int64_t>> cols(dom, std::vector<std::int64_t>(cod, 0));
  for (auto &c : cols)
    for (std::int64_t u = 0; u < den; ++u) ++c[std::uniform_int_distribution<std::size_t>(0, cod - 1)(rng)];
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < cod; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < dom; ++c) os << (c ? "," : "") << Rational(cols[c][r], den).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

inline std::string type_of(const std::vector<std::size_t> &wires) {
  if (wires.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < wires.size(); ++i) s += (i ? "*" : "") + std::to_string(wires[i]);
  return s;
}

/// One-hole layered circuit in the DSL with wire sizes ≤ 3, at most
/// max_wires wires and `depth` layers (one of which holds the hole).
inline std::string random_one_hole_circuit(std::mt19937_64 &rng, std::size_t depth = 4, std::size_t max_wires = 3) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::vector<std::size_t> wires;
  const std::size_t n_in = pick(1, 2);
  for (std::size_t i = 0; i < n_in; ++i) wires.push_back(pick(2, 3));
  std::ostringstream maps;
  std::ostringstream layers;
  const std::string input = type_of(wires);
  const std::size_t hole_layer = pick(0, depth - 1);
  std::size_t map_count = 0;

  for (std::size_t layer = 0; layer < depth; ++layer) {
    std::vector<std::size_t> next;
    std::vector<std::string> items;
    bool hole_done = layer != hole_layer;
    std::size_t i = 0;
    while (i < wires.size()) {
      const std::size_t take = std::min<std::size_t>(pick(1, 2), wires.size() - i);
      std::vector<std::size_t> in(wires.begin() + static_cast<long>(i), wires.begin() + static_cast<long>(i + take));
      const std::size_t remaining_after = wires.size() - i - take;
      const std::size_t room = max_wires > next.size() + remaining_after ? max_wires - next.size() - remaining_after : 1;
      const std::size_t n_out = std::max<std::size_t>(1, std::min<std::size_t>(pick(1, 2), room));
      std::vector<std::size_t> out;
      for (std::size_t k = 0; k < n_out; ++k) out.push_back(pick(1, 3));
      const bool last_chance = i + take == wires.size();
      if (!hole_done && (pick(0, 1) == 0 || last_chance)) {
        // keep the deterministic basis of the hole type enumerable
        std::size_t dc = 1;
        for (auto w : in) dc *= w;
        auto basis = [&] {
          std::size_t cc = 1;
          for (auto w : out) cc *= w;
          double n = 1;
          for (std::size_t k = 0; k < dc; ++k) n *= static_cast<double>(cc);
          return n;
        };
        if (basis() > 512) out = {pick(1, 2)};
        items.push_back("hole h(" + type_of(in) + " -> " + type_of(out) + ")");
        hole_done = true;
      } else {
        const std::size_t kind = pick(0, 3);
        if (kind == 0) {
          items.push_back("id[" + type_of(in) + "]");
          out = in;
        } else if (kind == 1 && in.size() == 2) {
          items.push_back("swap[" + std::to_string(in[0]) + "," + std::to_string(in[1]) + "]");
          out = {in[1], in[0]};
        } else {
          const std::string name = "m" + std::to_string(map_count++);
          std::size_t dc = 1;
          for (auto w : in) dc *= w;
          std::size_t cc = 1;
          for (auto w : out) cc *= w;
          maps << "map " << name << ": " << type_of(in) << " -> " << type_of(out) << " = "
               << random_matrix_text(dc, cc, rng, 2) << " free\n";
          items.push_back(name);
        }
      }
      next.insert(next.end(), out.begin(), out.end());
      i += take;
    }
    layers << "layer: ";
    for (std::size_t k = 0; k < items.size(); ++k) layers << (k ? " ; " : "") << items[k];
    layers << "\n";
    wires = next;
  }
  return maps.str() + "input: " + input + "\n" + layers.str();
}

}  // namespace resconv::testing

#endif  // RESCONV_TESTS_SUPPORT_HPP_
