#include "resconv/comb.hpp"

#include <algorithm>
#include <optional>
#include <variant>

#include "resconv/errors.hpp"

namespace resconv {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void expect_type(const FinSet &got, const FinSet &want, const std::string &what) {
  if (!(got == want)) throw CompositionError(what + " has type " + got.str() + ", expected " + want.str());
}

/// Drops the leading factors of `head` from `whole`.
FinSet drop_prefix(const FinSet &whole, const FinSet &head, const std::string &what) {
  const auto &wf = whole.factors();
  const auto &hf = head.factors();
  if (hf.size() > wf.size() || !std::equal(hf.begin(), hf.end(), wf.begin())) {
    throw CompositionError(what + " has type " + whole.str() + ", which does not start with " + head.str());
  }
  return FinSet(std::vector<Alphabet>(wf.begin() + static_cast<std::ptrdiff_t>(hf.size()), wf.end()));
}

}  // namespace

OneComb::OneComb(FinSet ancilla, StochMap pre, StochMap post, ProcessType hole)
    : ancilla_(std::move(ancilla)), pre_(std::move(pre)), post_(std::move(post)), hole_(std::move(hole)) {
  expect_type(pre_.cod(), hole_.dom * ancilla_, "pre-map codomain");
  expect_type(post_.dom(), hole_.cod * ancilla_, "post-map domain");
}

StochMap apply_comb(const OneComb &k, const StochMap &f) {
  if (!(f.dom() == k.hole().dom) || !(f.cod() == k.hole().cod)) {
    throw CompositionError("process of type " + f.dom().str() + " → " + f.cod().str() + " does not fit hole " +
                           k.hole().str());
  }
  return compose_seq(k.post(), compose_seq(compose_par(f, identity(k.ancilla())), k.pre()));
}

RationalMatrix supermap_tensor(const OneComb &k) {
  const std::size_t na = k.hole().dom.cardinality();
  const std::size_t nb = k.hole().cod.cardinality();
  const std::size_t nz = k.ancilla().cardinality();
  const std::size_t nap = k.pre().dom().cardinality();
  const std::size_t nbp = k.post().cod().cardinality();
  RationalMatrix w = RationalMatrix::Zero(idx(na * nbp), idx(nap * nb));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t z = 0; z < nz; ++z)
      for (std::size_t ap = 0; ap < nap; ++ap) {
        const Rational &x = k.pre()(idx(a * nz + z), idx(ap));
        if (x.is_zero()) continue;
        for (std::size_t b = 0; b < nb; ++b)
          for (std::size_t bp = 0; bp < nbp; ++bp) {
            const Rational &y = k.post()(idx(bp), idx(b * nz + z));
            if (!y.is_zero()) w(idx(a * nbp + bp), idx(ap * nb + b)) += x * y;
          }
      }
  return w;
}

bool comb_equivalent(const OneComb &k1, const OneComb &k2) {
  if (!(k1.hole() == k2.hole())) throw CompositionError("hole types differ: " + k1.hole().str() + " vs " + k2.hole().str());
  if (!(k1.outer() == k2.outer())) {
    throw CompositionError("outer types differ: " + k1.outer().str() + " vs " + k2.outer().str());
  }
  return supermap_tensor(k1) == supermap_tensor(k2);
}

OneComb compose_combs_seq(const OneComb &k2, const OneComb &k1) {
  if (!(k2.hole() == k1.outer())) {
    throw CompositionError("cannot plug comb with outer type " + k1.outer().str() + " into hole " + k2.hole().str());
  }
  const FinSet &z1 = k1.ancilla();
  const FinSet &z2 = k2.ancilla();
  StochMap pre = compose_seq(compose_par(k1.pre(), identity(z2)), k2.pre());
  StochMap post = compose_seq(k2.post(), compose_par(k1.post(), identity(z2)));
  return OneComb(z1 * z2, std::move(pre), std::move(post), k1.hole());
}

OneComb compose_combs_par(const OneComb &k1, const OneComb &k2) {
  const ProcessType hole{k1.hole().dom * k2.hole().dom, k1.hole().cod * k2.hole().cod};
  // A₁ Z₁ A₂ Z₂ → A₁ A₂ Z₁ Z₂, and B₁ B₂ Z₁ Z₂ → B₁ Z₁ B₂ Z₂.
  StochMap pre = compose_seq(permute_blocks({k1.hole().dom, k1.ancilla(), k2.hole().dom, k2.ancilla()}, {0, 2, 1, 3}),
                             compose_par(k1.pre(), k2.pre()));
  StochMap post = compose_seq(compose_par(k1.post(), k2.post()),
                              permute_blocks({k1.hole().cod, k2.hole().cod, k1.ancilla(), k2.ancilla()}, {0, 2, 1, 3}));
  return OneComb(k1.ancilla() * k2.ancilla(), std::move(pre), std::move(post), hole);
}

OneComb identity_comb(const ProcessType &t) { return OneComb(FinSet::unit(), identity(t.dom), identity(t.cod), t); }

OneComb symmetry_comb(const ProcessType &t1, const ProcessType &t2) {
  const ProcessType hole{t1.dom * t2.dom, t1.cod * t2.cod};
  return OneComb(FinSet::unit(), swap(t2.dom, t1.dom), swap(t1.cod, t2.cod), hole);
}

OneComb random_comb(const ProcessType &hole, const ProcessType &outer, std::size_t ancilla_size, std::mt19937_64 &rng,
                    std::int64_t denominator) {
  const FinSet z = ancilla_size <= 1 ? FinSet::unit() : FinSet::of_size("Z", ancilla_size);
  StochMap pre = random_stochastic(outer.dom, hole.dom * z, rng, denominator);
  StochMap post = random_stochastic(hole.cod * z, outer.cod, rng, denominator);
  return OneComb(z, std::move(pre), std::move(post), hole);
}

// ---------------------------------------------------------------------------
// n-combs

NComb::NComb(std::vector<std::size_t> order, std::vector<StochMap> maps, std::vector<FinSet> ancillas,
             std::vector<ProcessType> holes)
    : order_(std::move(order)), maps_(std::move(maps)), ancillas_(std::move(ancillas)), holes_(std::move(holes)) {
  const std::size_t n = holes_.size();
  if (order_.size() != n) throw InputError("order must list each of the " + std::to_string(n) + " holes once");
  std::vector<bool> seen(n, false);
  for (auto h : order_) {
    if (h >= n || seen[h]) throw InputError("order is not a permutation of the holes");
    seen[h] = true;
  }
  if (maps_.size() != n + 1) throw InputError("an " + std::to_string(n) + "-comb needs " + std::to_string(n + 1) + " maps");
  if (ancillas_.size() != n) throw InputError("an " + std::to_string(n) + "-comb needs " + std::to_string(n) + " ancillas");
  for (std::size_t k = 0; k < n; ++k) {
    const std::string slot = "slot " + std::to_string(k) + " (hole " + std::to_string(order_[k]) + ")";
    expect_type(maps_[k].cod(), holes_[order_[k]].dom * ancillas_[k], "map before " + slot);
    expect_type(maps_[k + 1].dom(), holes_[order_[k]].cod * ancillas_[k], "map after " + slot);
  }
}

NComb NComb::from_one_comb(const OneComb &k) { return NComb({0}, {k.pre(), k.post()}, {k.ancilla()}, {k.hole()}); }

StochMap apply_ncomb(const NComb &c, const std::vector<StochMap> &fs) {
  if (fs.size() != c.arity()) {
    throw InputError("comb has " + std::to_string(c.arity()) + " holes but " + std::to_string(fs.size()) +
                     " processes were given");
  }
  StochMap cur = c.maps().front();
  for (std::size_t k = 0; k < c.arity(); ++k) {
    const std::size_t h = c.order()[k];
    if (!(fs[h].dom() == c.holes()[h].dom) || !(fs[h].cod() == c.holes()[h].cod)) {
      throw CompositionError("process for hole " + std::to_string(h) + " has type " + fs[h].dom().str() + " → " +
                             fs[h].cod().str() + ", expected " + c.holes()[h].str());
    }
    cur = compose_seq(compose_par(fs[h], identity(c.ancillas()[k])), cur);
    cur = compose_seq(c.maps()[k + 1], cur);
  }
  return cur;
}

NComb plug_ncombs(const NComb &outer, const std::vector<NComb> &inner) {
  if (inner.size() != outer.arity()) {
    throw InputError("outer comb has " + std::to_string(outer.arity()) + " holes but " + std::to_string(inner.size()) +
                     " combs were given");
  }
  std::vector<std::size_t> offset(inner.size(), 0);
  std::vector<ProcessType> holes;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    if (!(inner[j].outer() == outer.holes()[j])) {
      throw CompositionError("hole " + std::to_string(j) + " expects " + outer.holes()[j].str() + " but the comb plugged in has type " +
                             inner[j].outer().str());
    }
    offset[j] = holes.size();
    holes.insert(holes.end(), inner[j].holes().begin(), inner[j].holes().end());
  }

  // Flat chain of maps and hole slots, then adjacent maps are fused.
  using Item = std::variant<StochMap, std::size_t>;
  std::vector<Item> chain{outer.maps().front()};
  for (std::size_t k = 0; k < outer.arity(); ++k) {
    const std::size_t j = outer.order()[k];
    const FinSet &z = outer.ancillas()[k];
    const NComb &c = inner[j];
    for (std::size_t i = 0; i <= c.arity(); ++i) {
      chain.emplace_back(compose_par(c.maps()[i], identity(z)));
      if (i < c.arity()) chain.emplace_back(offset[j] + c.order()[i]);
    }
    chain.emplace_back(outer.maps()[k + 1]);
  }

  std::vector<StochMap> maps;
  std::vector<std::size_t> order;
  std::optional<StochMap> pending;
  for (auto &item : chain) {
    if (auto *m = std::get_if<StochMap>(&item)) {
      pending = pending ? compose_seq(*m, *pending) : *m;
    } else {
      maps.push_back(*pending);
      pending.reset();
      order.push_back(std::get<std::size_t>(item));
    }
  }
  maps.push_back(*pending);

  std::vector<FinSet> ancillas;
  for (std::size_t k = 0; k < order.size(); ++k)
    ancillas.push_back(drop_prefix(maps[k].cod(), holes[order[k]].dom, "map before slot " + std::to_string(k)));
  return NComb(std::move(order), std::move(maps), std::move(ancillas), std::move(holes));
}

UCTransformation::UCTransformation(std::vector<std::size_t> allocation, std::vector<NComb> targets)
    : allocation_(std::move(allocation)), targets_(std::move(targets)) {
  std::vector<std::size_t> count(targets_.size(), 0);
  for (auto a : allocation_) {
    if (a >= targets_.size()) throw InputError("allocation target " + std::to_string(a) + " out of range");
    ++count[a];
  }
  for (std::size_t j = 0; j < targets_.size(); ++j) {
    if (targets_[j].arity() != count[j]) {
      throw InputError("target " + std::to_string(j) + " receives " + std::to_string(count[j]) + " processes but its comb has " +
                       std::to_string(targets_[j].arity()) + " holes");
    }
  }
}

std::vector<StochMap> apply_uc(const UCTransformation &t, const std::vector<StochMap> &fs) {
  if (fs.size() != t.allocation().size()) {
    throw InputError("allocation covers " + std::to_string(t.allocation().size()) + " processes but " +
                     std::to_string(fs.size()) + " were given");
  }
  std::vector<std::vector<StochMap>> parts(t.targets().size());
  for (std::size_t i = 0; i < fs.size(); ++i) parts[t.allocation()[i]].push_back(fs[i]);
  std::vector<StochMap> out;
  for (std::size_t j = 0; j < t.targets().size(); ++j) out.push_back(apply_ncomb(t.targets()[j], parts[j]));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json type_json(const ProcessType &t) { return {{"dom", to_json(t.dom)}, {"cod", to_json(t.cod)}}; }

ProcessType type_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod")) throw InputError("hole type needs \"dom\" and \"cod\"");
  return {finset_from_json(j["dom"]), finset_from_json(j["cod"])};
}

const nlohmann::json &field(const nlohmann::json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j[key];
}

}  // namespace

nlohmann::json to_json(const OneComb &k) {
  return {{"ancilla", to_json(k.ancilla())}, {"hole", type_json(k.hole())}, {"pre", to_json(k.pre())}, {"post", to_json(k.post())}};
}

OneComb one_comb_from_json(const nlohmann::json &j) {
  return OneComb(finset_from_json(field(j, "ancilla")), stochmap_from_json(field(j, "pre")),
                 stochmap_from_json(field(j, "post")), type_from_json(field(j, "hole")));
}

nlohmann::json to_json(const NComb &c) {
  nlohmann::json j;
  j["order"] = c.order();
  j["holes"] = nlohmann::json::array();
  for (const auto &h : c.holes()) j["holes"].push_back(type_json(h));
  j["ancillas"] = nlohmann::json::array();
  for (const auto &a : c.ancillas()) j["ancillas"].push_back(to_json(a));
  j["maps"] = nlohmann::json::array();
  for (const auto &m : c.maps()) j["maps"].push_back(to_json(m));
  return j;
}

NComb ncomb_from_json(const nlohmann::json &j) {
  std::vector<std::size_t> order;
  for (const auto &o : field(j, "order")) {
    if (!o.is_number_unsigned()) throw InputError("order entries must be non-negative integers");
    order.push_back(o.get<std::size_t>());
  }
  std::vector<ProcessType> holes;
  for (const auto &h : field(j, "holes")) holes.push_back(type_from_json(h));
  std::vector<FinSet> ancillas;
  for (const auto &a : field(j, "ancillas")) ancillas.push_back(finset_from_json(a));
  std::vector<StochMap> maps;
  for (const auto &m : field(j, "maps")) maps.push_back(stochmap_from_json(m));
  return NComb(std::move(order), std::move(maps), std::move(ancillas), std::move(holes));
}

nlohmann::json to_json(const UCTransformation &t) {
  nlohmann::json j;
  j["allocation"] = t.allocation();
  j["combs"] = nlohmann::json::array();
  for (const auto &c : t.targets()) j["combs"].push_back(to_json(c));
  return j;
}

UCTransformation uc_from_json(const nlohmann::json &j) {
  std::vector<std::size_t> alloc;
  for (const auto &a : field(j, "allocation")) {
    if (!a.is_number_unsigned()) throw InputError("allocation entries must be non-negative integers");
    alloc.push_back(a.get<std::size_t>());
  }
  std::vector<NComb> combs;
  for (const auto &c : field(j, "combs")) combs.push_back(ncomb_from_json(c));
  return UCTransformation(std::move(alloc), std::move(combs));
}

}  // namespace resconv
