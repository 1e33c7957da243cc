#include <random>

#include "doctest.h"
#include "resconv/comb.hpp"
#include "resconv/errors.hpp"
#include "support.hpp"

using namespace resconv;
using resconv::testing::R;

namespace {

FinSet set_of(std::size_t n, const char *label) { return FinSet::of_size(label, n); }

ProcessType ptype(std::size_t a, std::size_t b, const char *la = "A", const char *lb = "B") {
  return {set_of(a, la), set_of(b, lb)};
}

}  // namespace

TEST_CASE("OneComb checks its types") {
  const ProcessType hole = ptype(2, 2);
  const FinSet z = set_of(2, "Z");
  CHECK_THROWS_AS(OneComb(z, identity(set_of(2, "A")), identity(set_of(2, "B") * z), hole), CompositionError);
  const OneComb id = identity_comb(hole);
  CHECK(id.outer() == hole);
  CHECK(id.ancilla().is_unit());
}

TEST_CASE("apply_comb and the supermap tensor match nested loops") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 80; ++i) {
    const ProcessType hole = ptype(1 + i % 3, 1 + (i / 3) % 3);
    const ProcessType outer = ptype(2, 1 + i % 2, "A1", "B1");
    const OneComb k = random_comb(hole, outer, 1 + i % 3, rng, 2);
    const StochMap f = random_stochastic(hole.dom, hole.cod, rng, 3);
    CHECK(apply_comb(k, f).matrix() == resconv::testing::loop_apply_comb(k, f));
    const RationalMatrix w = supermap_tensor(k);
    const auto na = static_cast<Eigen::Index>(hole.dom.cardinality());
    const auto nb = static_cast<Eigen::Index>(hole.cod.cardinality());
    const auto nap = static_cast<Eigen::Index>(outer.dom.cardinality());
    const auto nbp = static_cast<Eigen::Index>(outer.cod.cardinality());
    const auto nz = static_cast<Eigen::Index>(k.ancilla().cardinality());
    for (Eigen::Index a = 0; a < na; ++a)
      for (Eigen::Index bp = 0; bp < nbp; ++bp)
        for (Eigen::Index ap = 0; ap < nap; ++ap)
          for (Eigen::Index b = 0; b < nb; ++b) {
            Rational s(0);
            for (Eigen::Index z = 0; z < nz; ++z) s += k.pre()(a * nz + z, ap) * k.post()(bp, b * nz + z);
            CHECK(w(a * nbp + bp, ap * nb + b) == s);
          }
  }
}

TEST_CASE("comb_equivalent agrees with the side-wire definition") {
  std::mt19937_64 rng(13);
  const ProcessType hole = ptype(2, 2);
  const ProcessType outer = ptype(2, 2, "A1", "B1");
  int same = 0;
  for (int i = 0; i < 40; ++i) {
    const OneComb k1 = random_comb(hole, outer, 1 + i % 2, rng, 2);
    OneComb k2 = random_comb(hole, outer, 1 + (i / 2) % 2, rng, 2);
    if (i % 3 == 0) {
      // same comb with its ancilla relabelled by a permutation: equivalent
      const FinSet z = k1.ancilla();
      const std::size_t nz = z.cardinality();
      std::vector<std::size_t> flip(nz);
      for (std::size_t j = 0; j < nz; ++j) flip[j] = nz - 1 - j;
      const StochMap pz = deterministic(z, z, flip);
      k2 = OneComb(z, compose_seq(compose_par(identity(hole.dom), pz), k1.pre()),
                   compose_seq(k1.post(), compose_par(identity(hole.cod), pz)), hole);
    }
    const bool got = comb_equivalent(k1, k2);
    CHECK(got == resconv::testing::side_wire_equivalent(k1, k2));
    same += got;
  }
  CHECK(same >= 10);
  CHECK_THROWS_AS(comb_equivalent(identity_comb(hole), identity_comb(ptype(2, 3))), CompositionError);
}

TEST_CASE("sequential and parallel comb composition act as expected on processes") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    const ProcessType h = ptype(2, 2);
    const ProcessType mid = ptype(2, 1 + i % 2, "M", "N");
    const ProcessType out = ptype(1 + i % 3, 2, "O", "P");
    const OneComb k1 = random_comb(h, mid, 2, rng);
    const OneComb k2 = random_comb(mid, out, 1 + i % 2, rng);
    const StochMap f = random_stochastic(h.dom, h.cod, rng, 2);
    CHECK(apply_comb(compose_combs_seq(k2, k1), f) == apply_comb(k2, apply_comb(k1, f)));

    const ProcessType h2 = ptype(1 + i % 2, 2, "C", "D");
    const OneComb k3 = random_comb(h2, ptype(2, 2, "E", "F"), 1 + i % 2, rng);
    const StochMap g = random_stochastic(h2.dom, h2.cod, rng, 2);
    CHECK(apply_comb(compose_combs_par(k1, k3), compose_par(f, g)) == compose_par(apply_comb(k1, f), apply_comb(k3, g)));
  }
  CHECK_THROWS_AS(compose_combs_seq(identity_comb(ptype(2, 2)), identity_comb(ptype(3, 3))), CompositionError);
}

TEST_CASE("symmetry comb swaps the two halves") {
  std::mt19937_64 rng(15);
  const ProcessType t1 = ptype(2, 3);
  const ProcessType t2 = ptype(3, 2, "C", "D");
  const OneComb s = symmetry_comb(t1, t2);
  const StochMap f = random_stochastic(t1.dom, t1.cod, rng);
  const StochMap g = random_stochastic(t2.dom, t2.cod, rng);
  CHECK(apply_comb(s, compose_par(f, g)) == compose_par(g, f));
}

TEST_CASE("n-combs: construction, evaluation and plugging") {
  std::mt19937_64 rng(16);
  const FinSet a = set_of(2, "A");
  const FinSet b = set_of(2, "B");
  const FinSet z = set_of(2, "Z");
  // two holes of type A → B, filled in the order (1, 0)
  const StochMap x0 = random_stochastic(a, a * z, rng, 2);
  const StochMap x1 = random_stochastic(b * z, a * z, rng, 2);
  const StochMap x2 = random_stochastic(b * z, b, rng, 2);
  const NComb c({1, 0}, {x0, x1, x2}, {z, z}, {{a, b}, {a, b}});
  const StochMap f = random_stochastic(a, b, rng, 2);
  const StochMap g = random_stochastic(a, b, rng, 2);
  // hole 1 (g) acts first
  const StochMap want = compose_seq(
      x2, compose_seq(compose_par(f, identity(z)), compose_seq(x1, compose_seq(compose_par(g, identity(z)), x0))));
  CHECK(apply_ncomb(c, {f, g}) == want);

  CHECK_THROWS_AS(NComb({0, 0}, {x0, x1, x2}, {z, z}, {{a, b}, {a, b}}), InputError);
  CHECK_THROWS_AS(NComb({0, 1}, {x0, x2, x2}, {z, z}, {{a, b}, {a, b}}), CompositionError);

  // plugging a 1-comb into hole 0 and a plain process into hole 1
  const OneComb k = random_comb({a, b}, {a, b}, 2, rng, 2);
  const NComb plain({}, {g}, {}, {});
  const NComb plugged = plug_ncombs(c, {NComb::from_one_comb(k), plain});
  CHECK(plugged.arity() == 1);
  CHECK(apply_ncomb(plugged, {f}) == apply_ncomb(c, {apply_comb(k, f), g}));
}

TEST_CASE("plugging is associative on random chains") {
  std::mt19937_64 rng(17);
  const ProcessType t = ptype(2, 2);
  for (int i = 0; i < 20; ++i) {
    const NComb k1 = NComb::from_one_comb(random_comb(t, t, 2, rng));
    const NComb k2 = NComb::from_one_comb(random_comb(t, t, 1 + i % 2, rng));
    const NComb k3 = NComb::from_one_comb(random_comb(t, t, 2, rng));
    const StochMap f = random_stochastic(t.dom, t.cod, rng, 2);
    const NComb left = plug_ncombs(plug_ncombs(k1, {k2}), {k3});
    const NComb right = plug_ncombs(k1, {plug_ncombs(k2, {k3})});
    CHECK(apply_ncomb(left, {f}) == apply_ncomb(right, {f}));
  }
}

TEST_CASE("UC allocation transformations") {
  std::mt19937_64 rng(18);
  const ProcessType t = ptype(2, 2);
  const OneComb k = random_comb(t, t, 2, rng);
  const FinSet z = set_of(2, "Z");
  // target 0 gets sources {0, 2}, target 1 gets source {1}
  const StochMap x0 = random_stochastic(t.dom, t.dom * z, rng, 2);
  const StochMap x1 = random_stochastic(t.cod * z, t.dom * z, rng, 2);
  const StochMap x2 = random_stochastic(t.cod * z, t.cod, rng, 2);
  const NComb two({0, 1}, {x0, x1, x2}, {z, z}, {t, t});
  const UCTransformation uc({0, 1, 0}, {two, NComb::from_one_comb(k)});
  std::vector<StochMap> fs;
  for (int i = 0; i < 3; ++i) fs.push_back(random_stochastic(t.dom, t.cod, rng, 2));
  const auto out = apply_uc(uc, fs);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == apply_ncomb(two, {fs[0], fs[2]}));
  CHECK(out[1] == apply_comb(k, fs[1]));
  CHECK_THROWS_AS(apply_uc(uc, {fs[0]}), InputError);
  CHECK_THROWS_AS(UCTransformation({0, 0}, {NComb::from_one_comb(k)}), InputError);

  const UCTransformation back = uc_from_json(to_json(uc));
  CHECK(apply_uc(back, fs) == out);
}

TEST_CASE("comb JSON round trip") {
  std::mt19937_64 rng(19);
  const OneComb k = random_comb(ptype(2, 3), ptype(3, 2, "C", "D"), 2, rng);
  const OneComb k2 = one_comb_from_json(to_json(k));
  CHECK(k2.pre() == k.pre());
  CHECK(k2.post() == k.post());
  CHECK(comb_equivalent(k, k2));
}
