#include <random>

#include "doctest.h"
#include "resconv/linalg.hpp"

using namespace resconv;

namespace {

RationalMatrix random_int_matrix(std::mt19937_64 &rng, Eigen::Index r, Eigen::Index c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Rational(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rank of hand-built matrices") {
  RationalMatrix m(3, 3);
  m << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6), Rational(0), Rational(1), Rational(1);
  CHECK(exact_rank(m) == 2);
  CHECK(exact_rank(RationalMatrix::Identity(4, 4)) == 4);
  CHECK(exact_rank(RationalMatrix::Zero(2, 5)) == 0);
}

TEST_CASE("null space and rank-nullity on random matrices") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const Eigen::Index r = std::uniform_int_distribution<Eigen::Index>(1, 4)(rng);
    const Eigen::Index c = std::uniform_int_distribution<Eigen::Index>(1, 5)(rng);
    const RationalMatrix m = random_int_matrix(rng, r, c, -2, 2);
    const RationalMatrix n = null_space(m);
    CHECK(exact_rank(m) + n.cols() == c);
    CHECK((m * n).isZero());
    if (n.cols() > 0) CHECK(exact_rank(n) == n.cols());
  }
}

TEST_CASE("solve_exact finds a solution exactly when one exists") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const RationalMatrix a = random_int_matrix(rng, 3, 3, -3, 3);
    const RationalMatrix x0 = random_int_matrix(rng, 3, 1, -3, 3);
    const RationalVector b = a * x0;
    const auto x = solve_exact(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    // consistency criterion: rank [A | b] = rank A
    RationalVector b2 = random_int_matrix(rng, 3, 1, -3, 3);
    RationalMatrix aug(3, 4);
    aug << a, b2;
    CHECK(solve_exact(a, b2).has_value() == (exact_rank(aug) == exact_rank(a)));
  }
}
