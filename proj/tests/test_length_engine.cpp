#include "doctest.h"

#include "multlab/length.hpp"
#include "multlab/parse.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <random>
#include <thread>

using namespace multlab;

namespace {

MonomialIdeal I(const char* expr, std::size_t d = 2) { return parse_ideal(expr, d); }

BigInt lam(const std::vector<MonomialIdeal>& ideals, GridPoint n, LengthCache* cache = nullptr) {
  return colength_of_product(ideals, n, cache);
}

}  // namespace

TEST_CASE("colength examples") {
  CHECK(colength(MonomialIdeal::maximal(3)) == 1);
  CHECK(colength(I("(x^5, y^7)")) == 35);
  CHECK(colength(I("(x^2, x*y, y^3)")) == 4);  // {1, x, y, y^2}
  CHECK(colength(MonomialIdeal::unit(2)) == 0);
  CHECK_THROWS_AS(colength(I("(x^2, x*y)")), AlgebraError);
}

TEST_CASE("colength_of_product examples") {
  auto m = MonomialIdeal::maximal(2);
  CHECK(lam({m}, {3}) == 6);
  for (int n = 0; n < 8; ++n) CHECK(lam({m}, {n}) == n * (n + 1) / 2);
  CHECK(lam({I("(x, y^2)"), I("(x^2, y)")}, {0, 0}) == 0);
  CHECK(lam({m, I("(x^2, y^2)")}, {1, 1}) == 6);  // staircase of (x^3, x^2y, xy^2, y^3)
  CHECK_THROWS_AS(lam({m, MonomialIdeal::maximal(3)}, {1, 1}), AlgebraError);
  CHECK_THROWS_AS(lam({m}, {1, 1}), AlgebraError);
}

TEST_CASE("staircase heights match the ideal") {
  auto j = I("(x^3, x*y^2, y^4, x^2*z, z^2)", 3);
  for (std::size_t axis = 0; axis < 3; ++axis) {
    auto s = Staircase::of(j, axis);
    CHECK(s.colength() == test_support::brute_colength(j));
    // Height over v is the least exponent that enters the ideal.
    for (Exponent a = 0; a < 4; ++a) {
      for (Exponent b = 0; b < 5; ++b) {
        std::vector<Exponent> v = {a, b, 0};
        std::swap(v[axis], v[2]);
        v[axis] = 0;
        Exponent h = s.height(v);
        auto at = v;
        at[axis] = h;
        CHECK(contains(j, Monomial(at)));
        if (h > 0) {
          at[axis] = h - 1;
          CHECK_FALSE(contains(j, Monomial(at)));
        }
      }
    }
  }
}

TEST_CASE("sweep agrees with naive enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t d = 1 + trial % 4;
    auto j = test_support::random_ideal(rng, d, 6, 5);
    CAPTURE(to_string(j));
    auto naive = colength_naive(j);
    CHECK(naive == test_support::brute_colength(j));
    CHECK(colength_sweep(j) == naive);
    CHECK(colength(j) == naive);
  }
}

TEST_CASE("staircase products agree with explicit products") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 4;
    auto a = test_support::random_ideal(rng, d, 3, 2);
    auto b = test_support::random_ideal(rng, d, 3, 2);
    GridPoint n = {trial % 3, 1 + trial % 2};
    auto explicit_product = product(power(a, n[0]), power(b, n[1]));
    CHECK(lam({a, b}, n) == test_support::brute_colength(explicit_product));
  }
}

TEST_CASE("length sampling properties") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 2;
    auto a = test_support::random_ideal(rng, d, 3, 2);
    auto b = test_support::random_ideal(rng, d, 3, 2);
    auto c = test_support::random_ideal(rng, d, 2, 1);
    std::vector<MonomialIdeal> ideals = {a, b, c};
    GridPoint n = {trial % 3, (trial / 3) % 3, 1};

    // Monotone in n.
    for (std::size_t i = 0; i < 3; ++i) {
      GridPoint up = n;
      ++up[i];
      CHECK(lam(ideals, n) <= lam(ideals, up));
    }
    // Consistency with power().
    CHECK(lam({a}, {2}) == colength(power(a, 2)));
    // Permutation equivariance.
    CHECK(lam({c, a, b}, {n[2], n[0], n[1]}) == lam(ideals, n));
    // Closure is larger.
    CHECK(colength(integral_closure(a)) <= colength(a));
  }
}

TEST_CASE("batched sampling and the cache") {
  auto a = I("(x^2, x*y, y^3)");
  auto b = I("(x^3, y^2)");
  LengthCache cache;
  ProductSampler sampler({a, b}, &cache);
  std::vector<GridPoint> points;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) points.push_back({i, j});
  }
  std::reverse(points.begin(), points.end());
  auto values = sampler.sample(points);
  for (std::size_t p = 0; p < points.size(); ++p) {
    CHECK(values[p] == lam({a, b}, points[p]));
  }
  CHECK(cache.size() == points.size());
  // Canonical keys: the same product through another ideal list hits.
  CHECK(LengthCache::key({b, a}, std::vector<int>{2, 1}) == LengthCache::key({a, b}, std::vector<int>{1, 2}));
  CHECK(LengthCache::key({a, a}, std::vector<int>{1, 2}) == LengthCache::key({a}, std::vector<int>{3}));
  auto at = std::find(points.begin(), points.end(), GridPoint{1, 2}) - points.begin();
  CHECK(lam({b, a, MonomialIdeal::unit(2)}, {2, 1, 4}, &cache) == values[at]);

  // Concurrent use gives the same values.
  std::vector<BigInt> left, right;
  std::thread t1([&] { left = ProductSampler({a, b}, &cache).sample({{5, 5}, {6, 2}}); });
  std::thread t2([&] { right = ProductSampler({a, b}, &cache).sample({{5, 5}, {6, 2}}); });
  t1.join();
  t2.join();
  CHECK(left == right);
  CHECK(left[0] == lam({a, b}, {5, 5}));
}
