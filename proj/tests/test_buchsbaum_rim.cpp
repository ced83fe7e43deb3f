#include "doctest.h"

#include "multlab/buchsbaum_rim.hpp"
#include "multlab/parse.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace multlab;

namespace {

MonomialIdeal I(const char* expr, std::size_t d = 2) { return parse_ideal(expr, d); }

MonomialIdeal m(std::size_t d) { return MonomialIdeal::maximal(d); }

DirectSumModule E(std::vector<MonomialIdeal> ideals) { return DirectSumModule(std::move(ideals)); }

// lambda(F^n/E^n) from explicit generator lists and box enumeration.
BigInt brute_module_length(const DirectSumModule& e, int n) {
  BigInt total = 0;
  for (const auto& a : compositions(n, e.rank())) {
    MonomialIdeal prod = MonomialIdeal::unit(e.dim());
    for (std::size_t i = 0; i < a.size(); ++i) prod = product(prod, power(e[i], a[i]));
    total += prod.is_unit() ? 0 : test_support::brute_colength(prod);
  }
  return total;
}

// k-th forward difference at `base`, straight from the definition.
BigInt brute_leading(const DirectSumModule& e, int base) {
  const int k = static_cast<int>(e.dim() + e.rank()) - 1;
  BigInt total = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(k, j) * brute_module_length(e, base + j);
    if ((k - j) % 2) total -= term;
    else total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("DirectSumModule invariants") {
  auto e = E({m(2), I("(x^2, y^2)")});
  CHECK(e.rank() == 2);
  CHECK(e.contained_in_mF());
  CHECK(quotient_length(e) == 5);
  auto f = E({MonomialIdeal::unit(2), m(2)});
  CHECK_FALSE(f.contained_in_mF());
  CHECK_FALSE(f.is_free());
  CHECK(E({MonomialIdeal::unit(3)}).is_free());
  CHECK_THROWS_AS(E({}), AlgebraError);
  CHECK_THROWS_AS(E({m(2), m(3)}), AlgebraError);
  CHECK_THROWS_AS(E({I("(x)")}), AlgebraError);
  CHECK(to_string(e) == "(y, x);(y^2, x^2)");
}

TEST_CASE("module_colength") {
  CHECK(module_colength(E({m(2), m(2)}), 2) == 9);
  // (x^2, y^2)^3 = (x^6, x^4y^2, x^2y^4, y^6): 12 + 8 + 4 standard monomials.
  CHECK(module_colength(E({I("(x^2, y^2)")}), 3) == 24);
  CHECK(test_support::brute_colength(power(I("(x^2, y^2)"), 3)) == 24);
  CHECK(module_colength(E({m(3), I("(x, y^2, z)", 3)}), 0) == 0);
  // n (n+1)^2 / 2 for m + m in two variables.
  for (int n = 0; n < 8; ++n) CHECK(module_colength(E({m(2), m(2)}), n) == n * (n + 1) * (n + 1) / 2);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<MonomialIdeal> parts;
    for (int i = 0; i < 1 + trial % 3; ++i) parts.push_back(test_support::random_ideal(rng, 2, 3, 1));
    auto e = E(parts);
    for (int n = 0; n <= 3; ++n) CHECK(module_colength(e, n) == brute_module_length(e, n));
  }
}

TEST_CASE("compositions and their count") {
  CHECK(compositions(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(compositions(3, 1) == std::vector<std::vector<int>>{{3}});
  CHECK(compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
  auto c42 = composition_count(4, 2);
  CHECK(c42.count == 5);
  CHECK(c42.c == 10);
  auto c23 = composition_count(2, 3);
  CHECK(c23.count == 6);
  CHECK(c23.c == 4);
  for (int d = 1; d <= 6; ++d) {
    CHECK(composition_count(d, 1).count == 1);
    CHECK(composition_count(d, 1).c == d);
    for (int r = 1; r <= 4; ++r) {
      CHECK(composition_count(d, r).count == compositions(d, r).size());
      CHECK(composition_count(d, r).c * r == d * composition_count(d, r).count);
    }
  }
}

TEST_CASE("br examples") {
  CHECK(br_direct(E({m(2), m(2)})) == 3);
  CHECK(br_via_mixed(E({m(2), m(2)})) == 3);

  auto mixed = br_via_mixed_terms(E({m(2), I("(x^2, y^2)")}));
  CHECK(mixed.total == 7);
  REQUIRE(mixed.terms.size() == 3);
  CHECK(mixed.terms[0].second == 1);
  CHECK(mixed.terms[1].second == 2);
  CHECK(mixed.terms[2].second == 4);
  CHECK(br_direct(E({m(2), I("(x^2, y^2)")})) == 7);

  auto m2 = product(m(4), m(4));
  auto big = br_via_mixed_terms(E({m2, m2}));
  CHECK(big.total == 80);
  CHECK(big.terms.size() == 5);
  for (const auto& [a, v] : big.terms) CHECK(v == 16);

  CHECK_THROWS_AS(br_direct(E({MonomialIdeal::unit(2), MonomialIdeal::unit(2)})), AlgebraError);
  CHECK_THROWS_AS(br_via_mixed(E({MonomialIdeal::unit(2)})), AlgebraError);
}

TEST_CASE("br with a free summand") {
  // Only the composition putting all weight on m survives: br = e(m) = 1.
  auto e = E({MonomialIdeal::unit(3), m(3)});
  CHECK(br_via_mixed(e) == 1);
  CHECK(br_direct(e) == 1);
}

TEST_CASE("scale_by_m") {
  CHECK(scale_by_m(E({m(2), m(2)})) == E({product(m(2), m(2)), product(m(2), m(2))}));
  CHECK(scale_by_m(E({MonomialIdeal::unit(2)})) == E({m(2)}));
  CHECK(scale_by_m(E({I("(x^2, y)"), m(2)})) == E({I("(x^3, x*y, y^2)"), I("(x^2, x*y, y^2)")}));
  CHECK(scale_by_m(E({MonomialIdeal::unit(3), m(3)})).contained_in_mF());
}

TEST_CASE("agreement with the definition-level oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t r = 1 + trial % 3;
    std::vector<MonomialIdeal> parts;
    for (std::size_t i = 0; i < r; ++i) parts.push_back(test_support::random_ideal(rng, 2, 3, 1));
    auto e = E(parts);
    CAPTURE(to_string(e));
    // By n = 6 the products of these small ideals are far past the
    // regularity point in two variables.
    CHECK(br_direct(e) == brute_leading(e, 6));
  }
}

TEST_CASE("route agreement, r = 1 collapse and permutation invariance") {
  std::mt19937_64 rng(29);
  LengthCache cache;
  EngineOptions opts;
  opts.cache = &cache;
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const std::size_t r = 1 + trial % 3;
    std::vector<MonomialIdeal> parts;
    for (std::size_t i = 0; i < r; ++i) parts.push_back(test_support::random_ideal(rng, d, 3, 1));
    auto e = E(parts);
    CAPTURE(to_string(e));
    const BigInt direct = br_direct(e, opts);
    CHECK(direct > 0);
    CHECK(direct == br_via_mixed(e, opts));
    if (r == 1) CHECK(direct == hilbert_samuel(parts[0], opts));
    std::reverse(parts.begin(), parts.end());
    CHECK(br_via_mixed(E(parts), opts) == direct);

    // The next difference vanishes at the certified base.
    auto table = br_direct_table(e, opts);
    ModuleLengthSampler sampler(e, &cache);
    CHECK(mixed_difference(sampler, table.base, {table.order[0] + 1}) == 0);
  }
}
