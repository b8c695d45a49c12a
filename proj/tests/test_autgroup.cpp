#include <doctest.h>

#include <random>
#include <set>

#include "kummer/arith.hpp"
#include "kummer/autgroup.hpp"

using namespace kummer;

namespace {

AutElement elem(std::array<std::int64_t, 4> t, std::int64_t n,
                Sign s = Sign::plus) {
  return {TorsionElement(t, n), s};
}

AutElement power(const AutElement& g, std::int64_t k) {
  auto acc = AutElement::identity(g.modulus());
  for (std::int64_t i = 0; i < k; ++i)
    acc = compose(acc, g);
  return acc;
}

} // namespace

TEST_CASE("compose") {
  const auto id = AutElement::identity(4);
  const auto t = elem({1, 2, 3, 0}, 4, Sign::minus);
  CHECK(compose(id, t) == t);
  CHECK(compose(t, t) == id);
  CHECK(compose(elem({1, 0, 0, 0}, 4, Sign::minus), elem({0, 1, 0, 0}, 4)) ==
        elem({1, 3, 0, 0}, 4, Sign::minus));
  CHECK_THROWS_AS(compose(id, AutElement::identity(5)), InputError);
}

TEST_CASE("inverse") {
  CHECK(inverse(AutElement::identity(3)) == AutElement::identity(3));
  const auto t = elem({2, 1, 0, 4}, 5, Sign::minus);
  CHECK(inverse(t) == t);
  CHECK(inverse(elem({2, 0, 0, 0}, 5)) == elem({3, 0, 0, 0}, 5));
  for (const auto& g : enumerate_kernel_group(3))
    REQUIRE(compose(inverse(g), g) == AutElement::identity(3));
}

TEST_CASE("element order") {
  CHECK(element_order(AutElement::identity(6)) == 1);
  CHECK(element_order(elem({1, 0, 0, 0}, 6)) == 6);
  CHECK(element_order(elem({0, 0, 0, 0}, 6, Sign::minus)) == 2);
  // Brute-force check against repeated composition.
  for (std::int64_t n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_kernel_group(n)) {
      const auto k = element_order(g);
      REQUIRE(power(g, k) == AutElement::identity(n));
      for (std::int64_t j = 1; j < k; ++j)
        REQUIRE_FALSE(power(g, j) == AutElement::identity(n));
      if (is_pure_translation(g))
        REQUIRE(k == torsion_order(g.translation));
    }
}

TEST_CASE("enumeration") {
  auto collect = [](std::int64_t n) {
    std::vector<AutElement> out;
    for (const auto& g : enumerate_kernel_group(n))
      out.push_back(g);
    return out;
  };
  auto one = collect(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == AutElement::identity(1));
  CHECK(one[1] == elem({0, 0, 0, 0}, 1, Sign::minus));
  CHECK(collect(2).size() == 32);
  CHECK(collect(3).size() == 162);

  for (std::int64_t n = 1; n <= 4; ++n) {
    auto all = collect(n);
    std::set<std::pair<TorsionElement, int>> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      seen.emplace(all[i].translation, static_cast<int>(all[i].sign));
      const bool first_half = i < all.size() / 2;
      REQUIRE(is_pure_translation(all[i]) == first_half);
      if (i > 0 && all[i].sign == all[i - 1].sign)
        REQUIRE(all[i - 1].translation < all[i].translation);
    }
    REQUIRE(seen.size() == static_cast<std::size_t>(2 * n * n * n * n));
  }
}

TEST_CASE("is_pure_translation") {
  CHECK(is_pure_translation(AutElement::identity(3)));
  CHECK_FALSE(is_pure_translation(elem({0, 0, 0, 0}, 3, Sign::minus)));
  CHECK(is_pure_translation(elem({1, 2, 3, 0}, 4)));
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(20261016);
  for (std::int64_t n = 2; n <= 6; ++n) {
    std::uniform_int_distribution<std::int64_t> pick(0, 2 * n * n * n * n - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      auto g = kernel_element_at(n, pick(rng));
      auto h = kernel_element_at(n, pick(rng));
      auto k = kernel_element_at(n, pick(rng));
      REQUIRE(compose(compose(g, h), k) == compose(g, compose(h, k)));
    }
  }
}

TEST_CASE("translations form a normal subgroup; iota-type elements are involutions") {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_kernel_group(n)) {
      if (!is_pure_translation(g))
        REQUIRE(compose(g, g) == AutElement::identity(n));
      for (const auto& t : enumerate_kernel_group(n)) {
        if (!is_pure_translation(t))
          break;
        REQUIRE(is_pure_translation(compose(compose(g, t), inverse(g))));
      }
    }
  }
}

TEST_CASE("element syntax") {
  CHECK(parse_element("1,0,2,0,iota", 4) == elem({1, 0, 2, 0}, 4, Sign::minus));
  CHECK(parse_element("5,-1,0,0", 4) == elem({1, 3, 0, 0}, 4));
  CHECK(to_string(elem({1, 0, 2, 0}, 4, Sign::minus)) == "1,0,2,0,iota");
  CHECK_THROWS_AS(parse_element("1,0,2", 4), InputError);
  CHECK_THROWS_AS(parse_element("1,0,x,0", 4), InputError);
  CHECK_THROWS_AS(parse_element("1,0,2,0,iotb", 4), InputError);
  CHECK_THROWS_AS(parse_translation("1,0,2,0,iota", 4), InputError);
  for (std::int64_t i = 0; i < kernel_group_size(3); ++i) {
    auto g = kernel_element_at(3, i);
    REQUIRE(parse_element(to_string(g), 3) == g);
  }
}
