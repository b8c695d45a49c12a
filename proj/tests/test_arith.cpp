#include <doctest.h>

#include <numeric>
#include <vector>

#include "kummer/arith.hpp"
#include "kummer/autgroup.hpp"

using namespace kummer;

namespace {

// Independent oracle: test every candidate 1..n.
std::vector<std::int64_t> divisors_by_scan(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t b = 1; b <= n; ++b)
    if (n % b == 0)
      out.push_back(b);
  return out;
}

} // namespace

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
  CHECK(divisors_by_scan(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(12) == divisors_by_scan(12));
  for (std::int64_t n = 1; n <= 500; ++n)
    REQUIRE(divisors(n) == divisors_by_scan(n));
  CHECK_THROWS_AS(divisors(0), InputError);
}

TEST_CASE("sigma") {
  CHECK(sigma(1) == 1);
  CHECK(sigma(2) == 3);
  auto ds = divisors_by_scan(12);
  CHECK(std::accumulate(ds.begin(), ds.end(), std::int64_t{0}) == 28);
  CHECK(sigma(12) == 28);
  CHECK_THROWS_AS(sigma(0), InputError);
}

TEST_CASE("sigma is multiplicative on coprime pairs") {
  for (std::int64_t m = 1; m <= 50; ++m)
    for (std::int64_t n = 1; n <= 50; ++n)
      if (std::gcd(m, n) == 1)
        REQUIRE(sigma(m * n) == sigma(m) * sigma(n));
}

TEST_CASE("torsion order and codegree") {
  CHECK(torsion_order(TorsionElement({0, 0, 0, 0}, 5)) == 1);
  CHECK(torsion_order(TorsionElement({2, 0, 0, 0}, 4)) == 2);
  CHECK(torsion_order(TorsionElement({2, 3, 0, 0}, 6)) == 6);
  CHECK(torsion_codegree(TorsionElement({0, 0, 0, 0}, 5)) == 5);
  CHECK(torsion_codegree(TorsionElement({2, 0, 0, 0}, 4)) == 2);
  CHECK(torsion_codegree(TorsionElement({1, 1, 1, 1}, 9)) == 1);
}

TEST_CASE("order times codegree is n, and sigma(d) <= sigma(n) - n") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (const auto& g : enumerate_kernel_group(n)) {
      if (g.sign == Sign::minus)
        break;
      const auto& a = g.translation;
      const auto p = torsion_order(a);
      const auto d = torsion_codegree(a);
      REQUIRE(p * d == n);
      // Brute-force order: least k with k*a = 0.
      std::int64_t k = 1;
      auto acc = a;
      while (!acc.is_zero()) {
        acc = acc + a;
        ++k;
      }
      REQUIRE(k == p);
      if (a.is_zero())
        continue;
      REQUIRE(n % d == 0);
      REQUIRE(2 * d <= n);
      REQUIRE(sigma(d) <= sigma(n) - n);
      REQUIRE(sigma(n) - n < sigma(n));
    }
  }
}

TEST_CASE("level") {
  CHECK(Level{1}.value() == 1);
  CHECK_THROWS_AS(Level{0}, InputError);
  CHECK_THROWS_AS(Level{2}.require_hyperkahler(), InputError);
  CHECK_NOTHROW(Level{3}.require_hyperkahler());
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40),
                  InputError);
}
