#include "kummer/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kummer/autgroup.hpp"

namespace kummer {

Level::Level(std::int64_t n) : n_(n) {
  if (n < 1)
    throw InputError("level n must be >= 1, got " + std::to_string(n));
}

const Level& Level::require_hyperkahler() const {
  if (n_ < 3)
    throw InputError("level n must be >= 3 (dimension 2(n-1) >= 4), got " +
                     std::to_string(n_));
  return *this;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1)
    throw InputError("divisors: n must be >= 1, got " + std::to_string(n));
  std::vector<std::int64_t> small, large;
  for (std::int64_t b = 1; b * b <= n; ++b) {
    if (n % b != 0)
      continue;
    small.push_back(b);
    if (b != n / b)
      large.push_back(n / b);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw InputError("integer overflow in " + std::to_string(a) + " * " +
                     std::to_string(b));
  return out;
}

std::int64_t sigma(std::int64_t n) {
  auto ds = divisors(n);
  return std::accumulate(ds.begin(), ds.end(), std::int64_t{0});
}

std::int64_t torsion_codegree(const TorsionElement& a) {
  // gcd(n, 0) = n, so the zero element folds to d = n.
  std::int64_t g = a.modulus();
  for (auto c : a.coords())
    g = std::gcd(g, c);
  return g;
}

std::int64_t torsion_order(const TorsionElement& a) {
  return a.modulus() / torsion_codegree(a);
}

} // namespace kummer
