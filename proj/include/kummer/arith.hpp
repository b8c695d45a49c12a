#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "kummer/error.hpp"

namespace kummer {

/// Length parameter n of the generalized Kummer manifold K_{n-1}(A).
class Level {
public:
  explicit Level(std::int64_t n);

  std::int64_t value() const noexcept { return n_; }

  /// Throws unless n >= 3, the range in which K_{n-1}(A) has dimension >= 4.
  const Level& require_hyperkahler() const;

  friend bool operator==(Level, Level) = default;

private:
  std::int64_t n_;
};

std::vector<std::int64_t> divisors(std::int64_t n);

/// a * b, throwing InputError on int64 overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Sum of the positive divisors of n.
std::int64_t sigma(std::int64_t n);

class TorsionElement;

/// Order p of a in (Z/n)^4, i.e. n / gcd(n, a1, .., a4).
std::int64_t torsion_order(const TorsionElement& a);

/// d = n / p = gcd(n, a1, .., a4). Equals n for a = 0.
std::int64_t torsion_codegree(const TorsionElement& a);

} // namespace kummer
