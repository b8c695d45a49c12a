#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/error.hpp"

namespace kummer {

/// n-torsion translation class, a vector of (Z/n)^4 stored as canonical
/// residues in [0, n).
class TorsionElement {
public:
  TorsionElement(std::array<std::int64_t, 4> coords, std::int64_t modulus);

  static TorsionElement zero(std::int64_t modulus);

  const std::array<std::int64_t, 4>& coords() const noexcept { return coords_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept;

  TorsionElement operator+(const TorsionElement& other) const;
  TorsionElement operator-() const;

  friend bool operator==(const TorsionElement&, const TorsionElement&) = default;
  friend auto operator<=>(const TorsionElement&, const TorsionElement&) = default;

private:
  std::array<std::int64_t, 4> coords_;
  std::int64_t modulus_;
};

enum class Sign : int { plus = 1, minus = -1 };

inline Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus : Sign::minus;
}

/// Element (t, e) of K = T(n).<iota>, acting on the torus as x -> e*x + t.
struct AutElement {
  TorsionElement translation;
  Sign sign = Sign::plus;

  std::int64_t modulus() const noexcept { return translation.modulus(); }

  static AutElement identity(std::int64_t modulus);

  friend bool operator==(const AutElement&, const AutElement&) = default;
};

/// (t, e) o (t', e') = (t + e t', e e').
AutElement compose(const AutElement& g, const AutElement& h);
AutElement inverse(const AutElement& g);
std::int64_t element_order(const AutElement& g);
bool is_pure_translation(const AutElement& g) noexcept;

/// Number of elements of K, 2 n^4.
std::int64_t kernel_group_size(std::int64_t n);

/// Element with the given position in the enumeration order of K:
/// translations first in lexicographic coordinate order, then the sign -1
/// block in the same order.
AutElement kernel_element_at(std::int64_t n, std::int64_t index);

/// Forward range over all of K in enumeration order.
class KernelGroupRange {
public:
  class iterator {
  public:
    using value_type = AutElement;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::int64_t n, std::int64_t index) : n_(n), index_(index) {}

    AutElement operator*() const { return kernel_element_at(n_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++index_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.index_ == b.index_;
    }

  private:
    std::int64_t n_ = 1;
    std::int64_t index_ = 0;
  };

  explicit KernelGroupRange(std::int64_t n);

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, kernel_group_size(n_)}; }
  std::int64_t size() const { return kernel_group_size(n_); }

private:
  std::int64_t n_;
};

KernelGroupRange enumerate_kernel_group(std::int64_t n);

/// Parses `a1,a2,a3,a4` with an optional `,iota` suffix. Coordinates may be
/// any integers; they are reduced mod n.
AutElement parse_element(std::string_view text, std::int64_t n);
TorsionElement parse_translation(std::string_view text, std::int64_t n);
std::string to_string(const TorsionElement& t);
std::string to_string(const AutElement& g);

} // namespace kummer
