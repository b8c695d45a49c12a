#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "kummer/autgroup.hpp"
#include "kummer/rational.hpp"

namespace kummer {

/// Coordinate 1-form dz^component_index, or its conjugate when `conjugated`.
struct Generator {
  std::int32_t index = 1;
  std::int8_t component = 1;
  bool conjugated = false;

  static Generator dz(int component, int index) {
    return {index, static_cast<std::int8_t>(component), false};
  }
  static Generator dzbar(int component, int index) {
    return {index, static_cast<std::int8_t>(component), true};
  }

  friend bool operator==(const Generator&, const Generator&) = default;
  // Total order (conjugated, component, index).
  friend std::strong_ordering operator<=>(const Generator& a,
                                          const Generator& b) {
    if (auto c = a.conjugated <=> b.conjugated; c != 0)
      return c;
    if (auto c = a.component <=> b.component; c != 0)
      return c;
    return a.index <=> b.index;
  }
};

/// Wedge of distinct generators in strictly increasing order.
class Monomial {
public:
  using Storage = boost::container::small_vector<Generator, 4>;

  Monomial() = default;
  /// Throws unless the generators are strictly increasing.
  Monomial(std::initializer_list<Generator> gens);
  explicit Monomial(Storage gens);

  /// Sorts an arbitrary generator list. Returns the sorted monomial and the
  /// permutation sign, or nullopt if a generator repeats.
  static std::optional<std::pair<Monomial, int>> from_unsorted(Storage gens);

  const Storage& generators() const noexcept { return gens_; }
  std::size_t degree() const noexcept { return gens_.size(); }
  std::int32_t max_index() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);

private:
  Storage gens_;
};

/// Sparse exact-rational combination of monomials on the 1-forms dz^q_i,
/// dzbar^q_i (1 <= i <= n, q = 1, 2). Terms are kept sorted by monomial with
/// no zero coefficients. Mixed degrees are allowed.
class Form {
public:
  using Term = std::pair<Monomial, Rational>;

  explicit Form(std::int64_t level);

  /// Collects duplicate monomials and drops zero coefficients.
  static Form from_terms(std::int64_t level, std::vector<Term> terms);
  static Form generator(std::int64_t level, Generator g);
  static Form monomial(std::int64_t level, Monomial m, Rational c = 1);
  static Form scalar(std::int64_t level, Rational c);

  std::int64_t level() const noexcept { return level_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// True when no monomial uses an index-n generator.
  bool is_reduced() const noexcept;
  /// Degree shared by every term, or nullopt for mixed or empty forms.
  std::optional<std::size_t> homogeneous_degree() const noexcept;

  /// Image under dz -> -dz on every generator: degree-k terms pick up (-1)^k.
  Form negate_generators() const;

  Form operator-() const;
  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  friend Form operator*(const Rational& c, const Form& f);

  /// Literal term equality; use `equivalent` for equality in the quotient.
  friend bool operator==(const Form&, const Form&) = default;

private:
  std::int64_t level_;
  std::vector<Term> terms_;
};

/// Bijection of {1..n}, stored as images of 1..n.
class Permutation {
public:
  explicit Permutation(std::vector<std::int32_t> images);
  static Permutation identity(std::int64_t n);
  /// Swaps i and j.
  static Permutation transposition(std::int64_t n, std::int32_t i,
                                   std::int32_t j);

  std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(images_.size());
  }
  std::int32_t operator()(std::int32_t i) const { return images_.at(i - 1); }

private:
  std::vector<std::int32_t> images_;
};

Form wedge(const Form& alpha, const Form& beta);

/// Rewrites every index-n generator through sum_i dz^q_i = 0 (and its
/// conjugate), i.e. dz^q_n = -(dz^q_1 + .. + dz^q_{n-1}). The result is
/// reduced and represents the same class in the quotient algebra.
Form normalize(const Form& alpha);

bool is_zero(const Form& alpha);
bool equivalent(const Form& alpha, const Form& beta);

Rational coefficient(const Form& alpha, const Monomial& m);

/// Reduced representative of sum_{i=1}^{n} dz^1_i ^ dz^2_i ^ dzbar^2_i.
Form build_tau_tilde(std::int64_t n);

/// Induced action of g on translation-invariant forms: translations act
/// trivially, the inversion negates every generator.
Form pullback(const AutElement& g, const Form& alpha);

/// Relabels indices i -> perm(i) and renormalizes.
Form permute(const Permutation& perm, const Form& alpha);

std::string to_string(const Generator& g);
std::string to_string(const Monomial& m);
/// Signed sum such as `dz1_1^dz2_1^dzb2_1 - 2*dz1_1^dz2_2^dzb2_2`.
std::string to_string(const Form& alpha);

Form parse_form(std::string_view text, std::int64_t level);

} // namespace kummer
