#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

class RationalMatrix {
public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws on ragged input.
  static RationalMatrix from_rows(std::vector<std::vector<Rational>> rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Rational> column(std::size_t j) const;
  static RationalMatrix from_columns(std::size_t rows,
                                     const std::vector<std::vector<Rational>>& cols);

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator-() const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Rational determinant(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Exact basis of the null space, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// (C^{2m}, J) with J antisymmetric and invertible.
class SymplecticSpace {
public:
  explicit SymplecticSpace(RationalMatrix form);
  /// J = [[0, I_m], [-I_m, 0]].
  static SymplecticSpace standard(std::size_t m);

  std::size_t dimension() const noexcept { return form_.rows(); }
  const RationalMatrix& form() const noexcept { return form_; }

private:
  RationalMatrix form_;
};

struct FixedSubspaceReport {
  std::int64_t order;
  std::size_t fixed_dimension;
  std::vector<std::vector<Rational>> basis;
  RationalMatrix gram;
  bool even;
  bool nondegenerate;
  /// B^T J (h - I) == 0: the fixed space is J-orthogonal to im(h - I).
  bool orthogonal;
};

inline constexpr std::int64_t default_max_order = 24;

/// h^T J h == J.
bool is_symplectic(const RationalMatrix& h, const SymplecticSpace& space);

/// Least k <= max_order with h^k = I. Throws on singular h.
std::optional<std::int64_t> matrix_order(const RationalMatrix& h,
                                         std::int64_t max_order = default_max_order);

/// Basis of ker(h - I).
std::vector<std::vector<Rational>> fixed_subspace(const RationalMatrix& h);

/// Throws InputError for non-symplectic h or when no order <= max_order exists.
FixedSubspaceReport check_fixed_locus_symplectic(
    const RationalMatrix& h, const SymplecticSpace& space,
    std::int64_t max_order = default_max_order);

struct MatrixInput {
  RationalMatrix h;
  std::optional<RationalMatrix> form;
};

/// `rows cols` followed by row-major `p/q` or integer tokens; an optional
/// second block of the same shape gives a custom J.
MatrixInput parse_matrix_input(std::istream& in);

} // namespace kummer
