#include <doctest.h>

#include <sstream>

#include "kummer/error.hpp"
#include "symplectic_battery.hpp"

using namespace kummer;
using namespace kummer::testing;

namespace {

// Cofactor expansion; independent of the Bareiss path.
Rational det_by_cofactors(const RationalMatrix& m) {
  const auto n = m.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return m(0, 0);
  Rational total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col) == 0)
      continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != col)
          minor(i - 1, k++) = m(i, j);
    const Rational term = m(0, col) * det_by_cofactors(minor);
    total += col % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

const auto j2 = SymplecticSpace::standard(1);

} // namespace

TEST_CASE("determinant and kernel") {
  auto m = RationalMatrix::from_rows(
      {{Rational(1, 2), 2, 0}, {3, Rational(-1, 3), 1}, {0, 5, Rational(7, 4)}});
  CHECK(determinant(m) == det_by_cofactors(m));
  auto singular = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(determinant(singular) == 0);
  CHECK(rank(singular) == 2);
  auto ker = kernel_basis(singular);
  REQUIRE(ker.size() == 1);
  auto v = RationalMatrix::from_columns(3, ker);
  CHECK((singular * v).is_zero());

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RationalMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        r(i, k) = Rational(e(rng), 1 + (i + k) % 3);
    REQUIRE(determinant(r) == det_by_cofactors(r));
  }
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(RationalMatrix::identity(2), j2));
  CHECK(is_symplectic(-RationalMatrix::identity(6), SymplecticSpace::standard(3)));
  CHECK(is_symplectic(j2.form(), j2));
  CHECK_FALSE(is_symplectic(RationalMatrix::from_rows({{2, 0}, {0, 1}}), j2));
  CHECK_THROWS_AS(is_symplectic(RationalMatrix::identity(4), j2), InputError);
}

TEST_CASE("matrix_order") {
  CHECK(matrix_order(RationalMatrix::identity(4)) == 1);
  CHECK(matrix_order(-RationalMatrix::identity(4)) == 2);
  CHECK(matrix_order(j2.form()) == 4);
  CHECK_FALSE(matrix_order(RationalMatrix::from_rows({{1, 1}, {0, 1}})).has_value());
  CHECK_THROWS_AS(matrix_order(RationalMatrix::from_rows({{1, 1}, {1, 1}})),
                  InputError);
}

TEST_CASE("fixed_subspace") {
  CHECK(fixed_subspace(RationalMatrix::identity(4)).size() == 4);
  CHECK(fixed_subspace(-RationalMatrix::identity(4)).empty());
  // (q1, q2, p1, p2) -> (q2, q1, p2, p1): fixed space spanned by
  // (1, 1, 0, 0) and (0, 0, 1, 1).
  const auto swap = pair_swap(2, 0, 1);
  auto basis = fixed_subspace(swap);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == std::vector<Rational>{1, 1, 0, 0});
  CHECK(basis[1] == std::vector<Rational>{0, 0, 1, 1});
}

TEST_CASE("check_fixed_locus_symplectic") {
  const auto j4 = SymplecticSpace::standard(2);
  auto id = check_fixed_locus_symplectic(RationalMatrix::identity(4), j4);
  CHECK(id.order == 1);
  CHECK(id.fixed_dimension == 4);
  CHECK(id.gram == j4.form());
  CHECK((id.even && id.nondegenerate && id.orthogonal));

  auto neg = check_fixed_locus_symplectic(-RationalMatrix::identity(4), j4);
  CHECK(neg.order == 2);
  CHECK(neg.fixed_dimension == 0);
  CHECK((neg.even && neg.nondegenerate && neg.orthogonal));

  auto swap = check_fixed_locus_symplectic(pair_swap(2, 0, 1), j4);
  CHECK(swap.fixed_dimension == 2);
  CHECK(swap.gram == RationalMatrix::from_rows({{0, 2}, {-2, 0}}));
  CHECK(swap.nondegenerate);

  CHECK_THROWS_AS(check_fixed_locus_symplectic(
                      RationalMatrix::from_rows({{2, 0}, {0, 1}}), j2),
                  InputError);
  CHECK_THROWS_AS(check_fixed_locus_symplectic(
                      RationalMatrix::from_rows({{1, 1}, {0, 1}}), j2),
                  InputError);
  CHECK_THROWS_AS(check_fixed_locus_symplectic(j2.form(), j2, 3), InputError);
}

TEST_CASE("symplectic space validation") {
  CHECK_THROWS_AS(SymplecticSpace(RationalMatrix::identity(2)), InputError);
  CHECK_THROWS_AS(SymplecticSpace(RationalMatrix(2, 2)), InputError);
  CHECK_THROWS_AS(SymplecticSpace(RationalMatrix(3, 3)), InputError);
  auto custom = SymplecticSpace(RationalMatrix::from_rows({{0, 3}, {-3, 0}}));
  CHECK(is_symplectic(rotation_block(3), custom));
}

TEST_CASE("battery: even, nondegenerate, orthogonal") {
  SymplecticBattery battery(11);
  const auto items = battery.generate(1);
  REQUIRE(items.size() >= 50);
  for (const auto& item : items) {
    const auto space = SymplecticSpace::standard(item.h.rows() / 2);
    REQUIRE(is_symplectic(item.h, space));
    const auto report = check_fixed_locus_symplectic(item.h, space);
    REQUIRE(report.order == item.seed_order);
    REQUIRE(report.fixed_dimension == item.expected_fixed_dim);
    REQUIRE(report.even);
    REQUIRE(report.nondegenerate);
    REQUIRE(report.orthogonal);
    const auto shift = item.h - RationalMatrix::identity(item.h.rows());
    const auto b = RationalMatrix::from_columns(item.h.rows(), report.basis);
    REQUIRE(rank(b) == report.fixed_dimension);
    REQUIRE((shift * b).is_zero());
  }
}

TEST_CASE("matrix file format") {
  std::istringstream one("2 2\n0 1\n-1 0\n");
  auto a = parse_matrix_input(one);
  CHECK(a.h == j2.form());
  CHECK_FALSE(a.form.has_value());

  std::istringstream two("2 2\n1/2 0 0 2\n2 2\n0 3 -3 0\n");
  auto b = parse_matrix_input(two);
  CHECK(b.h(0, 0) == Rational(1, 2));
  REQUIRE(b.form.has_value());
  CHECK((*b.form)(0, 1) == 3);

  for (const char* bad : {"", "2", "2 2\n1 0 0", "2 2\n1 0 0 x", "2 2\n1 0 0 1/0",
                          "0 2\n", "2 2\n1 0 0 1\n2 2\n0 1 -1 0 7"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(parse_matrix_input(in), InputError);
  }
}
