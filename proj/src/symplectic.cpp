#include "kummer/symplectic.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "kummer/error.hpp"

namespace kummer {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok)
    throw InputError(what);
}

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators. Returns the integer
// matrix and the product of the scale factors.
std::pair<IntegerMatrix, Integer> clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), std::vector<Integer>(m.cols()));
  Integer total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = boost::multiprecision::numerator(m(i, j)) * scale /
                  boost::multiprecision::denominator(m(i, j));
    total *= scale;
  }
  return {std::move(out), total};
}

struct Echelon {
  IntegerMatrix rows;
  std::vector<std::size_t> pivot_cols;
  int swap_sign = 1;
};

// Fraction-free row echelon form. Every division below is exact: each
// entry is a minor of the input.
Echelon bareiss(IntegerMatrix a, std::size_t cols) {
  Echelon e;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0)
      ++pivot;
    if (pivot == a.size())
      continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      e.swap_sign = -e.swap_sign;
    }
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        Integer q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0)
          throw std::logic_error("Bareiss step is not exact");
        a[i][j] = std::move(q);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = std::move(rows[i][j]);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out[i] = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::from_columns(
    std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = cols[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  require(cols_ == other.rows_, "matrix product dimension mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) += a * other(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_,
          "matrix sum dimension mismatch");
  RationalMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] += other.data_[k];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  return *this + (-other);
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix out = *this;
  for (auto& x : out.data_)
    x = -x;
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0)
      return false;
  return true;
}

Rational determinant(const RationalMatrix& m) {
  require(m.is_square(), "determinant of a non-square matrix");
  if (m.rows() == 0)
    return 1;
  auto [ints, scale] = clear_denominators(m);
  auto e = bareiss(std::move(ints), m.cols());
  if (e.pivot_cols.size() < m.rows())
    return 0;
  Rational det(e.rows.back().back() * e.swap_sign);
  return det / scale;
}

std::size_t rank(const RationalMatrix& m) {
  auto [ints, scale] = clear_denominators(m);
  return bareiss(std::move(ints), m.cols()).pivot_cols.size();
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  auto [ints, scale] = clear_denominators(m);
  const auto e = bareiss(std::move(ints), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols)
    is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
      const auto pc = e.pivot_cols[r];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j)
        if (v[j] != 0)
          acc += Rational(e.rows[r][j]) * v[j];
      v[pc] = -acc / Rational(e.rows[r][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SymplecticSpace::SymplecticSpace(RationalMatrix form) : form_(std::move(form)) {
  require(form_.is_square() && form_.rows() % 2 == 0,
          "symplectic form must be square of even size");
  require(form_.transpose() == -form_, "symplectic form must be antisymmetric");
  require(determinant(form_) != 0, "symplectic form must be invertible");
}

SymplecticSpace SymplecticSpace::standard(std::size_t m) {
  RationalMatrix j(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    j(i, m + i) = 1;
    j(m + i, i) = -1;
  }
  return SymplecticSpace(std::move(j));
}

bool is_symplectic(const RationalMatrix& h, const SymplecticSpace& space) {
  require(h.is_square() && h.rows() == space.dimension(),
          "matrix size does not match the symplectic space");
  return h.transpose() * space.form() * h == space.form();
}

std::optional<std::int64_t> matrix_order(const RationalMatrix& h,
                                         std::int64_t max_order) {
  require(h.is_square(), "matrix order needs a square matrix");
  require(max_order >= 1, "max order must be positive");
  require(determinant(h) != 0, "singular matrix has no finite order");
  const auto id = RationalMatrix::identity(h.rows());
  RationalMatrix power = h;
  for (std::int64_t k = 1; k <= max_order; ++k) {
    if (power == id)
      return k;
    power = power * h;
  }
  return std::nullopt;
}

std::vector<std::vector<Rational>> fixed_subspace(const RationalMatrix& h) {
  require(h.is_square(), "fixed subspace needs a square matrix");
  return kernel_basis(h - RationalMatrix::identity(h.rows()));
}

FixedSubspaceReport check_fixed_locus_symplectic(const RationalMatrix& h,
                                                 const SymplecticSpace& space,
                                                 std::int64_t max_order) {
  require(is_symplectic(h, space), "matrix does not preserve the symplectic form");
  auto order = matrix_order(h, max_order);
  require(order.has_value(), "matrix has no finite order <= " +
                                 std::to_string(max_order));

  auto basis = fixed_subspace(h);
  const auto b = RationalMatrix::from_columns(h.rows(), basis);
  const auto& j = space.form();
  auto gram = b.transpose() * j * b;
  const bool nondegenerate = basis.empty() || determinant(gram) != 0;
  const auto shift = h - RationalMatrix::identity(h.rows());
  const bool orthogonal = (b.transpose() * j * shift).is_zero();
  const auto dim = basis.size();
  return {*order, dim,           std::move(basis), std::move(gram),
          dim % 2 == 0, nondegenerate, orthogonal};
}

namespace {

RationalMatrix read_block(std::istream& in, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      require(static_cast<bool>(in >> tok), "matrix file: too few entries");
      m(i, j) = parse_rational(tok);
    }
  return m;
}

std::optional<std::pair<std::size_t, std::size_t>> read_header(std::istream& in) {
  std::string r, c;
  if (!(in >> r))
    return std::nullopt;
  require(static_cast<bool>(in >> c), "matrix file: incomplete header");
  auto to_size = [](const std::string& s) {
    require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
            "matrix file: bad dimension '" + s + "'");
    require(s.size() < 6, "matrix file: dimension too large");
    return static_cast<std::size_t>(std::stoul(s));
  };
  auto rows = to_size(r), cols = to_size(c);
  require(rows > 0 && cols > 0, "matrix file: dimensions must be positive");
  return std::pair{rows, cols};
}

} // namespace

MatrixInput parse_matrix_input(std::istream& in) {
  auto head = read_header(in);
  require(head.has_value(), "matrix file: empty input");
  MatrixInput input{read_block(in, head->first, head->second), std::nullopt};
  if (auto second = read_header(in)) {
    input.form = read_block(in, second->first, second->second);
    std::string extra;
    require(!(in >> extra), "matrix file: trailing data after second block");
  }
  return input;
}

} // namespace kummer
