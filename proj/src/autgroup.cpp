#include "kummer/autgroup.hpp"

#include <charconv>
#include <sstream>

#include "kummer/arith.hpp"

namespace kummer {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t n) {
  auto r = x % n;
  return r < 0 ? r + n : r;
}

void require_same_modulus(std::int64_t a, std::int64_t b) {
  if (a != b)
    throw InputError("modulus mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
}

std::int64_t pow4(std::int64_t n) {
  return checked_mul(checked_mul(n, n), checked_mul(n, n));
}

} // namespace

TorsionElement::TorsionElement(std::array<std::int64_t, 4> coords,
                               std::int64_t modulus)
    : coords_(coords), modulus_(modulus) {
  if (modulus < 1)
    throw InputError("torsion modulus must be >= 1, got " +
                     std::to_string(modulus));
  for (auto& c : coords_)
    c = reduce(c, modulus);
}

TorsionElement TorsionElement::zero(std::int64_t modulus) {
  return TorsionElement({0, 0, 0, 0}, modulus);
}

bool TorsionElement::is_zero() const noexcept {
  for (auto c : coords_)
    if (c != 0)
      return false;
  return true;
}

TorsionElement TorsionElement::operator+(const TorsionElement& other) const {
  require_same_modulus(modulus_, other.modulus_);
  std::array<std::int64_t, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = coords_[i] + other.coords_[i];
  return TorsionElement(out, modulus_);
}

TorsionElement TorsionElement::operator-() const {
  std::array<std::int64_t, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = -coords_[i];
  return TorsionElement(out, modulus_);
}

AutElement AutElement::identity(std::int64_t modulus) {
  return {TorsionElement::zero(modulus), Sign::plus};
}

AutElement compose(const AutElement& g, const AutElement& h) {
  require_same_modulus(g.modulus(), h.modulus());
  auto moved = g.sign == Sign::plus ? h.translation : -h.translation;
  return {g.translation + moved, g.sign * h.sign};
}

AutElement inverse(const AutElement& g) {
  // (t, e)^-1 = (-e t, e)
  if (g.sign == Sign::plus)
    return {-g.translation, Sign::plus};
  return g;
}

std::int64_t element_order(const AutElement& g) {
  if (g.sign == Sign::minus)
    return 2;
  return torsion_order(g.translation);
}

bool is_pure_translation(const AutElement& g) noexcept {
  return g.sign == Sign::plus;
}

std::int64_t kernel_group_size(std::int64_t n) {
  (void)Level{n};
  return checked_mul(2, pow4(n));
}

AutElement kernel_element_at(std::int64_t n, std::int64_t index) {
  const auto block = pow4(n);
  if (index < 0 || index >= 2 * block)
    throw InputError("kernel element index out of range");
  auto sign = index < block ? Sign::plus : Sign::minus;
  auto rest = index % block;
  std::array<std::int64_t, 4> coords{};
  for (int i = 3; i >= 0; --i) {
    coords[static_cast<std::size_t>(i)] = rest % n;
    rest /= n;
  }
  return {TorsionElement(coords, n), sign};
}

KernelGroupRange::KernelGroupRange(std::int64_t n) : n_(Level{n}.value()) {}

KernelGroupRange enumerate_kernel_group(std::int64_t n) {
  return KernelGroupRange(n);
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t parse_int(std::string_view tok, std::string_view whole) {
  while (!tok.empty() && tok.front() == ' ')
    tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ')
    tok.remove_suffix(1);
  if (!tok.empty() && tok.front() == '+')
    tok.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw InputError("malformed element '" + std::string(whole) +
                     "': bad coordinate '" + std::string(tok) + "'");
  return value;
}

} // namespace

AutElement parse_element(std::string_view text, std::int64_t n) {
  (void)Level{n};
  auto parts = split_commas(text);
  auto sign = Sign::plus;
  if (parts.size() == 5 && parts.back() == "iota") {
    sign = Sign::minus;
    parts.pop_back();
  }
  if (parts.size() != 4)
    throw InputError("malformed element '" + std::string(text) +
                     "': expected a1,a2,a3,a4[,iota]");
  std::array<std::int64_t, 4> coords{};
  for (std::size_t i = 0; i < 4; ++i)
    coords[i] = parse_int(parts[i], text);
  return {TorsionElement(coords, n), sign};
}

TorsionElement parse_translation(std::string_view text, std::int64_t n) {
  auto g = parse_element(text, n);
  if (g.sign != Sign::plus)
    throw InputError("expected a pure translation, got '" + std::string(text) +
                     "'");
  return g.translation;
}

std::string to_string(const TorsionElement& t) {
  std::ostringstream os;
  const auto& c = t.coords();
  os << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3];
  return os.str();
}

std::string to_string(const AutElement& g) {
  auto s = to_string(g.translation);
  if (g.sign == Sign::minus)
    s += ",iota";
  return s;
}

} // namespace kummer
