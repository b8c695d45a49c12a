#include "kummer/exterior.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kummer/arith.hpp"

namespace kummer {

namespace {

void require_same_level(std::int64_t a, std::int64_t b) {
  if (a != b)
    throw InputError("form level mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
}

void validate_generator(const Generator& g, std::int64_t level) {
  if (g.index < 1 || g.index > level || (g.component != 1 && g.component != 2))
    throw InputError("generator " + to_string(g) + " out of range for level " +
                     std::to_string(level));
}

// Merges two sorted generator lists. Sign is the parity of the number of
// pairs (x in a, y in b) with x > y; zero on a shared generator.
std::optional<std::pair<Monomial, int>> wedge_monomials(const Monomial& a,
                                                        const Monomial& b) {
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  Monomial::Storage out;
  out.reserve(ga.size() + gb.size());
  std::size_t i = 0, j = 0, inversions = 0;
  while (i < ga.size() && j < gb.size()) {
    if (ga[i] == gb[j])
      return std::nullopt;
    if (ga[i] < gb[j]) {
      out.push_back(ga[i++]);
    } else {
      inversions += ga.size() - i;
      out.push_back(gb[j++]);
    }
  }
  out.insert(out.end(), ga.begin() + static_cast<std::ptrdiff_t>(i), ga.end());
  out.insert(out.end(), gb.begin() + static_cast<std::ptrdiff_t>(j), gb.end());
  return std::pair{Monomial(std::move(out)), inversions % 2 == 0 ? 1 : -1};
}

// The image of a single generator in the reduced algebra.
Form reduce_generator(std::int64_t level, const Generator& g) {
  if (g.index != level)
    return Form::generator(level, g);
  std::vector<Form::Term> terms;
  for (std::int32_t k = 1; k < level; ++k)
    terms.emplace_back(Monomial{{k, g.component, g.conjugated}}, Rational(-1));
  return Form::from_terms(level, std::move(terms));
}

} // namespace

Monomial::Monomial(std::initializer_list<Generator> gens)
    : Monomial(Storage(gens.begin(), gens.end())) {}

Monomial::Monomial(Storage gens) : gens_(std::move(gens)) {
  for (std::size_t i = 1; i < gens_.size(); ++i)
    if (!(gens_[i - 1] < gens_[i]))
      throw InputError("monomial generators must be strictly increasing");
}

std::optional<std::pair<Monomial, int>> Monomial::from_unsorted(Storage gens) {
  int sign = 1;
  // Insertion sort; every adjacent swap flips the sign.
  for (std::size_t i = 1; i < gens.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      if (gens[j - 1] == gens[j])
        return std::nullopt;
      if (gens[j] < gens[j - 1]) {
        std::swap(gens[j], gens[j - 1]);
        sign = -sign;
      } else {
        break;
      }
    }
  }
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (gens[i - 1] == gens[i])
      return std::nullopt;
  return std::pair{Monomial(std::move(gens)), sign};
}

std::int32_t Monomial::max_index() const noexcept {
  std::int32_t m = 0;
  for (const auto& g : gens_)
    m = std::max(m, g.index);
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(
      a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end());
}

Form::Form(std::int64_t level) : level_(Level{level}.value()) {}

Form Form::from_terms(std::int64_t level, std::vector<Term> terms) {
  Form f(level);
  for (const auto& [m, c] : terms)
    for (const auto& g : m.generators())
      validate_generator(g, level);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().first == t.first)
      f.terms_.back().second += t.second;
    else
      f.terms_.push_back(std::move(t));
    if (f.terms_.back().second == 0)
      f.terms_.pop_back();
  }
  return f;
}

Form Form::generator(std::int64_t level, Generator g) {
  return monomial(level, Monomial{g});
}

Form Form::monomial(std::int64_t level, Monomial m, Rational c) {
  std::vector<Term> terms;
  terms.emplace_back(std::move(m), std::move(c));
  return from_terms(level, std::move(terms));
}

Form Form::scalar(std::int64_t level, Rational c) {
  return monomial(level, Monomial{}, std::move(c));
}

bool Form::is_reduced() const noexcept {
  return std::none_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.first.max_index() == level_;
  });
}

std::optional<std::size_t> Form::homogeneous_degree() const noexcept {
  if (terms_.empty())
    return std::nullopt;
  auto d = terms_.front().first.degree();
  for (const auto& t : terms_)
    if (t.first.degree() != d)
      return std::nullopt;
  return d;
}

Form Form::negate_generators() const {
  Form out = *this;
  for (auto& [m, c] : out.terms_)
    if (m.degree() % 2 == 1)
      c = -c;
  return out;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& t : out.terms_)
    t.second = -t.second;
  return out;
}

Form Form::operator+(const Form& other) const {
  require_same_level(level_, other.level_);
  Form out(level_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0)
        out.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return out;
}

Form Form::operator-(const Form& other) const { return *this + (-other); }

Form operator*(const Rational& c, const Form& f) {
  Form out(f.level_);
  if (c == 0)
    return out;
  out.terms_ = f.terms_;
  for (auto& t : out.terms_)
    t.second *= c;
  return out;
}

Permutation::Permutation(std::vector<std::int32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v < 1 || v > static_cast<std::int32_t>(images_.size()) || seen[v])
      throw InputError("permutation is not a bijection of {1.." +
                       std::to_string(images_.size()) + "}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::int64_t n) {
  std::vector<std::int32_t> images(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = static_cast<std::int32_t>(i + 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::int64_t n, std::int32_t i,
                                       std::int32_t j) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw InputError("transposition indices out of range");
  auto p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Form wedge(const Form& alpha, const Form& beta) {
  require_same_level(alpha.level(), beta.level());
  std::vector<Form::Term> out;
  out.reserve(alpha.size() * beta.size());
  for (const auto& [ma, ca] : alpha.terms()) {
    for (const auto& [mb, cb] : beta.terms()) {
      auto merged = wedge_monomials(ma, mb);
      if (!merged)
        continue;
      Rational c = ca * cb;
      if (merged->second < 0)
        c = -c;
      out.emplace_back(std::move(merged->first), std::move(c));
    }
  }
  return Form::from_terms(alpha.level(), std::move(out));
}

Form normalize(const Form& alpha) {
  if (alpha.is_reduced())
    return alpha;
  const auto level = alpha.level();
  std::vector<Form::Term> kept;
  Form expanded(level);
  for (const auto& [m, c] : alpha.terms()) {
    if (m.max_index() < level) {
      kept.emplace_back(m, c);
      continue;
    }
    // Wedging the generators in their sorted order reproduces m with +1.
    Form product = Form::scalar(level, c);
    for (const auto& g : m.generators())
      product = wedge(product, reduce_generator(level, g));
    expanded = expanded + product;
  }
  return Form::from_terms(level, std::move(kept)) + expanded;
}

bool is_zero(const Form& alpha) { return normalize(alpha).empty(); }

bool equivalent(const Form& alpha, const Form& beta) {
  return is_zero(alpha - beta);
}

Rational coefficient(const Form& alpha, const Monomial& m) {
  const auto& terms = alpha.terms();
  auto it = std::lower_bound(
      terms.begin(), terms.end(), m,
      [](const Form::Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms.end() && it->first == m)
    return it->second;
  return 0;
}

Form build_tau_tilde(std::int64_t n) {
  Level{n}.require_hyperkahler();
  std::vector<Form::Term> terms;
  for (std::int32_t i = 1; i <= n; ++i)
    terms.emplace_back(Monomial{Generator::dz(1, i), Generator::dz(2, i),
                                Generator::dzbar(2, i)},
                       Rational(1));
  return normalize(Form::from_terms(n, std::move(terms)));
}

Form pullback(const AutElement& g, const Form& alpha) {
  require_same_level(g.modulus(), alpha.level());
  auto image = is_pure_translation(g) ? alpha : alpha.negate_generators();
  return image.is_reduced() ? image : normalize(image);
}

Form permute(const Permutation& perm, const Form& alpha) {
  require_same_level(perm.size(), alpha.level());
  std::vector<Form::Term> terms;
  terms.reserve(alpha.size());
  for (const auto& [m, c] : alpha.terms()) {
    Monomial::Storage gens = m.generators();
    for (auto& g : gens)
      g.index = perm(g.index);
    auto sorted = Monomial::from_unsorted(std::move(gens));
    Rational coef = sorted->second < 0 ? Rational(-c) : c;
    terms.emplace_back(std::move(sorted->first), std::move(coef));
  }
  return normalize(Form::from_terms(alpha.level(), std::move(terms)));
}

std::string to_string(const Generator& g) {
  std::string s = g.conjugated ? "dzb" : "dz";
  s += std::to_string(static_cast<int>(g.component));
  s += '_';
  s += std::to_string(g.index);
  return s;
}

std::string to_string(const Monomial& m) {
  if (m.degree() == 0)
    return "1";
  std::string s;
  for (const auto& g : m.generators()) {
    if (!s.empty())
      s += '^';
    s += to_string(g);
  }
  return s;
}

std::string to_string(const Form& alpha) {
  if (alpha.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : alpha.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (m.degree() == 0)
      os << mag.str();
    else if (mag == 1)
      os << to_string(m);
    else
      os << mag.str() << '*' << to_string(m);
  }
  return os.str();
}

namespace {

class FormParser {
public:
  FormParser(std::string_view text, std::int64_t level)
      : text_(text), level_(level) {}

  Form parse() {
    skip_space();
    std::vector<Form::Term> terms;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) {
        if (first)
          fail("empty form");
        break;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto term = parse_term();
      if (sign < 0)
        term.second = -term.second;
      terms.push_back(std::move(term));
    }
    return Form::from_terms(level_, std::move(terms));
  }

private:
  Form::Term parse_term() {
    Rational coef = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      auto start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                           peek() == '/'))
        ++pos_;
      coef = parse_rational(text_.substr(start, pos_ - start));
      skip_space();
      if (at_end() || peek() != '*')
        return {Monomial{}, coef};
      ++pos_;
      skip_space();
    }
    Monomial::Storage gens;
    gens.push_back(parse_generator());
    while (true) {
      auto save = pos_;
      skip_space();
      if (at_end() || peek() != '^') {
        pos_ = save;
        break;
      }
      ++pos_;
      skip_space();
      gens.push_back(parse_generator());
    }
    auto sorted = Monomial::from_unsorted(std::move(gens));
    if (!sorted)
      return {Monomial{}, 0};
    if (sorted->second < 0)
      coef = -coef;
    return {std::move(sorted->first), coef};
  }

  Generator parse_generator() {
    if (text_.substr(pos_, 2) != "dz")
      fail("expected generator 'dz'");
    pos_ += 2;
    bool conj = false;
    if (!at_end() && peek() == 'b') {
      conj = true;
      ++pos_;
    }
    if (at_end() || (peek() != '1' && peek() != '2'))
      fail("expected component 1 or 2");
    int component = peek() - '0';
    ++pos_;
    if (at_end() || peek() != '_')
      fail("expected '_'");
    ++pos_;
    auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_ || pos_ - start > 9)
      fail("expected generator index");
    int index = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return {index, static_cast<std::int8_t>(component), conj};
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("malformed form at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view text_;
  std::int64_t level_;
  std::size_t pos_ = 0;
};

} // namespace

Form parse_form(std::string_view text, std::int64_t level) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed == "0")
    return Form(level);
  return FormParser(trimmed, level).parse();
}

} // namespace kummer
