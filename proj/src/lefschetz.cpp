#include "kummer/lefschetz.hpp"

#include <map>
#include <stdexcept>

#include "kummer/arith.hpp"
#include "kummer/exterior.hpp"

namespace kummer {

namespace {

std::int64_t cube(std::int64_t x) { return checked_mul(checked_mul(x, x), x); }

void require_nontrivial(const TorsionElement& a) {
  if (a.is_zero())
    throw InputError("translation must be nontrivial (order p != 1)");
}

void require_scan_level(std::int64_t n, const ScanOptions& opts) {
  Level level{n};
  if (!(opts.allow_k3 && n == 2))
    level.require_hyperkahler();
}

} // namespace

std::int64_t euler_kummer(std::int64_t n) {
  (void)Level{n};
  return checked_mul(cube(n), sigma(n));
}

FixedLocusDecomposition fixed_locus(const TorsionElement& a) {
  require_nontrivial(a);
  const auto p = torsion_order(a);
  const auto d = torsion_codegree(a);
  return {p, d, cube(p), d};
}

std::int64_t lefschetz_translation(const TorsionElement& a) {
  const auto locus = fixed_locus(a);
  const auto value =
      checked_mul(locus.component_count, euler_kummer(locus.component_level));
  if (value != checked_mul(cube(a.modulus()), sigma(locus.d)))
    throw std::logic_error("p^3 d^3 sigma(d) != n^3 sigma(d)");
  return value;
}

std::int64_t lefschetz_trivial(std::int64_t n) { return euler_kummer(n); }

LefschetzReport lefschetz_report(const TorsionElement& a) {
  const auto n = a.modulus();
  const auto locus = fixed_locus(a);
  const auto lef = lefschetz_translation(a);
  const auto chi = euler_kummer(n);
  return {n,   {a, Sign::plus}, locus.p, locus.d,
          lef, chi,             lef == chi};
}

std::vector<LefschetzReport> certify_translations(std::int64_t n,
                                                  const ScanOptions& opts) {
  require_scan_level(n, opts);
  std::vector<LefschetzReport> reports;
  const auto translations = kernel_group_size(n) / 2;
  reports.reserve(static_cast<std::size_t>(translations - 1));
  for (std::int64_t i = 1; i < translations; ++i) {
    auto report = lefschetz_report(kernel_element_at(n, i).translation);
    if (opts.inject_fault) {
      report.lefschetz_value = report.euler_value;
      report.cohomologically_trivial_possible = true;
    }
    reports.push_back(report);
  }
  return reports;
}

CertificateReport certify_faithful_on_kernel(std::int64_t n,
                                             const ScanOptions& opts) {
  require_scan_level(n, opts);
  CertificateReport cert{n, kernel_group_size(n), euler_kummer(n), {}, 0, {},
                         Verdict::certified, std::nullopt, {}};
  auto fail = [&](const AutElement& g, std::string why) {
    if (cert.verdict == Verdict::failed)
      return;
    cert.verdict = Verdict::failed;
    cert.counterexample = g;
    cert.failure_reason = std::move(why);
  };

  // Translations: L(a) < chi. Classes are keyed by d so output stays small.
  std::map<std::int64_t, TranslationClass> classes;
  const auto translations = cert.total_elements / 2;
  for (std::int64_t i = 1; i < translations; ++i) {
    const auto g = kernel_element_at(n, i);
    const auto d = torsion_codegree(g.translation);
    auto lef = lefschetz_translation(g.translation);
    if (opts.inject_fault)
      lef = cert.euler_value;
    auto [it, inserted] = classes.try_emplace(
        d, TranslationClass{d, n / d, 0, g, lef, cert.euler_value});
    auto& cls = it->second;
    if (!inserted && cls.lefschetz_value != lef)
      fail(g, "Lefschetz number is not constant on its class");
    ++cls.count;
    if (lef < cert.euler_value)
      ++cert.translation_witness_count;
    else
      fail(g, "L(a) = " + std::to_string(lef) + " is not below chi = " +
                  std::to_string(cert.euler_value));
  }
  for (auto& [d, cls] : classes)
    cert.translation_witnesses.push_back(cls);

  // Inversion-type elements: pullback(g, tau) = -tau with tau != 0. For n = 2
  // tau is undefined (needs n - 1 >= 2), so those elements get no witness.
  auto& inv = cert.inversion_witnesses;
  inv.count = translations;
  if (n < 3) {
    fail(kernel_element_at(n, translations),
         "no form witness below n = 3");
    return cert;
  }
  const Form tau = build_tau_tilde(n);
  inv.tau_terms = tau.size();
  inv.tau_nonzero = !is_zero(tau);
  if (!inv.tau_nonzero)
    fail(kernel_element_at(n, translations), "tau reduces to zero");
  const Form minus_tau = -tau;
  auto negates = [&](const AutElement& g) {
    return pullback(g, tau) == minus_tau;
  };
  inv.negates_tau = true;
  if (n <= opts.per_element_pullback_limit) {
    for (std::int64_t i = translations; i < cert.total_elements; ++i) {
      const auto g = kernel_element_at(n, i);
      ++inv.checked_individually;
      if (!negates(g)) {
        inv.negates_tau = false;
        fail(g, "pullback does not negate tau");
      }
    }
  } else {
    // The induced action on invariant forms factors through the sign.
    const auto g = kernel_element_at(n, translations);
    ++inv.checked_individually;
    if (!negates(g)) {
      inv.negates_tau = false;
      fail(g, "pullback does not negate tau");
    }
  }
  return cert;
}

std::string to_string(Verdict v) {
  return v == Verdict::certified ? "certified" : "failed";
}

} // namespace kummer
