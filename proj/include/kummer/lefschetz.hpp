#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kummer/autgroup.hpp"

namespace kummer {

/// Fixed locus of a nontrivial n-torsion translation a on K_{n-1}(A):
/// p^3 copies of K_{d-1}, with p the order of a and d = n / p.
struct FixedLocusDecomposition {
  std::int64_t p;
  std::int64_t d;
  std::int64_t component_count;
  std::int64_t component_level;
};

struct LefschetzReport {
  std::int64_t n;
  AutElement element;
  std::int64_t p;
  std::int64_t d;
  std::int64_t lefschetz_value;
  std::int64_t euler_value;
  bool cohomologically_trivial_possible;
};

/// n^3 sigma(n), the topological Euler number of K_{n-1}(A). Valid for n >= 1.
std::int64_t euler_kummer(std::int64_t n);

FixedLocusDecomposition fixed_locus(const TorsionElement& a);

/// L(a) = p^3 d^3 sigma(d), checked against n^3 sigma(d).
std::int64_t lefschetz_translation(const TorsionElement& a);

/// Lefschetz number forced on a cohomologically trivial automorphism.
std::int64_t lefschetz_trivial(std::int64_t n);

LefschetzReport lefschetz_report(const TorsionElement& a);

struct ScanOptions {
  /// Accept n = 2 (the K3 case) outside the n >= 3 regime.
  bool allow_k3 = false;
  /// Test hook: replaces L(a) by the Euler number, so every translation looks
  /// cohomologically trivial and the certificate must fail.
  bool inject_fault = false;
  /// Above this level the inversion witness is checked once per sign class
  /// instead of once per element.
  std::int64_t per_element_pullback_limit = 10;
};

/// One report per nontrivial a in (Z/n)^4, in lexicographic order.
std::vector<LefschetzReport> certify_translations(std::int64_t n,
                                                  const ScanOptions& opts = {});

/// Translations grouped by d = gcd(n, a).
struct TranslationClass {
  std::int64_t d;
  std::int64_t p;
  std::int64_t count;
  AutElement representative;
  std::int64_t lefschetz_value;
  std::int64_t euler_value;
};

struct InversionSummary {
  std::int64_t count = 0;
  std::int64_t checked_individually = 0;
  bool tau_nonzero = false;
  bool negates_tau = false;
  std::size_t tau_terms = 0;
};

enum class Verdict { certified, failed };

struct CertificateReport {
  std::int64_t n;
  std::int64_t total_elements;
  std::int64_t euler_value;
  std::vector<TranslationClass> translation_witnesses;
  std::int64_t translation_witness_count = 0;
  InversionSummary inversion_witnesses;
  Verdict verdict = Verdict::certified;
  std::optional<AutElement> counterexample;
  std::string failure_reason;
};

/// Exhaustive check over K = T(n).<iota>: every nontrivial translation has
/// L(a) != chi, every sign -1 element negates the nonzero form tau.
CertificateReport certify_faithful_on_kernel(std::int64_t n,
                                             const ScanOptions& opts = {});

std::string to_string(Verdict v);

} // namespace kummer
