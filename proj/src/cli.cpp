#include "kummer/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kummer/arith.hpp"
#include "kummer/autgroup.hpp"
#include "kummer/error.hpp"
#include "kummer/exterior.hpp"
#include "kummer/lefschetz.hpp"
#include "kummer/symplectic.hpp"

namespace kummer::cli {

namespace {

using json = nlohmann::ordered_json;

const char* const assume_kernel =
    "the kernel of Aut(K_{n-1}(A)) -> O(H^2) is T(n).<iota> with T(n) = (Z/n)^4";
const char* const assume_injective =
    "pullback to H^{2,1}(K_{n-1}(A)) from invariant forms on A(n-1) is injective";
const char* const assume_fixed_locus =
    "the fixed locus of an order-p translation is p^3 copies of K_{d-1}, d = n/p";
const char* const assume_euler =
    "chi_top(K_{n-1}(A)) = n^3 sigma(n) for all n >= 1";
const char* const assume_lefschetz =
    "topological Lefschetz fixed point formula L(a) = chi_top(X^a)";

enum class Format { text, json };

struct Common {
  std::string format = "text";
  bool max_n_unsafe = false;
  bool allow_k3 = false;
};

struct Envelope {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  json assumptions = json::array();
  std::string verdict = "n/a";

  json to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["assumptions"] = assumptions;
    j["verdict"] = verdict;
    return j;
  }
};

std::string scalar_text(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

bool is_flat_array(const json& v) {
  return v.is_array() && std::none_of(v.begin(), v.end(), [](const json& e) {
           return e.is_structured();
         });
}

void render_text(const json& value, std::ostream& out, int indent,
                 const std::string& key) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (value.is_object()) {
    if (!key.empty())
      out << pad << key << ":\n";
    for (const auto& [k, v] : value.items())
      render_text(v, out, key.empty() ? indent : indent + 1, k);
  } else if (value.is_array()) {
    out << pad << key << ":\n";
    for (const auto& v : value) {
      if (!v.is_structured()) {
        out << pad << "  - " << scalar_text(v) << '\n';
      } else if (is_flat_array(v)) {
        // matrix rows
        out << pad << "  - [";
        for (std::size_t i = 0; i < v.size(); ++i)
          out << (i ? ", " : "") << scalar_text(v[i]);
        out << "]\n";
      } else {
        out << pad << "  -\n";
        render_text(v, out, indent + 2, "");
      }
    }
  } else {
    out << pad << key << ": " << scalar_text(value) << '\n';
  }
}

void emit(const Envelope& env, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << env.to_json().dump(2) << '\n';
    return;
  }
  render_text(env.to_json(), out, 0, "");
}

void require_scan_bound(std::int64_t n, const Common& common) {
  if (n > default_max_n && !common.max_n_unsafe)
    throw InputError("n = " + std::to_string(n) + " exceeds the scan bound " +
                     std::to_string(default_max_n) +
                     "; pass --max-n-unsafe to override");
}

json class_json(const TranslationClass& c) {
  json j;
  j["d"] = c.d;
  j["p"] = c.p;
  j["count"] = c.count;
  j["component_count"] = checked_mul(checked_mul(c.p, c.p), c.p);
  j["representative"] = to_string(c.representative);
  j["lefschetz"] = c.lefschetz_value;
  j["euler"] = c.euler_value;
  return j;
}

json rational_vector(const std::vector<Rational>& v) {
  json j = json::array();
  for (const auto& x : v)
    j.push_back(to_string(x));
  return j;
}

Envelope cmd_euler(std::int64_t n) {
  Envelope env{"euler"};
  env.inputs["n"] = n;
  env.result["n"] = n;
  env.result["sigma"] = sigma(n);
  env.result["euler"] = euler_kummer(n);
  env.assumptions.push_back(assume_euler);
  return env;
}

Envelope cmd_lefschetz(std::int64_t n, const std::string& elem,
                       const Common& common, const RunHooks& hooks) {
  Envelope env{"lefschetz"};
  env.inputs["n"] = n;
  env.inputs["a"] = elem;
  Level level{n};
  if (!(common.allow_k3 && n == 2))
    level.require_hyperkahler();
  auto a = parse_translation(elem, n);
  auto locus = fixed_locus(a);
  auto report = lefschetz_report(a);
  if (hooks.inject_fault) {
    report.lefschetz_value = report.euler_value;
    report.cohomologically_trivial_possible = true;
  }
  env.result["element"] = to_string(a);
  env.result["p"] = report.p;
  env.result["d"] = report.d;
  env.result["component_count"] = locus.component_count;
  env.result["component_level"] = locus.component_level;
  env.result["lefschetz"] = report.lefschetz_value;
  env.result["euler"] = report.euler_value;
  env.result["trivial_possible"] = report.cohomologically_trivial_possible;
  env.assumptions.push_back(assume_fixed_locus);
  env.assumptions.push_back(assume_euler);
  env.assumptions.push_back(assume_lefschetz);
  env.verdict = report.cohomologically_trivial_possible ? "failed" : "certified";
  return env;
}

Envelope cmd_kernel_table(std::int64_t n, const Common& common,
                          const RunHooks& hooks) {
  Envelope env{"kernel-table"};
  env.inputs["n"] = n;
  require_scan_bound(n, common);
  ScanOptions opts;
  opts.allow_k3 = common.allow_k3;
  opts.inject_fault = hooks.inject_fault;
  // Translation part of the full certificate, grouped by d.
  auto reports = certify_translations(n, opts);
  std::map<std::int64_t, TranslationClass> classes;
  bool gap = true;
  for (const auto& r : reports) {
    auto [it, inserted] = classes.try_emplace(
        r.d, TranslationClass{r.d, r.p, 0, r.element, r.lefschetz_value,
                              r.euler_value});
    ++it->second.count;
    gap = gap && !r.cohomologically_trivial_possible;
  }
  env.result["euler"] = euler_kummer(n);
  env.result["nontrivial_translations"] = static_cast<std::int64_t>(reports.size());
  env.result["classes"] = json::array();
  for (const auto& [d, c] : classes)
    env.result["classes"].push_back(class_json(c));
  env.assumptions.push_back(assume_fixed_locus);
  env.assumptions.push_back(assume_euler);
  env.assumptions.push_back(assume_lefschetz);
  env.verdict = gap ? "certified" : "failed";
  return env;
}

Envelope cmd_tau(std::int64_t n, const std::optional<std::string>& pull,
                 bool check_invariance, const Common& common) {
  Envelope env{"tau"};
  env.inputs["n"] = n;
  env.inputs["pullback"] = pull ? json(*pull) : json(nullptr);
  env.inputs["check_invariance"] = check_invariance;
  require_scan_bound(n, common);
  const auto tau = build_tau_tilde(n);
  const Monomial witness{Generator::dz(1, 1), Generator::dz(2, 2),
                         Generator::dzbar(2, 2)};
  const bool nonzero = !is_zero(tau);
  bool ok = nonzero;
  env.result["terms"] = static_cast<std::int64_t>(tau.size());
  env.result["nonzero"] = nonzero;
  env.result["witness_monomial"] = to_string(witness);
  env.result["witness_coefficient"] = to_string(coefficient(tau, witness));
  env.result["form"] = to_string(tau);
  if (pull) {
    const auto g = parse_element(*pull, n);
    const auto image = pullback(g, tau);
    const auto expected = g.sign == Sign::minus ? -tau : tau;
    json p;
    p["element"] = to_string(g);
    p["negates"] = image == -tau;
    p["fixes"] = image == tau;
    p["form"] = to_string(image);
    ok = ok && image == expected;
    env.result["pullback"] = p;
  } else {
    env.result["pullback"] = nullptr;
  }
  if (check_invariance) {
    json inv;
    std::int64_t failures = 0;
    for (std::int32_t i = 1; i < n; ++i)
      if (permute(Permutation::transposition(n, i, i + 1), tau) != tau)
        ++failures;
    inv["transpositions_checked"] = n - 1;
    inv["invariant"] = failures == 0;
    ok = ok && failures == 0;
    env.result["invariance"] = inv;
  } else {
    env.result["invariance"] = nullptr;
  }
  env.assumptions.push_back(assume_injective);
  env.verdict = ok ? "certified" : "failed";
  return env;
}

Envelope cmd_certify(std::int64_t n, const Common& common,
                     const RunHooks& hooks) {
  Envelope env{"certify"};
  env.inputs["n"] = n;
  require_scan_bound(n, common);
  ScanOptions opts;
  opts.allow_k3 = common.allow_k3;
  opts.inject_fault = hooks.inject_fault;
  const auto cert = certify_faithful_on_kernel(n, opts);
  env.result["total_elements"] = cert.total_elements;
  env.result["euler"] = cert.euler_value;
  env.result["translation_witness_count"] = cert.translation_witness_count;
  env.result["translation_classes"] = json::array();
  for (const auto& c : cert.translation_witnesses)
    env.result["translation_classes"].push_back(class_json(c));
  json inv;
  inv["count"] = cert.inversion_witnesses.count;
  inv["checked_individually"] = cert.inversion_witnesses.checked_individually;
  inv["tau_terms"] = static_cast<std::int64_t>(cert.inversion_witnesses.tau_terms);
  inv["tau_nonzero"] = cert.inversion_witnesses.tau_nonzero;
  inv["negates_tau"] = cert.inversion_witnesses.negates_tau;
  env.result["inversion_witnesses"] = inv;
  env.result["counterexample"] =
      cert.counterexample ? json(to_string(*cert.counterexample)) : json(nullptr);
  env.result["failure_reason"] =
      cert.failure_reason.empty() ? json(nullptr) : json(cert.failure_reason);
  env.assumptions.push_back(assume_kernel);
  env.assumptions.push_back(assume_injective);
  env.assumptions.push_back(assume_fixed_locus);
  env.assumptions.push_back(assume_euler);
  env.assumptions.push_back(assume_lefschetz);
  env.verdict = to_string(cert.verdict);
  return env;
}

Envelope cmd_symplectic(const std::string& path, std::int64_t max_order) {
  Envelope env{"symplectic"};
  env.inputs["matrix"] = path;
  env.inputs["max_order"] = max_order;
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open matrix file '" + path + "'");
  auto input = parse_matrix_input(in);
  if (!input.h.is_square() || input.h.rows() % 2 != 0)
    throw InputError("matrix must be square of even size");
  auto space = input.form ? SymplecticSpace(*input.form)
                          : SymplecticSpace::standard(input.h.rows() / 2);
  auto report = check_fixed_locus_symplectic(input.h, space, max_order);
  env.result["dimension"] = static_cast<std::int64_t>(input.h.rows());
  env.result["custom_form"] = input.form.has_value();
  env.result["order"] = report.order;
  env.result["fixed_dimension"] = static_cast<std::int64_t>(report.fixed_dimension);
  env.result["basis"] = json::array();
  for (const auto& v : report.basis)
    env.result["basis"].push_back(rational_vector(v));
  env.result["gram"] = json::array();
  for (std::size_t i = 0; i < report.gram.rows(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < report.gram.cols(); ++j)
      row.push_back(report.gram(i, j));
    env.result["gram"].push_back(rational_vector(row));
  }
  env.result["even"] = report.even;
  env.result["nondegenerate"] = report.nondegenerate;
  env.result["orthogonal"] = report.orthogonal;
  env.verdict = report.even && report.nondegenerate && report.orthogonal
                    ? "certified"
                    : "failed";
  return env;
}

void add_common(CLI::App* sub, Common& common, bool scans, bool k3) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  if (scans)
    sub->add_flag("--max-n-unsafe", common.max_n_unsafe,
                  "Lift the n <= 50 bound on exhaustive scans");
  if (k3)
    sub->add_flag("--allow-k3", common.allow_k3,
                  "Accept n = 2 (K3 surface) as a sanity case");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const RunHooks& hooks) {
  CLI::App app{"Certificates for the action of T(n).<iota> on the cohomology "
               "of generalized Kummer manifolds",
               "kummer-cert"};
  app.require_subcommand(1);

  Common common;
  std::int64_t n = 0;
  std::string elem, matrix_path;
  std::optional<std::string> pull;
  bool check_invariance = false;
  std::int64_t max_order = default_max_order;

  auto* euler = app.add_subcommand("euler", "Euler number n^3 sigma(n)");
  euler->add_option("--n", n, "Level n >= 1")->required();
  add_common(euler, common, false, false);

  auto* lef = app.add_subcommand("lefschetz", "Lefschetz number of a translation");
  lef->add_option("--n", n, "Level n >= 3")->required();
  lef->add_option("--a", elem, "Translation a1,a2,a3,a4")->required();
  add_common(lef, common, true, true);

  auto* table = app.add_subcommand("kernel-table",
                                   "L(a) grouped by d over nontrivial a");
  table->add_option("--n", n, "Level n >= 3")->required();
  add_common(table, common, true, true);

  auto* tau = app.add_subcommand("tau", "Build the invariant (2,1)-form");
  tau->add_option("--n", n, "Level n >= 3")->required();
  tau->add_option("--pullback", pull, "Element a1,a2,a3,a4[,iota]");
  tau->add_flag("--check-invariance", check_invariance,
                "Check invariance under adjacent transpositions");
  add_common(tau, common, true, false);

  auto* cert = app.add_subcommand("certify", "Exhaustive kernel certificate");
  cert->add_option("--n", n, "Level n >= 3")->required();
  add_common(cert, common, true, true);

  auto* symp = app.add_subcommand("symplectic",
                                  "Fixed subspace of a symplectic matrix");
  symp->add_option("--matrix", matrix_path, "Matrix file")->required();
  symp->add_option("--max-order", max_order, "Largest order searched")
      ->check(CLI::PositiveNumber);
  add_common(symp, common, false, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  const auto format = common.format == "json" ? Format::json : Format::text;
  try {
    Envelope env;
    if (*euler)
      env = cmd_euler(n);
    else if (*lef)
      env = cmd_lefschetz(n, elem, common, hooks);
    else if (*table)
      env = cmd_kernel_table(n, common, hooks);
    else if (*tau)
      env = cmd_tau(n, pull, check_invariance, common);
    else if (*cert)
      env = cmd_certify(n, common, hooks);
    else
      env = cmd_symplectic(matrix_path, max_order);
    emit(env, format, out);
    return env.verdict == "failed" ? exit_failed : exit_ok;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}

} // namespace kummer::cli
