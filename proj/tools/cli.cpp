#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>

#include "sgag/errors.hpp"
#include "sgag/fixtures.hpp"
#include "sgag/herzog.hpp"
#include "sgag/ideal.hpp"
#include "sgag/report.hpp"
#include "sgag/scan.hpp"
#include "sgag/semigroup.hpp"

namespace sgag::cli {

namespace {

std::string join(const std::vector<Value>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

NumericalSemigroup parse_semigroup(const std::string& text) {
  return NumericalSemigroup::from_generators(parse_generators(text));
}

unsigned default_workers() {
  if (const char* env = std::getenv("SGAG_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int cmd_info(const std::string& gens, bool json, std::ostream& out) {
  const auto h = parse_semigroup(gens);
  if (json) {
    Json j;
    j["semigroup"] = {
        {"generators", h.minimal_generators()},
        {"frobenius", h.frobenius()},
        {"conductor", h.conductor()},
        {"genus", h.genus()},
        {"gaps", h.gaps()},
        {"pseudo_frobenius", h.pseudo_frobenius()},
        {"type", h.type()},
        {"multiplicity", h.multiplicity()},
        {"embedding_dimension", h.embedding_dimension()},
        {"apery", h.apery()},
        {"elements", to_json(h.elements())},
    };
    j["symmetric"] = is_symmetric(h);
    j["almost_symmetric"] = is_almost_symmetric(h);
    j["dvr"] = h.is_dvr();
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "semigroup " << h.to_string() << "\n";
  if (h.is_dvr()) {
    out << "H = N: the semigroup ring is k[[t]], a discrete valuation ring\n";
  }
  out << "multiplicity e=" << h.multiplicity() << ", embedding dimension v="
      << h.embedding_dimension() << "\n";
  out << "frobenius f=" << h.frobenius() << ", conductor c=" << h.conductor()
      << ", genus=" << h.genus() << "\n";
  out << "gaps: " << join(h.gaps()) << "\n";
  out << "pseudo-frobenius: " << join(h.pseudo_frobenius()) << " (type r=" << h.type() << ")\n";
  out << "apery(" << h.multiplicity() << "): " << join(h.apery()) << "\n";
  out << "symmetric: " << (is_symmetric(h) ? "yes" : "no")
      << ", almost symmetric: " << (is_almost_symmetric(h) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_classify(const std::string& gens, bool json, std::ostream& out) {
  const auto report = classify(parse_semigroup(gens));
  if (json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  return kOk;
}

std::string monomial(const char* var, Value exp) {
  if (exp == 1) return var;
  return std::string(var) + "^" + std::to_string(exp);
}

int cmd_herzog(const std::string& gens, bool json, std::ostream& out) {
  const auto h = parse_semigroup(gens);
  const auto hd = herzog_matrix(h);
  const auto cf = closed_form_invariants(hd, h);
  const bool ag = ag_by_matrix(hd);
  const auto verdict = classify(h).verdict;
  if (json) {
    Json j;
    j["generators"] = h.minimal_generators();
    j["matrix"] = {{hd.alpha, hd.beta, hd.gamma}, {hd.beta_p, hd.gamma_p, hd.alpha_p}};
    j["exponents"] = {{"alpha", hd.alpha},     {"beta", hd.beta},     {"gamma", hd.gamma},
                      {"alpha_p", hd.alpha_p}, {"beta_p", hd.beta_p}, {"gamma_p", hd.gamma_p}};
    j["degrees"] = {{"d1", hd.d1}, {"d2", hd.d2}, {"d3", hd.d3}};
    j["ell"] = hd.ell;
    j["n"] = hd.n;
    j["b"] = hd.b();
    j["c"] = cf.c;
    j["ell_I_over_Q"] = cf.ell_i_over_q;
    j["e1"] = cf.e1;
    j["ag_by_matrix"] = ag;
    j["verdict"] = to_string(verdict);
    out << j.dump(2) << "\n";
    return kOk;
  }
  const std::string top[3] = {monomial("X", hd.alpha), monomial("Y", hd.beta),
                              monomial("Z", hd.gamma)};
  const std::string bottom[3] = {monomial("Y", hd.beta_p), monomial("Z", hd.gamma_p),
                                 monomial("X", hd.alpha_p)};
  std::size_t width = 0;
  for (const auto& s : top) width = std::max(width, s.size());
  for (const auto& s : bottom) width = std::max(width, s.size());
  for (const auto* row : {top, bottom}) {
    out << "( ";
    for (int k = 0; k < 3; ++k) out << std::left << std::setw(static_cast<int>(width) + 1) << row[k];
    out << ")\n";
  }
  out << "d1=" << hd.d1 << " d2=" << hd.d2 << " d3=" << hd.d3 << "\n";
  out << "l=" << hd.ell << " n=" << hd.n << " b=" << hd.b() << " c=" << cf.c
      << " l(I/Q)=" << cf.ell_i_over_q << " e1=" << cf.e1 << "\n";
  out << "ag_by_matrix=" << (ag ? "true" : "false") << " verdict=" << to_string(verdict) << "\n";
  return kOk;
}

int cmd_hilbert(const std::string& gens, const std::string& ideal_gens, std::int64_t n_max,
                std::ostream& out) {
  const auto h = parse_semigroup(gens);
  const auto ideal = RelativeIdeal::generated_by(h, parse_generators(ideal_gens));
  require_m_primary(ideal);
  if (n_max < 0) throw DomainError("--n-max must be nonnegative");
  const auto hd = hilbert_coefficients(ideal);

  std::vector<std::int64_t> exact, poly;
  // Agreement is permanent from n = red-1 on, so looking that far suffices.
  const std::int64_t horizon = std::max<std::int64_t>(n_max, hd.red);
  for (std::int64_t n = 0; n <= horizon; ++n) {
    exact.push_back(hilbert_function(ideal, n));
    poly.push_back(hd.e0 * (n + 1) - hd.e1);
  }
  std::int64_t onset = horizon;
  while (onset > 0 && exact[onset - 1] == poly[onset - 1]) --onset;

  out << "n,exact,polynomial,agree\n";
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const char* agree = exact[n] != poly[n] ? "no" : (n == onset ? "onset" : "yes");
    out << n << "," << exact[n] << "," << poly[n] << "," << agree << "\n";
  }
  return kOk;
}

int cmd_scan(ScanConfig config, const std::string& out_path, const std::string& format,
             std::ostream& out, std::ostream& err) {
  const auto result = run_scan(config);
  const std::string text =
      format == "csv" ? scan_to_csv(result) : scan_to_json(config, result).dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kIoError;
    }
    file << text;
    file.flush();
    if (!file) {
      err << "error: failed writing " << out_path << "\n";
      return kIoError;
    }
  }
  err << result.semigroups << " semigroups, " << result.counterexamples.size()
      << " counterexamples\n";
  return result.clean() ? kOk : kMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of numerical semigroup rings: canonical ideals, Hilbert "
               "coefficients, Gorenstein and almost Gorenstein tests"};
  app.name("sgag");
  app.require_subcommand(1);

  bool json = false;
  std::string gens;
  std::string ideal_gens;
  std::int64_t n_max = 5;
  ScanConfig scan;
  scan.workers = default_workers();
  std::string checks = "all";
  std::string out_path;
  std::string format = "json";

  auto* info = app.add_subcommand("info", "Print the classical invariants of H");
  info->add_option("generators", gens, "Generators, e.g. 3,7,8")->required();
  info->add_flag("--json", json, "Emit JSON");

  auto* cls = app.add_subcommand("classify", "Gorenstein / almost Gorenstein classification");
  cls->add_option("generators", gens, "Generators, e.g. 3,4,5")->required();
  cls->add_flag("--json", json, "Emit JSON");

  auto* herzog = app.add_subcommand("herzog", "Herzog matrix of a non-symmetric 3-generated H");
  herzog->add_option("generators", gens, "Three generators")->required();
  herzog->add_flag("--json", json, "Emit JSON");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table of a monomial ideal");
  hilbert->add_option("generators", gens, "Generators of H")->required();
  hilbert->add_option("--ideal", ideal_gens, "Generators (exponents) of the ideal")->required();
  hilbert->add_option("--n-max", n_max, "Last row index")->capture_default_str();

  auto* scan_cmd = app.add_subcommand("scan", "Check theorem laws over all H up to a genus");
  scan_cmd->add_option("--genus-max", scan.genus_max, "Largest genus")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  scan_cmd->add_option("--a3-max", scan.a3_max,
                       "Also scan non-symmetric <a1,a2,a3> with a3 up to this bound");
  scan_cmd->add_option("--checks", checks, "Suites: all or a comma list")->capture_default_str();
  scan_cmd->add_option("--workers", scan.workers, "Worker threads (default $SGAG_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", out_path, "Report path (default stdout)");
  scan_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the built-in table of worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*info) return cmd_info(gens, json, out);
    if (*cls) return cmd_classify(gens, json, out);
    if (*herzog) return cmd_herzog(gens, json, out);
    if (*hilbert) return cmd_hilbert(gens, ideal_gens, n_max, out);
    if (*scan_cmd) {
      scan.checks = parse_checks(checks);
      return cmd_scan(scan, out_path, format, out, err);
    }
    if (*verify) return run_fixture(example_fixture(), out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ContainmentError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace sgag::cli
