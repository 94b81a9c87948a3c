#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "corpus.hpp"
#include "gaussfano/errors.hpp"
#include "gaussfano/fano.hpp"
#include "gaussfano/gauss.hpp"
#include "gaussfano/kernels.hpp"
#include "gaussfano/nbundle.hpp"

namespace gaussfano::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad input: exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VarietyFile {
  Ideal ideal;
  std::optional<int> dim;
};

Json strings(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json degrees(const SplittingType& t) {
  Json out = Json::array();
  for (int a : t.degrees) out.push_back(a);
  return out;
}

Json matrix_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json read_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + " is not valid JSON: " + e.what());
  }
}

VarietyFile load_variety(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const Json doc = read_json(text, path);
  if (!doc.is_object() || !doc.contains("variables") || !doc.contains("ideal"))
    throw InputError(path + ": expected an object with \"variables\" and \"ideal\"");
  const Json& vars = doc["variables"];
  const Json& gens = doc["ideal"];
  if (!vars.is_array() || !gens.is_array()) throw InputError(path + ": \"variables\" and \"ideal\" must be arrays");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw InputError(path + ": variable names must be strings");
    const std::string name = v.get<std::string>();
    if (std::find(names.begin(), names.end(), name) != names.end()) throw InputError(path + ": duplicate variable " + name);
    names.push_back(name);
  }
  if (names.size() < 2) throw InputError(path + ": need at least two variables");
  std::vector<std::string> texts;
  for (const auto& g : gens) {
    if (!g.is_string()) throw InputError(path + ": generators must be strings");
    texts.push_back(g.get<std::string>());
  }
  VarietyFile file{parse_ideal(texts, PolyRing(names)), std::nullopt};
  for (const auto& f : file.ideal.generators())
    if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f.to_string());
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer()) throw InputError(path + ": \"dim\" must be an integer");
    file.dim = doc["dim"].get<int>();
    const int derived = ideal_dimension(file.ideal) - 1;
    if (*file.dim != derived)
      throw InputError(path + ": declared dim " + std::to_string(*file.dim) + " but the ideal has dimension " +
                       std::to_string(derived));
  }
  return file;
}

Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("line entries must be integers or \"p/q\" strings");
}

LineRep parse_line(const std::string& text, std::size_t n) {
  const Json doc = read_json(text, "--line");
  const bool points = doc.is_object() && doc.contains("points");
  const bool matrix = doc.is_object() && doc.contains("matrix");
  if (points == matrix) throw InputError("--line needs exactly one of \"points\" or \"matrix\"");
  const Json& rows = points ? doc["points"] : doc["matrix"];
  if (!rows.is_array() || rows.size() != 2) throw InputError("--line needs two rows");
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n + 1)
      throw InputError("--line rows must have " + std::to_string(n + 1) + " entries");
    std::vector<Rational> v;
    for (const auto& e : row) v.push_back(json_rational(e));
    r.push_back(std::move(v));
  }
  return points ? line_through(r[0], r[1]) : LineRep::from_rows(r);
}

Json fano_json(const FanoChartIdeal& f) {
  Json j;
  j["chart"] = f.chart.label();
  j["coordinates"] = f.chart.ring().names();
  j["generators"] = strings(f.ideal.generators());
  j["groebner_basis"] = strings(f.basis.basis());
  j["dimension"] = ideal_dimension(f.ideal);
  return j;
}

int cmd_fano(const VarietyFile& file, const std::string& chart_label, std::ostream& out) {
  const std::size_t n = file.ideal.ring().nvars() - 1;
  Json report;
  if (!chart_label.empty()) {
    report = fano_json(fano_chart_ideal(file.ideal, Chart::from_label(n, chart_label)));
  } else {
    Json all = Json::array();
    for (const auto& f : kernels::fano_all_charts(file.ideal)) all.push_back(fano_json(f));
    report["charts"] = all;
  }
  out << report.dump(2) << "\n";
  return kOk;
}

int cmd_line_report(const VarietyFile& file, const std::string& line_text, std::ostream& out) {
  const std::size_t n = file.ideal.ring().nvars() - 1;
  const LineRep line = parse_line(line_text, n);
  Json report;
  report["line"] = matrix_json(line.matrix());
  const bool on = line_on_variety(file.ideal, line);
  report["on_variety"] = on;
  if (!on) {
    out << report.dump(2) << "\n";
    return kLineNotOnVariety;
  }
  const std::optional<std::size_t> dim = file.dim ? std::optional<std::size_t>(*file.dim) : std::nullopt;
  const std::size_t codim = dim ? n - *dim : derived_codim(file.ideal);
  report["dim_x"] = n - codim;
  const std::size_t rank = generic_jacobian_rank(file.ideal, line);
  const bool singular = rank < codim;
  report["in_singular_locus"] = singular;
  if (singular) {
    report["gauss_constant"] = nullptr;
    report["tangent_hyperplanes"] = nullptr;
    report["splitting_type"] = nullptr;
    report["consistent"] = nullptr;
    out << report.dump(2) << "\n";
    return kOk;
  }
  const TheoremCheck check = theorem_check(file.ideal, line, n - codim);
  report["gauss_constant"] = check.gauss.constant;
  report["generic_rank"] = check.gauss.generic_rank;
  report["coefficient_span_dim"] = check.gauss.coefficient_span_dim;
  report["tangent_hyperplanes"] = check.gauss.common_conormal ? strings(*check.gauss.common_conormal) : Json(nullptr);
  report["splitting_type"] = degrees(check.splitting);
  report["normal_bundle"] = check.splitting.to_string();
  report["consistent"] = check.consistent;
  out << report.dump(2) << "\n";
  return kOk;
}

Json certificate_json(const NonReducednessCertificate& c) {
  Json j;
  j["witness"] = c.witness.to_string();
  j["power"] = c.power;
  j["quotient_generators"] = strings(c.quotient_generators);
  Json flags = Json::array();
  for (bool b : c.quotient_in_radical) flags.push_back(b);
  j["quotient_in_radical"] = flags;
  return j;
}

int cmd_certify(const VarietyFile& file, const std::string& chart_label, const std::string& witness, unsigned kmax,
                std::ostream& out, std::ostream& err) {
  const std::size_t n = file.ideal.ring().nvars() - 1;
  if (chart_label.empty()) throw InputError("certify-nonreduced needs --chart");
  if (kmax < 2) throw InputError("--kmax must be at least 2");
  const FanoChartIdeal f = fano_chart_ideal(file.ideal, Chart::from_label(n, chart_label));
  std::vector<Polynomial> candidates;
  if (!witness.empty())
    candidates.push_back(parse_poly(witness, f.chart.ring()));
  else
    candidates = candidate_witnesses(f);

  Json report;
  report["chart"] = f.chart.label();
  Json failures = Json::array();
  for (const auto& g : candidates) {
    const CertificateOutcome outcome = nonreduced_certificate(f, g, kmax);
    if (const auto* cert = std::get_if<NonReducednessCertificate>(&outcome)) {
      if (!verify_certificate(f.ideal, *cert)) {
        err << "error: the independent checker rejected the certificate for " << g.to_string() << "\n";
        return kFailure;
      }
      report["certified"] = true;
      report["certificate"] = certificate_json(*cert);
      report["verified"] = true;
      out << report.dump(2) << "\n";
      return kOk;
    }
    const auto& failure = std::get<CertificateFailure>(outcome);
    Json j;
    j["witness"] = g.to_string();
    j["failure"] = std::string(to_string(failure.kind));
    j["detail"] = failure.detail;
    failures.push_back(j);
  }
  report["certified"] = false;
  report["error"] = "NoCertificate";
  report["attempts"] = failures;
  out << report.dump(2) << "\n";
  err << "no certificate found among " << candidates.size() << " witness candidate(s)\n";
  return kNoCertificate;
}

int cmd_singular(const VarietyFile& file, int codim_flag, std::ostream& out) {
  const std::size_t n = file.ideal.ring().nvars() - 1;
  std::size_t codim;
  if (codim_flag > 0)
    codim = static_cast<std::size_t>(codim_flag);
  else if (file.dim)
    codim = n - static_cast<std::size_t>(*file.dim);
  else
    codim = derived_codim(file.ideal);
  const Ideal sing = singular_scheme_ideal(file.ideal, codim);
  Json report;
  report["codim"] = codim;
  report["generators"] = strings(sing.generators());
  report["groebner_basis"] = strings(buchberger(sing).basis());
  report["projective_dimension"] = ideal_dimension(sing) - 1;
  out << report.dump(2) << "\n";
  return kOk;
}

int cmd_corpus(const corpus::Options& options, std::ostream& out, std::ostream& err) {
  const auto results = corpus::run(options);
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json j;
    j["criterion"] = r.criterion;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["seconds"] = r.seconds;
    j["detail"] = r.detail;
    checks.push_back(j);
    all = all && r.passed;
    err << (r.passed ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name << " (" << r.seconds << " s)\n";
  }
  Json report;
  report["checks"] = checks;
  report["passed"] = all;
  out << report.dump(2) << "\n";
  return all ? kOk : kFailure;
}

std::optional<std::uint64_t> env_budget() {
  const char* text = std::getenv("GAUSSFANO_BUDGET");
  if (!text || !*text) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == std::string(text).size() && v > 0) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError(std::string("GAUSSFANO_BUDGET must be a positive integer, got '") + text + "'");
}

int fail(std::ostream& out, std::ostream& err, int code, const std::string& kind, const std::string& message) {
  Json report;
  report["error"] = kind;
  report["message"] = message;
  out << report.dump(2) << "\n";
  err << "error: " << message << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fano schemes of lines, Gauss maps and normal bundles with exact arithmetic", "gaussfano"};
  app.require_subcommand(1);
  std::string input, chart, line, witness;
  unsigned kmax = 4;
  std::uint64_t budget = 0;
  int codim = 0;
  bool perturb = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Gröbner step budget")->check(CLI::PositiveNumber);
    sub->add_flag("--json", "JSON output (the default)");
  };
  auto* fano = app.add_subcommand("fano", "Chart ideals of the Fano scheme of lines");
  fano->add_option("--input", input, "variety file")->required();
  fano->add_option("--chart", chart, "identity-column pair I,J (all charts when omitted)");
  add_common(fano);
  auto* report = app.add_subcommand("line-report", "Gauss map and normal bundle along a line");
  report->add_option("--input", input, "variety file")->required();
  report->add_option("--line", line, "line as JSON {\"points\": ...} or {\"matrix\": ...}")->required();
  add_common(report);
  auto* certify = app.add_subcommand("certify-nonreduced", "Non-reducedness certificate for a chart");
  certify->add_option("--input", input, "variety file")->required();
  certify->add_option("--chart", chart, "identity-column pair I,J")->required();
  certify->add_option("--witness", witness, "witness polynomial in the chart coordinates");
  certify->add_option("--kmax", kmax, "largest power tried");
  add_common(certify);
  auto* singular = app.add_subcommand("singular", "Singular scheme ideal");
  singular->add_option("--input", input, "variety file")->required();
  singular->add_option("--codim", codim, "codimension (derived when omitted)");
  add_common(singular);
  auto* corpus_cmd = app.add_subcommand("corpus", "Run the reference corpus");
  corpus_cmd->add_flag("--perturb", perturb, "use a wrong expected ideal (harness self-test)");
  add_common(corpus_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(out, err, kInputError, "UsageError", e.what());
  }

  try {
    const std::uint64_t saved = Budget::standard().max_steps;
    std::optional<std::uint64_t> steps = env_budget();
    if (budget > 0) steps = budget;
    if (steps) Budget::set_standard(*steps);
    struct Restore {
      std::uint64_t steps;
      ~Restore() { Budget::set_standard(steps); }
    } restore{saved};

    if (corpus_cmd->parsed()) return cmd_corpus({steps, perturb}, out, err);
    const VarietyFile file = load_variety(input);
    if (fano->parsed()) return cmd_fano(file, chart, out);
    if (report->parsed()) return cmd_line_report(file, line, out);
    if (certify->parsed()) return cmd_certify(file, chart, witness, kmax, out, err);
    return cmd_singular(file, codim, out);
  } catch (const InputError& e) {
    return fail(out, err, kInputError, "InvalidInput", e.what());
  } catch (const Error& e) {
    const std::string kind(error_code_name(e.code()));
    switch (e.code()) {
      case ErrorCode::ComputationBudgetExceeded:
        return fail(out, err, kBudgetExceeded, kind, e.what());
      case ErrorCode::LineNotOnVariety:
        return fail(out, err, kLineNotOnVariety, kind, e.what());
      case ErrorCode::VerificationWindowMismatch:
      case ErrorCode::NonzeroRemainder:
        return fail(out, err, kFailure, kind, e.what());
      default:
        return fail(out, err, kInputError, kind, e.what());
    }
  }
}

}  // namespace gaussfano::cli
