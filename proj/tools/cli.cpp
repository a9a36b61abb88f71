#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"

namespace nonneg::cli {
namespace {

struct RunConfig {
  std::string input;
  std::string second_input;
  std::string backend = "float";
  Tolerances tol;
  std::uint64_t seed = 0;
  bool json = false;
  std::string report_path;

  // generator arguments
  std::size_t dim = 0;
  std::vector<double> eigenvalues;
  std::size_t multiplicity = 0;
  std::string out_path;
};

template <Scalar T>
std::string format_vector(const Vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_traits<T>::to_string(v[i]);
  return s + "]";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + path + "'");
}

void check_tolerances(const RunConfig& c) {
  for (double t : {c.tol.rank_tol, c.tol.cluster_tol, c.tol.feas_tol, c.tol.verify_tol})
    if (!(t > 0.0) || !std::isfinite(t)) throw UsageError("tolerances must be positive and finite");
  if (c.backend != "float" && c.backend != "exact") throw UsageError("backend must be 'float' or 'exact'");
}

void emit_json(const RunConfig& c, const Json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (!c.report_path.empty()) write_text_file(c.report_path, text);
  if (c.json) out << text;
}

void render_analysis(const AnalysisReport& r, std::ostream& out) {
  out << "matrix dimension: " << r.matrix_dim << "\n";
  out << "distinct eigenvalues: " << r.distinct_eigenvalue_count << "\n";
  for (std::size_t i = 0; i < r.per_eigenspace.size(); ++i) {
    const auto& e = r.per_eigenspace[i];
    out << "eigenspace " << i + 1 << ": lambda = " << scalar_traits<double>::to_string(e.cluster.representative_value)
        << ", multiplicity " << e.cluster.multiplicity << "\n";
    if (e.verdict.has_nonneg())
      out << "  HAS_NONNEG witness (nonnegative eigenvector, sum 1): " << format_vector(e.verdict.witness().x) << "\n";
    else
      out << "  NO_NONNEG certificate (positive, orthogonal to the eigenspace): "
          << format_vector(e.verdict.certificate().v) << "\n";
  }
  out << "result: " << (r.has_nonneg_eigenvector ? "nonnegative eigenvector found" : "no nonnegative eigenvector")
      << "\n";
  out << "theorem (at most two eigenvalues): "
      << (!r.theorem_applicable ? "not applicable" : r.theorem_satisfied ? "satisfied" : "VIOLATED") << "\n";
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  check_tolerances(c);
  if (c.backend == "exact")
    throw UsageError("the exact backend is not available for analyze: eigendecomposition runs in floating point");
  const std::string bytes = read_file(c.input);
  std::istringstream in(bytes);
  const SymmetricMatrix m(read_matrix(in));
  const AnalysisReport report = analyze(m, c.tol.analysis());
  if (!c.json) render_analysis(report, out);
  emit_json(c, analysis_report_json(report, input_digest(bytes), c.tol), out);
  return kExitOk;
}

template <Scalar T>
void render_side(std::ostream& out, const char* label, std::size_t dim, const char* verdict, const char* kind,
                 const Vector<T>& v) {
  out << label << ": dimension " << dim << ", " << verdict << " " << kind << " " << format_vector(v) << "\n";
}

template <Scalar T>
int subspace_backend(const RunConfig& c, const SubspaceInput& input, const std::string& bytes, std::ostream& out) {
  const Subspace<T> v = orthonormalize(input.columns<T>(), c.tol.rank_tol);
  const PairClassification<T> cls = classify_pair(v, c.tol.alternative());
  if (!c.json) {
    const std::size_t n = v.ambient_dim(), k = v.dim();
    out << "ambient dimension: " << n << "\n";
    out << "backend: " << scalar_traits<T>::backend_name << "\n";
    if (const auto* b = std::get_if<BothSides<T>>(&cls)) {
      render_side(out, "V", k, "HAS_NONNEG", "witness", b->witness_v.x);
      render_side(out, "V-perp", n - k, "HAS_NONNEG", "witness", b->witness_complement.x);
    } else if (const auto* o = std::get_if<OnlyV<T>>(&cls)) {
      render_side(out, "V", k, "HAS_NONNEG", "witness", o->witness_v.x);
      render_side(out, "V-perp", n - k, "NO_NONNEG", "certificate", o->certificate_in_v.v);
    } else {
      const auto& oc = std::get<OnlyComplement<T>>(cls);
      render_side(out, "V", k, "NO_NONNEG", "certificate", oc.certificate_in_complement.v);
      render_side(out, "V-perp", n - k, "HAS_NONNEG", "witness", oc.witness_complement.x);
    }
    out << "classification: " << classification_name(cls) << "\n";
  }
  emit_json(c, subspace_report_json(v, cls, input_digest(bytes), c.tol), out);
  return kExitOk;
}

int cmd_subspace(const RunConfig& c, std::ostream& out) {
  check_tolerances(c);
  const std::string bytes = read_file(c.input);
  std::istringstream in(bytes);
  const SubspaceInput input = read_subspace_text(in);
  if (c.backend == "exact") return subspace_backend<Rational>(c, input, bytes, out);
  return subspace_backend<double>(c, input, bytes, out);
}

/// Writes the matrix and a sidecar analysis report computed from the file
/// exactly as written, so the pair round-trips through verify.
void write_matrix_with_report(const RunConfig& c, const SymmetricMatrix& m, const std::string& comment,
                              std::ostream& out) {
  std::ostringstream text;
  write_matrix_market(text, m, comment);
  const std::string bytes = text.str();
  write_text_file(c.out_path, bytes);

  std::istringstream in(bytes);
  const SymmetricMatrix reread(read_matrix(in));
  const AnalysisReport report = analyze(reread, c.tol.analysis());
  const std::string report_path = c.report_path.empty() ? c.out_path + ".report.json" : c.report_path;
  write_text_file(report_path, analysis_report_json(report, input_digest(bytes), c.tol).dump(2) + "\n");
  out << "wrote " << c.out_path << "\n";
  out << "wrote " << report_path << "\n";
  render_analysis(report, out);
}

int cmd_counterexample(const RunConfig& c, std::ostream& out) {
  check_tolerances(c);
  const SymmetricMatrix m = build_counterexample(c.dim, c.eigenvalues);
  const NoNonnegCheck check = verify_no_nonneg_eigenvector(m, c.tol.analysis());
  if (!check.no_nonneg_eigenvector) {
    std::string msg = "constructed matrix unexpectedly has a nonnegative eigenvector";
    for (const auto& d : check.diagnostics) msg += "\n" + d;
    throw NumericalFailure(msg);
  }
  write_matrix_with_report(c, m, "counterexample: symmetric matrix without a nonnegative eigenvector", out);
  return kExitOk;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  check_tolerances(c);
  if (c.eigenvalues.size() != 2) throw UsageError("generate needs exactly two eigenvalues");
  const SymmetricMatrix m =
      random_two_eigenvalue_matrix(c.dim, c.eigenvalues[0], c.eigenvalues[1], c.multiplicity, c.seed);
  write_matrix_with_report(c, m, "random two-eigenvalue matrix, seed " + std::to_string(c.seed), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!(c.tol.verify_tol > 0.0)) throw UsageError("tolerances must be positive and finite");
  Json report;
  try {
    report = Json::parse(read_file(c.input));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  const std::vector<std::string> failures = verify_report(report, read_file(c.second_input), c.tol.verify_tol);
  if (failures.empty()) {
    out << "verified: all claimed vectors pass\n";
    return kExitOk;
  }
  err << "error[VERIFICATION_FAILED]: " << failures.size() << " check(s) failed\n";
  for (const auto& f : failures) err << "  " << f << "\n";
  return kExitVerification;
}

void print_error(std::ostream& err, const char* code, const std::string& what) {
  const auto nl = what.find('\n');
  err << "error[" << code << "]: " << what.substr(0, nl) << "\n";
  if (nl != std::string::npos) err << what.substr(nl + 1) << "\n";
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("NONNEG_SEED");
  if (!s || !*s) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || s[0] == '-') throw UsageError(std::string("NONNEG_SEED is not an unsigned integer: '") + s + "'");
  return v;
}

void add_tolerance_options(CLI::App* app, RunConfig& c) {
  app->add_option("--rank-tol", c.tol.rank_tol, "Relative rank threshold for orthonormalization");
  app->add_option("--feas-tol", c.tol.feas_tol, "LP feasibility tolerance (float backend)");
  app->add_option("--verify-tol", c.tol.verify_tol, "Tolerance for witness/certificate verification");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Nonnegative vectors in subspaces and eigenspaces of symmetric matrices"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Per-eigenspace nonnegative eigenvector analysis");
  analyze_cmd->add_option("file", c.input, "Matrix Market or structured matrix file")->required();
  analyze_cmd->add_option("--cluster-tol", c.tol.cluster_tol, "Relative eigenvalue clustering gap");
  analyze_cmd->add_option("--backend", c.backend, "float|exact (exact is rejected)");
  add_tolerance_options(analyze_cmd, c);
  analyze_cmd->add_flag("--json", c.json, "Print the structured report instead of text");
  analyze_cmd->add_option("--report", c.report_path, "Also write the structured report to this file");

  auto* subspace_cmd = app.add_subcommand("subspace", "Classify a subspace and its orthogonal complement");
  subspace_cmd->add_option("file", c.input, "Structured subspace file")->required();
  subspace_cmd->add_option("--backend", c.backend, "float|exact");
  add_tolerance_options(subspace_cmd, c);
  subspace_cmd->add_flag("--json", c.json, "Print the structured report instead of text");
  subspace_cmd->add_option("--report", c.report_path, "Also write the structured report to this file");

  auto* counter_cmd = app.add_subcommand("counterexample", "Write a symmetric matrix with no nonnegative eigenvector");
  counter_cmd->add_option("--dim", c.dim, "Dimension n >= 3")->required();
  counter_cmd->add_option("--eigenvalues", c.eigenvalues, "lambda_v,lambda_w,rest...")->delimiter(',')->required();
  counter_cmd->add_option("--out", c.out_path, "Matrix Market output path")->required();
  counter_cmd->add_option("--report", c.report_path, "Sidecar report path (default <out>.report.json)");
  counter_cmd->add_option("--cluster-tol", c.tol.cluster_tol, "Relative eigenvalue clustering gap");
  add_tolerance_options(counter_cmd, c);

  std::uint64_t seed_flag = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Write a seeded random matrix with exactly two eigenvalues");
  gen_cmd->add_option("--dim", c.dim, "Dimension n >= 2")->required();
  gen_cmd->add_option("--eigenvalues", c.eigenvalues, "lambda1,lambda2")->delimiter(',')->required();
  gen_cmd->add_option("--multiplicity", c.multiplicity, "Multiplicity k of lambda1")->required();
  auto* seed_opt = gen_cmd->add_option("--seed", seed_flag, "Seed (default: $NONNEG_SEED, else 0)");
  gen_cmd->add_option("--out", c.out_path, "Matrix Market output path")->required();
  gen_cmd->add_option("--report", c.report_path, "Sidecar report path (default <out>.report.json)");
  gen_cmd->add_option("--cluster-tol", c.tol.cluster_tol, "Relative eigenvalue clustering gap");
  add_tolerance_options(gen_cmd, c);

  auto* verify_cmd = app.add_subcommand("verify", "Re-verify every vector claimed in a structured report");
  verify_cmd->add_option("report", c.input, "Structured report")->required();
  verify_cmd->add_option("input", c.second_input, "Matrix or subspace file the report was produced from")->required();
  verify_cmd->add_option("--verify-tol", c.tol.verify_tol, "Verification tolerance (float reports)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "USAGE", e.what());
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(c, out);
    if (subspace_cmd->parsed()) return cmd_subspace(c, out);
    if (counter_cmd->parsed()) return cmd_counterexample(c, out);
    if (gen_cmd->parsed()) {
      c.seed = seed_opt->count() > 0 ? seed_flag : seed_from_env();
      return cmd_generate(c, out);
    }
    return cmd_verify(c, out, err);
  } catch (const PropositionViolation& e) {
    print_error(err, "PROPOSITION_VIOLATION", e.what());
    return kExitNumerical;
  } catch (const NumericalFailure& e) {
    print_error(err, "NUMERICAL_FAILURE", e.what());
    return kExitNumerical;
  } catch (const UsageError& e) {
    print_error(err, "USAGE", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    print_error(err, "PARSE", e.what());
    return kExitUsage;
  } catch (const Json::exception& e) {
    print_error(err, "PARSE", std::string("malformed report: ") + e.what());
    return kExitUsage;
  }
}

}  // namespace nonneg::cli
