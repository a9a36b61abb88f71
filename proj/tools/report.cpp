#include "report.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace nonneg::cli {

AlternativeOptions Tolerances::alternative() const {
  AlternativeOptions o;
  o.rank_tol = rank_tol;
  o.simplex.feas_tol = feas_tol;
  o.verify_tol = verify_tol;
  return o;
}

AnalysisOptions Tolerances::analysis() const {
  AnalysisOptions o;
  o.cluster_tol = cluster_tol;
  o.alternative = alternative();
  return o;
}

Json Tolerances::to_json() const {
  return Json{{"rank_tol", rank_tol}, {"cluster_tol", cluster_tol}, {"feas_tol", feas_tol}, {"verify_tol", verify_tol}};
}

Tolerances Tolerances::from_json(const Json& j) {
  Tolerances t;
  t.rank_tol = j.at("rank_tol").get<double>();
  t.cluster_tol = j.at("cluster_tol").get<double>();
  t.feas_tol = j.at("feas_tol").get<double>();
  t.verify_tol = j.at("verify_tol").get<double>();
  return t;
}

std::string input_digest(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::string hex = "sha256:";
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

namespace {

template <Scalar T>
Json vector_json(const Vector<T>& v) {
  Json a = Json::array();
  for (const T& x : v) {
    if constexpr (is_exact_v<T>) {
      a.push_back(scalar_traits<T>::to_string(x));
    } else {
      a.push_back(x);
    }
  }
  return a;
}

template <Scalar T>
Vector<T> vector_from_json(const Json& a) {
  if (!a.is_array()) throw ParseError("report vector is not an array");
  Vector<T> v;
  for (const Json& e : a) {
    if (e.is_string()) {
      if constexpr (is_exact_v<T>) {
        v.push_back(parse_rational(e.get<std::string>()));
      } else {
        v.push_back(parse_real(e.get<std::string>()));
      }
    } else if (e.is_number()) {
      if constexpr (is_exact_v<T>) {
        if (e.is_number_integer())
          v.push_back(T(e.get<long>()));
        else
          v.push_back(scalar_traits<T>::from_double(e.get<double>()));
      } else {
        v.push_back(e.get<double>());
      }
    } else {
      throw ParseError("report vector entry is neither a number nor a rational string");
    }
  }
  return v;
}

template <Scalar T>
Json side_json(const Subspace<T>& s, bool has_nonneg, const Vector<T>& vec) {
  return Json{{"dimension", s.dim()}, {"verdict", has_nonneg ? "HAS_NONNEG" : "NO_NONNEG"}, {"vector", vector_json(vec)}};
}

void verify_analysis(const Json& report, const std::string& input, double verify_tol, std::vector<std::string>& fail) {
  std::istringstream in(input);
  const SymmetricMatrix m(read_matrix(in));
  const Tolerances tol = Tolerances::from_json(report.at("tolerances"));
  const auto clusters = eigenspaces(jacobi_eigendecomposition(m), tol.cluster_tol, tol.rank_tol);

  const auto& spaces = report.at("eigenspaces");
  if (report.at("distinct_eigenvalues").get<std::size_t>() != clusters.size() || spaces.size() != clusters.size()) {
    fail.push_back("eigenspace count differs from recomputation (" + std::to_string(clusters.size()) + ")");
    return;
  }
  bool any_nonneg = false;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const auto& c = clusters[i];
    const auto& e = spaces[i];
    const std::string where = "eigenspace " + std::to_string(i + 1);
    const double value = e.at("value").get<double>();
    if (e.at("multiplicity").get<std::size_t>() != c.multiplicity)
      fail.push_back(where + ": multiplicity differs from recomputation");
    if (std::fabs(value - c.representative_value) > kEigenResidualTol * std::max(1.0, std::fabs(value)))
      fail.push_back(where + ": eigenvalue differs from recomputation");
    const std::string verdict = e.at("verdict").get<std::string>();
    const Vector<double> x = vector_from_json<double>(e.at("vector"));
    if (verdict == "HAS_NONNEG") {
      any_nonneg = true;
      if (!verify_witness<double>(c.space, x, verify_tol)) {
        fail.push_back(where + ": witness fails verification");
      } else if (eigen_residual(m, x, c.representative_value) >
                 kEigenResidualTol * std::max(1.0, std::fabs(c.representative_value))) {
        fail.push_back(where + ": witness is not an eigenvector");
      }
    } else if (verdict == "NO_NONNEG") {
      if (!verify_certificate<double>(c.space, x, verify_tol)) fail.push_back(where + ": certificate fails verification");
    } else {
      fail.push_back(where + ": unknown verdict '" + verdict + "'");
    }
  }
  const bool applicable = clusters.size() <= 2;
  if (report.at("has_nonneg_eigenvector").get<bool>() != any_nonneg)
    fail.push_back("has_nonneg_eigenvector disagrees with the eigenspace verdicts");
  if (report.at("theorem_applicable").get<bool>() != applicable)
    fail.push_back("theorem_applicable disagrees with the eigenvalue count");
  if (report.at("theorem_satisfied").get<bool>() != (!applicable || any_nonneg))
    fail.push_back("theorem_satisfied disagrees with the verdicts");
}

template <Scalar T>
void verify_side(const std::string& label, const Subspace<T>& s, const Json& side, double tol,
                 std::vector<std::string>& fail, bool& has_nonneg) {
  if (side.at("dimension").get<std::size_t>() != s.dim()) fail.push_back(label + ": dimension differs");
  const std::string verdict = side.at("verdict").get<std::string>();
  const Vector<T> x = vector_from_json<T>(side.at("vector"));
  has_nonneg = verdict == "HAS_NONNEG";
  if (verdict == "HAS_NONNEG") {
    if (!verify_witness<T>(s, x, tol)) fail.push_back(label + ": witness fails verification");
  } else if (verdict == "NO_NONNEG") {
    if (!verify_certificate<T>(s, x, tol)) fail.push_back(label + ": certificate fails verification");
  } else {
    fail.push_back(label + ": unknown verdict '" + verdict + "'");
  }
}

template <Scalar T>
void verify_subspace(const Json& report, const SubspaceInput& input, double verify_tol, std::vector<std::string>& fail) {
  const Tolerances tol = Tolerances::from_json(report.at("tolerances"));
  const Subspace<T> v = orthonormalize(input.template columns<T>(), tol.rank_tol);
  const Subspace<T> perp = orthogonal_complement(v);
  bool v_has = false, p_has = false;
  verify_side<T>("subspace", v, report.at("subspace"), verify_tol, fail, v_has);
  verify_side<T>("complement", perp, report.at("complement"), verify_tol, fail, p_has);
  const std::string cls = report.at("classification").get<std::string>();
  const char* expected = v_has && p_has ? "BOTH_SIDES" : v_has ? "ONLY_V" : p_has ? "ONLY_COMPLEMENT" : "NONE";
  if (cls != expected) fail.push_back("classification '" + cls + "' disagrees with the verdicts");
}

}  // namespace

Json analysis_report_json(const AnalysisReport& report, const std::string& digest, const Tolerances& tol) {
  Json spaces = Json::array();
  for (const auto& e : report.per_eigenspace) {
    spaces.push_back(Json{{"value", e.cluster.representative_value},
                          {"multiplicity", e.cluster.multiplicity},
                          {"verdict", e.verdict.name()},
                          {"vector", vector_json(e.verdict.vector())}});
  }
  return Json{{"kind", "analysis"},
              {"input_digest", digest},
              {"backend", "float"},
              {"tolerances", tol.to_json()},
              {"matrix_dim", report.matrix_dim},
              {"distinct_eigenvalues", report.distinct_eigenvalue_count},
              {"eigenspaces", std::move(spaces)},
              {"has_nonneg_eigenvector", report.has_nonneg_eigenvector},
              {"theorem_applicable", report.theorem_applicable},
              {"theorem_satisfied", report.theorem_satisfied}};
}

template <Scalar T>
Json subspace_report_json(const Subspace<T>& v, const PairClassification<T>& c, const std::string& digest,
                          const Tolerances& tol) {
  const Subspace<T> perp = orthogonal_complement(v);
  Json vs, ps;
  if (const auto* b = std::get_if<BothSides<T>>(&c)) {
    vs = side_json(v, true, b->witness_v.x);
    ps = side_json(perp, true, b->witness_complement.x);
  } else if (const auto* o = std::get_if<OnlyV<T>>(&c)) {
    vs = side_json(v, true, o->witness_v.x);
    ps = side_json(perp, false, o->certificate_in_v.v);
  } else {
    const auto& oc = std::get<OnlyComplement<T>>(c);
    vs = side_json(v, false, oc.certificate_in_complement.v);
    ps = side_json(perp, true, oc.witness_complement.x);
  }
  return Json{{"kind", "subspace"},
              {"input_digest", digest},
              {"backend", scalar_traits<T>::backend_name},
              {"tolerances", tol.to_json()},
              {"ambient_dim", v.ambient_dim()},
              {"classification", classification_name(c)},
              {"subspace", std::move(vs)},
              {"complement", std::move(ps)}};
}

template Json subspace_report_json<double>(const Subspace<double>&, const PairClassification<double>&,
                                           const std::string&, const Tolerances&);
template Json subspace_report_json<Rational>(const Subspace<Rational>&, const PairClassification<Rational>&,
                                             const std::string&, const Tolerances&);

std::vector<std::string> verify_report(const Json& report, const std::string& input_bytes, double verify_tol) {
  std::vector<std::string> fail;
  if (report.at("input_digest").get<std::string>() != input_digest(input_bytes)) {
    fail.push_back("input digest does not match the report");
    return fail;
  }
  const std::string kind = report.at("kind").get<std::string>();
  if (kind == "analysis") {
    verify_analysis(report, input_bytes, verify_tol, fail);
  } else if (kind == "subspace") {
    std::istringstream in(input_bytes);
    const SubspaceInput input = read_subspace_text(in);
    const std::string backend = report.at("backend").get<std::string>();
    if (backend == "exact")
      verify_subspace<Rational>(report, input, verify_tol, fail);
    else if (backend == "float")
      verify_subspace<double>(report, input, verify_tol, fail);
    else
      throw ParseError("unknown backend '" + backend + "' in report");
  } else {
    throw ParseError("unknown report kind '" + kind + "'");
  }
  return fail;
}

}  // namespace nonneg::cli
