#ifndef NONNEG_TOOLS_REPORT_HPP
#define NONNEG_TOOLS_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "nonneg/nonneg.hpp"
#include "nonneg/io.hpp"

namespace nonneg::cli {

using Json = nlohmann::ordered_json;

struct Tolerances {
  double rank_tol = kDefaultRankTol;
  double cluster_tol = kDefaultClusterTol;
  double feas_tol = kDefaultFeasTol;
  double verify_tol = kDefaultVerifyTol;

  AlternativeOptions alternative() const;
  AnalysisOptions analysis() const;
  Json to_json() const;
  static Tolerances from_json(const Json& j);
};

/// "sha256:<hex>" of the raw input bytes.
std::string input_digest(const std::string& bytes);

Json analysis_report_json(const AnalysisReport& report, const std::string& digest, const Tolerances& tol);

template <Scalar T>
Json subspace_report_json(const Subspace<T>& v, const PairClassification<T>& c, const std::string& digest,
                          const Tolerances& tol);

/// Re-checks every claimed vector in `report` against `input_bytes`.
/// Returns one line per failed check; empty means verified.
std::vector<std::string> verify_report(const Json& report, const std::string& input_bytes, double verify_tol);

}  // namespace nonneg::cli

#endif  // NONNEG_TOOLS_REPORT_HPP
