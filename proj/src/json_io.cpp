#include "wappell/json_io.hpp"

#include "wappell/rational.hpp"

namespace wappell {

Json poly_to_json(const Poly& p) {
  Json coeffs = Json::array();
  const int top = p.degree().value_or(-1);
  for (int i = 0; i <= top; ++i) coeffs.push_back(rat_to_string(p.coeff(i)));
  return coeffs;
}

Json partition_to_json(const Partition& lambda) {
  Json parts = Json::array();
  for (int part : lambda.parts()) parts.push_back(part);
  return parts;
}

Json psym_to_json(const PSym& f) {
  Json out = Json::array();
  for (const auto& [mu, coeff] : f.terms()) {
    Json record;
    record["partition"] = partition_to_json(mu);
    record["coefficient"] = rat_to_string(coeff);
    out.push_back(std::move(record));
  }
  return out;
}

Json suite_result_to_json(const SuiteResult& result) {
  Json out;
  out["identity"] = result.name;
  out["checked"] = result.checked;
  out["skipped"] = result.skipped;
  out["passed"] = result.passed();
  out["failures"] = result.failures;
  return out;
}

Json plancherel_report_to_json(const PlancherelReport& report) {
  Json out;
  out["n"] = report.n;
  out["mean"] = poly_to_json(report.mean);
  out["second_moment"] = poly_to_json(report.second_moment);
  out["variance"] = poly_to_json(report.variance);
  out["variance_degree_bound_ok"] = report.variance_degree_bound_ok;
  return out;
}

}  // namespace wappell
