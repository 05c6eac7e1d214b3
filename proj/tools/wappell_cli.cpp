// Command-line front end: compute single polynomials, print tables, run the
// identity-verification suites, and emit Plancherel statistics reports.
//
// Exit codes: 0 = success, 1 = a mathematical check failed, 2 = usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wappell/appell.hpp"
#include "wappell/error.hpp"
#include "wappell/json_io.hpp"
#include "wappell/partition.hpp"
#include "wappell/plancherel.hpp"
#include "wappell/polynomial.hpp"
#include "wappell/verify.hpp"
#include "wappell/wapoly.hpp"

namespace {

using namespace wappell;

enum class Format { plain, json, latex };

Format parse_format(const std::string& text) {
  if (text == "plain") return Format::plain;
  if (text == "json") return Format::json;
  if (text == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + text +
                              "' (expected plain, json, or latex)");
}

std::string default_format() {
  const char* env = std::getenv("WAPPELL_FORMAT");
  if (env != nullptr && *env != '\0') return env;
  return "plain";
}

void warn_if_large(int max_size) {
  if (max_size > 16) {
    std::cerr << "warning: --max-size " << max_size
              << " exceeds the recommended cap of 16; expect long runtimes\n";
  }
}

std::string poly_render(const Poly& p, Format format) {
  return format == Format::latex ? poly_to_latex(p) : poly_to_string(p);
}

Json explain_json(const Partition& lambda) {
  Json out = Json::array();
  for (const auto& [mu, coeff] : augmented_schur_p_integral(lambda)) {
    Json record;
    record["partition"] = partition_to_json(mu);
    record["coefficient"] = coeff.get_str();
    out.push_back(std::move(record));
  }
  return out;
}

void explain_plain(std::ostream& out, const Partition& lambda) {
  out << "hook-scaled Schur expansion of [" << lambda.to_string()
      << "] in the power-sum basis:\n";
  for (const auto& [mu, coeff] : augmented_schur_p_integral(lambda)) {
    out << "  [" << mu.to_string() << "]: " << coeff.get_str() << "\n";
  }
}

struct ComputeConfig {
  std::string seq = "monomial";
  std::string partition;
  std::string route = "cross";
  std::string format = default_format();
  bool explain = false;
};

int cmd_compute(const ComputeConfig& cfg) {
  const AppellSpec spec = parse_spec(cfg.seq);
  const Partition lambda = Partition::parse(cfg.partition);
  const Route route = parse_route(cfg.route);
  const Format format = parse_format(cfg.format);

  WapEvaluator eval(spec);
  const Poly a = eval.wap(lambda, route);

  std::ostringstream out;
  if (format == Format::json) {
    Json doc;
    doc["command"] = "compute";
    doc["spec"] = spec.name();
    doc["partition"] = partition_to_json(lambda);
    doc["route"] = route_name(route);
    doc["poly"] = poly_to_json(a);
    doc["rendered"] = poly_to_string(a);
    if (cfg.explain) doc["explain"] = explain_json(lambda);
    out << doc.dump(2) << "\n";
  } else {
    out << poly_render(a, format) << "\n";
    if (cfg.explain) explain_plain(out, lambda);
  }
  std::cout << out.str();
  return 0;
}

struct TableConfig {
  std::string seq = "monomial";
  int max_size = 12;
  std::string route = "cross";
  std::string format = default_format();
};

int cmd_table(const TableConfig& cfg) {
  const AppellSpec spec = parse_spec(cfg.seq);
  const Route route = parse_route(cfg.route);
  const Format format = parse_format(cfg.format);
  if (cfg.max_size < 0) throw std::invalid_argument("--max-size must be >= 0");
  warn_if_large(cfg.max_size);

  WapEvaluator eval(spec);
  std::ostringstream out;
  if (format == Format::json) {
    Json doc;
    doc["command"] = "table";
    doc["spec"] = spec.name();
    doc["max_size"] = cfg.max_size;
    doc["route"] = route_name(route);
    Json rows = Json::array();
    for (const Partition& lambda : partitions_up_to(cfg.max_size)) {
      Json row;
      row["partition"] = partition_to_json(lambda);
      row["poly"] = poly_to_json(eval.wap(lambda, route));
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
  } else if (format == Format::latex) {
    out << "\\begin{aligned}\n";
    for (const Partition& lambda : partitions_up_to(cfg.max_size)) {
      out << "A_{" << lambda.to_string() << "}(x) &= "
          << poly_to_latex(eval.wap(lambda, route)) << "\\\\\n";
    }
    out << "\\end{aligned}\n";
  } else {
    for (const Partition& lambda : partitions_up_to(cfg.max_size)) {
      out << lambda.to_string() << ": "
          << poly_to_string(eval.wap(lambda, route)) << "\n";
    }
  }
  std::cout << out.str();
  return 0;
}

struct VerifyConfig {
  std::string identity = "all";
  std::string seq = "monomial";
  int max_size = 6;
  int k_max = 4;
  int corrupt_cumulant = 0;
  std::string format = default_format();
};

int cmd_verify(const VerifyConfig& cfg) {
  AppellSpec spec = parse_spec(cfg.seq);
  const Format format = parse_format(cfg.format);
  if (cfg.max_size < 0) throw std::invalid_argument("--max-size must be >= 0");
  if (cfg.k_max < 1) throw std::invalid_argument("--k-max must be >= 1");
  warn_if_large(cfg.max_size);
  if (cfg.corrupt_cumulant > 0) {
    // Fault injection: perturb one cumulant after the honest moment stream is
    // frozen, so the spec becomes internally inconsistent and the identity
    // suites have something real to catch.
    const int order = std::max(24, 2 * cfg.max_size + cfg.k_max);
    spec = corrupted_for_testing(spec, cfg.corrupt_cumulant, Rat(1), order);
  } else if (cfg.corrupt_cumulant < 0) {
    throw std::invalid_argument("--corrupt-cumulant must be >= 1");
  }

  const VerifyOptions options{cfg.max_size, cfg.k_max};
  const std::vector<SuiteResult> results =
      run_verify(cfg.identity, spec, options);
  bool all_passed = true;
  for (const SuiteResult& result : results) all_passed &= result.passed();

  std::ostringstream out;
  if (format == Format::json) {
    Json doc;
    doc["command"] = "verify";
    doc["spec"] = spec.name();
    doc["identity"] = cfg.identity;
    doc["max_size"] = cfg.max_size;
    doc["k_max"] = cfg.k_max;
    Json suites = Json::array();
    for (const SuiteResult& result : results) {
      suites.push_back(suite_result_to_json(result));
    }
    doc["results"] = std::move(suites);
    doc["status"] = all_passed ? "pass" : "fail";
    out << doc.dump(2) << "\n";
  } else {
    constexpr std::size_t kMaxWitnesses = 10;
    for (const SuiteResult& result : results) {
      out << result.name << ": checked=" << result.checked
          << " skipped=" << result.skipped
          << " failures=" << result.failures.size()
          << (result.passed() ? " PASS" : " FAIL") << "\n";
      for (std::size_t i = 0;
           i < result.failures.size() && i < kMaxWitnesses; ++i) {
        out << "  witness: " << result.failures[i] << "\n";
      }
      if (result.failures.size() > kMaxWitnesses) {
        out << "  (+" << result.failures.size() - kMaxWitnesses
            << " more)\n";
      }
    }
    out << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
  }
  std::cout << out.str();
  return all_passed ? 0 : 1;
}

struct StatsConfig {
  std::string seq = "monomial";
  int max_size = 12;
  std::string format = default_format();
};

int cmd_stats(const StatsConfig& cfg) {
  const AppellSpec spec = parse_spec(cfg.seq);
  const Format format = parse_format(cfg.format);
  if (cfg.max_size < 0) throw std::invalid_argument("--max-size must be >= 0");
  warn_if_large(cfg.max_size);

  std::ostringstream out;
  if (format == Format::json) {
    Json doc;
    doc["command"] = "stats";
    doc["spec"] = spec.name();
    doc["max_size"] = cfg.max_size;
    Json reports = Json::array();
    for (int n = 0; n <= cfg.max_size; ++n) {
      reports.push_back(plancherel_report_to_json(plancherel_report(spec, n)));
    }
    doc["reports"] = std::move(reports);
    out << doc.dump(2) << "\n";
  } else {
    for (int n = 0; n <= cfg.max_size; ++n) {
      const PlancherelReport report = plancherel_report(spec, n);
      out << "n=" << report.n << "\n"
          << "  mean: " << poly_render(report.mean, format) << "\n"
          << "  second moment: " << poly_render(report.second_moment, format)
          << "\n"
          << "  variance: " << poly_render(report.variance, format) << "\n"
          << "  variance degree bound: "
          << (report.variance_degree_bound_ok ? "ok" : "VIOLATED") << "\n";
    }
  }
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wappell: exact Wronskian Appell polynomials and identity verification"};
  app.require_subcommand(1);

  ComputeConfig compute_cfg;
  CLI::App* compute = app.add_subcommand(
      "compute", "Compute one polynomial A_lambda for a given sequence");
  compute->add_option("--seq", compute_cfg.seq,
                      "Appell sequence (e.g. hermite, laguerre:2, exp-rt:2,4)");
  compute->add_option("--partition", compute_cfg.partition,
                      "Partition as comma-separated parts, e.g. 2,1 (0 = empty)")
      ->required();
  compute->add_option("--route", compute_cfg.route,
                      "Algorithm: direct, phi, recurrence, or cross");
  compute->add_option("--format", compute_cfg.format,
                      "Output format: plain, json, or latex");
  compute->add_flag("--explain", compute_cfg.explain,
                    "Also dump the hook-scaled Schur expansion table");

  TableConfig table_cfg;
  CLI::App* table = app.add_subcommand(
      "table", "Print A_lambda for every partition up to --max-size");
  table->add_option("--seq", table_cfg.seq, "Appell sequence");
  table->add_option("--max-size", table_cfg.max_size,
                    "Largest partition size to include");
  table->add_option("--route", table_cfg.route, "Algorithm route");
  table->add_option("--format", table_cfg.format, "Output format");

  VerifyConfig verify_cfg;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run identity-verification suites (exit 1 on any failure)");
  verify->add_option("identity", verify_cfg.identity,
                     "Suite name or 'all' (see README for the list)");
  verify->add_option("--seq", verify_cfg.seq, "Appell sequence");
  verify->add_option("--max-size", verify_cfg.max_size,
                     "Largest partition size to sweep");
  verify->add_option("--k-max", verify_cfg.k_max,
                     "Largest rim-hook size for the k-indexed suites");
  verify->add_option("--corrupt-cumulant", verify_cfg.corrupt_cumulant,
                     "Fault injection: perturb cumulant K before verifying");
  verify->add_option("--format", verify_cfg.format, "Output format");

  StatsConfig stats_cfg;
  CLI::App* stats = app.add_subcommand(
      "stats", "Plancherel-averaged mean/second moment/variance per size");
  stats->add_option("--seq", stats_cfg.seq, "Appell sequence");
  stats->add_option("--max-size", stats_cfg.max_size, "Largest size n");
  stats->add_option("--format", stats_cfg.format, "Output format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_cfg);
    if (table->parsed()) return cmd_table(table_cfg);
    if (verify->parsed()) return cmd_verify(verify_cfg);
    return cmd_stats(stats_cfg);
  } catch (const RouteMismatch& e) {
    std::cerr << "route disagreement: " << e.what() << "\n";
    return 1;
  } catch (const TheoremViolation& e) {
    std::cerr << "identity violated: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
