// Command-line front end: fidelity tables, verification sweeps and
// composition checks, emitted as deterministic CSV or JSON reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nscloner/cloner_family.hpp"
#include "nscloner/composition.hpp"
#include "nscloner/report.hpp"
#include "nscloner/verify.hpp"

namespace {

using nscloner::ClonerKind;
using nscloner::ClonerSpec;
using nscloner::Rational;
using nscloner::TwiceJ;

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

// Accepts "3/4", "0.75" (exact decimal scaling) and plain integers.
Rational parse_rational(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos)
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const int scale = static_cast<int>(text.size() - dot - 1);
    if (scale > 12) throw std::invalid_argument("too many decimal digits: " + text);
    long long den = 1;
    for (int i = 0; i < scale; ++i) den *= 10;
    return Rational(std::stoll(digits), den);
  }
  return Rational(std::stoll(text));
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string table_csv(int max_m) {
  std::string out =
      "M,two_j,F_optimal,F_optimal_frac,F_worst,F_worst_frac,F_prime,F_prime_frac,"
      "interval_lo,interval_lo_frac,interval_hi,interval_hi_frac\n";
  for (int m = 2; m <= max_m; ++m) {
    const TwiceJ j(m);
    const Rational hi = nscloner::max_fidelity_exact(j);
    const Rational lo = Rational(1) - hi;
    const Rational prime = nscloner::prime_fidelity_exact(j);
    out += std::to_string(m) + ',' + std::to_string(j.two_j) + ',' +
           nscloner::fmt_g15(hi.to_double()) + ',' + hi.str() + ',' +
           nscloner::fmt_g15(lo.to_double()) + ',' + lo.str() + ',' +
           nscloner::fmt_g15(prime.to_double()) + ',' + prime.str() + ',' +
           nscloner::fmt_g15(lo.to_double()) + ',' + lo.str() + ',' +
           nscloner::fmt_g15(hi.to_double()) + ',' + hi.str() + '\n';
  }
  return out;
}

std::string table_json(int max_m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int m = 2; m <= max_m; ++m) {
    const TwiceJ j(m);
    const Rational hi = nscloner::max_fidelity_exact(j);
    const Rational lo = Rational(1) - hi;
    const Rational prime = nscloner::prime_fidelity_exact(j);
    rows.push_back({{"M", m},
                    {"two_j", j.two_j},
                    {"F_optimal", nscloner::fmt_g15(hi.to_double())},
                    {"F_optimal_frac", hi.str()},
                    {"F_worst", nscloner::fmt_g15(lo.to_double())},
                    {"F_worst_frac", lo.str()},
                    {"F_prime", nscloner::fmt_g15(prime.to_double())},
                    {"F_prime_frac", prime.str()},
                    {"interval_lo_frac", lo.str()},
                    {"interval_hi_frac", hi.str()}});
  }
  nlohmann::ordered_json root;
  root["meta"] = {{"tool", "nscloner"},
                  {"version", nscloner::kVersion},
                  {"command", "table"},
                  {"max_m", max_m}};
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

struct ComposeRow {
  int m = 0, n = 0;
  Rational first, second, predicted, direct;
  double simulated = 0.0;
  bool multiplicative = false;
};

std::vector<ComposeRow> compose_rows(ClonerKind kind, int max_m) {
  // Fixed probe direction; the simulated value is input-independent.
  const nscloner::BlochVector probe(1.0, 0.5);
  std::vector<ComposeRow> rows;
  for (int m = 2; m <= max_m; ++m)
    for (int n = m; n <= max_m; ++n) {
      ComposeRow row;
      row.m = m;
      row.n = n;
      row.first = nscloner::fidelity_exact(TwiceJ(m), nscloner::named_t(kind, TwiceJ(m)));
      row.second = nscloner::fidelity_exact(TwiceJ(n), nscloner::named_t(kind, TwiceJ(n)));
      row.predicted = nscloner::compose_predict(row.first, row.second);
      row.direct =
          nscloner::fidelity_exact(TwiceJ(m * n), nscloner::named_t(kind, TwiceJ(m * n)));
      const nscloner::Pipeline pipeline(
          {nscloner::make_named(kind, TwiceJ(m)), nscloner::make_named(kind, TwiceJ(n))});
      row.simulated = nscloner::sequential_simulate(pipeline, probe);
      row.multiplicative = row.predicted == row.direct;
      rows.push_back(row);
    }
  return rows;
}

std::string compose_csv(ClonerKind kind, int max_m) {
  std::string out =
      "kind,M,N,F_first_frac,F_second_frac,predicted,predicted_frac,simulated,"
      "direct_frac,sim_vs_pred,multiplicative\n";
  for (const ComposeRow& row : compose_rows(kind, max_m)) {
    out += nscloner::to_string(kind) + ',' + std::to_string(row.m) + ',' +
           std::to_string(row.n) + ',' + row.first.str() + ',' + row.second.str() + ',' +
           nscloner::fmt_g15(row.predicted.to_double()) + ',' + row.predicted.str() + ',' +
           nscloner::fmt_g15(row.simulated) + ',' + row.direct.str() + ',' +
           nscloner::fmt_g15(std::abs(row.simulated - row.predicted.to_double())) + ',' +
           (row.multiplicative ? "1" : "0") + '\n';
  }
  return out;
}

std::string compose_json(ClonerKind kind, int max_m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ComposeRow& row : compose_rows(kind, max_m)) {
    rows.push_back({{"kind", nscloner::to_string(kind)},
                    {"M", row.m},
                    {"N", row.n},
                    {"F_first_frac", row.first.str()},
                    {"F_second_frac", row.second.str()},
                    {"predicted", nscloner::fmt_g15(row.predicted.to_double())},
                    {"predicted_frac", row.predicted.str()},
                    {"simulated", nscloner::fmt_g15(row.simulated)},
                    {"direct_frac", row.direct.str()},
                    {"sim_vs_pred",
                     nscloner::fmt_g15(std::abs(row.simulated - row.predicted.to_double()))},
                    {"multiplicative", row.multiplicative}});
  }
  nlohmann::ordered_json root;
  root["meta"] = {{"tool", "nscloner"},
                  {"version", nscloner::kVersion},
                  {"command", "compose"},
                  {"kind", nscloner::to_string(kind)},
                  {"max_m", max_m}};
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

const std::set<std::string>& sweep_checks() {
  static const std::set<std::string> checks{"geometry_identities", "ns_row_sums",
                                            "solution_space_dim",  "eigenspace_span",
                                            "eigen_residual",      "convex_equality"};
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal symmetric 1-to-M qubit cloner toolkit"};
  app.set_version_flag("--version", nscloner::kVersion);

  std::string command;
  app.add_option("--command", command, "one of: table, verify, compose, sweep")
      ->required()
      ->check(CLI::IsMember({"table", "verify", "compose", "sweep"}));
  int max_m = 10;
  app.add_option("--max-m", max_m, "largest copy count M = 2j")->check(CLI::Range(2, 2000));
  std::vector<std::string> t_values;
  app.add_option("--t", t_values, "family parameters, fractions or decimals");
  std::string kind = "prime";
  app.add_option("--kind", kind, "named cloner for compose")
      ->check(CLI::IsMember({"optimal", "worst", "uniform", "prime"}));
  int samples = 100;
  app.add_option("--samples", samples, "Bloch samples per check")->check(CLI::PositiveNumber);
  int geometries = 50;
  app.add_option("--geometries", geometries, "mixture geometries in the sweep")
      ->check(CLI::PositiveNumber);
  std::uint64_t seed = 20250808;
  app.add_option("--seed", seed, "RNG seed; fixes the report byte-for-byte");
  double tol = 1e-10;
  app.add_option("--tol", tol, "sweep residual tolerance")->check(CLI::PositiveNumber);
  std::string format = "csv";
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  std::string out_path;
  app.add_option("--out", out_path, "output path (stdout when omitted)");
  double perturb = 0.0;
  app.add_option("--perturb", perturb, "fault injection on the coefficient vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (command == "table") {
      write_output(format == "csv" ? table_csv(max_m) : table_json(max_m), out_path);
      return 0;
    }

    if (command == "compose") {
      const ClonerKind named = nscloner::cloner_kind_from_string(kind);
      write_output(format == "csv" ? compose_csv(named, max_m) : compose_json(named, max_m),
                   out_path);
      return 0;
    }

    nscloner::VerifyConfig config;
    config.max_two_j = max_m;
    config.geometries = geometries;
    config.bloch_samples = samples;
    config.seed = seed;
    config.tol = tol;
    config.perturb = perturb;
    if (!t_values.empty()) {
      config.t_grid.clear();
      for (const std::string& text : t_values) {
        const Rational t = parse_rational(text);
        if (t < Rational(0) || t > Rational(1))
          throw CLI::ValidationError("--t", "values must lie in [0, 1]");
        config.t_grid.push_back(t);
      }
    }

    nscloner::VerificationReport report = nscloner::run_verification(config);
    if (command == "sweep") {
      std::erase_if(report.records, [](const nscloner::CheckRecord& record) {
        return !sweep_checks().contains(record.check);
      });
      report.finalize();
    }
    report.meta["command"] = command;

    write_output(format == "csv" ? to_csv(report) : to_json(report), out_path);
    std::cerr << command << ": " << report.summary.passed << "/" << report.summary.total
              << " checks passed, max residual " << nscloner::fmt_g15(report.summary.max_residual)
              << ", " << nscloner::fmt_g15(report.summary.wall_ms) << " ms\n";
    if (!report.all_passed()) {
      for (const nscloner::CheckRecord& record : report.records)
        if (!record.pass)
          std::cerr << "FAILED " << record.check << " two_j=" << record.two_j
                    << " t=" << record.t << " " << record.descriptor
                    << " residual=" << nscloner::fmt_g15(record.residual)
                    << " tol=" << nscloner::fmt_g15(record.tol) << "\n";
      return kExitCheckFailure;
    }
    return 0;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
