#pragma once

#include <map>
#include <string>
#include <vector>

namespace nscloner {

inline constexpr const char* kVersion = "0.1.0";

/// One executed check. `t` and `descriptor` are preformatted strings so
/// records serialize byte-identically under a fixed configuration.
struct CheckRecord {
  std::string check;
  int two_j = 0;  // 0 when not applicable
  std::string t = "-";
  std::string descriptor = "-";
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct ReportSummary {
  int total = 0;
  int passed = 0;
  double max_residual = 0.0;
  /// Console-only; never serialized, so reports stay byte-reproducible.
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::map<std::string, std::string> meta;  // config echo, versions, seed
  std::vector<CheckRecord> records;
  ReportSummary summary;

  void add(CheckRecord record) { records.push_back(std::move(record)); }
  /// Recomputes the summary counters from the records.
  void finalize();
  bool all_passed() const { return summary.passed == summary.total; }
};

/// Decimal with 15 significant digits; shared by every serializer so the
/// same number always prints the same way.
std::string fmt_g15(double value);

std::string to_csv(const VerificationReport& report);
std::string to_json(const VerificationReport& report);

}  // namespace nscloner
