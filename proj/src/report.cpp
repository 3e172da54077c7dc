#include "nscloner/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace nscloner {

void VerificationReport::finalize() {
  summary.total = static_cast<int>(records.size());
  summary.passed = 0;
  summary.max_residual = 0.0;
  for (const CheckRecord& record : records) {
    if (record.pass) ++summary.passed;
    summary.max_residual = std::max(summary.max_residual, record.residual);
  }
}

std::string fmt_g15(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.15g", value);
  return buffer;
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "check,two_j,t,descriptor,residual,tol,pass\n";
  for (const CheckRecord& r : report.records) {
    out += r.check + ',' + std::to_string(r.two_j) + ',' + r.t + ',' + r.descriptor + ',' +
           fmt_g15(r.residual) + ',' + fmt_g15(r.tol) + ',' + (r.pass ? "1" : "0") + '\n';
  }
  return out;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json root;
  root["meta"] = report.meta;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const CheckRecord& r : report.records) {
    records.push_back({{"check", r.check},
                       {"two_j", r.two_j},
                       {"t", r.t},
                       {"descriptor", r.descriptor},
                       {"residual", fmt_g15(r.residual)},
                       {"tol", fmt_g15(r.tol)},
                       {"pass", r.pass}});
  }
  root["records"] = std::move(records);
  root["summary"] = {{"total", report.summary.total},
                     {"passed", report.summary.passed},
                     {"max_residual", fmt_g15(report.summary.max_residual)}};
  return root.dump(2) + "\n";
}

}  // namespace nscloner
