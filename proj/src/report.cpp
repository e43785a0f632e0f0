#include "z2cb/report.hpp"

namespace z2cb {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kIndeterminate: return "INDETERMINATE";
  }
  return "?";
}

nlohmann::json to_json(const VerificationReport& report) {
  // nlohmann::json sorts keys, so equal reports serialize identically.
  return {
      {"claim_id", report.claim_id},
      {"regime", report.regime},
      {"verdict", std::string(to_string(report.verdict))},
      {"evidence", report.evidence},
      {"runtime_ms", report.runtime_ms},
  };
}

std::string to_json_line(const VerificationReport& report) { return to_json(report).dump(); }

}  // namespace z2cb
