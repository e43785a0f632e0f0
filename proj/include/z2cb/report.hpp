#pragma once

// Machine-readable verdicts. Each report is emitted as one JSON line.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "z2cb/bounds.hpp"

namespace z2cb {

enum class Verdict { kPass, kFail, kIndeterminate };

std::string_view to_string(Verdict v);

struct VerificationReport {
  std::string claim_id;
  std::string regime;
  Verdict verdict = Verdict::kIndeterminate;
  nlohmann::json evidence = nlohmann::json::object();
  std::int64_t runtime_ms = 0;
};

nlohmann::json to_json(const VerificationReport& report);
/// Compact single-line JSON, no trailing newline.
std::string to_json_line(const VerificationReport& report);

/// Big integers travel as decimal strings so no precision is lost in JSON.
inline std::string big_to_json(const BigInt& value) { return value.str(); }

}  // namespace z2cb
