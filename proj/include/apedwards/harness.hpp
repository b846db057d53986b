#pragma once

#include <string>
#include <vector>

#include "apedwards/json_io.hpp"

namespace apedwards {

enum class CheckStatus { Reproduced, Mismatch, Skipped };
const char* check_status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string group;
  std::string anchor;
  CheckStatus status = CheckStatus::Skipped;
  std::string expected;
  std::string got;
  std::string note;  // reason for skipped, or context for the other statuses
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::size_t count(CheckStatus s) const;
  /// No mismatches (skipped checks do not fail the run).
  bool passed() const { return count(CheckStatus::Mismatch) == 0; }
};

struct VerifyOptions {
  /// Restrict to these groups; empty runs everything. Groups: b-tuples,
  /// integral-models, anchor, descent, h-tables, moduli, search-models,
  /// q-lists, census, open-cases.
  std::vector<std::string> groups;
  long q_list_bound = 100;    // point height for the q-list consistency search
  long h_sweep_count = 400;   // rational t tried on each H curve
  unsigned workers = 1;
};

/// Throws Error(Io) when unreadable, Error(Parse) on malformed JSON.
Json load_fixture(const std::string& path);

/// Re-derives every fixture entry; never aborts on a mismatch.
VerificationReport verify_tables(const Json& fixture, const VerifyOptions& opts = {});

Json to_json(const VerificationReport& rep);

}  // namespace apedwards
