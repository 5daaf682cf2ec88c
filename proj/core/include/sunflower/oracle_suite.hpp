#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sunflower {

// One row of the cross-check table: a library answer recomputed from
// scratch by a deliberately naive second route, plus frozen hand-computed
// instances. An exception inside a case fails it with the message as
// detail.
struct OracleCaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
  long runtime_ms = 0;
};

struct OracleConfig {
  std::uint64_t seed = 12345;
  int scale = 1;  // multiplies randomized trial counts
};

std::vector<OracleCaseResult> run_oracle_suite(const OracleConfig& cfg = {});

bool all_pass(const std::vector<OracleCaseResult>& results);

// Fixed-width table, one "pass"/"FAIL" line per case plus a totals footer.
std::string oracle_table(const std::vector<OracleCaseResult>& results);

}  // namespace sunflower
