#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etp/families.hpp"
#include "etp/format.hpp"
#include "etp/identities.hpp"

namespace etp::cli {

// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

struct ComputeOptions {
  FamilyKind family = FamilyKind::TruncatedEuler;
  unsigned m = 0;
  unsigned n = 0;
  unsigned r = 0;
  Rational lambda{0};
  std::optional<Rational> at;
  OutputFormat format = OutputFormat::text;
};

struct TableOptions {
  FamilyKind family = FamilyKind::TruncatedEuler;
  unsigned m_max = 0;
  unsigned n_max = 0;
  unsigned r = 0;
  Rational lambda{0};
  OutputFormat format = OutputFormat::text;
};

struct VerifyOptions {
  GridConfig grid = GridConfig::defaults();
  OutputFormat format = OutputFormat::text;
};

struct OracleDiffOptions {
  unsigned m_max = 4;
  unsigned n_max = 12;
  OutputFormat format = OutputFormat::text;
};

CommandResult cmd_compute(FamilyTable& fam, const ComputeOptions& opts);
CommandResult cmd_table(FamilyTable& fam, const TableOptions& opts);
CommandResult cmd_verify(FamilyTable& fam, const VerifyOptions& opts);
CommandResult cmd_oracle_diff(FamilyTable& fam, const OracleDiffOptions& opts);

/// Parses `args` (without the program name) and dispatches to a command.
/// Usage errors map to kExitUsage; --help maps to kExitOk.
CommandResult run(FamilyTable& fam, const std::vector<std::string>& args);

}  // namespace etp::cli
