#pragma once

#include "pcert/json_io.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace pcert {

inline constexpr const char* kSchemaVersion = "1";

// Exit codes shared by every subcommand.
inline constexpr int kExitCertified = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPreconditionViolated = 2;
inline constexpr int kExitSelfcheckFailed = 3;
inline constexpr int kExitInconclusive = 10;

int exit_code_for(Verdict v);

/// Either a fixed user value or "auto" (minimum applicable bound).
struct BoundOption {
  bool automatic = true;
  long value = 0;
};

struct JobOptions {
  BoundOption noether_bound;
  /// Absent means no degree bound, unless dim1 is set (then "auto").
  std::optional<BoundOption> degree_bound;
  bool dim1 = false;
  /// New variable order, as names; empty when not given.
  std::vector<std::string> variable_permutation;
};

/// A validated job. Theta and point follow `variables`, which is already
/// permuted when the job asked for it.
struct Job {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> system_text;
  std::vector<MultiPoly> system;
  std::vector<Rational> point;
  std::vector<PuiseuxPoly> theta;
  Rational L;
  JobOptions options;
  /// The job exactly as read, for the digest.
  Json source;
};

/// Throws ValidationError or ParseError (wrapped into ValidationError with the
/// field path) on any structural problem.
Job parse_job(const Json& j, const std::string& fallback_name);
Json load_json_file(const std::filesystem::path& path);
Job load_job(const std::filesystem::path& path);

struct RunOptions {
  /// Adds wall-clock timing to reports, which makes them nondeterministic.
  bool timing = false;
};

struct CommandResult {
  Json report;
  int exit_code = 0;
};

CommandResult certify_job(const Job& job, const RunOptions& options = {});

/// Re-reads every certificate of a certify report and audits it against the
/// job; also recomputes resolved bounds and the overall verdict.
AuditResult audit_report(const Json& report, const Job& job);

CommandResult expand_command(const std::string& polynomial, const std::vector<std::string>& variables,
                             const Rational& center, const Rational& y0, const Rational& precision);

/// Input: {"schema": "1", "variables": [...], "system": [...]}; a job file works too.
CommandResult bounds_command(const Json& input);

/// `source` is a manifest {"schema": "1", "jobs": [paths relative to it]} or a
/// directory whose *.json files (except manifest.json) are jobs. Per-job
/// reports go to out_dir/<name>.json when out_dir is given.
CommandResult batch_command(const std::filesystem::path& source, const RunOptions& options = {},
                            const std::optional<std::filesystem::path>& out_dir = std::nullopt);

/// Randomized consistency checks: common-factor pairs against the gcd branch
/// oracle and the residual contract of the branch expansion.
CommandResult selfcheck_command(std::uint64_t seed, int count);

/// Short human-readable rendering of any report above.
std::string render_text(const Json& report);

} // namespace pcert
