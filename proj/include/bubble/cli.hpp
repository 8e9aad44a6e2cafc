#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bubble/render.hpp"

namespace bubble::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { Validate, Pbt, Dbs, Equiv, Localize, Rescale };

struct JobSpec {
  Command command = Command::Pbt;
  std::string input_path = "-";
  Format format = Format::Ascii;
  /// Flag name (without dashes) to value: "seed", "random-suite", "recenter", "max-rank".
  std::map<std::string, std::string> options;
};

/// Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Parses arguments (program name excluded). Usage errors and --help come back
/// as a finished RunResult.
std::variant<JobSpec, RunResult> parse_command_line(const std::vector<std::string>& args);

/// Runs the job, reading `job.input_path` ("-" is standard input).
RunResult run(const JobSpec& job);

/// Runs the job on already-loaded input text.
RunResult run(const JobSpec& job, const std::string& input_text);

}  // namespace bubble::cli
