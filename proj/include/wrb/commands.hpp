#pragma once

// Command dispatch behind wrbctl. Each command turns a parsed problem into a
// deterministic JSON report plus a boolean verdict.

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "wrb/problem.hpp"

namespace wrb {

/// Unknown command, missing option or a name absent from the problem.
class CommandError : public Error {
 public:
  using Error::Error;
};

struct CommandOptions {
  std::string command;
  std::string problem_path;
  std::optional<std::string> operator_name;
  std::optional<std::string> action;
  std::optional<std::string> weight;
  std::optional<std::string> deformation;
  std::optional<std::string> equivalence;
  std::optional<std::string> tensor;
  /// comma-separated coordinates, e.g. "1,0,-1/2"
  std::optional<std::string> element;
  bool sweep = false;
  std::size_t max_degree = 3;
  std::size_t cap = 1'000'000;
};

struct CommandResult {
  nlohmann::ordered_json report;
  bool verdict = false;
};

CommandResult run_command(const CommandOptions& opts, const Problem& problem);

/// "json" gives the report verbatim; "text" a plain rendering with tables.
std::string render_report(const nlohmann::ordered_json& report, const std::string& format);

/// Parses, dispatches and renders; never throws. Exit status 0/1/2.
int run_cli(const CommandOptions& opts, const std::string& format, std::string& out, std::string& err);

}  // namespace wrb
