#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace limfree::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kInvariantViolation = 3 };

/// Result of one command. `to_json()` yields exactly the keys
/// command, inputs, result, status, error.
struct Envelope {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result;  // null on error
  bool ok = true;
  std::string error;
  int exit_code = kOk;
  std::string text;  // human-readable report

  nlohmann::json to_json() const;
};

Envelope cmd_tangent(const std::string& expr, const std::string& p);
Envelope cmd_derive(const std::string& expr);
Envelope cmd_check(const std::string& expr, const std::string& k, const std::string& b, const std::string& p);
Envelope cmd_mult(const std::string& expr, const std::string& k, const std::string& b, const std::string& p);
Envelope cmd_expand(const std::string& expr, const std::string& p);
Envelope cmd_decompose(const std::string& expr, const std::string& x0);
Envelope cmd_table(const std::string& expr, const std::string& x0, int steps);
Envelope cmd_rules(const std::string& f_expr, const std::string& g_expr);
Envelope cmd_dual(const std::string& fn, const std::string& a, const std::string& b);

struct PlotOptions {
  std::string range = "-5,5";
  std::optional<std::string> dx;
  std::string size = "800x600";
};

/// Builds the SVG into `svg` and reports the exact geometry in the envelope.
Envelope cmd_plot(const std::string& expr, const std::string& p, const PlotOptions& options, std::string& svg);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace limfree::cli
