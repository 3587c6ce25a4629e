#pragma once

// Frontend plumbing for gkzcheck: input documents, report documents and the
// command runner. Reports use 1-based column indices and print ξ_j as u_j.

#include "gkz/intlin.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gkz::cli {

inline constexpr const char* kEngineName = "gkzcheck";
inline constexpr const char* kEngineVersion = "0.1.0";

struct MatrixInput {
  IntegerMatrix matrix;
  std::optional<std::string> label;
  std::optional<RationalVector> beta;  // echoed only
  std::optional<std::uint64_t> seed;

  bool operator==(const MatrixInput& other) const = default;
};

// Accepts {"matrix": [[...]], "label": ..., "beta": [...], "seed": ...} or a
// whitespace/comma separated integer grid ('#' starts a comment line).
// Matrix entries may be JSON integers or strings of digits; beta entries
// integers or strings such as "-3/2". Throws ParseError with a 1-based
// line and column.
MatrixInput parse_input(std::string_view text);

// Single-line JSON document; parse_input(render_input(x)) == x.
std::string render_input(const MatrixInput& input);

// "1/2,-3,0" as used by --beta.
RationalVector parse_rational_list(std::string_view text);

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::skipped;
  std::string reason;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool operator==(const CheckResult& other) const = default;
};

struct InputError {
  std::string hypothesis;  // empty for syntax errors
  std::string message;

  bool operator==(const InputError& other) const = default;
};

struct ReportDocument {
  std::string engine_version = kEngineVersion;
  std::string command;
  std::optional<MatrixInput> input;
  std::string source;  // file name in batch mode, otherwise empty
  std::uint64_t seed = 0;
  std::size_t samples = 3;
  std::vector<CheckResult> checks;
  std::optional<InputError> error;
  std::map<std::string, double> timings_ms;

  // 2 on invalid input, 1 if any check failed, 0 otherwise.
  int exit_code() const;
  std::string status() const;

  bool operator==(const ReportDocument& other) const = default;
};

nlohmann::ordered_json to_json(const ReportDocument& report);
ReportDocument report_from_json(const nlohmann::ordered_json& j);

// Pretty JSON; timings are omitted when include_timings is false so that
// equal inputs and seeds give byte-identical output.
std::string render_json(const ReportDocument& report, bool include_timings = true);
std::string render_text(const ReportDocument& report);

enum class Command { toric, faces, char_ideal, dim, check, homogenize, fibers, transversality };

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);
const std::vector<std::string>& command_names();

struct RunOptions {
  std::size_t samples = 3;
  std::optional<std::uint64_t> seed;     // overrides the input's seed
  std::optional<RationalVector> beta;    // overrides the input's beta
};

// Never throws for bad matrices: hypothesis violations land in report.error.
ReportDocument run(Command command, const MatrixInput& input, const RunOptions& options = {});

// Parses the text first; syntax errors become an invalid-input report.
ReportDocument run_text(Command command, std::string_view text, const RunOptions& options = {});

// Every regular file in dir, sorted by name, processed concurrently;
// results come back in that order.
std::vector<ReportDocument> run_corpus(Command command, const std::filesystem::path& dir,
                                       const RunOptions& options = {});

std::string render_summary(const std::vector<ReportDocument>& reports);
int batch_exit_code(const std::vector<ReportDocument>& reports);

}  // namespace gkz::cli
