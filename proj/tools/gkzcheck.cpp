// gkzcheck: verify the Krull-dimension and holonomicity statements for an
// integer matrix A.
//
//   gkzcheck check conic.json
//   echo "1 1 1\n0 1 2" | gkzcheck dim --format json
//   gkzcheck --corpus corpus/

#include "gkz/cli.hpp"
#include "gkz/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gkz::cli;

  CLI::App app{"Exact verification of A-hypergeometric dimension statements"};
  std::string command = "check";
  std::string input_path;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t samples = 3;
  std::string corpus;
  std::string beta;

  std::string names;
  for (const auto& c : command_names()) names += (names.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + names)
      ->check(CLI::IsMember(command_names()));
  app.add_option("input", input_path, "Matrix file (JSON or integer grid); stdin if absent");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* seed_opt = app.add_option("--seed", seed, "Random seed (default 0, or the input's seed)");
  app.add_option("--samples", samples, "Samples for the family check and transversality")
      ->capture_default_str();
  app.add_option("--corpus", corpus, "Run every file in DIR and print a summary table");
  app.add_option("--beta", beta, "Parameter vector r1,...,rd (echoed only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunOptions options;
  options.samples = samples;
  if (seed_opt->count()) options.seed = seed;
  if (!beta.empty()) {
    try {
      options.beta = parse_rational_list(beta);
    } catch (const gkz::ParseError& e) {
      std::cerr << "gkzcheck: --beta: " << e.what() << "\n";
      return 2;
    }
  }
  const Command cmd = *parse_command(command);

  if (!corpus.empty()) {
    std::vector<ReportDocument> reports;
    try {
      reports = run_corpus(cmd, corpus, options);
    } catch (const std::exception& e) {
      std::cerr << "gkzcheck: " << e.what() << "\n";
      return 2;
    }
    if (format == "json") {
      nlohmann::ordered_json doc;
      doc["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
      doc["reports"] = nlohmann::ordered_json::array();
      for (const auto& r : reports) doc["reports"].push_back(to_json(r));
      std::size_t counts[3] = {0, 0, 0};
      for (const auto& r : reports) ++counts[r.exit_code()];
      doc["summary"] = {{"files", reports.size()},
                        {"pass", counts[0]},
                        {"fail", counts[1]},
                        {"invalid", counts[2]}};
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const auto& r : reports) std::cout << render_text(r) << "\n";
      std::cout << render_summary(reports);
    }
    const int code = batch_exit_code(reports);
    if (code == 1)
      std::cerr << "gkzcheck: theorem-verdict failure on valid input; this indicates an engine bug\n";
    return code;
  }

  std::string text;
  if (input_path.empty() || input_path == "-") {
    text = read_stream(std::cin);
  } else {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
      std::cerr << "gkzcheck: cannot read " << input_path << "\n";
      return 2;
    }
    text = read_stream(in);
  }

  const ReportDocument report = run_text(cmd, text, options);
  if (format == "json")
    std::cout << render_json(report);
  else
    std::cout << render_text(report);

  if (report.error) {
    std::cerr << "gkzcheck: invalid input";
    if (!report.error->hypothesis.empty())
      std::cerr << " (hypothesis violated: " << report.error->hypothesis << ")";
    std::cerr << ": " << report.error->message << "\n";
  } else if (report.exit_code() == 1) {
    std::cerr << "gkzcheck: theorem-verdict failure on valid input; this indicates an engine bug\n";
  }
  return report.exit_code();
}
