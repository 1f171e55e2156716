// Command-line driver: runs a session file and prints the report.
//
//   ffor <session-file> [--json] [--seed N] [--count N] [--max-degree N] [--emax N]
//
// Exit status: 0 on success, 2 if any check produced a failure witness,
// 1 on errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ffor/error.hpp"
#include "ffor/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Frobenius operations and regularity checks over F_p"};
  std::string path;
  ffor::RunOptions options;
  std::uint64_t seed = 0, count = 0;
  unsigned max_degree = 0, emax = 0;
  app.add_option("session", path, "Session file")->required();
  app.add_flag("--json", options.json, "Emit the JSON report");
  auto* seed_opt = app.add_option("--seed", seed, "Sampler seed");
  auto* count_opt = app.add_option("--count", count, "Sampled trials for probe");
  auto* degree_opt = app.add_option("--max-degree", max_degree, "Sampler / search degree bound");
  auto* emax_opt = app.add_option("--emax", emax, "Largest Frobenius exponent tried");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (*seed_opt) options.seed = seed;
  if (*count_opt) options.count = count;
  if (*degree_opt) options.max_degree = max_degree;
  if (*emax_opt) options.emax = emax;

  std::ifstream in(path);
  if (!in) {
    std::cerr << "ffor: cannot open " << path << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  try {
    ffor::SessionSpec spec = ffor::parse_session(buffer.str());
    ffor::SessionResult result = ffor::run_session(spec, options);
    std::cout << result.output;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "ffor: " << path << ": " << e.what() << "\n";
    return 1;
  }
}
