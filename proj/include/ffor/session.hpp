#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ffor/ideal.hpp"
#include "ffor/regularity.hpp"

namespace ffor {

struct Command {
  int line;
  std::string name;
  std::vector<std::string> args;
  std::map<std::string, std::string> flags;
  std::string text;
};

/// A parsed session file:
///
///   ring p=2 vars=x,y quotient=[y^2 + x^3]
///   ideal I = [x]
///   elem u = y
///   check4 I u 1
///
/// All names are resolved and every command is validated at parse time.
struct SessionSpec {
  QuotientPtr ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::vector<std::pair<std::string, Polynomial>> elements;
  std::vector<Command> commands;

  const Ideal* find_ideal(const std::string& name) const;
  /// A declared element name, or else a polynomial literal in the ring.
  Polynomial element(const std::string& ref) const;
};

/// Throws ParseError carrying the offending line number.
SessionSpec parse_session(std::string_view text);

/// Values given on the command line; they override per-command flags.
struct RunOptions {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  std::optional<unsigned> max_degree;
  std::optional<unsigned> emax;
};

struct CommandResult {
  std::string text;
  nlohmann::ordered_json json;
  /// 0 on success, 2 when the command produced a failure witness.
  int exit_code;
};

CommandResult run_command(const SessionSpec& spec, const Command& command,
                          const RunOptions& options);

struct SessionResult {
  std::string output;
  int exit_code;
};

/// Runs every command in order. With options.json the output is a single
/// JSON document {ring, results: [...]}, otherwise the text report.
SessionResult run_session(const SessionSpec& spec, const RunOptions& options);

nlohmann::ordered_json to_json(const CheckReport& report);
nlohmann::ordered_json to_json(const ProbeReport& report);

}  // namespace ffor
