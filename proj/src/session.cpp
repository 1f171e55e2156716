#include "ffor/session.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "ffor/error.hpp"
#include "ffor/frobenius.hpp"
#include "ffor/parse.hpp"

namespace ffor {

namespace {

using nlohmann::ordered_json;

constexpr unsigned kDefaultClosureEmax = 4;
constexpr unsigned kDefaultClosureDegree = 3;

struct CommandShape {
  // 'I' ideal, 'E' element, 'X' ideal or element, 'N' nonnegative integer,
  // '*' one or more further ideals (before a trailing 'N' if present).
  std::string args;
  std::set<std::string> flags;
};

const std::map<std::string, CommandShape>& command_table() {
  static const std::map<std::string, CommandShape> table{
      {"gb", {"I", {}}},
      {"sum", {"II", {}}},
      {"intersect", {"II*", {}}},
      {"colon", {"IX", {}}},
      {"member", {"EI", {}}},
      {"equal", {"II", {}}},
      {"bracket", {"IN", {}}},
      {"frobroot", {"IN", {}}},
      {"fkernel", {"I", {}}},
      {"nilradical", {"", {}}},
      {"reduced", {"", {}}},
      {"fclosure", {"EI", {"emax"}}},
      {"fclosed", {"I", {"emax", "max-degree"}}},
      {"check2", {"II*N", {}}},
      {"check3", {"IEN", {}}},
      {"check4", {"IEN", {}}},
      {"fedder", {"", {}}},
      {"jacobian", {"", {}}},
      {"probe", {"", {"count", "seed", "max-degree", "max-terms",
                      "max-generators", "emax"}}},
  };
  return table;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_identifier(const std::string& s) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, ident);
}

std::optional<std::uint64_t> parse_uint(const std::string& s) {
  if (s.empty() || s.size() > 19 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  return std::stoull(s);
}

std::uint64_t flag_or(const Command& c, const std::string& flag,
                      std::optional<std::uint64_t> cli, std::uint64_t fallback) {
  if (cli) return *cli;
  if (auto it = c.flags.find(flag); it != c.flags.end()) return *parse_uint(it->second);
  return fallback;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

QuotientPtr parse_ring_line(const std::string& rest, int line) {
  std::optional<std::uint64_t> p;
  std::vector<std::string> vars;
  std::string quotient;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
    if (pos >= rest.size()) break;
    std::size_t eq = rest.find('=', pos);
    if (eq == std::string::npos) throw ParseError("expected key=value in ring line", line);
    std::string key = trim(std::string_view(rest).substr(pos, eq - pos));
    pos = eq + 1;
    std::string value;
    if (pos < rest.size() && rest[pos] == '[') {
      std::size_t close = rest.find(']', pos);
      if (close == std::string::npos) throw ParseError("unterminated '['", line);
      value = rest.substr(pos, close - pos + 1);
      pos = close + 1;
    } else {
      std::size_t end = pos;
      while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
      value = rest.substr(pos, end - pos);
      pos = end;
    }
    if (key == "p") {
      p = parse_uint(value);
      if (!p) throw ParseError("p must be a positive integer", line);
    } else if (key == "vars") {
      std::stringstream ss(value);
      std::string v;
      while (std::getline(ss, v, ',')) {
        v = trim(v);
        if (!is_identifier(v)) throw ParseError("invalid variable name '" + v + "'", line);
        vars.push_back(v);
      }
    } else if (key == "quotient") {
      quotient = value;
    } else {
      throw ParseError("unknown ring key '" + key + "'", line);
    }
  }
  if (!p) throw ParseError("ring line needs p=<prime>", line);
  if (vars.empty()) throw ParseError("ring line needs vars=<names>", line);
  try {
    RingPtr ambient = PolyRing::make(PrimeField(*p), vars);
    std::vector<Polynomial> q;
    if (!quotient.empty()) q = parse_polynomial_list(quotient, ambient);
    return QuotientRing::make(ambient, std::move(q));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line);
  }
}

void validate_command(const SessionSpec& spec, Command& c) {
  auto it = command_table().find(c.name);
  if (it == command_table().end()) {
    throw ParseError("unknown command '" + c.name + "'", c.line);
  }
  const CommandShape& shape = it->second;
  for (const auto& [flag, value] : c.flags) {
    if (!shape.flags.count(flag)) {
      throw ParseError("command '" + c.name + "' does not accept --" + flag, c.line);
    }
    if (!parse_uint(value)) {
      throw ParseError("--" + flag + " expects a nonnegative integer", c.line);
    }
  }

  // Expand the '*' into the right number of ideal slots.
  std::string kinds = shape.args;
  if (auto star = kinds.find('*'); star != std::string::npos) {
    std::size_t fixed = kinds.size() - 1;
    if (c.args.size() < fixed) {
      throw ParseError("command '" + c.name + "' needs at least " +
                           std::to_string(fixed) + " arguments",
                       c.line);
    }
    kinds = kinds.substr(0, star) + std::string(c.args.size() - fixed, 'I') +
            kinds.substr(star + 1);
  }
  if (c.args.size() != kinds.size()) {
    throw ParseError("command '" + c.name + "' expects " +
                         std::to_string(kinds.size()) + " arguments",
                     c.line);
  }
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const std::string& a = c.args[i];
    switch (kinds[i]) {
      case 'I':
        if (!spec.find_ideal(a)) throw ParseError("unknown ideal '" + a + "'", c.line);
        break;
      case 'X':
        if (spec.find_ideal(a)) break;
        [[fallthrough]];
      case 'E':
        try {
          spec.element(a);
        } catch (const std::exception&) {
          throw ParseError("unresolved element '" + a + "'", c.line);
        }
        break;
      case 'N':
        if (!parse_uint(a) || *parse_uint(a) > 64) {
          throw ParseError("expected an exponent in [0, 64], got '" + a + "'", c.line);
        }
        break;
    }
  }
}

ordered_json witness_json(const Witness& w, bool with_identity, Identity identity) {
  ordered_json out;
  if (with_identity) out["identity"] = to_string(identity);
  ordered_json ideals = ordered_json::array();
  for (const auto& i : w.ideals) ideals.push_back(i.to_string());
  out["I"] = ideals;
  out["x"] = w.element ? ordered_json(w.element->to_string()) : ordered_json(nullptr);
  out["e"] = w.e;
  out["separator"] = w.separator.to_string();
  out["side"] = to_string(w.side);
  return out;
}

std::string check_text(const CheckReport& r) {
  std::string out = to_string(r.outcome) + " " + to_string(r.identity) + "\n";
  out += "  lhs: " + r.lhs.to_string() + "\n";
  out += "  rhs: " + r.rhs.to_string() + "\n";
  if (r.witness) {
    out += "  separator: " + r.witness->separator.to_string() + " (in " +
           to_string(r.witness->side) + " only)\n";
  }
  return out;
}

CommandResult plain(const Command& c, const std::string& text, ordered_json value) {
  ordered_json j;
  j["command"] = c.text;
  j["kind"] = "result";
  j["result"] = std::move(value);
  return {text + "\n", std::move(j), 0};
}

CommandResult ideal_result(const Command& c, const Ideal& ideal) {
  return plain(c, ideal.to_string(), ideal.to_string());
}

CommandResult check_result(const Command& c, const CheckReport& r) {
  ordered_json j;
  j["command"] = c.text;
  j["kind"] = "check";
  ordered_json body = to_json(r);
  for (auto& [k, v] : body.items()) j[k] = v;
  return {check_text(r), std::move(j), r.outcome == Outcome::Fail ? 2 : 0};
}

}  // namespace

const Ideal* SessionSpec::find_ideal(const std::string& name) const {
  for (const auto& [n, ideal] : ideals) {
    if (n == name) return &ideal;
  }
  return nullptr;
}

Polynomial SessionSpec::element(const std::string& ref) const {
  for (const auto& [n, f] : elements) {
    if (n == ref) return f;
  }
  return parse_polynomial(ref, ring->ambient());
}

SessionSpec parse_session(std::string_view text) {
  static const std::regex ideal_re(R"(^ideal\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\[.*\])$)");
  static const std::regex elem_re(R"(^elem\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)$)");

  SessionSpec spec;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;

    std::string head = s.substr(0, s.find_first_of(" \t"));
    if (head == "ring") {
      if (spec.ring) throw ParseError("duplicate ring declaration", line);
      spec.ring = parse_ring_line(s.substr(4), line);
      continue;
    }
    if (!spec.ring) throw ParseError("the first declaration must be 'ring'", line);

    std::smatch m;
    if (head == "ideal" || head == "elem") {
      bool is_ideal = head == "ideal";
      if (!std::regex_match(s, m, is_ideal ? ideal_re : elem_re)) {
        throw ParseError("malformed " + head + " declaration", line);
      }
      std::string name = m[1];
      if (!names.insert(name).second) {
        throw ParseError("duplicate name '" + name + "'", line);
      }
      if (spec.ring->ambient()->variable_index(name)) {
        throw ParseError("name '" + name + "' shadows a ring variable", line);
      }
      try {
        if (is_ideal) {
          spec.ideals.emplace_back(
              name, Ideal(spec.ring, parse_polynomial_list(m[2].str(), spec.ring->ambient())));
        } else {
          spec.elements.emplace_back(name, parse_polynomial(m[2].str(), spec.ring->ambient()));
        }
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
      }
      continue;
    }

    Command c{line, head, {}, {}, s};
    std::istringstream words(s.substr(head.size()));
    std::string w;
    while (words >> w) {
      if (w.rfind("--", 0) == 0) {
        std::string flag = w.substr(2), value;
        if (auto eq = flag.find('='); eq != std::string::npos) {
          value = flag.substr(eq + 1);
          flag.erase(eq);
        } else if (!(words >> value)) {
          throw ParseError("flag --" + flag + " needs a value", line);
        }
        if (c.flags.count(flag)) throw ParseError("repeated flag --" + flag, line);
        c.flags[flag] = value;
      } else {
        c.args.push_back(w);
      }
    }
    validate_command(spec, c);
    spec.commands.push_back(std::move(c));
  }
  if (!spec.ring) throw ParseError("session has no ring declaration");
  return spec;
}

ordered_json to_json(const CheckReport& report) {
  ordered_json j;
  j["identity"] = to_string(report.identity);
  j["ring"] = report.ring;
  j["trials"] = report.trials;
  j["outcome"] = to_string(report.outcome);
  j["lhs"] = report.lhs.to_string();
  j["rhs"] = report.rhs.to_string();
  if (report.witness) j["witness"] = witness_json(*report.witness, false, report.identity);
  return j;
}

ordered_json to_json(const ProbeReport& report) {
  ordered_json j;
  j["ring"] = report.ring;
  j["reduced"] = report.reduced;
  j["trials"] = report.structured_checks + report.sampled_trials;
  j["checks"] = report.checks_run;
  j["outcome"] = to_string(report.outcome);
  if (report.witness && report.witness->witness) {
    j["witness"] = witness_json(*report.witness->witness, true, report.witness->identity);
  }
  j["budget"] = {{"structured", report.structured_checks},
                 {"sampled", report.sampled_trials},
                 {"seed", report.config.seed},
                 {"count", report.config.count},
                 {"max_degree", report.config.max_degree},
                 {"max_terms", report.config.max_terms},
                 {"max_generators", report.config.max_generators},
                 {"e_list", report.e_list}};
  j["note"] = report.note;
  return j;
}

CommandResult run_command(const SessionSpec& spec, const Command& c,
                          const RunOptions& options) {
  const auto& ring = spec.ring;
  auto ideal = [&](std::size_t i) -> const Ideal& { return *spec.find_ideal(c.args[i]); };
  auto element = [&](std::size_t i) { return spec.element(c.args[i]); };
  auto number = [&](std::size_t i) { return static_cast<unsigned>(*parse_uint(c.args[i])); };

  try {
    if (c.name == "gb") {
      std::vector<std::string> gens;
      ordered_json arr = ordered_json::array();
      for (const auto& g : ideal(0).basis().generators()) {
        gens.push_back(g.to_string());
        arr.push_back(g.to_string());
      }
      return plain(c, "[" + join(gens, ", ") + "]", arr);
    }
    if (c.name == "sum") return ideal_result(c, ideal_sum(ideal(0), ideal(1)));
    if (c.name == "intersect") {
      std::vector<Ideal> all;
      for (std::size_t i = 0; i < c.args.size(); ++i) all.push_back(ideal(i));
      return ideal_result(c, ideal_intersect(all));
    }
    if (c.name == "colon") {
      if (const Ideal* by = spec.find_ideal(c.args[1])) {
        return ideal_result(c, ideal_colon(ideal(0), *by));
      }
      return ideal_result(c, ideal_colon(ideal(0), element(1)));
    }
    if (c.name == "member") {
      bool in = ideal(1).contains(element(0));
      return plain(c, in ? "true" : "false", in);
    }
    if (c.name == "equal") {
      bool eq = ideal_equal(ideal(0), ideal(1));
      return plain(c, eq ? "true" : "false", eq);
    }
    if (c.name == "bracket") return ideal_result(c, bracket_power(ideal(0), number(1)));
    if (c.name == "frobroot") return ideal_result(c, frobenius_root(ideal(0), number(1)));
    if (c.name == "fkernel") return ideal_result(c, frobenius_kernel_preimage(ideal(0)));
    if (c.name == "nilradical") {
      auto nil = nilradical_char_p(ring);
      ordered_json j{{"nilradical", nil.radical.to_string()},
                     {"steps", nil.steps},
                     {"q", nil.q}};
      return plain(c, nil.radical.to_string() + "  (steps " + std::to_string(nil.steps) +
                          ", q " + std::to_string(nil.q) + ")",
                   j);
    }
    if (c.name == "reduced") {
      bool r = is_reduced(ring);
      return plain(c, r ? "true" : "false", r);
    }
    if (c.name == "fclosure") {
      unsigned emax = static_cast<unsigned>(flag_or(c, "emax", options.emax, kDefaultClosureEmax));
      auto r = frobenius_closure_test(element(0), ideal(1), emax);
      ordered_json j;
      j["verdict"] = r.member ? "MEMBER" : "INCONCLUSIVE";
      if (r.witness_e) j["e"] = *r.witness_e;
      j["emax"] = emax;
      std::string text = r.member ? "MEMBER (e=" + std::to_string(*r.witness_e) + ")"
                                  : "INCONCLUSIVE up to e=" + std::to_string(emax);
      return plain(c, text, j);
    }
    if (c.name == "fclosed") {
      unsigned emax = static_cast<unsigned>(flag_or(c, "emax", options.emax, kDefaultClosureEmax));
      unsigned degree = static_cast<unsigned>(
          flag_or(c, "max-degree", options.max_degree, kDefaultClosureDegree));
      auto v = is_frobenius_closed(ideal(0), emax, degree);
      bool closed = v.kind == ClosednessVerdict::Kind::ClosedUpToBounds;
      ordered_json j{{"verdict", closed ? "CLOSED_UP_TO_BOUNDS" : "NOT_CLOSED"},
                     {"candidates", v.candidates_checked},
                     {"emax", emax},
                     {"max_degree", degree}};
      std::string text = closed ? "CLOSED_UP_TO_BOUNDS" : "NOT_CLOSED";
      if (!closed) {
        j["witness"] = v.witness->to_string();
        j["e"] = *v.witness_e;
        text += " witness " + v.witness->to_string() + " (e=" + std::to_string(*v.witness_e) + ")";
      }
      return plain(c, text, j);
    }
    if (c.name == "check2") {
      std::vector<Ideal> family;
      for (std::size_t i = 0; i + 1 < c.args.size(); ++i) family.push_back(ideal(i));
      return check_result(c, check_intersection_family(family, number(c.args.size() - 1)));
    }
    if (c.name == "check3") {
      return check_result(c, check_principal_intersection(ideal(0), element(1), number(2)));
    }
    if (c.name == "check4") return check_result(c, check_colon(ideal(0), element(1), number(2)));
    if (c.name == "fedder") {
      bool f = fedder_is_fpure(ring);
      return plain(c, f ? "true" : "false", f);
    }
    if (c.name == "jacobian") {
      std::string v = to_string(jacobian_regularity_oracle(ring));
      return plain(c, v, v);
    }
    if (c.name == "probe") {
      SamplerConfig config;
      config.seed = flag_or(c, "seed", options.seed, config.seed);
      config.count = flag_or(c, "count", options.count, config.count);
      config.max_degree = static_cast<unsigned>(
          flag_or(c, "max-degree", options.max_degree, config.max_degree));
      config.max_terms = static_cast<unsigned>(flag_or(c, "max-terms", std::nullopt, config.max_terms));
      config.max_generators = static_cast<unsigned>(
          flag_or(c, "max-generators", std::nullopt, config.max_generators));
      unsigned emax = static_cast<unsigned>(flag_or(c, "emax", options.emax, 1));
      std::vector<unsigned> e_list;
      for (unsigned e = 1; e <= std::max(1u, emax); ++e) e_list.push_back(e);

      ProbeReport r = regularity_probe(ring, config, e_list);
      ordered_json j;
      j["command"] = c.text;
      j["kind"] = "probe";
      ordered_json body = to_json(r);
      for (auto& [k, v] : body.items()) j[k] = v;
      std::string text = to_string(r.outcome) + " (" +
                         std::to_string(r.structured_checks) + " structured, " +
                         std::to_string(r.sampled_trials) + " sampled, " +
                         std::to_string(r.checks_run) + " checks; reduced=" +
                         (r.reduced ? "true" : "false") + ")\n";
      if (r.witness) {
        const auto& w = *r.witness->witness;
        text += "  " + to_string(r.witness->identity) + " I=" + w.ideals.front().to_string() +
                " x=" + (w.element ? w.element->to_string() : "-") +
                " e=" + std::to_string(w.e) + " separator " + w.separator.to_string() +
                " (in " + to_string(w.side) + " only)\n";
      }
      text += "  note: " + r.note + "\n";
      return {text, std::move(j), r.outcome == ProbeOutcome::NotRegular ? 2 : 0};
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw Error("line " + std::to_string(c.line) + " (" + c.name + "): " + e.what());
  }
  throw Error("line " + std::to_string(c.line) + ": unknown command '" + c.name + "'");
}

SessionResult run_session(const SessionSpec& spec, const RunOptions& options) {
  int exit_code = 0;
  std::string text;
  ordered_json results = ordered_json::array();
  for (const auto& c : spec.commands) {
    CommandResult r = run_command(spec, c, options);
    exit_code = std::max(exit_code, r.exit_code);
    text += "> " + c.text + "\n";
    std::string body = r.text;
    if (!body.empty() && body.back() != '\n') body += '\n';
    text += body;
    results.push_back(std::move(r.json));
  }
  if (options.json) {
    ordered_json doc;
    doc["ring"] = spec.ring->describe();
    doc["results"] = std::move(results);
    return {doc.dump(2) + "\n", exit_code};
  }
  return {text, exit_code};
}

}  // namespace ffor
