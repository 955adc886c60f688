#include "matchforge/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "matchforge/encode.hpp"
#include "matchforge/generate.hpp"
#include "matchforge/solve.hpp"

namespace matchforge::cli {

namespace {

using nlohmann::json;

// Raised for unreadable files and malformed flag values.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path, std::istream& in) {
  try {
    return parse_instance(read_source(path, in));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

EnumerationLimits limits_from_env() {
  EnumerationLimits limits;
  if (const char* v = std::getenv("MATCHFORGE_MAX_PERSONS")) {
    int cap = 0;
    const std::string_view s(v);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec != std::errc{} || ptr != s.data() + s.size() || cap < 0)
      throw InputError("MATCHFORGE_MAX_PERSONS must be a non-negative integer");
    limits.max_persons = cap;
  }
  return limits;
}

Criterion criterion_from(const std::string& s) {
  if (auto c = parse_criterion(s)) return *c;
  throw InputError("unknown criterion '" + s + "'");
}

Direction direction_from(const std::string& s) { return s == "max" ? Direction::Maximize : Direction::Minimize; }

void self_check(const Instance& inst, const Matching& m) {
  if (!is_weakly_stable(inst, m)) throw InternalError("refusing to print an unstable matching:\n" + format_matching(m));
}

json pairs_json(const Matching& m) {
  json out = json::array();
  for (const Pair& p : m.pairs()) out.push_back({to_string(p.first), to_string(p.second)});
  return out;
}

json costs_json(const CostReport& r) {
  json out;
  for (Criterion c : kAllCriteria) out[std::string(to_string(c))] = r.value(c);
  return out;
}

std::string costs_text(const CostReport& r) {
  std::string out;
  for (Criterion c : kAllCriteria) {
    if (!out.empty()) out += ' ';
    out += std::string(to_string(c)) + "=" + std::to_string(r.value(c));
  }
  return out;
}

bool cost_sensitive(Criterion c) { return c != Criterion::Singles; }

void warn_divergence(const Instance& inst, Criterion c, std::ostream& err) {
  if (cost_sensitive(c) && cost_encoding_diverges(inst))
    err << "warning: the program's cost rules charge group indices, which differ from the rank costs of this "
           "instance\n";
}

int boolean_result(bool value, bool records, std::ostream& out) {
  if (records)
    out << json{{"result", value}}.dump() << "\n";
  else
    out << (value ? "true" : "false") << "\n";
  return value ? kExitOk : kExitFalse;
}

int parse_index(const std::string& text, Side side) {
  try {
    const PersonRef x = encode::parse_person(text);
    if (x.side == side) return x.index;
  } catch (const ParseError&) {
  }
  throw InputError("expected " + std::string(side == Side::Man ? "a man such as m1" : "a woman such as w1") +
                   ", got '" + text + "'");
}

TieBreakPolicy policy_from(const std::string& s) {
  if (s == "asc") return TieBreakPolicy::ascending();
  if (s.rfind("seed:", 0) == 0) {
    std::uint64_t seed = 0;
    const char* b = s.data() + 5;
    const char* e = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(b, e, seed);
    if (b != e && ec == std::errc{} && ptr == e) return TieBreakPolicy::seeded(seed);
  }
  throw InputError("tie-break must be 'asc' or 'seed:N', got '" + s + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weakly stable matchings with ties and unacceptable partners", "matchforge"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));

  std::string file, second;
  std::string proposing = "men", tiebreak = "asc", criterion, direction = "min", kind, output;
  std::vector<std::string> pair;
  bool optimal = false, at_least = false, at_most = false;
  int cardinality = -1;
  int gen_men = 3, gen_women = 3;
  double ties = 0.0, unacc = 0.0;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "Print one weakly stable matching (deferred acceptance)");
  solve->add_option("FILE", file, "Instance file, '-' for stdin")->required();
  solve->add_option("--proposing", proposing)->check(CLI::IsMember({"men", "women"}));
  solve->add_option("--tiebreak", tiebreak, "asc or seed:N");

  auto* enumerate = app.add_subcommand("enumerate", "Print every weakly stable matching with its costs");
  enumerate->add_option("FILE", file)->required();

  auto* optimize = app.add_subcommand("optimize", "Print the optimal value and all optimal matchings");
  optimize->add_option("FILE", file)->required();
  optimize->add_option("--criterion", criterion)->required();
  optimize->add_option("--direction", direction)->check(CLI::IsMember({"min", "max"}));

  auto* verify = app.add_subcommand("verify", "Report blocking pairs and blocking individuals of a matching");
  verify->add_option("FILE", file)->required();
  verify->add_option("MATCHFILE", second)->required();

  auto* encode_cmd = app.add_subcommand("encode", "Write the answer set program of an instance");
  encode_cmd->add_option("FILE", file)->required();
  encode_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"normal", "disjunctive", "opt"}));
  encode_cmd->add_option("--criterion", criterion);
  encode_cmd->add_option("--direction", direction)->check(CLI::IsMember({"min", "max"}));
  encode_cmd->add_option("-o,--output", output);

  auto* decode = app.add_subcommand("decode", "Map solver answer sets back to matchings");
  decode->add_option("FILE", file)->required();
  decode->add_option("ANSWERS", second)->required();
  decode->add_option("--criterion", criterion);

  auto* query = app.add_subcommand("query", "Decide pair stability or cardinality bounds");
  query->add_option("FILE", file)->required();
  auto* pair_opt = query->add_option("--pair", pair)->expected(2);
  query->add_flag("--optimal", optimal);
  query->add_option("--criterion", criterion);
  query->add_option("--direction", direction)->check(CLI::IsMember({"min", "max"}));
  auto* card_opt = query->add_option("--cardinality", cardinality)->check(CLI::NonNegativeNumber);
  query->add_flag("--at-least", at_least);
  query->add_flag("--at-most", at_most);
  pair_opt->excludes(card_opt);

  auto* gen = app.add_subcommand("gen", "Print a random instance");
  gen->add_option("--men", gen_men)->check(CLI::Range(0, kMaxSideSize));
  gen->add_option("--women", gen_women)->check(CLI::Range(0, kMaxSideSize));
  gen->add_option("--ties", ties, "Probability that adjacent ranks merge")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--unacc", unacc, "Probability that a partner is unacceptable")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool records = format == "records";
  auto usage = [&](const std::string& what) {
    err << "error: " << what << "\n";
    return kExitUsage;
  };

  try {
    if (gen->parsed()) {
      out << serialize_instance(random_instance(gen_men, gen_women, ties, unacc, seed));
      return kExitOk;
    }

    const Instance inst = load_instance(file, in);

    if (solve->parsed()) {
      const Matching m =
          deferred_acceptance(inst, proposing == "men" ? Proposer::Men : Proposer::Women, policy_from(tiebreak));
      self_check(inst, m);
      if (records)
        out << json{{"matching", pairs_json(m)}}.dump() << "\n";
      else
        out << format_matching(m);
      return kExitOk;
    }

    if (enumerate->parsed()) {
      const auto analysis = enumerate_stable(inst, limits_from_env());
      for (std::size_t k = 0; k < analysis.all_stable.size(); ++k) {
        const Matching& m = analysis.all_stable[k];
        self_check(inst, m);
        if (records) {
          out << json{{"index", k + 1}, {"matching", pairs_json(m)}, {"costs", costs_json(analysis.costs[k])}}.dump()
              << "\n";
        } else {
          out << "matching " << k + 1 << ": " << costs_text(analysis.costs[k]) << "\n" << format_matching(m);
        }
      }
      if (!records) out << analysis.all_stable.size() << " weakly stable matching(s)\n";
      return kExitOk;
    }

    if (optimize->parsed()) {
      const Criterion c = criterion_from(criterion);
      const Direction d = direction_from(direction);
      const auto result = matchforge::optimize(inst, c, d, limits_from_env());
      for (const auto& m : result.witnesses) {
        self_check(inst, m);
        if (criterion_cost(inst, m, c) != result.value) throw InternalError("witness cost does not match optimum");
      }
      if (records) {
        json w = json::array();
        for (const auto& m : result.witnesses) w.push_back(pairs_json(m));
        out << json{{"criterion", criterion}, {"direction", direction}, {"value", result.value}, {"witnesses", w}}.dump()
            << "\n";
      } else {
        out << criterion << " " << direction << " " << result.value << "\n";
        for (std::size_t k = 0; k < result.witnesses.size(); ++k)
          out << "witness " << k + 1 << ":\n" << format_matching(result.witnesses[k]);
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      Matching m;
      try {
        m = parse_matching(read_source(second, in));
      } catch (const ParseError& e) {
        throw InputError(second + ": " + e.what());
      }
      const BlockingReport report = blocking_report(inst, m);
      if (records) {
        json bp = json::array(), bi = json::array();
        for (auto [i, j] : report.blocking_pairs) bp.push_back({to_string(man(i)), to_string(woman(j))});
        for (PersonRef x : report.blocking_individuals) bi.push_back(to_string(x));
        out << json{{"stable", report.empty()}, {"blocking_pairs", bp}, {"blocking_individuals", bi}}.dump() << "\n";
      } else {
        for (auto [i, j] : report.blocking_pairs)
          out << "blocking pair " << to_string(man(i)) << " " << to_string(woman(j)) << "\n";
        for (PersonRef x : report.blocking_individuals) out << "blocking individual " << to_string(x) << "\n";
        out << (report.empty() ? "true" : "false") << "\n";
      }
      return report.empty() ? kExitOk : kExitFalse;
    }

    if (encode_cmd->parsed()) {
      std::string text;
      if (kind == "normal") {
        text = asp::format_program(encode::encode_normal(inst));
      } else if (kind == "disjunctive") {
        text = asp::format_program(encode::encode_disjunctive(inst));
      } else {
        if (criterion.empty()) return usage("--kind opt needs --criterion");
        const Criterion c = criterion_from(criterion);
        warn_divergence(inst, c, err);
        text = encode::encode_optimization(inst, c, direction_from(direction));
      }
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream file_out(output, std::ios::binary);
        if (!(file_out << text)) throw InputError("cannot write " + output);
      }
      return kExitOk;
    }

    if (decode->parsed()) {
      std::optional<Criterion> c;
      if (!criterion.empty()) c = criterion_from(criterion);
      const auto sets = encode::parse_answer_sets(read_source(second, in));
      for (std::size_t k = 0; k < sets.size(); ++k) {
        const auto answer = encode::decode_answer(inst, sets[k], c);
        if (!is_weakly_stable(inst, answer.matching))
          throw DomainError("answer " + std::to_string(k + 1) + " is not a weakly stable matching");
        if (records) {
          json value = answer.criterion_value ? json(*answer.criterion_value) : json(nullptr);
          out << json{{"index", k + 1}, {"matching", pairs_json(answer.matching)}, {"value", value}}.dump() << "\n";
        } else {
          out << "answer " << k + 1;
          if (answer.criterion_value) out << ": " << criterion << "=" << *answer.criterion_value;
          out << "\n" << format_matching(answer.matching);
        }
      }
      return kExitOk;
    }

    if (query->parsed()) {
      const auto limits = limits_from_env();
      if (!pair.empty()) {
        const int i = parse_index(pair[0], Side::Man);
        const int j = parse_index(pair[1], Side::Woman);
        if (!optimal) return boolean_result(pair_is_stable(inst, i, j, limits), records, out);
        if (criterion.empty()) return usage("--optimal needs --criterion");
        const Criterion c = criterion_from(criterion);
        return boolean_result(pair_is_optimally_stable(inst, i, j, c, direction_from(direction), limits), records, out);
      }
      if (cardinality >= 0) {
        if (at_least == at_most) return usage("--cardinality needs exactly one of --at-least and --at-most");
        const auto bound = at_least ? CardinalityBound::AtLeastMatched : CardinalityBound::AtMostMatched;
        return boolean_result(exists_stable_with_cardinality(inst, cardinality, bound, limits), records, out);
      }
      return usage("query needs --pair or --cardinality");
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return usage("no command");
}

}  // namespace matchforge::cli
