#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bandsweep/artin_oracle.hpp"
#include "bandsweep/band.hpp"
#include "bandsweep/error.hpp"
#include "bandsweep/mutual_braiding.hpp"
#include "bandsweep/permutation.hpp"
#include "bandsweep/rewriting.hpp"
#include "bandsweep/word_graph.hpp"

namespace bandsweep::cli {

// Decision subcommands map their verdicts onto these codes exactly:
// yes/success 0, no 1, indeterminate (budget ran out) 2, usage 64,
// parse/data 65.
namespace exit_code {
inline constexpr int yes = 0;
inline constexpr int no = 1;
inline constexpr int indeterminate = 2;
inline constexpr int usage = 64;
inline constexpr int data = 65;
}  // namespace exit_code

namespace detail {

using nlohmann::json;

inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline json verdict_json(const Verdict& verdict) {
  json j;
  j["verdict"] = std::string(verdict_name(verdict.kind));
  switch (verdict.kind) {
    case Verdict::Kind::mutually_braided: {
      json moves = json::array();
      for (const auto& move : verdict.certificate->moves) moves.push_back(to_string(move));
      j["certificate"] = std::move(moves);
      j["predicate"] = verdict.certificate->predicate;
      j["initial"] = format_band_word(verdict.certificate->initial);
      j["states_explored"] = verdict.states_explored;
      break;
    }
    case Verdict::Kind::not_mutually_braided:
      j["states_explored"] = verdict.states_explored;
      break;
    case Verdict::Kind::indeterminate:
      j["budget"] = verdict.budget;
      break;
  }
  return j;
}

inline int verdict_exit(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::mutually_braided: return exit_code::yes;
    case Verdict::Kind::not_mutually_braided: return exit_code::no;
    case Verdict::Kind::indeterminate: return exit_code::indeterminate;
  }
  return exit_code::data;
}

inline std::string verdict_text(const Verdict& verdict) {
  switch (verdict.kind) {
    case Verdict::Kind::mutually_braided: {
      std::string moves;
      for (const auto& move : verdict.certificate->moves) {
        if (!moves.empty()) moves += ' ';
        moves += to_string(move);
      }
      return "MutuallyBraided\t" + moves;
    }
    case Verdict::Kind::not_mutually_braided:
      return "NotMutuallyBraided\tstates=" + std::to_string(verdict.states_explored);
    case Verdict::Kind::indeterminate:
      return "Indeterminate\tbudget=" + std::to_string(verdict.budget);
  }
  return {};
}

// Worst result wins for batch exits: indeterminate over no over yes.
inline int aggregate_exit(int a, int b) {
  if (a == exit_code::indeterminate || b == exit_code::indeterminate) return exit_code::indeterminate;
  if (a == exit_code::no || b == exit_code::no) return exit_code::no;
  return exit_code::yes;
}

}  // namespace detail

// Runs one CLI invocation.  args excludes the program name; in/out/err stand
// in for the process streams so invocations are testable in-process.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using detail::json;

  CLI::App app{"band-generator braid words: rewriting orbits, unknot censuses, sweep certificates"};
  app.name("bandsweep");
  app.require_subcommand(1);

  struct {
    int n = 0;
    std::size_t budget = 0;
    std::string predicate = "any";
    std::string to = "artin";
    unsigned threads = 1;
    bool json_mode = false;
    std::string word;
    std::string second;
    bool has_second = false;
    std::string file;
  } opt;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "ambient strand count")->required()->check(CLI::PositiveNumber);
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json_mode, "emit one JSON object"); };
  auto add_budget = [&](CLI::App* sub, std::size_t def) {
    opt.budget = def;
    sub->add_option("--budget", opt.budget, "max states to explore")->check(CLI::PositiveNumber);
  };
  auto add_predicate = [&](CLI::App* sub) {
    sub->add_option("--predicate", opt.predicate, "sweep predicate: any, adjacent-first, never");
  };

  auto* convert = app.add_subcommand("convert", "expand a word into Artin generators (or canonical band form)");
  add_n(convert);
  add_json(convert);
  convert->add_option("--to", opt.to, "output form")->check(CLI::IsMember({"artin", "band"}));
  convert->add_option("word", opt.word, "band word")->required();

  auto* perm = app.add_subcommand("perm", "underlying permutation of a word");
  add_n(perm);
  add_json(perm);
  perm->add_option("word", opt.word, "band word")->required();

  auto* invariants = app.add_subcommand("invariants", "closure invariants: components, euler, exponent sum");
  add_n(invariants);
  add_json(invariants);
  invariants->add_option("word", opt.word, "band word")->required();

  auto* neighbors_cmd = app.add_subcommand("neighbors", "all relation moves applicable to a word");
  add_n(neighbors_cmd);
  add_json(neighbors_cmd);
  neighbors_cmd->add_option("word", opt.word, "band word")->required();

  auto* equal = app.add_subcommand("equal", "are two positive words equal in the band monoid?");
  add_n(equal);
  add_json(equal);
  add_budget(equal, kDefaultBudget);
  equal->add_option("word", opt.word, "first band word")->required();
  equal->add_option("other", opt.second, "second band word (omit to compare against stdin lines)");

  auto* conjugate = app.add_subcommand("conjugate", "conjugacy orbit under relation moves plus cycling");
  add_n(conjugate);
  add_json(conjugate);
  add_budget(conjugate, kDefaultBudget);
  conjugate->add_option("word", opt.word, "band word")->required();

  auto* decide_cmd = app.add_subcommand("decide", "search for a full admissible sweep certificate");
  add_n(decide_cmd);
  add_json(decide_cmd);
  add_budget(decide_cmd, kDecideBudget);
  add_predicate(decide_cmd);
  decide_cmd->add_option("word", opt.word, "band word (omit to read one word per stdin line)");

  auto* replay_cmd = app.add_subcommand("replay", "validate a sweep certificate file");
  add_json(replay_cmd);
  add_predicate(replay_cmd);
  replay_cmd->add_option("file", opt.file, "certificate file ('-' or omitted: stdin)");

  auto* census_cmd = app.add_subcommand("census", "decide every minimal unknot presentation on n strands");
  add_n(census_cmd);
  add_json(census_cmd);
  add_budget(census_cmd, kDecideBudget);
  add_predicate(census_cmd);
  census_cmd->add_option("--threads", opt.threads, "worker threads for per-orbit decisions")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("bandsweep");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? exit_code::yes : exit_code::usage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? exit_code::yes : exit_code::usage;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage;
  }
  opt.has_second = equal->count("other") > 0;

  auto emit = [&](const json& j) { out << j.dump() << "\n"; };

  try {
    if (*convert) {
      const BandWord word = parse_band_word(opt.word, opt.n);
      if (opt.to == "artin") {
        const ArtinWord artin = band_to_artin(word);
        if (opt.json_mode) {
          json letters = json::array();
          for (const auto& l : artin.letters()) letters.push_back(l.sign * l.index);
          emit(json{{"n", opt.n}, {"artin", std::move(letters)}});
        } else {
          out << format_artin_word(artin) << "\n";
        }
      } else {
        if (opt.json_mode)
          emit(json{{"n", opt.n}, {"band", format_band_word(word)}});
        else
          out << format_band_word(word) << "\n";
      }
      return exit_code::yes;
    }

    if (*perm) {
      const Permutation p = permutation(parse_band_word(opt.word, opt.n));
      if (opt.json_mode) {
        emit(json{{"n", opt.n}, {"images", p.images()}});
      } else {
        std::string line;
        for (int image : p.images()) {
          if (!line.empty()) line += ' ';
          line += std::to_string(image);
        }
        out << line << "\n";
      }
      return exit_code::yes;
    }

    if (*invariants) {
      const BandWord word = parse_band_word(opt.word, opt.n);
      const ClosureInvariants inv = closure_invariants(word);
      const bool unknot = is_unknot_presentation(word);
      if (opt.json_mode) {
        emit(json{{"components", inv.components},
                  {"euler", inv.euler},
                  {"exponent_sum", inv.exponent_sum},
                  {"unknot", unknot}});
      } else {
        out << "components=" << inv.components << " euler=" << inv.euler << " e=" << inv.exponent_sum
            << " unknot=" << (unknot ? "true" : "false") << "\n";
      }
      return exit_code::yes;
    }

    if (*neighbors_cmd) {
      const BandWord word = parse_band_word(opt.word, opt.n);
      const auto moves = neighbors(word);
      if (opt.json_mode) {
        json list = json::array();
        for (const auto& [move, next] : moves)
          list.push_back(json{{"move", to_string(move)}, {"word", format_band_word(next)}});
        emit(json{{"n", opt.n}, {"word", format_band_word(word)}, {"neighbors", std::move(list)}});
      } else {
        for (const auto& [move, next] : moves) out << to_string(move) << "\t" << format_band_word(next) << "\n";
      }
      return exit_code::yes;
    }

    if (*equal) {
      const BandWord u = parse_band_word(opt.word, opt.n);
      std::vector<std::string> others;
      if (opt.has_second)
        others.push_back(opt.second);
      else
        others = detail::read_lines(in);
      int exit = exit_code::yes;
      json results = json::array();
      for (const auto& text : others) {
        const auto answer = monoid_equal(u, parse_band_word(text, opt.n), opt.budget);
        int line_exit;
        json j;
        if (!answer.has_value()) {
          line_exit = exit_code::indeterminate;
          j = json{{"indeterminate", true}, {"budget", opt.budget}};
          if (!opt.json_mode) out << "indeterminate\n";
        } else {
          line_exit = *answer ? exit_code::yes : exit_code::no;
          j = json{{"equal", *answer}};
          if (!opt.json_mode) out << (*answer ? "true" : "false") << "\n";
        }
        results.push_back(std::move(j));
        exit = detail::aggregate_exit(exit, line_exit);
      }
      if (opt.json_mode) emit(opt.has_second ? results[0] : json{{"results", std::move(results)}});
      return exit;
    }

    if (*conjugate) {
      const OrbitReport orbit = conjugacy_orbit(parse_band_word(opt.word, opt.n), opt.budget);
      if (opt.json_mode) {
        json members = json::array();
        for (const auto& key : orbit.members) members.push_back(format_band_word(key.decode()));
        emit(json{{"n", orbit.representative.strands()},
                  {"k", orbit.representative.length()},
                  {"size", orbit.size()},
                  {"exact", !orbit.budget_exhausted},
                  {"representative", format_band_word(orbit.representative)},
                  {"members", std::move(members)}});
      } else {
        out << format_orbit(orbit);
      }
      return orbit.budget_exhausted ? exit_code::indeterminate : exit_code::yes;
    }

    if (*decide_cmd) {
      const SweepPredicate predicate = [&] {
        try {
          return SweepPredicate::by_name(opt.predicate);
        } catch (const error& e) {
          err << "usage error: " << e.what() << "\n";
          throw CLI::RuntimeError(exit_code::usage);
        }
      }();
      const bool batch = decide_cmd->count("word") == 0;
      std::vector<std::string> words;
      if (batch)
        words = detail::read_lines(in);
      else
        words.push_back(opt.word);
      int exit = exit_code::yes;
      json results = json::array();
      for (const auto& text : words) {
        const Verdict verdict = decide(parse_band_word(text, opt.n), predicate, opt.budget);
        if (opt.json_mode) {
          results.push_back(detail::verdict_json(verdict));
        } else if (!batch && verdict.kind == Verdict::Kind::mutually_braided) {
          out << format_certificate(*verdict.certificate);
        } else {
          out << detail::verdict_text(verdict) << "\n";
        }
        exit = detail::aggregate_exit(exit, detail::verdict_exit(verdict.kind));
      }
      if (opt.json_mode) emit(batch ? json{{"results", std::move(results)}} : results[0]);
      return exit;
    }

    if (*replay_cmd) {
      std::string text;
      if (opt.file.empty() || opt.file == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
      } else {
        std::ifstream file(opt.file);
        if (!file) {
          err << "cannot open certificate file '" << opt.file << "'\n";
          return exit_code::data;
        }
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
      }
      const SweepCertificate certificate = parse_certificate(text);

      std::optional<SweepPredicate> predicate;
      if (replay_cmd->count("--predicate") > 0) {
        try {
          predicate = SweepPredicate::by_name(opt.predicate);
        } catch (const error& e) {
          err << "usage error: " << e.what() << "\n";
          return exit_code::usage;
        }
      } else {
        try {
          predicate = SweepPredicate::by_name(certificate.predicate);
        } catch (const error&) {
          err << "note: predicate '" << certificate.predicate << "' is not a shipped preset; "
              << "cycling admissibility not re-checked\n";
        }
      }

      std::optional<ReplayResult> replayed;
      try {
        replayed = replay(certificate, predicate ? &*predicate : nullptr);
      } catch (const error& e) {
        if (e.code() == errc::inapplicable_move || e.code() == errc::cycle_count_mismatch ||
            e.code() == errc::empty_word) {
          err << "INVALID: " << e.what() << "\n";
          if (opt.json_mode) emit(json{{"valid", false}, {"reason", e.what()}});
          return exit_code::no;
        }
        throw;
      }
      const ReplayResult& result = *replayed;
      if (opt.json_mode) {
        emit(json{{"valid", result.valid},
                  {"n", certificate.initial.strands()},
                  {"initial", format_band_word(certificate.initial)},
                  {"predicate", certificate.predicate},
                  {"cycles", result.cycle_count},
                  {"closes", result.closes},
                  {"admissible", result.admissible},
                  {"final", format_band_word(result.final_word)}});
      } else if (result.valid) {
        out << format_certificate(certificate, /*valid_line=*/true);
      }
      if (!result.valid) {
        err << "INVALID: " << (!result.closes ? "final word differs from the initial word" : "inadmissible cycling")
            << "\n";
        return exit_code::no;
      }
      return exit_code::yes;
    }

    if (*census_cmd) {
      const SweepPredicate predicate = [&] {
        try {
          return SweepPredicate::by_name(opt.predicate);
        } catch (const error& e) {
          err << "usage error: " << e.what() << "\n";
          throw CLI::RuntimeError(exit_code::usage);
        }
      }();
      const CensusResult result = census(opt.n, predicate, opt.budget, opt.threads);
      if (opt.json_mode) {
        json records = json::array();
        for (const auto& record : result.records) {
          json j{{"representative", format_band_word(record.representative)},
                 {"orbit_size", record.orbit_size},
                 {"verdict", std::string(verdict_name(record.verdict.kind))},
                 {"components", record.invariants.components},
                 {"euler", record.invariants.euler}};
          records.push_back(std::move(j));
        }
        emit(json{{"n", result.strands},
                  {"words", result.words},
                  {"orbits", result.records.size()},
                  {"predicate", predicate.name()},
                  {"records", std::move(records)}});
      } else {
        out << format_census(result);
      }
      return exit_code::yes;
    }
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const error& e) {
    err << e.what() << "\n";
    return exit_code::data;
  }
  err << "no subcommand selected\n";
  return exit_code::usage;
}

}  // namespace bandsweep::cli
