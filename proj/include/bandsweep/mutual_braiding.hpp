#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bandsweep/band.hpp"
#include "bandsweep/error.hpp"
#include "bandsweep/permutation.hpp"
#include "bandsweep/rewriting.hpp"
#include "bandsweep/word_graph.hpp"

namespace bandsweep {

// Admissibility test for cycling the leading letter during a sweep.  The
// test is deterministic and depends only on the current word and the number
// of cyclings already performed.
//
// Shipped presets are configuration, not geometry:
//   any            always admissible; the engine sanity baseline
//   adjacent-first leading letter must be an adjacent band a(s+1,s)
//   never          rejects every step; useful for exhaustion baselines
class SweepPredicate {
 public:
  using Test = std::function<bool(const BandWord& word, int step)>;

  static SweepPredicate any() {
    return SweepPredicate("any", [](const BandWord&, int) { return true; });
  }

  static SweepPredicate adjacent_first() {
    return SweepPredicate("adjacent-first", [](const BandWord& w, int) {
      return !w.empty() && w.letters().front().adjacent();
    });
  }

  static SweepPredicate never() {
    return SweepPredicate("never", [](const BandWord&, int) { return false; });
  }

  static SweepPredicate custom(std::string name, Test test) {
    return SweepPredicate(std::move(name), std::move(test));
  }

  static SweepPredicate by_name(std::string_view name) {
    if (name == "any") return any();
    if (name == "adjacent-first") return adjacent_first();
    if (name == "never") return never();
    fail(errc::syntax, "unknown predicate '" + std::string(name) + "' (known: any, adjacent-first, never)");
  }

  const std::string& name() const noexcept { return name_; }

  bool admits(const BandWord& word, int step) const { return test_(word, step); }

 private:
  SweepPredicate(std::string name, Test test) : name_(std::move(name)), test_(std::move(test)) {}

  std::string name_;
  Test test_;
};

// Replayable witness of a full admissible sweep: starting from initial, the
// moves apply in order, contain exactly k = |initial| cyclings, and return
// to the initial word.
struct SweepCertificate {
  BandWord initial;
  std::string predicate;
  std::vector<Move> moves;
};

struct Verdict {
  enum class Kind { mutually_braided, not_mutually_braided, indeterminate };

  Kind kind;
  std::optional<SweepCertificate> certificate;  // present exactly for mutually_braided
  std::size_t states_explored = 0;
  std::size_t budget = 0;
};

inline std::string_view verdict_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::mutually_braided: return "MutuallyBraided";
    case Verdict::Kind::not_mutually_braided: return "NotMutuallyBraided";
    case Verdict::Kind::indeterminate: return "Indeterminate";
  }
  return "UnknownVerdict";
}

inline constexpr std::size_t kDecideBudget = 10'000'000;

namespace detail {

struct SweepStateKey {
  WordKey key;
  int step;

  friend bool operator==(const SweepStateKey&, const SweepStateKey&) = default;
};

struct SweepStateHash {
  std::size_t operator()(const SweepStateKey& s) const noexcept {
    const std::size_t h = WordKeyHash{}(s.key);
    return h ^ (static_cast<std::size_t>(s.step) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  }
};

}  // namespace detail

// The decision search.  States are (word, cyclings performed); edges are the
// relation moves at fixed step plus Cycle when the predicate admits it, and
// the accepting state is the initial word after exactly k cyclings.  The
// state space is finite (at most #words-of-length-k times k+1), so within
// budget the verdict is exact.  The certificate returned is a shortest
// accepting move sequence, ties broken by serialized-move lexicographic
// order; both properties come from expanding each state's edges in sorted
// serialized order.
inline Verdict decide(const BandWord& w, const SweepPredicate& predicate, std::size_t budget = kDecideBudget) {
  if (w.empty()) fail(errc::empty_word, "decide requires a word of length >= 1");
  if (budget < 1) fail(errc::out_of_range, "budget must be >= 1");
  const int k = w.length();
  const WordKey initial_key(w);

  using detail::SweepStateKey;
  std::unordered_set<SweepStateKey, detail::SweepStateHash> visited;
  std::unordered_map<SweepStateKey, std::pair<SweepStateKey, Move>, detail::SweepStateHash> parent;
  std::deque<std::pair<BandWord, int>> queue;

  const SweepStateKey start{initial_key, 0};
  visited.insert(start);
  queue.emplace_back(w, 0);

  auto reconstruct = [&](SweepStateKey state) {
    std::vector<Move> moves;
    while (!(state == start)) {
      const auto& [prev, move] = parent.at(state);
      moves.push_back(move);
      state = prev;
    }
    std::reverse(moves.begin(), moves.end());
    return SweepCertificate{w, predicate.name(), std::move(moves)};
  };

  struct Edge {
    std::string label;
    Move move;
    BandWord word;
    int step;
  };

  while (!queue.empty()) {
    const auto [word, step] = std::move(queue.front());
    queue.pop_front();
    const SweepStateKey here{WordKey(word), step};

    std::vector<Edge> edges;
    for (auto& [move, next] : neighbors(word)) edges.push_back({to_string(move), move, std::move(next), step});
    if (step < k && predicate.admits(word, step))
      edges.push_back({to_string(Move::cycle()), Move::cycle(), cycle(word), step + 1});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.label < b.label; });

    for (auto& edge : edges) {
      SweepStateKey target{WordKey(edge.word), edge.step};
      if (visited.contains(target)) continue;
      if (visited.size() >= budget)
        return Verdict{Verdict::Kind::indeterminate, std::nullopt, visited.size(), budget};
      visited.insert(target);
      parent.emplace(target, std::make_pair(here, edge.move));
      if (target.step == k && target.key == initial_key)
        return Verdict{Verdict::Kind::mutually_braided, reconstruct(target), visited.size(), budget};
      queue.emplace_back(std::move(edge.word), edge.step);
    }
  }
  return Verdict{Verdict::Kind::not_mutually_braided, std::nullopt, visited.size(), budget};
}

struct ReplayResult {
  BandWord final_word;
  std::size_t cycle_count = 0;
  bool closes = false;       // final word equals the initial word
  bool admissible = true;    // every Cycle passed the predicate (vacuous without one)
  bool valid = false;        // closes && admissible && cycle_count == k
};

// Replays a certificate move by move.  Throws InapplicableMove (with the
// failing move index) if some move does not match, and CycleCountMismatch if
// the moves do not contain exactly k cyclings.  When a predicate is supplied
// every Cycle is re-checked against it at its step.
inline ReplayResult replay(const SweepCertificate& certificate, const SweepPredicate* predicate = nullptr) {
  BandWord word = certificate.initial;
  const std::size_t k = static_cast<std::size_t>(word.length());
  ReplayResult result{word, 0, false, true, false};
  for (std::size_t i = 0; i < certificate.moves.size(); ++i) {
    const Move& move = certificate.moves[i];
    if (move.kind == Move::Kind::cycle) {
      if (predicate && !predicate->admits(word, static_cast<int>(result.cycle_count))) result.admissible = false;
      ++result.cycle_count;
    }
    try {
      word = apply_move(word, move);
    } catch (const error& e) {
      throw error(e.code(), "move " + std::to_string(i) + " (" + to_string(move) + "): " + e.what());
    }
  }
  if (result.cycle_count != k)
    fail(errc::cycle_count_mismatch, "certificate has " + std::to_string(result.cycle_count) + " cyclings, word length is " +
                                         std::to_string(k));
  result.final_word = std::move(word);
  result.closes = result.final_word == certificate.initial;
  result.valid = result.closes && result.admissible;
  return result;
}

struct CensusRecord {
  BandWord representative;
  std::size_t orbit_size = 0;
  Verdict verdict;
  ClosureInvariants invariants{};
};

struct CensusResult {
  int strands = 0;
  std::size_t words = 0;  // enumerated words with k = n-1 and full-cycle permutation
  std::vector<CensusRecord> records;
};

// The unknot census on n strands: every positive band word of length n-1
// whose permutation is an n-cycle (equivalently, every minimal disc
// presentation), partitioned into conjugacy orbits, with decide() run on
// each orbit representative.  Records are sorted by representative key.
// threads > 1 distributes the per-orbit decisions; the output is identical
// to the sequential run.
inline CensusResult census(int n, const SweepPredicate& predicate, std::size_t budget = kDecideBudget,
                           unsigned threads = 1) {
  if (n < 2) fail(errc::out_of_range, "census requires n >= 2");
  CensusResult result;
  result.strands = n;

  std::vector<BandWord> unknot_words;
  for (auto& word : enumerate_words(n, n - 1))
    if (permutation(word).is_full_cycle()) unknot_words.push_back(std::move(word));
  result.words = unknot_words.size();

  // Ascending enumeration makes the first unseen member of each orbit its
  // least-key representative.
  std::unordered_set<WordKey, WordKeyHash> assigned;
  std::vector<OrbitReport> orbits;
  for (const auto& word : unknot_words) {
    if (assigned.contains(WordKey(word))) continue;
    auto orbit = conjugacy_orbit(word, budget);
    for (const auto& member : orbit.members) assigned.insert(member);
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::optional<CensusRecord>> slots(orbits.size());
  auto fill = [&](std::size_t i) {
    const auto& orbit = orbits[i];
    slots[i] = CensusRecord{
        orbit.representative,
        orbit.size(),
        decide(orbit.representative, predicate, budget),
        closure_invariants(orbit.representative),
    };
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(orbits.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < orbits.size(); ++i) fill(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < orbits.size(); i = next.fetch_add(1)) fill(i);
      });
    for (auto& worker : pool) worker.join();
  }
  result.records.reserve(slots.size());
  for (auto& slot : slots) result.records.push_back(std::move(*slot));
  return result;
}

// Regression guard: does decide() return the same outcome kind on every
// member of the orbit?  Expected for rotation-equivariant predicates, and a
// measured fact (not an assumption) for the others.
inline bool orbit_decide_consistency(const OrbitReport& orbit, const SweepPredicate& predicate,
                                     std::size_t budget = kDecideBudget) {
  std::optional<Verdict::Kind> first;
  for (const auto& member : orbit.members) {
    const auto verdict = decide(member.decode(), predicate, budget);
    if (!first) first = verdict.kind;
    if (verdict.kind != *first) return false;
  }
  return true;
}

// Certificate text: "n=<n>", the initial word, the predicate name, then one
// serialized move per line.  replay tooling appends a final "VALID" line.
inline std::string format_certificate(const SweepCertificate& certificate, bool valid_line = false) {
  std::string out = "n=" + std::to_string(certificate.initial.strands()) + "\n" +
                    format_band_word(certificate.initial) + "\n" + certificate.predicate + "\n";
  for (const auto& move : certificate.moves) out += to_string(move) + "\n";
  if (valid_line) out += "VALID\n";
  return out;
}

inline SweepCertificate parse_certificate(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 3) fail(errc::syntax, "certificate needs a strand line, a word line, and a predicate line");
  if (!lines[0].starts_with("n="))
    fail(errc::syntax, "certificate must start with \"n=<strands>\"");
  int n = 0;
  std::size_t pos = 2;
  if (!detail::parse_uint(lines[0], pos, n) || pos != lines[0].size())
    fail(errc::syntax, "bad strand count in \"" + std::string(lines[0]) + "\"");
  if (lines.back() == "VALID") lines.pop_back();
  SweepCertificate certificate{parse_band_word(lines[1], n), std::string(lines[2]), {}};
  for (std::size_t i = 3; i < lines.size(); ++i) certificate.moves.push_back(parse_move(lines[i]));
  return certificate;
}

// Census text: header "n=<n> words=<count> orbits=<count>", then one record
// per line with tab-separated representative, orbit size, verdict,
// components, euler.
inline std::string format_census(const CensusResult& census_result) {
  std::string out = "n=" + std::to_string(census_result.strands) + " words=" + std::to_string(census_result.words) +
                    " orbits=" + std::to_string(census_result.records.size()) + "\n";
  for (const auto& record : census_result.records) {
    out += format_band_word(record.representative) + "\t" + std::to_string(record.orbit_size) + "\t" +
           std::string(verdict_name(record.verdict.kind)) + "\t" + std::to_string(record.invariants.components) +
           "\t" + std::to_string(record.invariants.euler) + "\n";
  }
  return out;
}

}  // namespace bandsweep
