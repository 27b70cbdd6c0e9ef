#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bandsweep/band.hpp"
#include "bandsweep/error.hpp"
#include "bandsweep/rewriting.hpp"

namespace bandsweep {

// Ordinal of a(t,s) among all bands, row by row: g(t,s) = (t-1)(t-2)/2 + (s-1).
// On n strands the ordinals are 0 .. n(n-1)/2 - 1.
inline int generator_ordinal(BandGenerator g) { return (g.t() - 1) * (g.t() - 2) / 2 + (g.s() - 1); }

inline BandGenerator generator_from_ordinal(int ordinal) {
  if (ordinal < 0) fail(errc::out_of_range, "generator ordinal must be >= 0");
  int t = 2;
  while ((t * (t - 1)) / 2 <= ordinal) ++t;  // first t with base(t+1) > ordinal
  const int s = ordinal - (t - 1) * (t - 2) / 2 + 1;
  return BandGenerator(t, s);
}

inline int generator_count(int n) { return n * (n - 1) / 2; }

// Injective encoding of (n, letter sequence) as the sequence of generator
// ordinals, compared digit-wise.  Words of equal strand count and length
// order lexicographically by first differing letter.
class WordKey {
 public:
  explicit WordKey(const BandWord& w) : strands_(w.strands()) {
    digits_.reserve(w.letters().size());
    for (const auto& g : w.letters()) digits_.push_back(static_cast<std::uint32_t>(generator_ordinal(g)));
  }

  int strands() const noexcept { return strands_; }
  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }

  BandWord decode() const {
    std::vector<BandGenerator> letters;
    letters.reserve(digits_.size());
    for (auto d : digits_) letters.push_back(generator_from_ordinal(static_cast<int>(d)));
    return BandWord(strands_, std::move(letters));
  }

  friend bool operator==(const WordKey&, const WordKey&) = default;

  friend bool operator<(const WordKey& a, const WordKey& b) {
    if (a.strands_ != b.strands_) return a.strands_ < b.strands_;
    if (a.digits_.size() != b.digits_.size()) return a.digits_.size() < b.digits_.size();
    return a.digits_ < b.digits_;
  }

 private:
  int strands_;
  std::vector<std::uint32_t> digits_;
};

struct WordKeyHash {
  std::size_t operator()(const WordKey& k) const noexcept {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(k.strands()));
    for (auto d : k.digits()) mix(d);
    return static_cast<std::size_t>(h);
  }
};

inline WordKey canonical_key(const BandWord& w) { return WordKey(w); }

// All positive band words on n strands of length k, in ascending key order.
// Intended for desk-scale enumeration; the count is (n(n-1)/2)^k.
inline std::vector<BandWord> enumerate_words(int n, int k) {
  if (n < 1) fail(errc::out_of_range, "strand count must be >= 1");
  if (k < 0) fail(errc::out_of_range, "length must be >= 0");
  const int g = generator_count(n);
  std::vector<BandWord> out;
  if (k == 0) {
    out.push_back(BandWord(n));
    return out;
  }
  if (g == 0) return out;  // no letters exist on one strand
  std::vector<BandGenerator> alphabet;
  alphabet.reserve(static_cast<std::size_t>(g));
  for (int o = 0; o < g; ++o) alphabet.push_back(generator_from_ordinal(o));
  std::vector<int> odometer(static_cast<std::size_t>(k), 0);
  for (;;) {
    std::vector<BandGenerator> letters;
    letters.reserve(static_cast<std::size_t>(k));
    for (int d : odometer) letters.push_back(alphabet[static_cast<std::size_t>(d)]);
    out.push_back(BandWord(n, std::move(letters)));
    int i = k - 1;
    while (i >= 0 && odometer[static_cast<std::size_t>(i)] == g - 1) odometer[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++odometer[static_cast<std::size_t>(i)];
  }
  return out;
}

inline constexpr std::size_t kDefaultBudget = 1'000'000;

// Tie-breaking knob for the closure searches.  The member set must not
// depend on it; tests run both to prove exploration-order independence.
enum class ExplorationOrder { canonical, reversed };

namespace detail {

struct ClosureResult {
  std::vector<WordKey> members;  // ascending
  bool exhausted = false;
  bool target_found = false;
};

// Breadth-first closure of {start} under relation moves (and Cycle when
// with_cycle).  budget caps the number of distinct words discovered; hitting
// the cap sets exhausted instead of silently truncating.  A non-null target
// stops the search as soon as that key is discovered.
inline ClosureResult closure(const BandWord& start, bool with_cycle, std::size_t budget, const WordKey* target,
                             ExplorationOrder order) {
  if (budget < 1) fail(errc::out_of_range, "budget must be >= 1");
  ClosureResult result;
  std::unordered_set<WordKey, WordKeyHash> visited;
  std::deque<BandWord> queue;

  const WordKey start_key(start);
  visited.insert(start_key);
  queue.push_back(start);
  if (target && start_key == *target) {
    result.target_found = true;
  } else {
    while (!queue.empty() && !result.target_found && !result.exhausted) {
      const BandWord word = std::move(queue.front());
      queue.pop_front();
      std::vector<BandWord> successors;
      for (auto& [move, next] : neighbors(word)) successors.push_back(std::move(next));
      if (with_cycle && !word.empty()) successors.push_back(cycle(word));
      if (order == ExplorationOrder::reversed) std::reverse(successors.begin(), successors.end());
      for (auto& next : successors) {
        WordKey key(next);
        if (visited.contains(key)) continue;
        if (visited.size() >= budget) {
          result.exhausted = true;
          break;
        }
        const bool found = target && key == *target;
        visited.insert(std::move(key));
        queue.push_back(std::move(next));
        if (found) {
          result.target_found = true;
          break;
        }
      }
    }
  }
  result.members.assign(visited.begin(), visited.end());
  std::sort(result.members.begin(), result.members.end());
  return result;
}

}  // namespace detail

struct OrbitReport {
  BandWord representative;  // decode of the least member key
  std::vector<WordKey> members;
  bool budget_exhausted = false;

  std::size_t size() const noexcept { return members.size(); }
};

namespace detail {

inline OrbitReport make_report(ClosureResult&& r) {
  OrbitReport report{r.members.front().decode(), std::move(r.members), r.exhausted};
  return report;
}

}  // namespace detail

// Reachability class of w under relation moves only.  Relation moves
// preserve length, so the class is finite; within budget the closure is
// exact and independent of exploration order.
inline OrbitReport equality_class(const BandWord& w, std::size_t budget = kDefaultBudget,
                                  ExplorationOrder order = ExplorationOrder::canonical) {
  return detail::make_report(detail::closure(w, /*with_cycle=*/false, budget, nullptr, order));
}

// Reachability class under relation moves plus Cycle: the conjugacy orbit of
// the closed braid at fixed length.
inline OrbitReport conjugacy_orbit(const BandWord& w, std::size_t budget = kDefaultBudget,
                                   ExplorationOrder order = ExplorationOrder::canonical) {
  return detail::make_report(detail::closure(w, /*with_cycle=*/true, budget, nullptr, order));
}

// Positive-word equality in the band monoid: true iff v is reachable from u
// by relation moves.  nullopt means the budget ran out before either finding
// v or exhausting the class, so the answer is indeterminate.
inline std::optional<bool> monoid_equal(const BandWord& u, const BandWord& v,
                                        std::size_t budget = kDefaultBudget) {
  if (u.strands() != v.strands()) fail(errc::strand_mismatch, "comparing words on different strand counts");
  if (u.length() != v.length()) return false;  // relation moves preserve length
  const WordKey target(v);
  const auto r = detail::closure(u, /*with_cycle=*/false, budget, &target, ExplorationOrder::canonical);
  if (r.target_found) return true;
  if (r.exhausted) return std::nullopt;
  return false;
}

struct MinKeyResult {
  WordKey key;
  bool budget_exhausted = false;
};

// Least key over the conjugacy orbit; exact when the orbit fit in budget.
inline MinKeyResult min_orbit_key(const BandWord& w, std::size_t budget = kDefaultBudget) {
  auto orbit = conjugacy_orbit(w, budget);
  return MinKeyResult{std::move(orbit.members.front()), orbit.budget_exhausted};
}

// Dump format: header "n=<n> k=<k> size=<m> exact=<bool>", then one word per
// line in ascending key order.
inline std::string format_orbit(const OrbitReport& report) {
  std::string out = "n=" + std::to_string(report.representative.strands()) +
                    " k=" + std::to_string(report.representative.length()) +
                    " size=" + std::to_string(report.size()) +
                    " exact=" + (report.budget_exhausted ? "false" : "true") + "\n";
  for (const auto& key : report.members) out += format_band_word(key.decode()) + "\n";
  return out;
}

}  // namespace bandsweep
