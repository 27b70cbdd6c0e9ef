#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bandsweep/band.hpp"
#include "bandsweep/error.hpp"

namespace bandsweep {

// One elementary step on a band word.  Relation moves rewrite an adjacent
// pair in place and preserve the group element; Cycle rotates the first
// letter to the end and only preserves the closed braid.  The two kinds are
// never mixed: neighbors() enumerates relation moves only.
//
// Serialized forms: "C@i", "T@i>0", "T@i>1", "R".
struct Move {
  enum class Kind { commute, triple, cycle };

  Kind kind;
  int position = 0;  // 0-based index of the left letter of the affected pair
  int target = 0;    // which of the two alternative triple forms replaces the pair

  static Move commute(int position) { return Move{Kind::commute, position, 0}; }
  static Move triple(int position, int target) { return Move{Kind::triple, position, target}; }
  static Move cycle() { return Move{Kind::cycle, 0, 0}; }

  friend bool operator==(const Move&, const Move&) = default;
};

inline std::string to_string(const Move& m) {
  switch (m.kind) {
    case Move::Kind::commute: return "C@" + std::to_string(m.position);
    case Move::Kind::triple: return "T@" + std::to_string(m.position) + ">" + std::to_string(m.target);
    case Move::Kind::cycle: return "R";
  }
  return {};
}

inline Move parse_move(std::string_view text) {
  if (text == "R") return Move::cycle();
  auto parse_pos = [&](std::size_t from, std::size_t to) {
    int value = 0;
    std::size_t pos = from;
    if (to <= from || !detail::parse_uint(text.substr(0, to), pos, value) || pos != to)
      fail(errc::syntax, "bad move position in '" + std::string(text) + "'");
    return value;
  };
  if (text.starts_with("C@")) return Move::commute(parse_pos(2, text.size()));
  if (text.starts_with("T@")) {
    const auto sep = text.find('>');
    if (sep == std::string_view::npos) fail(errc::syntax, "missing '>' in triple move '" + std::string(text) + "'");
    const int position = parse_pos(2, sep);
    if (sep + 2 != text.size() || (text[sep + 1] != '0' && text[sep + 1] != '1'))
      fail(errc::syntax, "triple target must be 0 or 1 in '" + std::string(text) + "'");
    return Move::triple(position, text[sep + 1] - '0');
  }
  fail(errc::syntax, "unrecognized move '" + std::string(text) + "'");
}

// Commutation relation: a(t,s) a(r,q) = a(r,q) a(t,s) exactly when
// (t-r)(t-q)(s-r)(s-q) > 0, i.e. the bands are disjoint or nested.  Any
// shared index zeroes the product, so the test is false there.
inline bool r1_commutes(BandGenerator x, BandGenerator y) {
  const long long t = x.t(), s = x.s(), r = y.t(), q = y.s();
  return (t - r) * (t - q) * (s - r) * (s - q) > 0;
}

// Triple relation: a(t,s) a(s,r) = a(s,r) a(t,r) = a(t,r) a(t,s) for
// t > s > r.  If the ordered pair (x,y) matches one of the three forms the
// other two are returned in cyclic order; otherwise nothing.  The three
// reversed products match no form and admit no rewrite.
inline std::vector<std::pair<BandGenerator, BandGenerator>> r2_variants(BandGenerator x, BandGenerator y) {
  std::optional<std::array<int, 3>> tsr;  // (t, s, r), t > s > r
  int matched_form = 0;
  if (x.s() == y.t()) {
    tsr = {{x.t(), x.s(), y.s()}};  // form 0: a(t,s) a(s,r)
    matched_form = 0;
  } else if (x.s() == y.s() && y.t() > x.t()) {
    tsr = {{y.t(), x.t(), x.s()}};  // form 1: a(s,r) a(t,r)
    matched_form = 1;
  } else if (x.t() == y.t() && y.s() > x.s()) {
    tsr = {{x.t(), y.s(), x.s()}};  // form 2: a(t,r) a(t,s)
    matched_form = 2;
  } else {
    return {};
  }
  const auto [t, s, r] = *tsr;
  const std::pair<BandGenerator, BandGenerator> forms[3] = {
      {BandGenerator(t, s), BandGenerator(s, r)},
      {BandGenerator(s, r), BandGenerator(t, r)},
      {BandGenerator(t, r), BandGenerator(t, s)},
  };
  return {forms[(matched_form + 1) % 3], forms[(matched_form + 2) % 3]};
}

// Conjugation by the leading letter: rotate letter 0 to the end.  Applying
// it length() times returns the word exactly.
inline BandWord cycle(const BandWord& w) {
  if (w.empty()) fail(errc::empty_word, "cannot cycle the empty word");
  std::vector<BandGenerator> letters = w.letters();
  std::rotate(letters.begin(), letters.begin() + 1, letters.end());
  return BandWord(w.strands(), std::move(letters));
}

namespace detail {

inline BandWord replace_pair(const BandWord& w, int position, std::pair<BandGenerator, BandGenerator> pair) {
  std::vector<BandGenerator> letters = w.letters();
  letters[static_cast<std::size_t>(position)] = pair.first;
  letters[static_cast<std::size_t>(position) + 1] = pair.second;
  return BandWord(w.strands(), std::move(letters));
}

}  // namespace detail

// All relation moves applicable to w, in deterministic order: position
// ascending, Commute before Triple, triple target 0 before 1.  Every output
// word has the same length as w.  Cycle is never included.
inline std::vector<std::pair<Move, BandWord>> neighbors(const BandWord& w) {
  std::vector<std::pair<Move, BandWord>> out;
  const auto& letters = w.letters();
  for (int p = 0; p + 1 < w.length(); ++p) {
    const BandGenerator x = letters[static_cast<std::size_t>(p)];
    const BandGenerator y = letters[static_cast<std::size_t>(p) + 1];
    if (r1_commutes(x, y)) out.emplace_back(Move::commute(p), detail::replace_pair(w, p, {y, x}));
    const auto variants = r2_variants(x, y);
    for (std::size_t i = 0; i < variants.size(); ++i)
      out.emplace_back(Move::triple(p, static_cast<int>(i)), detail::replace_pair(w, p, variants[i]));
  }
  return out;
}

inline BandWord apply_move(const BandWord& w, const Move& m) {
  if (m.kind == Move::Kind::cycle) return cycle(w);
  if (m.position < 0 || m.position + 1 >= w.length())
    fail(errc::inapplicable_move, "position " + std::to_string(m.position) + " has no adjacent pair in a length-" +
                                      std::to_string(w.length()) + " word");
  const BandGenerator x = w.letters()[static_cast<std::size_t>(m.position)];
  const BandGenerator y = w.letters()[static_cast<std::size_t>(m.position) + 1];
  if (m.kind == Move::Kind::commute) {
    if (!r1_commutes(x, y))
      fail(errc::inapplicable_move, "pair at position " + std::to_string(m.position) + " does not commute");
    return detail::replace_pair(w, m.position, {y, x});
  }
  const auto variants = r2_variants(x, y);
  if (variants.empty())
    fail(errc::inapplicable_move, "pair at position " + std::to_string(m.position) + " matches no triple relation");
  if (m.target != 0 && m.target != 1)
    fail(errc::inapplicable_move, "triple target must be 0 or 1");
  return detail::replace_pair(w, m.position, variants[static_cast<std::size_t>(m.target)]);
}

}  // namespace bandsweep
