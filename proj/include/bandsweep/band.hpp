#pragma once

#include <charconv>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bandsweep/error.hpp"

namespace bandsweep {

// One positive band generator a(t,s), a half-twist band between strands
// t and s passing in front of the strands in between.  Invariant: t > s >= 1.
// The ambient strand count n lives on the word, not the generator.
class BandGenerator {
 public:
  BandGenerator(int t, int s) : t_(t), s_(s) {
    if (s < 1) fail(errc::out_of_range, "band a(" + std::to_string(t) + "," + std::to_string(s) + ") needs s >= 1");
    if (t <= s) fail(errc::index_order, "band a(" + std::to_string(t) + "," + std::to_string(s) + ") needs t > s");
  }

  int t() const noexcept { return t_; }
  int s() const noexcept { return s_; }

  bool adjacent() const noexcept { return t_ == s_ + 1; }

  friend auto operator<=>(const BandGenerator&, const BandGenerator&) = default;

 private:
  int t_;
  int s_;
};

// a(t,s) with the bounds check against an ambient strand count.
inline BandGenerator make_generator(int t, int s, int n) {
  BandGenerator g(t, s);
  if (t > n)
    fail(errc::out_of_range,
         "band a(" + std::to_string(t) + "," + std::to_string(s) + ") does not fit on " + std::to_string(n) + " strands");
  return g;
}

// One classical Artin generator sigma_i or its inverse.
struct ArtinLetter {
  int index;  // 1 <= index <= n-1
  int sign;   // +1 or -1

  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

// Positive word in band generators on a fixed strand count.  Immutable after
// construction; all rewriting operations return fresh words.
class BandWord {
 public:
  BandWord(int strands, std::vector<BandGenerator> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) fail(errc::out_of_range, "strand count must be >= 1");
    for (const auto& g : letters_)
      if (g.t() > strands_)
        fail(errc::out_of_range,
             "letter a(" + std::to_string(g.t()) + "," + std::to_string(g.s()) + ") does not fit on " +
                 std::to_string(strands_) + " strands");
  }

  explicit BandWord(int strands) : BandWord(strands, {}) {}

  int strands() const noexcept { return strands_; }
  const std::vector<BandGenerator>& letters() const noexcept { return letters_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }

  // Exponent sum; equals the length since only positive letters exist.
  int exponent_sum() const noexcept { return length(); }

  friend bool operator==(const BandWord&, const BandWord&) = default;

 private:
  int strands_;
  std::vector<BandGenerator> letters_;
};

// Signed word in Artin generators.
class ArtinWord {
 public:
  ArtinWord(int strands, std::vector<ArtinLetter> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) fail(errc::out_of_range, "strand count must be >= 1");
    for (const auto& l : letters_) {
      if (l.index < 1 || l.index > strands_ - 1)
        fail(errc::out_of_range,
             "sigma_" + std::to_string(l.index) + " does not fit on " + std::to_string(strands_) + " strands");
      if (l.sign != 1 && l.sign != -1) fail(errc::out_of_range, "letter sign must be +1 or -1");
    }
  }

  explicit ArtinWord(int strands) : ArtinWord(strands, {}) {}

  int strands() const noexcept { return strands_; }
  const std::vector<ArtinLetter>& letters() const noexcept { return letters_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }

  int exponent_sum() const noexcept {
    int e = 0;
    for (const auto& l : letters_) e += l.sign;
    return e;
  }

  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;

 private:
  int strands_;
  std::vector<ArtinLetter> letters_;
};

// Expansion a(t,s) = (sigma_{t-1} ... sigma_{s+1}) sigma_s (sigma_{s+1}^-1 ... sigma_{t-1}^-1).
// For an adjacent band (t = s+1) the conjugator is empty and the expansion is
// the single letter sigma_s.
inline ArtinWord band_to_artin(const BandWord& w) {
  std::vector<ArtinLetter> out;
  for (const auto& g : w.letters()) {
    for (int j = g.t() - 1; j > g.s(); --j) out.push_back({j, +1});
    out.push_back({g.s(), +1});
    for (int j = g.s() + 1; j <= g.t() - 1; ++j) out.push_back({j, -1});
  }
  return ArtinWord(w.strands(), std::move(out));
}

// Letter-wise image under sigma_i -> a(i+1, i).  Only positive words map.
inline BandWord positive_artin_to_band(const ArtinWord& w) {
  std::vector<BandGenerator> out;
  out.reserve(w.letters().size());
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    const auto& l = w.letters()[i];
    if (l.sign < 0)
      fail(errc::negative_letter,
           "letter " + std::to_string(i) + " is an inverse; only positive Artin words map to band words");
    out.push_back(make_generator(l.index + 1, l.index, w.strands()));
  }
  return BandWord(w.strands(), std::move(out));
}

namespace detail {

inline bool parse_uint(std::string_view text, std::size_t& pos, int& value) {
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) return false;
  pos += static_cast<std::size_t>(ptr - first);
  return true;
}

}  // namespace detail

// Grammar:  word := item (WS item)* ;  item := "a(" INT "," INT ")" | "s" INT.
// "sI" is the positive Artin letter sigma_I, accepted via sigma_i -> a(i+1,i).
// The empty (or all-whitespace) string is the empty word.  Strand count is
// always supplied by the caller, never inferred from the text.
inline BandWord parse_band_word(std::string_view text, int n) {
  if (n < 1) fail(errc::out_of_range, "strand count must be >= 1");
  std::vector<BandGenerator> letters;
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      fail(errc::syntax, std::string("expected '") + c + "' at offset " + std::to_string(pos), pos);
    ++pos;
  };
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    const std::size_t item_start = pos;
    if (text[pos] == 'a') {
      ++pos;
      expect('(');
      int t = 0;
      if (!detail::parse_uint(text, pos, t))
        fail(errc::syntax, "expected strand index at offset " + std::to_string(pos), pos);
      expect(',');
      int s = 0;
      if (!detail::parse_uint(text, pos, s))
        fail(errc::syntax, "expected strand index at offset " + std::to_string(pos), pos);
      expect(')');
      try {
        letters.push_back(make_generator(t, s, n));
      } catch (const error& e) {
        throw error(e.code(), std::string(e.what()) + " (at offset " + std::to_string(item_start) + ")", item_start);
      }
    } else if (text[pos] == 's') {
      ++pos;
      int i = 0;
      if (!detail::parse_uint(text, pos, i))
        fail(errc::syntax, "expected generator index at offset " + std::to_string(pos), pos);
      if (i < 1 || i + 1 > n)
        throw error(errc::out_of_range,
                    "s" + std::to_string(i) + " does not fit on " + std::to_string(n) + " strands (at offset " +
                        std::to_string(item_start) + ")",
                    item_start);
      letters.push_back(BandGenerator(i + 1, i));
    } else {
      fail(errc::syntax, "unexpected character '" + std::string(1, text[pos]) + "' at offset " + std::to_string(pos),
           pos);
    }
  }
  return BandWord(n, std::move(letters));
}

// Canonical form: "a(t,s)" items joined by single spaces; empty word -> "".
inline std::string format_band_word(const BandWord& w) {
  std::string out;
  for (const auto& g : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "a(" + std::to_string(g.t()) + "," + std::to_string(g.s()) + ")";
  }
  return out;
}

// Artin words print as space-separated signed indices, e.g. "2 1 -2".
inline std::string format_artin_word(const ArtinWord& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

}  // namespace bandsweep
