#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bandsweep/band.hpp"
#include "bandsweep/error.hpp"

namespace bandsweep {

inline ArtinWord inverse(const ArtinWord& w) {
  std::vector<ArtinLetter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back({it->index, -it->sign});
  return ArtinWord(w.strands(), std::move(out));
}

inline ArtinWord concat(const ArtinWord& u, const ArtinWord& v) {
  if (u.strands() != v.strands()) fail(errc::strand_mismatch, "concatenating words on different strand counts");
  std::vector<ArtinLetter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return ArtinWord(u.strands(), std::move(out));
}

namespace detail {

// A sigma_i-handle is a subword sigma_i^e v sigma_i^-e whose interior v only
// uses indices >= i+1.  Reducing it deletes the two sigma_i letters and
// rewrites every interior sigma_{i+1}^d as sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e;
// interior letters with index >= i+2 commute past and survive unchanged.
//
// Scanning for the leftmost handle *end* always yields a handle whose
// interior contains no complete handle, which is the strategy that keeps
// intermediate words short in practice.
inline bool find_handle(const std::vector<ArtinLetter>& word, std::size_t& begin, std::size_t& end) {
  for (std::size_t p = 0; p < word.size(); ++p) {
    const int i = word[p].index;
    for (std::size_t q = p; q-- > 0;) {
      if (word[q].index > i) continue;
      if (word[q].index == i && word[q].sign == -word[p].sign) {
        begin = q;
        end = p;
        return true;
      }
      break;  // same sign at index i, or a smaller index: no handle ends at p
    }
  }
  return false;
}

inline std::vector<ArtinLetter> reduce_handle(const std::vector<ArtinLetter>& word, std::size_t begin,
                                              std::size_t end) {
  const int i = word[begin].index;
  const int e = word[begin].sign;
  std::vector<ArtinLetter> out(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(begin));
  for (std::size_t j = begin + 1; j < end; ++j) {
    if (word[j].index == i + 1) {
      out.push_back({i + 1, -e});
      out.push_back({i, word[j].sign});
      out.push_back({i + 1, e});
    } else {
      out.push_back(word[j]);
    }
  }
  out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(end) + 1, word.end());
  return out;
}

}  // namespace detail

// Dehornoy handle reduction.  Terminates on every input; the result is
// handle-free and represents the same braid.  A handle-free word is empty or
// uses its lowest generator index with a single sign, and in the latter case
// it is not the identity braid.
inline ArtinWord handle_reduce(const ArtinWord& w) {
  std::vector<ArtinLetter> word = w.letters();
  std::size_t begin = 0, end = 0;
  while (detail::find_handle(word, begin, end)) word = detail::reduce_handle(word, begin, end);
  return ArtinWord(w.strands(), std::move(word));
}

// Word-problem oracle for the braid group: u equals v iff u v^-1 reduces to
// the empty word.  Complete and terminating, with no performance guarantees;
// it exists to cross-check the relation-graph search, not to be fast.
inline bool artin_equal(const ArtinWord& u, const ArtinWord& v) {
  if (u.strands() != v.strands()) fail(errc::strand_mismatch, "comparing words on different strand counts");
  return handle_reduce(concat(u, inverse(v))).empty();
}

}  // namespace bandsweep
