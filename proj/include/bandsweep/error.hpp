#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bandsweep {

// Every failure the library reports carries one of these kinds so callers
// (and the CLI exit-code mapping) can dispatch without string matching.
enum class errc {
  index_order,           // band a(t,s) requires t > s
  out_of_range,          // strand index outside 1..n
  syntax,                // malformed word / move / certificate text
  negative_letter,       // positive-only conversion fed an inverse letter
  inapplicable_move,     // move does not match the word at its position
  empty_word,            // operation requires k >= 1
  cycle_count_mismatch,  // certificate does not contain exactly k cyclings
  strand_mismatch,       // operands live on different strand counts
};

inline std::string_view errc_name(errc c) {
  switch (c) {
    case errc::index_order: return "IndexOrder";
    case errc::out_of_range: return "OutOfRange";
    case errc::syntax: return "SyntaxError";
    case errc::negative_letter: return "NegativeLetter";
    case errc::inapplicable_move: return "InapplicableMove";
    case errc::empty_word: return "EmptyWord";
    case errc::cycle_count_mismatch: return "CycleCountMismatch";
    case errc::strand_mismatch: return "StrandMismatch";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

  error(errc code, const std::string& what, std::size_t offset = no_offset)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        offset_(offset) {}

  errc code() const noexcept { return code_; }

  // Byte offset into the parsed text for syntax-level errors; no_offset
  // otherwise.
  std::size_t offset() const noexcept { return offset_; }

 private:
  errc code_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(errc code, const std::string& what,
                              std::size_t offset = error::no_offset) {
  throw error(code, what, offset);
}

}  // namespace bandsweep
