#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <vector>

#include "bandsweep/band.hpp"
#include "bandsweep/permutation.hpp"
#include "bandsweep/word_graph.hpp"

using namespace bandsweep;

namespace {

BandWord parse3(const std::string& text) { return parse_band_word(text, 3); }

std::vector<int> signed_letters(const ArtinWord& w) {
  std::vector<int> out;
  for (const auto& l : w.letters()) out.push_back(l.sign * l.index);
  return out;
}

}  // namespace

TEST_CASE("make_generator validates index order and range") {
  const BandGenerator g = make_generator(2, 1, 3);
  CHECK(g.t() == 2);
  CHECK(g.s() == 1);
  CHECK(make_generator(3, 1, 3) == BandGenerator(3, 1));

  CHECK_THROWS_MATCHES(make_generator(1, 2, 3), error,
                       Catch::Matchers::Predicate<error>([](const error& e) { return e.code() == errc::index_order; }));
  CHECK_THROWS_MATCHES(make_generator(4, 1, 3), error,
                       Catch::Matchers::Predicate<error>([](const error& e) { return e.code() == errc::out_of_range; }));
  CHECK_THROWS_MATCHES(make_generator(2, 0, 3), error,
                       Catch::Matchers::Predicate<error>([](const error& e) { return e.code() == errc::out_of_range; }));
}

TEST_CASE("band words validate letters against the strand count") {
  CHECK_NOTHROW(BandWord(3, {BandGenerator(3, 1)}));
  CHECK_THROWS_AS(BandWord(2, {BandGenerator(3, 1)}), error);
  CHECK_THROWS_AS(BandWord(0, {}), error);
  CHECK(BandWord(1).length() == 0);
}

TEST_CASE("band_to_artin expands through the conjugator formula") {
  CHECK(signed_letters(band_to_artin(parse_band_word("a(2,1)", 2))) == std::vector<int>{1});
  CHECK(signed_letters(band_to_artin(parse3("a(3,1)"))) == std::vector<int>{2, 1, -2});
  CHECK(signed_letters(band_to_artin(parse3("a(3,2) a(2,1)"))) == std::vector<int>{2, 1});
}

TEST_CASE("positive_artin_to_band maps letter-wise") {
  const ArtinWord u(3, {{1, +1}, {2, +1}});
  CHECK(positive_artin_to_band(u) == parse3("a(2,1) a(3,2)"));
  CHECK(positive_artin_to_band(ArtinWord(4)) == BandWord(4));
  CHECK_THROWS_MATCHES(positive_artin_to_band(ArtinWord(3, {{1, -1}})), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::negative_letter; }));
}

TEST_CASE("permutation composes letters left to right") {
  CHECK(permutation(BandWord(3)).is_identity());

  const Permutation p = permutation(parse3("a(2,1) a(3,1)"));
  CHECK(p.image_of(1) == 2);
  CHECK(p.image_of(2) == 3);
  CHECK(p.image_of(3) == 1);

  CHECK(permutation(parse3("a(2,1) a(2,1)")).is_identity());
}

TEST_CASE("closure invariants count components and bands") {
  CHECK(closure_invariants(parse3("a(2,1) a(3,1)")) == ClosureInvariants{1, 1, 2});
  CHECK(closure_invariants(parse3("a(2,1) a(2,1)")) == ClosureInvariants{3, 1, 2});
  CHECK(closure_invariants(BandWord(1)) == ClosureInvariants{1, 1, 0});
}

TEST_CASE("unknot presentations are the connected disc surfaces") {
  CHECK(is_unknot_presentation(parse3("a(2,1) a(3,1)")));
  CHECK_FALSE(is_unknot_presentation(parse3("a(2,1) a(2,1)")));
  CHECK(is_unknot_presentation(BandWord(1)));
  CHECK_FALSE(is_unknot_presentation(BandWord(3)));
}

TEST_CASE("parse and format round-trip with canonical spacing") {
  const BandWord w = parse3("a(3,1) a(2,1)");
  REQUIRE(w.length() == 2);
  CHECK(w.letters()[0] == BandGenerator(3, 1));
  CHECK(w.letters()[1] == BandGenerator(2, 1));

  CHECK(parse3("s1 s2") == parse3("a(2,1) a(3,2)"));
  CHECK(parse3("  a(3,1)\t a(2,1) ") == w);
  CHECK(format_band_word(w) == "a(3,1) a(2,1)");
  CHECK(parse_band_word(format_band_word(w), 3) == w);
  CHECK(format_band_word(parse3("")) == "");
  CHECK(parse3("").empty());
}

TEST_CASE("parse rejects malformed and out-of-range input") {
  auto code_of = [](const std::string& text, int n) -> std::optional<errc> {
    try {
      parse_band_word(text, n);
    } catch (const error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  CHECK(code_of("a(1,2)", 3) == errc::index_order);
  CHECK(code_of("a(4,1)", 3) == errc::out_of_range);
  CHECK(code_of("a(2,0)", 3) == errc::out_of_range);
  CHECK(code_of("s0", 3) == errc::out_of_range);
  CHECK(code_of("s3", 3) == errc::out_of_range);
  CHECK(code_of("b(2,1)", 3) == errc::syntax);
  CHECK(code_of("a(2 ,1)", 3) == errc::syntax);
  CHECK(code_of("a(2,1", 3) == errc::syntax);
  CHECK(code_of("a(2,1)!", 3) == errc::syntax);

  try {
    parse_band_word("a(2,1) b", 3);
    FAIL("expected a syntax error");
  } catch (const error& e) {
    CHECK(e.code() == errc::syntax);
    CHECK(e.offset() == 7);
  }
}

namespace {

// Walks every word up to max_len, carrying the incrementally composed
// permutation, and compares it with the from-scratch computation.
void check_homomorphism(int n, int max_len, std::vector<BandGenerator>& letters, const Permutation& expected,
                        long& words, long& mismatches) {
  ++words;
  if (!(permutation(BandWord(n, letters)) == expected)) ++mismatches;
  if (static_cast<int>(letters.size()) == max_len) return;
  for (int o = 0; o < generator_count(n); ++o) {
    const BandGenerator g = generator_from_ordinal(o);
    letters.push_back(g);
    check_homomorphism(n, max_len, letters, expected.then(Permutation::transposition(n, g.t(), g.s())), words,
                       mismatches);
    letters.pop_back();
  }
}

}  // namespace

TEST_CASE("permutation is a monoid homomorphism (exhaustive to length 6, n <= 5)") {
  long words = 0, mismatches = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<BandGenerator> letters;
    check_homomorphism(n, 6, letters, Permutation(n), words, mismatches);
  }
  CHECK(mismatches == 0);
  // 1 + 7 + (3^7-1)/2 + (6^7-1)/5 + (10^7-1)/9 words
  CHECK(words == 1 + 7 + 1093 + 55987 + 1111111);
}

TEST_CASE("permutation splits randomized beyond the exhaustive range") {
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const int len = std::uniform_int_distribution<int>(0, 24)(rng);
    std::vector<BandGenerator> letters;
    for (int i = 0; i < len; ++i)
      letters.push_back(generator_from_ordinal(std::uniform_int_distribution<int>(0, generator_count(n) - 1)(rng)));
    const BandWord w(n, letters);
    const int split = std::uniform_int_distribution<int>(0, len)(rng);
    const BandWord u(n, {letters.begin(), letters.begin() + split});
    const BandWord v(n, {letters.begin() + split, letters.end()});
    REQUIRE(permutation(w) == compose(permutation(u), permutation(v)));
  }
}

TEST_CASE("band_to_artin preserves the permutation and exponent sum (single generators, n <= 6)") {
  for (int n = 2; n <= 6; ++n) {
    for (int o = 0; o < generator_count(n); ++o) {
      const BandWord w(n, {generator_from_ordinal(o)});
      const ArtinWord a = band_to_artin(w);
      CHECK(permutation(a) == permutation(w));
      CHECK(a.exponent_sum() == w.length());
    }
  }
}

TEST_CASE("artin round-trip on adjacent-band words") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const int len = std::uniform_int_distribution<int>(0, 12)(rng);
    std::vector<BandGenerator> letters;
    for (int i = 0; i < len; ++i) {
      const int s = std::uniform_int_distribution<int>(1, n - 1)(rng);
      letters.push_back(BandGenerator(s + 1, s));
    }
    const BandWord w(n, letters);
    REQUIRE(positive_artin_to_band(band_to_artin(w)) == w);
  }
}

TEST_CASE("unknot presentations have euler 1 and one component") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& w : enumerate_words(n, n - 1)) {
      if (!is_unknot_presentation(w)) continue;
      const auto inv = closure_invariants(w);
      REQUIRE(inv.euler == 1);
      REQUIRE(inv.components == 1);
    }
  }
}
