#include <doctest.h>

#include <algorithm>
#include <string>

#include "qiclass/presentation.hpp"
#include "qiclass/small_cancellation.hpp"
#include "support/printers.hpp"

using namespace qiclass;

namespace {

// Independent piece oracle: encode every symmetrized word of index <= m as a
// string, sort, and take the longest common prefix with the sorted
// neighbours. In sorted order the longest common prefix of a string with any
// other string is attained by an adjacent one.
struct OracleEntry {
  std::string text;
  int index;
};

std::vector<std::size_t> oracle_longest_piece(std::vector<OracleEntry>& words) {
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) { return a.text < b.text; });
  words.erase(std::unique(words.begin(), words.end(), [](const auto& a, const auto& b) { return a.text == b.text; }),
              words.end());
  auto lcp = [](const std::string& a, const std::string& b) {
    return static_cast<std::size_t>(std::mismatch(a.begin(), a.end(), b.begin(), b.end()).first - a.begin());
  };
  std::vector<std::size_t> best(words.size(), 0);
  for (std::size_t k = 0; k + 1 < words.size(); ++k) {
    auto l = lcp(words[k].text, words[k + 1].text);
    best[k] = std::max(best[k], l);
    best[k + 1] = std::max(best[k + 1], l);
  }
  return best;
}

std::vector<OracleEntry> oracle_words(int max_index) {
  std::vector<OracleEntry> out;
  for (const auto& s : symmetrized_relators(max_index)) {
    std::string text;
    for (auto l : s.word) text.push_back(static_cast<char>('a' + 10 + l.code()));
    out.push_back({text, s.index});
  }
  return out;
}

}  // namespace

TEST_CASE("rational parsing") {
  auto r = Rational::parse("1/7");
  CHECK(r.num == 1);
  CHECK(r.den == 7);
  CHECK(Rational::parse("2/14").to_string() == "1/7");
  CHECK(Rational::parse("3").to_string() == "3");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
}

TEST_CASE("max_piece_length examples") {
  auto p00 = max_piece_length(0, 0);
  CHECK(p00.piece_length == 1);
  CHECK(p00.piece.size() >= 1);
  CHECK(p00.bound.to_string() == "8/7");

  CHECK(max_piece_length(0, 1).piece_length <= 1);
}

// Frozen from an independent brute force over the symmetrized sets (all
// ordered pairs of distinct words, i, j <= 8). Inside r_i the words
// r_i = x y x^-1 y^-1 ... and r_i^-1 = ... y x y^-1 x^-1 share the piece
// x t2^i, where x = t1^i a1 t1^-i, so the longest piece has 3i + 1 letters.
TEST_CASE("longest pieces of the relator family") {
  auto one = max_piece_length(1, 1);
  CHECK(one.piece_length == 4);
  int holders = 0;
  for (const auto& s : symmetrized_relators(1))
    if (s.index == 1 && s.word.subword(0, 4) == one.piece) ++holders;
  CHECK(holders >= 2);
  // the explicit shared prefix of rotations of r_1 and r_1^-1
  Word shared = parse_word("t2 a2 t2^-1 t1");
  CHECK(symmetrized_word(1, 1, 3).subword(0, 4) == shared);
  CHECK(symmetrized_word(1, -1, 12).subword(0, 4) == shared);
  for (int i = 1; i <= 20; ++i) {
    CAPTURE(i);
    auto self = max_piece_length(i, i);
    CHECK(self.piece_length == static_cast<std::size_t>(3 * i + 1));
    // strictly below 1/5 of |r_i| at every index, but not below 1/7
    CHECK(5 * self.piece_length < relator_length(i));
    CHECK(7 * self.piece_length >= relator_length(i));
  }
  CHECK(max_piece_length(7, 8).piece_length == 15);
}

TEST_CASE("pieces between distinct relators stay below 1/7, symmetric") {
  for (int i = 0; i <= 20; ++i)
    for (int j = i + 1; j <= 20; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      auto ij = max_piece_length(i, j);
      CHECK(ij.piece_length <= static_cast<std::size_t>(2 * std::min(i, j) + 1));
      CHECK(7 * ij.piece_length < relator_length(std::min(i, j)));
      if ((i + j) % 5 == 0) CHECK(max_piece_length(j, i).piece_length == ij.piece_length);
    }
}

TEST_CASE("verify_metric_condition examples") {
  auto strict = verify_metric_condition({1, 7}, 10);
  CHECK_FALSE(strict.pass);
  REQUIRE(strict.worst.has_value());
  CHECK(strict.worst->container_index == 10);
  CHECK(strict.worst->piece_length == 31);
  CHECK(strict.worst->container_length == 168);

  CHECK(verify_metric_condition({1, 7}, 0).pass);
  CHECK(verify_metric_condition({1, 5}, 20).pass);

  auto fail = verify_metric_condition({1, 100}, 0);
  CHECK_FALSE(fail.pass);
  REQUIRE(fail.worst.has_value());
  CHECK(fail.worst->piece_length == 1);
  CHECK(fail.symmetrized_words == 16);

  CHECK(verify_metric_condition({1, 2}, 0).pass);

  CHECK_THROWS_AS(verify_metric_condition({0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_metric_condition({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("verify_metric_condition agrees with the sorted-neighbour oracle") {
  for (int m : {0, 1, 3, 6}) {
    CAPTURE(m);
    auto words = oracle_words(m);
    auto best = oracle_longest_piece(words);
    // worst ratio best[k] / |word k|
    std::size_t worst = 0;
    for (std::size_t k = 1; k < words.size(); ++k)
      if (best[k] * words[worst].text.size() > best[worst] * words[k].text.size()) worst = k;

    for (auto [num, den] : {std::pair{1, 4}, std::pair{1, 5}, std::pair{1, 7}, std::pair{1, 8}, std::pair{1, 12}}) {
      bool oracle_pass = true;
      for (std::size_t k = 0; k < words.size(); ++k)
        if (best[k] * static_cast<std::size_t>(den) >= static_cast<std::size_t>(num) * words[k].text.size())
          oracle_pass = false;
      auto v = verify_metric_condition({num, den}, m);
      CHECK(v.pass == oracle_pass);
      CHECK(v.symmetrized_words == words.size());
      REQUIRE(v.worst.has_value());
      // same worst ratio
      CHECK(v.worst->piece_length * words[worst].text.size() == best[worst] * v.worst->container_length);
    }
  }
}

TEST_CASE("is_proper_power") {
  auto p = is_proper_power(parse_word("a1 a1"));
  REQUIRE(p.has_value());
  CHECK(p->root == parse_word("a1"));
  CHECK(p->exponent == 2);

  p = is_proper_power(parse_word("a1 a2 a1 a2 a1 a2"));
  REQUIRE(p.has_value());
  CHECK(p->root == parse_word("a1 a2"));
  CHECK(p->exponent == 3);

  p = is_proper_power(parse_word("a1 a1 a1 a1"));
  REQUIRE(p.has_value());
  CHECK(p->exponent == 4);

  CHECK_FALSE(is_proper_power(relator(0)).has_value());
  CHECK_FALSE(is_proper_power(relator(3)).has_value());
  CHECK_FALSE(is_proper_power(parse_word("a1")).has_value());
  CHECK_THROWS_AS(is_proper_power(parse_word("t1 a1 t1^-1")), std::invalid_argument);

  for (int i = 0; i <= 20; ++i) CHECK_FALSE(is_proper_power(relator(i)).has_value());
}
