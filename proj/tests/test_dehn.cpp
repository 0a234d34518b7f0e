#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "qiclass/dehn.hpp"
#include "qiclass/presentation.hpp"
#include "support/printers.hpp"
#include "support/random_words.hpp"

using namespace qiclass;

namespace {

std::map<std::pair<int, int>, int> signed_multiset(const DehnTrace& t) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& m : t.moves) ++out[{m.relator_index, m.sign}];
  return out;
}

bool is_rotation_of(const Word& w, const Word& base) {
  if (w.size() != base.size()) return false;
  for (const auto& r : cyclic_conjugates(base))
    if (r == w) return true;
  return false;
}

void check_move_invariants(const DehnTrace& trace) {
  Word current = trace.initial;
  for (const auto& m : trace.moves) {
    CHECK(m.matched_length >= min_match_length(m.relator_index));
    CHECK(2 * m.matched_length > relator_length(m.relator_index));
    CHECK(m.replacement.size() < m.matched_length);
    Word matched = current.subword(m.position, m.matched_length);
    Word base = m.sign > 0 ? relator(m.relator_index) : relator(m.relator_index).inverse();
    // matched * replacement^-1 is a rotation of r_i^sign
    std::vector<Letter> loop(matched.begin(), matched.end());
    for (auto l : m.replacement.inverse()) loop.push_back(l);
    CHECK(loop.size() == base.size());
    CHECK(is_rotation_of(Word(std::span<const Letter>(loop)), base));
    current = replay(current, std::span<const DehnMove>(&m, 1));
  }
  CHECK(current == trace.final_word);
}

// Words with a nonzero exponent sum survive in the abelianization of G, so
// they are certainly nontrivial.
bool nonzero_abelian_image(const Word& w) {
  return std::any_of(kAllGenerators.begin(), kAllGenerators.end(), [&](Generator g) { return w.exponent_sum(g) != 0; });
}

}  // namespace

TEST_CASE("find_dehn_move examples") {
  auto m = find_dehn_move(relator(0));
  REQUIRE(m.has_value());
  CHECK(m->position == 0);
  CHECK(m->matched_length == 8);
  CHECK(m->relator_index == 0);
  CHECK(m->sign == 1);
  CHECK(m->rotation == 0);
  CHECK(m->replacement.empty());

  CHECK_FALSE(find_dehn_move(parse_word("a1 a2^-1")).has_value());

  m = find_dehn_move(parse_word("a1 a2 a1^-1 a2^-1 a3"));
  REQUIRE(m.has_value());
  CHECK(m->matched_length == 5);
  CHECK(m->relator_index == 0);
  CHECK(m->replacement == parse_word("a4 a3 a4^-1"));
  CHECK(m->replacement.size() == 3);

  CHECK_FALSE(find_dehn_move(Word{}).has_value());
}

TEST_CASE("find_dehn_move takes the leftmost position") {
  // a1 a1 is not part of any relator; the r_0 match starts at position 2.
  Word w = parse_word("t1 t1") * relator(0);
  auto m = find_dehn_move(w);
  REQUIRE(m.has_value());
  CHECK(m->position == 2);
  auto all = all_dehn_moves(w);
  REQUIRE_FALSE(all.empty());
  for (const auto& other : all) CHECK(other.position >= m->position);
  CHECK(std::find(all.begin(), all.end(), *m) != all.end());
}

TEST_CASE("dehn_reduce examples") {
  auto t = dehn_reduce(relator(0));
  CHECK(t.final_word.empty());
  REQUIRE(t.moves.size() == 1);
  CHECK(t.moves[0].relator_index == 0);
  CHECK(t.moves[0].sign == 1);

  auto t2 = dehn_reduce(relator(0) * relator(1));
  CHECK(t2.final_word.empty());
  CHECK(signed_multiset(t2) == std::map<std::pair<int, int>, int>{{{0, 1}, 1}, {{1, 1}, 1}});
  CHECK(replay(t2.initial, t2.moves).empty());

  auto t3 = dehn_reduce(parse_word("a1"));
  CHECK(t3.final_word == parse_word("a1"));
  CHECK(t3.moves.empty());

  CHECK_THROWS_AS(dehn_reduce(parse_word("a1 z")), std::invalid_argument);
}

TEST_CASE("is_trivial_in_G and are_equal_in_G examples") {
  CHECK(is_trivial_in_G(parse_word("t1") * relator(2) * parse_word("t1^-1")).trivial);
  CHECK(is_trivial_in_G(parse_word("a1 a2 a1^-1 a2^-1 a3 a4 a3^-1 a4^-1")).trivial);
  CHECK_FALSE(is_trivial_in_G(parse_word("a1 a2^-1")).trivial);
  CHECK(is_trivial_in_G(Word{}).trivial);
  CHECK_THROWS_AS(is_trivial_in_G(parse_word("z")), std::invalid_argument);

  CHECK(are_equal_in_G(relator(0) * parse_word("a1"), parse_word("a1")));
  CHECK(are_equal_in_G(parse_word("a1"), parse_word("a1")));
  CHECK_FALSE(are_equal_in_G(parse_word("a1"), parse_word("a2")));
  CHECK_THROWS_AS(are_equal_in_G(parse_word("a1"), parse_word("z")), std::invalid_argument);
}

TEST_CASE("replay rejects tampered traces") {
  Word w = relator(1) * relator(0);
  auto t = dehn_reduce(w);
  REQUIRE(t.final_word.empty());
  CHECK(replay(w, t.moves).empty());

  auto bad = t.moves;
  bad[0].rotation = (bad[0].rotation + 1) % relator_length(bad[0].relator_index);
  CHECK_THROWS_AS(replay(w, bad), ReplayError);

  bad = t.moves;
  bad[0].matched_length = relator_length(bad[0].relator_index) / 2;  // not more than half
  CHECK_THROWS_AS(replay(w, bad), ReplayError);

  bad = t.moves;
  bad[0].position = w.size();
  CHECK_THROWS_AS(replay(w, bad), ReplayError);
}

TEST_CASE("products of conjugated relators: soundness, completeness, termination") {
  auto sample = testing::relator_product_sample(99, 200);
  for (std::size_t k = 0; k < sample.size(); ++k) {
    CAPTURE(k);
    const Word& w = sample[k].word;
    auto result = is_trivial_in_G(w);
    CHECK(result.trivial);
    CHECK(result.trace.moves.size() <= w.size());
    CHECK(replay(w, result.trace.moves).empty());
    if (k % 20 == 0) check_move_invariants(result.trace);
  }
}

TEST_CASE("strategy independence and group laws through the oracle") {
  std::mt19937_64 rng(5);
  auto sample = testing::relator_product_sample(123, 40);
  for (std::size_t k = 0; k < sample.size(); ++k) {
    CAPTURE(k);
    const Word& u = sample[k].word;
    const Word& v = sample[(k + 1) % sample.size()].word;
    // trivial words and certainly-nontrivial perturbations of them
    Word bumped = u * testing::random_reduced_word(rng, 3);
    std::vector<Word> words{u, u.inverse(), u * v, bumped};
    for (const Word& w : words) {
      bool verdict = is_trivial_in_G(w).trivial;
      if (nonzero_abelian_image(w)) CHECK_FALSE(verdict);
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto r = is_trivial_in_G(w, Strategy::seeded_random(seed));
        CHECK(r.trivial == verdict);
        CHECK(replay(w, r.trace.moves) == r.trace.final_word);
        if (seed == 1) check_move_invariants(r.trace);
      }
    }
    CHECK(is_trivial_in_G(u.inverse()).trivial);
    CHECK(is_trivial_in_G(u * v).trivial);
  }
}

TEST_CASE("random words: Dehn-reduced length never exceeds the input") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = testing::random_reduced_word(rng, 40);
    auto t = dehn_reduce(w);
    CHECK(t.final_word.size() <= w.size());
    CHECK_FALSE(find_dehn_move(t.final_word).has_value());
    if (nonzero_abelian_image(w)) CHECK_FALSE(t.final_word.empty());
  }
}
