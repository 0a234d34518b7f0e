#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qiclass/words.hpp"

namespace qiclass {

/// Replace w[position, position + matched_length) by `replacement`, where the
/// matched subword is the prefix of the rotation `rotation` of
/// r_{relator_index}^{sign} and `replacement` is the inverse of the rest of
/// that rotation.
struct DehnMove {
  std::size_t position{0};
  std::size_t matched_length{0};
  int relator_index{0};
  int sign{1};
  std::size_t rotation{0};
  Word replacement;

  friend bool operator==(const DehnMove&, const DehnMove&) = default;
};

struct DehnTrace {
  Word initial;
  std::vector<DehnMove> moves;
  Word final_word;
};

struct Strategy {
  enum class Kind { deterministic, seeded_random };
  Kind kind{Kind::deterministic};
  std::uint64_t seed{0};

  static Strategy deterministic() { return {}; }
  static Strategy seeded_random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }
};

/// Minimal admissible match against r_i: more than half of its 16 i + 8 letters.
constexpr std::size_t min_match_length(int i) { return 8 * static_cast<std::size_t>(i) + 5; }

/// Leftmost, then longest, then smallest relator index, then smallest
/// rotation, then sign +1 before -1.
std::optional<DehnMove> find_dehn_move(const Word& w);

/// Every maximal match: for each (position, relator, sign, rotation) the
/// longest admissible match starting there. Ordered by position.
std::vector<DehnMove> all_dehn_moves(const Word& w);

/// Applies moves until none is available. The random strategy picks a
/// uniformly random maximal match and then a uniformly random admissible
/// length for it. Throws std::invalid_argument if w contains z.
DehnTrace dehn_reduce(const Word& w, Strategy strategy = Strategy::deterministic());

class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Re-derives and applies each move from (position, matched_length,
/// relator_index, sign, rotation) only, checking it against the presentation.
/// Throws ReplayError on the first invalid move.
Word replay(const Word& initial, std::span<const DehnMove> moves);

struct TrivialityResult {
  bool trivial;
  DehnTrace trace;
};

/// Decides w == 1 in G. Throws std::invalid_argument if w contains z.
TrivialityResult is_trivial_in_G(const Word& w, Strategy strategy = Strategy::deterministic());
bool are_equal_in_G(const Word& u, const Word& v);

}  // namespace qiclass
