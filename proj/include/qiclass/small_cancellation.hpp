#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qiclass/words.hpp"

namespace qiclass {

/// Positive rational used for the small-cancellation constant lambda.
struct Rational {
  std::int64_t num{1};
  std::int64_t den{7};

  /// Accepts `p/q` or a plain integer; throws ParseError.
  static Rational parse(std::string_view text);
  std::string to_string() const;
};

struct PieceReport {
  int first_index;
  int second_index;
  Word piece;
  std::size_t piece_length;
  /// lambda * min(|r_i|, |r_j|)
  Rational bound;
};

/// Longest common prefix over ordered pairs (u, v) of distinct words with u
/// in the symmetrized set of r_i and v in that of r_j.
PieceReport max_piece_length(int i, int j, Rational lambda = {1, 7});

struct PieceWitness {
  int container_index;  // index k of the symmetrized relator containing the piece
  int other_index;      // index of the other relator sharing it
  Word container;       // the symmetrized word u (piece is a prefix of u)
  Word piece;
  std::size_t piece_length;
  std::size_t container_length;  // 16 k + 8
};

struct MetricVerdict {
  bool pass;
  Rational lambda;
  int max_index;
  std::size_t symmetrized_words;  // after deduplication
  /// Piece maximizing |p| / |r_k| over the checked range.
  std::optional<PieceWitness> worst;
};

/// Checks |p| < lambda (16k + 8) for every piece p of every symmetrized
/// relator of index k <= max_index. Only the finite range is certified.
MetricVerdict verify_metric_condition(Rational lambda, int max_index);

struct ProperPower {
  Word root;
  int exponent;
};

/// Maximal decomposition w = u^k (k >= 2) of w read as a cyclic word. Throws
/// std::invalid_argument when w is not cyclically reduced.
std::optional<ProperPower> is_proper_power(const Word& w);

}  // namespace qiclass
