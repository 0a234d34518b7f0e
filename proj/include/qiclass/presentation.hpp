#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qiclass/words.hpp"

namespace qiclass {

/// Length of r_i; every r_i has 16 i + 8 letters.
constexpr std::size_t relator_length(int i) { return 16 * static_cast<std::size_t>(i) + 8; }

/// r_i = [t1^i a1 t1^-i, t2^i a2 t2^-i][t3^i a3 t3^-i, t4^i a4 t4^-i],
/// with [x, y] = x y x^-1 y^-1. Throws std::invalid_argument for i < 0.
Word relator(int i);

struct SymmetrizedRelator {
  int index;
  int sign;  // +1: rotation of r_i, -1: rotation of r_i^-1
  std::size_t rotation;
  Word word;
};

/// Every rotation of r_i and r_i^-1 for 0 <= i <= max_index, ordered by
/// (index, sign + before -, rotation). Not deduplicated.
std::vector<SymmetrizedRelator> symmetrized_relators(int max_index);

/// Rotation `rotation` of r_index^sign.
Word symmetrized_word(int index, int sign, std::size_t rotation);

/// Product r_{i1}^{k1} ... r_{im}^{km} in the order given.
Word relator_product(std::span<const std::pair<int, std::int64_t>> factors);

}  // namespace qiclass
