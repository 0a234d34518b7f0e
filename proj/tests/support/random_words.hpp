#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qiclass/extension.hpp"
#include "qiclass/words.hpp"

namespace qiclass::testing {

struct ConjugatedFactor {
  Word conjugator;
  int index;
  int sign;
};

/// Product of conjugated relators c r_i^sign c^-1 together with the factors
/// used to build it. In E_alpha it equals z^(sum sign * alpha_i).
struct RelatorProduct {
  Word word;
  std::vector<ConjugatedFactor> factors;

  std::int64_t expected_charge(const AlphaSequence& alpha) const;
};

Word random_reduced_word(std::mt19937_64& rng, std::size_t max_length, bool with_z = false);

RelatorProduct random_relator_product(std::mt19937_64& rng, int max_factors = 5, int max_index = 4,
                                      std::size_t max_conjugator = 6);

/// The fixed acceptance sample: `count` products drawn from one seeded stream.
std::vector<RelatorProduct> relator_product_sample(std::uint64_t seed = 20240601, std::size_t count = 200);

}  // namespace qiclass::testing
