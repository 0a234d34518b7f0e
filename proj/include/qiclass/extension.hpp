#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qiclass/dehn.hpp"
#include "qiclass/words.hpp"

namespace qiclass {

/// Eventually periodic integer sequence alpha_0, alpha_1, ...; the class in
/// H^2(G, Z) whose pairing with the 2-cell of r_i is alpha_i.
class AlphaSequence {
 public:
  AlphaSequence() = default;
  AlphaSequence(std::vector<std::int64_t> prefix, std::vector<std::int64_t> period);

  /// Grammar: comma-separated integers, optionally followed by a
  /// parenthesized comma-separated list suffixed `*` (the period), e.g.
  /// `1`, `0,1,(0,1)*`, `(2)*`. No period means a zero tail.
  static AlphaSequence parse(std::string_view text);

  std::int64_t at(std::size_t i) const;
  const std::vector<std::int64_t>& prefix() const { return prefix_; }
  const std::vector<std::int64_t>& period() const { return period_; }

  /// prefix + one period; every attained value (except a zero tail) is
  /// attained below this index.
  std::size_t span() const { return prefix_.size() + period_.size(); }
  std::set<std::int64_t> value_set() const;
  std::int64_t bound() const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const AlphaSequence&, const AlphaSequence&) = default;

 private:
  std::vector<std::int64_t> prefix_;
  std::vector<std::int64_t> period_;
};

inline std::int64_t alpha_at(const AlphaSequence& alpha, std::size_t i) { return alpha.at(i); }

/// g_word * z^z_exp in E_alpha. A representative, not a normal form, unless
/// g_word is empty.
struct ExtensionElement {
  Word g_word;
  std::int64_t z_exp{0};

  friend bool operator==(const ExtensionElement&, const ExtensionElement&) = default;
};

/// Relators of the truncated presentation of E_alpha:
/// r_i z^-alpha_i for i <= max_index, then [z, g] for the 8 generators of G.
std::vector<Word> extension_relators(const AlphaSequence& alpha, int max_index);
std::string extension_presentation(const AlphaSequence& alpha, int max_index);

struct Evaluation {
  ExtensionElement element;
  DehnTrace trace;
};

/// Moves z-letters to the right, Dehn-reduces the G-part and charges
/// sign * alpha_i to the central coordinate for every move with relator r_i.
Evaluation evaluate_with_trace(const AlphaSequence& alpha, const Word& w,
                               Strategy strategy = Strategy::deterministic());
ExtensionElement evaluate(const AlphaSequence& alpha, const Word& w,
                          Strategy strategy = Strategy::deterministic());

/// Central coordinate accumulated by a trace: sum of sign * alpha_i.
std::int64_t central_charge(const AlphaSequence& alpha, const DehnTrace& trace);

bool are_equal_in_extension(const AlphaSequence& alpha, const ExtensionElement& e1,
                            const ExtensionElement& e2);
ExtensionElement multiply(const AlphaSequence& alpha, const ExtensionElement& e1,
                          const ExtensionElement& e2);
ExtensionElement invert_elt(const AlphaSequence& alpha, const ExtensionElement& e);

class NotRichInRange : public std::runtime_error {
 public:
  NotRichInRange(std::int64_t gcd, int max_index);
  std::int64_t gcd() const { return gcd_; }
  int max_index() const { return max_index_; }

 private:
  std::int64_t gcd_;
  int max_index_;
};

/// Integer combination sum k_j [c_{i_j}] with sum k_j alpha_{i_j} equal to
/// the gcd of alpha_0..alpha_max_index (made nonnegative). Ascending indices,
/// zero coefficients omitted.
struct BezoutCombination {
  std::int64_t gcd;
  std::vector<std::pair<int, std::int64_t>> terms;
};
BezoutCombination bezout_combination(const AlphaSequence& alpha, int max_index);

/// W = r_{i1}^{k1} ... r_{im}^{km} with sum k_j alpha_{i_j} = 1, so W = z in
/// E_alpha. Throws NotRichInRange when the gcd over 0..max_index is not 1.
Word express_central_generator(const AlphaSequence& alpha, int max_index);

struct TorsionWitness {
  Word word;
  int exponent;
};

/// Exhaustive search for w != 1 with w^k = 1, over reduced words of length
/// 1..max_word_len and 2 <= k <= max_exponent. Without alpha the group is G
/// (alphabet of 8); with alpha it is E_alpha (alphabet includes z).
/// Refuses bounds beyond max_word_len 3, max_exponent 5.
std::vector<TorsionWitness> order_probe(const std::optional<AlphaSequence>& alpha, int max_word_len,
                                        int max_exponent);

/// All freely reduced words of exactly `length` letters over the given
/// generators, in lexicographic letter order.
std::vector<Word> reduced_words_of_length(std::span<const Generator> gens, std::size_t length);

}  // namespace qiclass
