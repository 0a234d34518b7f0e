#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qiclass/extension.hpp"

namespace qiclass {

/// The group whose Cayley graph is explored: G on its 8 generators, or G x Z
/// and E_alpha on the 8 generators plus z.
class GroupContext {
 public:
  enum class Kind { G, GxZ, Ealpha };

  static GroupContext group_G() { return GroupContext(Kind::G, std::nullopt); }
  static GroupContext product_GxZ() { return GroupContext(Kind::GxZ, std::nullopt); }
  static GroupContext extension(AlphaSequence alpha) { return GroupContext(Kind::Ealpha, std::move(alpha)); }

  Kind kind() const { return kind_; }
  const std::optional<AlphaSequence>& alpha() const { return alpha_; }
  std::vector<Generator> generators() const;
  std::string describe() const;

  /// G: are_equal_in_G; G x Z: G-parts equal in G and z-exponent sums equal;
  /// E_alpha: are_equal_in_extension.
  bool equal(const Word& u, const Word& v) const;

 private:
  GroupContext(Kind kind, std::optional<AlphaSequence> alpha) : kind_(kind), alpha_(std::move(alpha)) {}

  Kind kind_;
  std::optional<AlphaSequence> alpha_;
};

inline constexpr int kDefaultRadiusCap = 3;

/// kDefaultRadiusCap, unless QICLASS_RADIUS_CAP holds a nonnegative integer.
int radius_cap_from_env();

class RadiusCapExceeded : public std::runtime_error {
 public:
  RadiusCapExceeded(int radius, int cap);
};

struct GrowthReport {
  std::string context;
  std::vector<int> radii;            // 0..radius
  std::vector<std::size_t> counts;   // |B(r)|
  std::vector<Word> elements;        // one representative per element, if requested
};

/// Exact ball sizes |B(0)|, ..., |B(radius)| by breadth-first search with
/// deduplication through the context's equality oracle.
GrowthReport ball(const GroupContext& ctx, int radius, int radius_cap = kDefaultRadiusCap,
                  bool keep_elements = false);

struct GrowthComparison {
  GrowthReport left;
  GrowthReport right;
  std::vector<double> ratios;  // left.counts[r] / right.counts[r]
};

GrowthComparison growth_compare(const GroupContext& left, const GroupContext& right, int radius,
                                int radius_cap = kDefaultRadiusCap);

/// W^n with W from express_central_generator; a word over the 8 generators of
/// G equal to z^n in E_alpha, of length <= n |W|. max_index defaults to the
/// representation span of alpha.
Word central_power_length_upper(const AlphaSequence& alpha, int n, std::optional<int> max_index = std::nullopt);

}  // namespace qiclass
