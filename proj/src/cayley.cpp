#include "qiclass/cayley.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>

#include "qiclass/dehn.hpp"

namespace qiclass {

namespace {

Word g_part(const Word& w) {
  std::vector<Letter> raw;
  for (auto l : w)
    if (!is_central(l.gen)) raw.push_back(l);
  return free_reduce(raw);
}

// Exponent sums are preserved by every relator of G and E_alpha (each r_i is
// a product of commutators), so equal elements share this key. In G x Z the
// z-exponent sum is preserved too.
using BucketKey = std::array<std::int64_t, kGeneratorCount>;

BucketKey bucket_key(const GroupContext& ctx, const Word& w) {
  BucketKey key{};
  for (std::size_t g = 0; g < kGroupGeneratorCount; ++g) key[g] = w.exponent_sum(kAllGenerators[g]);
  if (ctx.kind() == GroupContext::Kind::GxZ) key[kGroupGeneratorCount] = w.exponent_sum(Generator::z);
  return key;
}

}  // namespace

std::vector<Generator> GroupContext::generators() const {
  std::vector<Generator> gens(kAllGenerators.begin(), kAllGenerators.begin() + kGroupGeneratorCount);
  if (kind_ != Kind::G) gens.push_back(Generator::z);
  return gens;
}

std::string GroupContext::describe() const {
  switch (kind_) {
    case Kind::G: return "G";
    case Kind::GxZ: return "GxZ";
    case Kind::Ealpha: return "E_alpha(" + alpha_->to_string() + ")";
  }
  return {};
}

bool GroupContext::equal(const Word& u, const Word& v) const {
  switch (kind_) {
    case Kind::G: return are_equal_in_G(u, v);
    case Kind::GxZ:
      return u.exponent_sum(Generator::z) == v.exponent_sum(Generator::z) && are_equal_in_G(g_part(u), g_part(v));
    case Kind::Ealpha: return are_equal_in_extension(*alpha_, {u, 0}, {v, 0});
  }
  return false;
}

int radius_cap_from_env() {
  const char* raw = std::getenv("QICLASS_RADIUS_CAP");
  if (raw == nullptr) return kDefaultRadiusCap;
  int cap = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), cap);
  if (ec != std::errc{} || *ptr != '\0' || cap < 0) return kDefaultRadiusCap;
  return cap;
}

RadiusCapExceeded::RadiusCapExceeded(int radius, int cap)
    : std::runtime_error("radius " + std::to_string(radius) + " exceeds the cap " + std::to_string(cap) +
                         "; deduplication costs a word-problem call per candidate pair and grows "
                         "superexponentially with the radius (raise QICLASS_RADIUS_CAP to override)") {}

GrowthReport ball(const GroupContext& ctx, int radius, int radius_cap, bool keep_elements) {
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  if (radius > radius_cap) throw RadiusCapExceeded(radius, radius_cap);

  std::vector<Letter> steps;
  for (auto g : ctx.generators()) {
    steps.push_back(letter(g, 1));
    steps.push_back(letter(g, -1));
  }

  GrowthReport report{ctx.describe(), {0}, {1}, {}};
  std::map<BucketKey, std::vector<Word>> buckets;
  buckets[bucket_key(ctx, Word{})].push_back(Word{});
  std::vector<Word> all{Word{}};
  std::vector<Word> frontier{Word{}};

  for (int r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const Word& x : frontier)
      for (Letter step : steps) {
        Word candidate = x * Word{step};
        // Backtracking lands on an element already at distance <= r - 2.
        if (candidate.size() < x.size()) continue;
        auto& bucket = buckets[bucket_key(ctx, candidate)];
        bool seen = false;
        for (const Word& y : bucket)
          if (ctx.equal(candidate, y)) {
            seen = true;
            break;
          }
        if (seen) continue;
        bucket.push_back(candidate);
        next.push_back(candidate);
      }
    for (const Word& w : next) all.push_back(w);
    report.radii.push_back(r);
    report.counts.push_back(all.size());
    frontier = std::move(next);
  }
  if (keep_elements) report.elements = std::move(all);
  return report;
}

GrowthComparison growth_compare(const GroupContext& left, const GroupContext& right, int radius, int radius_cap) {
  GrowthComparison cmp{ball(left, radius, radius_cap), ball(right, radius, radius_cap), {}};
  for (std::size_t r = 0; r < cmp.left.counts.size(); ++r)
    cmp.ratios.push_back(static_cast<double>(cmp.left.counts[r]) / static_cast<double>(cmp.right.counts[r]));
  return cmp;
}

Word central_power_length_upper(const AlphaSequence& alpha, int n, std::optional<int> max_index) {
  if (n < 0) throw std::invalid_argument("central_power_length_upper: negative n");
  Word w = express_central_generator(alpha, max_index.value_or(static_cast<int>(alpha.span())));
  return w.power(n);
}

}  // namespace qiclass
