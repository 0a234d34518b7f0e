#include "qiclass/dehn.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <tuple>
#include <unordered_map>

#include "qiclass/presentation.hpp"

namespace qiclass {

namespace {

// Polynomial hashing modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kMod = (1ull << 61) - 1;
constexpr std::uint64_t kBase = 1'000'003;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kMod);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kMod ? s - kMod : s;
}

std::uint64_t letter_value(Letter l) { return static_cast<std::uint64_t>(l.code() + 10); }

class RollingHash {
 public:
  explicit RollingHash(std::span<const Letter> s) : prefix_(s.size() + 1, 0), power_(s.size() + 1, 1) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      prefix_[k + 1] = (mul_mod(prefix_[k], kBase) + letter_value(s[k])) % kMod;
      power_[k + 1] = mul_mod(power_[k], kBase);
    }
  }
  std::uint64_t range(std::size_t lo, std::size_t hi) const {
    std::uint64_t sub = mul_mod(prefix_[lo], power_[hi - lo]);
    return (prefix_[hi] + kMod - sub) % kMod;
  }

 private:
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> power_;
};

// Cyclic windows of length min_match_length(i) of r_i and r_i^-1.
struct RelatorWindows {
  int index;
  std::size_t length;
  std::size_t window;
  std::array<std::vector<Letter>, 2> doubled;  // [0]: r_i r_i, [1]: r_i^-1 r_i^-1
  std::unordered_multimap<std::uint64_t, std::pair<int, std::size_t>> starts;  // hash -> (sign, rotation)

  explicit RelatorWindows(int i) : index(i), length(relator_length(i)), window(min_match_length(i)) {
    Word r = relator(i);
    for (int s = 0; s < 2; ++s) {
      Word base = s == 0 ? r : r.inverse();
      auto& d = doubled[s];
      d.assign(base.begin(), base.end());
      d.insert(d.end(), base.begin(), base.end());
      RollingHash h(d);
      for (std::size_t rot = 0; rot < length; ++rot) starts.emplace(h.range(rot, rot + window), std::pair{s == 0 ? 1 : -1, rot});
    }
  }

  std::span<const Letter> rotation(int sign, std::size_t rot) const {
    return std::span<const Letter>(doubled[sign > 0 ? 0 : 1]).subspan(rot, length);
  }
};

class RelatorTable {
 public:
  static RelatorTable& instance() {
    static RelatorTable table;
    return table;
  }

  std::vector<const RelatorWindows*> upto(int max_index) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(entries_.size()) <= max_index)
      entries_.push_back(std::make_unique<RelatorWindows>(static_cast<int>(entries_.size())));
    std::vector<const RelatorWindows*> out;
    out.reserve(static_cast<std::size_t>(max_index + 1));
    for (int i = 0; i <= max_index; ++i) out.push_back(entries_[static_cast<std::size_t>(i)].get());
    return out;
  }

 private:
  std::mutex mutex_;
  std::vector<std::unique_ptr<RelatorWindows>> entries_;
};

// Largest relator index that can act on a word of length n.
int max_usable_index(std::size_t n) { return n < 5 ? -1 : static_cast<int>((n - 5) / 8); }

struct Match {
  std::size_t position;
  std::size_t length;  // maximal admissible length
  const RelatorWindows* rel;
  int sign;
  std::size_t rotation;
};

// Visits maximal matches in position order; with leftmost_only the scan stops
// after the first position that has any match.
template <typename Visit>
void scan_matches(const Word& w, bool leftmost_only, Visit&& visit) {
  const int bound = max_usable_index(w.size());
  if (bound < 0) return;
  auto table = RelatorTable::instance().upto(bound);
  auto letters = w.letters();
  RollingHash hash(letters);
  const std::size_t n = letters.size();
  bool found = false;
  for (std::size_t p = 0; p < n && !(leftmost_only && found); ++p) {
    for (const RelatorWindows* rel : table) {
      if (p + rel->window > n) break;
      auto [first, last] = rel->starts.equal_range(hash.range(p, p + rel->window));
      for (auto it = first; it != last; ++it) {
        auto [sign, rot] = it->second;
        auto target = rel->rotation(sign, rot);
        if (!std::equal(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(rel->window), letters.begin() + static_cast<std::ptrdiff_t>(p)))
          continue;
        std::size_t len = rel->window;
        while (len < rel->length && p + len < n && letters[p + len] == target[len]) ++len;
        visit(Match{p, len, rel, sign, rot});
        found = true;
      }
    }
  }
}

DehnMove make_move(const Match& m, std::size_t length) {
  auto rot = m.rel->rotation(m.sign, m.rotation);
  Word rest(rot.subspan(length));
  return DehnMove{m.position, length, m.rel->index, m.sign, m.rotation, rest.inverse()};
}

Word apply(const Word& w, std::size_t position, std::size_t length, const Word& replacement) {
  auto letters = w.letters();
  std::vector<Letter> raw(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(position));
  raw.insert(raw.end(), replacement.begin(), replacement.end());
  raw.insert(raw.end(), letters.begin() + static_cast<std::ptrdiff_t>(position + length), letters.end());
  return free_reduce(raw);
}

// Longest, then smallest index, then smallest rotation, then + before -.
bool better(const Match& a, const Match& b) {
  auto key = [](const Match& m) {
    return std::tuple(-static_cast<long long>(m.length), m.rel->index, m.rotation, -m.sign);
  };
  return key(a) < key(b);
}

void reject_central(const Word& w, const char* where) {
  if (w.contains(Generator::z))
    throw std::invalid_argument(std::string(where) + ": word contains the central letter z: " + format_word(w));
}

}  // namespace

std::optional<DehnMove> find_dehn_move(const Word& w) {
  std::optional<Match> best;
  scan_matches(w, true, [&](const Match& m) {
    if (!best || better(m, *best)) best = m;
  });
  if (!best) return std::nullopt;
  return make_move(*best, best->length);
}

std::vector<DehnMove> all_dehn_moves(const Word& w) {
  std::vector<DehnMove> out;
  scan_matches(w, false, [&](const Match& m) { out.push_back(make_move(m, m.length)); });
  return out;
}

DehnTrace dehn_reduce(const Word& w, Strategy strategy) {
  reject_central(w, "dehn_reduce");
  DehnTrace trace{w, {}, w};
  std::mt19937_64 rng(strategy.seed);
  while (true) {
    std::optional<DehnMove> move;
    if (strategy.kind == Strategy::Kind::deterministic) {
      move = find_dehn_move(trace.final_word);
    } else {
      std::vector<Match> matches;
      scan_matches(trace.final_word, false, [&](const Match& m) { matches.push_back(m); });
      if (!matches.empty()) {
        const Match& m = matches[std::uniform_int_distribution<std::size_t>(0, matches.size() - 1)(rng)];
        std::size_t len = std::uniform_int_distribution<std::size_t>(m.rel->window, m.length)(rng);
        move = make_move(m, len);
      }
    }
    if (!move) break;
    trace.final_word = apply(trace.final_word, move->position, move->matched_length, move->replacement);
    trace.moves.push_back(std::move(*move));
  }
  return trace;
}

Word replay(const Word& initial, std::span<const DehnMove> moves) {
  Word current = initial;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const DehnMove& m = moves[k];
    auto fail = [&](const std::string& why) {
      throw ReplayError("move " + std::to_string(k) + ": " + why);
    };
    if (m.relator_index < 0 || (m.sign != 1 && m.sign != -1)) fail("bad relator index or sign");
    const std::size_t len = relator_length(m.relator_index);
    if (m.rotation >= len) fail("rotation out of range");
    if (2 * m.matched_length <= len || m.matched_length > len) fail("match does not exceed half the relator");
    if (m.position + m.matched_length > current.size()) fail("match runs past the end of the word");
    Word target = symmetrized_word(m.relator_index, m.sign, m.rotation);
    for (std::size_t j = 0; j < m.matched_length; ++j)
      if (current[m.position + j] != target[j]) fail("subword does not match the relator");
    Word replacement = target.subword(m.matched_length, len - m.matched_length).inverse();
    current = apply(current, m.position, m.matched_length, replacement);
  }
  return current;
}

TrivialityResult is_trivial_in_G(const Word& w, Strategy strategy) {
  reject_central(w, "is_trivial_in_G");
  auto trace = dehn_reduce(w, strategy);
  bool trivial = trace.final_word.empty();
  return {trivial, std::move(trace)};
}

bool are_equal_in_G(const Word& u, const Word& v) {
  reject_central(u, "are_equal_in_G");
  reject_central(v, "are_equal_in_G");
  return is_trivial_in_G(u * v.inverse()).trivial;
}

}  // namespace qiclass
