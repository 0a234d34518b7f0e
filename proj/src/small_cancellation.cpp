#include "qiclass/small_cancellation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "qiclass/presentation.hpp"

namespace qiclass {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError("malformed rational '" + std::string(whole) + "'", std::string(whole));
  return v;
}

std::size_t common_prefix(const Word& u, const Word& v) {
  std::size_t n = std::min(u.size(), v.size());
  std::size_t k = 0;
  while (k < n && u[k] == v[k]) ++k;
  return k;
}

struct Entry {
  int index;
  Word word;
};

// Symmetrized words for indices in [lo, hi], deduplicated by word.
std::vector<Entry> symmetrized_set(int lo, int hi) {
  std::vector<Entry> out;
  std::unordered_set<Word> seen;
  for (int i = lo; i <= hi; ++i) {
    Word r = relator(i);
    for (const Word& base : {r, r.inverse()})
      for (auto& w : cyclic_conjugates(base))
        if (seen.insert(w).second) out.push_back({i, std::move(w)});
  }
  return out;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  Rational r{0, 1};
  auto slash = text.find('/');
  r.num = parse_int(text.substr(0, slash), text);
  if (slash != std::string_view::npos) r.den = parse_int(text.substr(slash + 1), text);
  if (r.den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", std::string(text));
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

PieceReport max_piece_length(int i, int j, Rational lambda) {
  if (i < 0 || j < 0) throw std::invalid_argument("max_piece_length: negative index");
  // Symmetrized sets of r_i and r_j, each deduplicated; they are disjoint
  // as word sets when i != j since lengths differ.
  auto first = symmetrized_set(i, i);
  auto second = i == j ? first : symmetrized_set(j, j);
  PieceReport report{i, j, Word{}, 0, Rational{}};
  for (const auto& u : first)
    for (const auto& v : second) {
      if (i == j && u.word == v.word) continue;
      auto k = common_prefix(u.word, v.word);
      if (k > report.piece_length) {
        report.piece_length = k;
        report.piece = u.word.subword(0, k);
      }
    }
  auto shortest = static_cast<std::int64_t>(relator_length(std::min(i, j)));
  report.bound = Rational{lambda.num * shortest, lambda.den};
  auto g = std::gcd(report.bound.num, report.bound.den);
  if (g > 1) {
    report.bound.num /= g;
    report.bound.den /= g;
  }
  return report;
}

MetricVerdict verify_metric_condition(Rational lambda, int max_index) {
  if (lambda.num <= 0 || lambda.num >= lambda.den)
    throw std::invalid_argument("verify_metric_condition: lambda must lie in (0, 1)");
  if (max_index < 0) throw std::invalid_argument("verify_metric_condition: negative max_index");

  auto words = symmetrized_set(0, max_index);
  const std::size_t n = words.size();
  // longest[u] = longest piece that is a prefix of u; partner[u] = index into words.
  std::vector<std::size_t> longest(n, 0);
  std::vector<std::size_t> partner(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    const Letter head = words[u].word[0];
    for (std::size_t v = u + 1; v < n; ++v) {
      if (words[v].word[0] != head) continue;
      auto k = common_prefix(words[u].word, words[v].word);
      if (k > longest[u]) longest[u] = k, partner[u] = v;
      if (k > longest[v]) longest[v] = k, partner[v] = u;
    }
  }

  MetricVerdict verdict{true, lambda, max_index, n, std::nullopt};
  std::size_t best = n;
  for (std::size_t u = 0; u < n; ++u) {
    const auto len = static_cast<std::int64_t>(words[u].word.size());
    const auto piece = static_cast<std::int64_t>(longest[u]);
    // |p| < lambda |r|  <=>  |p| den < num |r|
    if (piece * lambda.den >= lambda.num * len) verdict.pass = false;
    if (best == n ||
        piece * static_cast<std::int64_t>(words[best].word.size()) >
            static_cast<std::int64_t>(longest[best]) * len)
      best = u;
  }
  if (best < n) {
    const auto& u = words[best];
    verdict.worst = PieceWitness{u.index,
                                 words[partner[best]].index,
                                 u.word,
                                 u.word.subword(0, longest[best]),
                                 longest[best],
                                 u.word.size()};
  }
  return verdict;
}

std::optional<ProperPower> is_proper_power(const Word& w) {
  if (!w.is_cyclically_reduced())
    throw std::invalid_argument("is_proper_power: word is not cyclically reduced: " + format_word(w));
  const std::size_t n = w.size();
  for (std::size_t d = 1; d * 2 <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t k = d; k < n && periodic; ++k) periodic = w[k] == w[k - d];
    if (periodic) return ProperPower{w.subword(0, d), static_cast<int>(n / d)};
  }
  return std::nullopt;
}

}  // namespace qiclass
