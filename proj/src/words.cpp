#include "qiclass/words.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace qiclass {

namespace {

constexpr std::array<std::string_view, kGeneratorCount> kNames = {
    "a1", "a2", "a3", "a4", "t1", "t2", "t3", "t4", "z"};

// Stack-style reduction; appending to an already reduced prefix.
void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().cancels(l))
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

std::string_view generator_name(Generator g) { return kNames[static_cast<std::size_t>(g)]; }

std::optional<Generator> generator_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<Generator>(i);
  return std::nullopt;
}

Word::Word(std::initializer_list<Letter> raw) : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (auto l : raw) push_reduced(letters_, l);
}

Word free_reduce(std::span<const Letter> raw) { return Word(raw); }

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

Word Word::power(std::int64_t k) const {
  if (k < 0) return inverse().power(-k);
  Word out;
  for (std::int64_t i = 0; i < k; ++i) out *= *this;
  return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::span<const Letter>(letters_).subspan(pos, len));
}

bool Word::contains(Generator g) const {
  return std::any_of(letters_.begin(), letters_.end(), [g](Letter l) { return l.gen == g; });
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
}

std::int64_t Word::exponent_sum(Generator g) const {
  std::int64_t s = 0;
  for (auto l : letters_)
    if (l.gen == g) s += l.exp;
  return s;
}

Word& Word::operator*=(const Word& v) {
  letters_.reserve(letters_.size() + v.size());
  for (auto l : v.letters_) push_reduced(letters_, l);
  return *this;
}

Word operator*(const Word& u, const Word& v) {
  Word out = u;
  out *= v;
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word(letters.subspan(lo, hi - lo)), Word(letters.subspan(0, lo))};
}

std::vector<Word> cyclic_conjugates(const Word& w) {
  if (!w.is_cyclically_reduced())
    throw std::invalid_argument("cyclic_conjugates: word is not cyclically reduced: " + format_word(w));
  std::vector<Word> out;
  out.reserve(w.size());
  std::vector<Letter> buf(w.begin(), w.end());
  for (std::size_t r = 0; r < w.size(); ++r) {
    out.emplace_back(std::span<const Letter>(buf));
    std::rotate(buf.begin(), buf.begin() + 1, buf.end());
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto caret = token.find('^');
    std::string_view name = std::string_view(token).substr(0, caret);
    auto gen = generator_from_name(name);
    if (!gen) throw ParseError("unknown generator in token '" + token + "'", token);
    std::int64_t k = 1;
    if (caret != std::string::npos) {
      std::string_view digits = std::string_view(token).substr(caret + 1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      if (!digits.empty() && digits.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc{} || ptr != last || first == last)
        throw ParseError("malformed exponent in token '" + token + "'", token);
      if (k == 0) throw ParseError("zero exponent in token '" + token + "'", token);
      if (k > 1'000'000 || k < -1'000'000) throw ParseError("exponent too large in token '" + token + "'", token);
    }
    Letter l = letter(*gen, k < 0 ? -1 : 1);
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) raw.push_back(l);
  }
  return free_reduce(raw);
}

std::string format_word(const Word& w) {
  std::string out;
  for (auto l : w) {
    if (!out.empty()) out += ' ';
    out += generator_name(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace qiclass
