#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qiclass {

/// Generators of G (a1..a4, t1..t4) plus the central letter z of the
/// extensions.
enum class Generator : std::uint8_t { a1, a2, a3, a4, t1, t2, t3, t4, z };

inline constexpr std::size_t kGeneratorCount = 9;
inline constexpr std::size_t kGroupGeneratorCount = 8;

inline constexpr std::array<Generator, kGeneratorCount> kAllGenerators = {
    Generator::a1, Generator::a2, Generator::a3, Generator::a4, Generator::t1,
    Generator::t2, Generator::t3, Generator::t4, Generator::z};

constexpr bool is_central(Generator g) { return g == Generator::z; }

std::string_view generator_name(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

struct Letter {
  Generator gen{Generator::a1};
  std::int8_t exp{1};  // +1 or -1

  constexpr Letter inverse() const { return {gen, static_cast<std::int8_t>(-exp)}; }
  constexpr bool cancels(Letter other) const { return gen == other.gen && exp == -other.exp; }

  /// Dense nonzero code: +(index+1) for positive letters, -(index+1) for inverses.
  constexpr int code() const { return (static_cast<int>(gen) + 1) * exp; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr bool operator<(Letter x, Letter y) { return x.code() < y.code(); }
};

constexpr Letter letter(Generator g, int exp = 1) {
  return {g, static_cast<std::int8_t>(exp < 0 ? -1 : 1)};
}

/// A freely reduced word. Every constructor reduces, so an unreduced
/// letter sequence can never be observed through this type.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> raw);
  explicit Word(std::span<const Letter> raw);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  Word power(std::int64_t k) const;
  /// Subword [pos, pos+len), reduced by construction.
  Word subword(std::size_t pos, std::size_t len) const;

  bool contains(Generator g) const;
  bool is_cyclically_reduced() const;
  /// Sum of exponents of g.
  std::int64_t exponent_sum(Generator g) const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& u, const Word& v) { return u.letters_ < v.letters_; }

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> raw);
inline Word invert(const Word& w) { return w.inverse(); }

struct CyclicReduction {
  Word core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

/// All n rotations of a cyclically reduced word of length n, starting with
/// w itself. Throws std::invalid_argument otherwise.
std::vector<Word> cyclic_conjugates(const Word& w);

/// Whitespace-separated tokens `gen` or `gen^k` (k nonzero); powers are
/// expanded and the result freely reduced.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

}  // namespace qiclass

template <>
struct std::hash<qiclass::Word> {
  std::size_t operator()(const qiclass::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto l : w) h = (h ^ static_cast<std::size_t>(l.code() + 16)) * 1099511628211ull;
    return h;
  }
};
