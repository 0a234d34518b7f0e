#include "qiclass/invariants.hpp"

#include <charconv>
#include <numeric>
#include <vector>

#include "qiclass/presentation.hpp"

namespace qiclass {

namespace {

template <typename T>
T parse_number(std::string_view token, std::string_view whole) {
  T v{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError("malformed cell class term '" + std::string(whole) + "'", std::string(whole));
  return v;
}

}  // namespace

CellClass CellClass::cell(int index, std::int64_t coefficient) {
  CellClass c;
  c.add(index, coefficient);
  return c;
}

CellClass CellClass::parse(std::string_view text) {
  CellClass c;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto term = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
    while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
    if (term.empty()) {
      if (comma == std::string_view::npos && start == 0) break;  // zero class
      throw ParseError("empty cell class term", "");
    }
    auto colon = term.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("cell class term '" + std::string(term) + "' lacks ':'", std::string(term));
    int index = parse_number<int>(term.substr(0, colon), term);
    if (index < 0) throw ParseError("negative cell index in '" + std::string(term) + "'", std::string(term));
    c.add(index, parse_number<std::int64_t>(term.substr(colon + 1), term));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return c;
}

std::string CellClass::to_string() const {
  std::string out;
  for (auto [i, k] : terms_) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ':' + std::to_string(k);
  }
  return out;
}

std::int64_t CellClass::coefficient(int index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

void CellClass::add(int index, std::int64_t coefficient) {
  auto& slot = terms_[index];
  slot += coefficient;
  if (slot == 0) terms_.erase(index);
}

Word CellClass::relator_word() const {
  std::vector<std::pair<int, std::int64_t>> factors(terms_.begin(), terms_.end());
  return relator_product(factors);
}

std::int64_t pairing(const AlphaSequence& alpha, const CellClass& c) {
  std::int64_t total = 0;
  for (auto [i, k] : c.terms()) total += k * alpha.at(static_cast<std::size_t>(i));
  return total;
}

RichVerdict is_rich(const AlphaSequence& alpha) {
  std::int64_t g = 0;
  for (auto v : alpha.value_set()) g = std::gcd(g, v);
  if (g != 1) return {false, g, std::nullopt};
  // Every nonzero attained value occurs below span().
  auto combination = bezout_combination(alpha, static_cast<int>(alpha.span()));
  CellClass witness;
  for (auto [i, k] : combination.terms) witness.add(i, k);
  return {true, g, witness};
}

std::optional<DistinguishingWitness> are_distinguished(const AlphaSequence& alpha, const AlphaSequence& beta) {
  const bool alpha_zero = alpha.is_zero();
  const bool beta_zero = beta.is_zero();
  if (alpha_zero && beta_zero) return std::nullopt;

  // (alpha_i, beta_i) is periodic past the longer prefix with period the lcm
  // of the two periods, so this window sees every value pair.
  const std::size_t pa = std::max<std::size_t>(alpha.period().size(), 1);
  const std::size_t pb = std::max<std::size_t>(beta.period().size(), 1);
  const std::size_t window = std::max(alpha.prefix().size(), beta.prefix().size()) + std::lcm(pa, pb);

  if (alpha_zero || beta_zero) {
    const AlphaSequence& nonzero = alpha_zero ? beta : alpha;
    for (std::size_t i = 0; i < window; ++i)
      if (nonzero.at(i) != 0) return DistinguishingWitness{CellClass::cell(static_cast<int>(i)), beta_zero};
    return std::nullopt;  // unreachable: nonzero sequence attains a nonzero value in the window
  }

  // Nonzero maps on a free abelian group have equal kernels iff they are
  // proportional: alpha_i beta_j == alpha_j beta_i for all i, j.
  for (std::size_t i = 0; i < window; ++i)
    for (std::size_t j = i + 1; j < window; ++j) {
      const std::int64_t ai = alpha.at(i), aj = alpha.at(j), bi = beta.at(i), bj = beta.at(j);
      if (ai * bj == aj * bi) continue;
      // x = beta_j [c_i] - beta_i [c_j] lies in ker f_beta but not ker f_alpha.
      CellClass x;
      x.add(static_cast<int>(i), bj);
      x.add(static_cast<int>(j), -bi);
      return DistinguishingWitness{x, true};
    }
  return std::nullopt;
}

BoundednessCertificate weak_boundedness_bound(const AlphaSequence& alpha) {
  const std::int64_t b = alpha.bound();
  return {b,
          "bounded sequence: |alpha_i| <= " + std::to_string(b) +
              " for all i; every bounded sequence defines a weakly bounded class in H^2(G,Z), "
              "so E_alpha is quasi-isometric to G x Z (sufficient criterion only; no "
              "claim is made for unbounded sequences)"};
}

}  // namespace qiclass
