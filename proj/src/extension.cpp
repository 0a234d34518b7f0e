#include "qiclass/extension.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "qiclass/presentation.hpp"

namespace qiclass {

namespace {

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::int64_t> parse_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string token = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::int64_t v = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc{} || ptr != last || first == last)
      throw ParseError("malformed alpha token '" + token + "'", token);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  // returns (x, y) with a x + b y = gcd(a, b) >= 0
  std::int64_t old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_x, x) = std::pair{x, old_x - q * x};
    std::tie(old_y, y) = std::pair{y, old_y - q * y};
  }
  if (old_r < 0) return {-old_x, -old_y};
  return {old_x, old_y};
}

Word strip_central(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto l : w)
    if (!is_central(l.gen)) raw.push_back(l);
  return free_reduce(raw);
}

}  // namespace

AlphaSequence::AlphaSequence(std::vector<std::int64_t> prefix, std::vector<std::int64_t> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {}

AlphaSequence AlphaSequence::parse(std::string_view raw) {
  std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty alpha sequence", "");
  auto open = text.find('(');
  if (open == std::string::npos) {
    if (text.find_first_of(")*") != std::string::npos) throw ParseError("unbalanced period in '" + text + "'", text);
    return AlphaSequence(parse_list(text), {});
  }
  std::string tail = trim(std::string_view(text).substr(open));
  if (tail.size() < 3 || tail.substr(tail.size() - 2) != ")*")
    throw ParseError("period must be written '(v,...)*' in '" + tail + "'", tail);
  std::string body = tail.substr(1, tail.size() - 3);
  if (body.find_first_of("()*") != std::string::npos) throw ParseError("nested period in '" + tail + "'", tail);
  std::vector<std::int64_t> period = parse_list(body);

  std::string head = trim(std::string_view(text).substr(0, open));
  std::vector<std::int64_t> prefix;
  if (!head.empty()) {
    if (head.back() != ',') throw ParseError("expected ',' before period in '" + head + "'", head);
    head.pop_back();
    prefix = parse_list(head);
  }
  return AlphaSequence(std::move(prefix), std::move(period));
}

std::int64_t AlphaSequence::at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (period_.empty()) return 0;
  return period_[(i - prefix_.size()) % period_.size()];
}

std::set<std::int64_t> AlphaSequence::value_set() const {
  std::set<std::int64_t> values(prefix_.begin(), prefix_.end());
  values.insert(period_.begin(), period_.end());
  if (period_.empty()) values.insert(0);
  return values;
}

std::int64_t AlphaSequence::bound() const {
  std::int64_t b = 0;
  for (auto v : value_set()) b = std::max(b, v < 0 ? -v : v);
  return b;
}

bool AlphaSequence::is_zero() const { return bound() == 0; }

std::string AlphaSequence::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < prefix_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(prefix_[k]);
  }
  if (!period_.empty()) {
    if (!out.empty()) out += ',';
    out += '(';
    for (std::size_t k = 0; k < period_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(period_[k]);
    }
    out += ")*";
  }
  return out;
}

std::vector<Word> extension_relators(const AlphaSequence& alpha, int max_index) {
  if (max_index < 0) throw std::invalid_argument("extension_relators: negative max_index");
  std::vector<Word> out;
  const Word z{letter(Generator::z)};
  for (int i = 0; i <= max_index; ++i) out.push_back(relator(i) * z.power(-alpha.at(static_cast<std::size_t>(i))));
  for (std::size_t g = 0; g < kGroupGeneratorCount; ++g) {
    Word x{letter(kAllGenerators[g])};
    out.push_back(z * x * z.inverse() * x.inverse());
  }
  return out;
}

std::string extension_presentation(const AlphaSequence& alpha, int max_index) {
  std::ostringstream out;
  out << "# E_alpha for alpha = " << alpha.to_string() << ", relators r_0..r_" << max_index << "\n";
  out << "< a1, a2, a3, a4, t1, t2, t3, t4, z |\n";
  for (int i = 0; i <= max_index; ++i) {
    std::int64_t a = alpha.at(static_cast<std::size_t>(i));
    out << "  " << format_word(relator(i));
    if (a != 0) out << " z^" << -a;
    out << ",\n";
  }
  for (std::size_t g = 0; g < kGroupGeneratorCount; ++g) {
    auto name = generator_name(kAllGenerators[g]);
    out << "  z " << name << " z^-1 " << name << "^-1" << (g + 1 < kGroupGeneratorCount ? ",\n" : "\n");
  }
  out << ">\n";
  return out.str();
}

std::int64_t central_charge(const AlphaSequence& alpha, const DehnTrace& trace) {
  std::int64_t charge = 0;
  for (const auto& m : trace.moves) charge += m.sign * alpha.at(static_cast<std::size_t>(m.relator_index));
  return charge;
}

Evaluation evaluate_with_trace(const AlphaSequence& alpha, const Word& w, Strategy strategy) {
  const std::int64_t explicit_z = w.exponent_sum(Generator::z);
  auto trace = dehn_reduce(strip_central(w), strategy);
  ExtensionElement element{trace.final_word, explicit_z + central_charge(alpha, trace)};
  return {std::move(element), std::move(trace)};
}

ExtensionElement evaluate(const AlphaSequence& alpha, const Word& w, Strategy strategy) {
  return evaluate_with_trace(alpha, w, strategy).element;
}

bool are_equal_in_extension(const AlphaSequence& alpha, const ExtensionElement& e1, const ExtensionElement& e2) {
  auto diff = evaluate(alpha, e1.g_word * e2.g_word.inverse());
  if (!diff.g_word.empty()) return false;
  return diff.z_exp + e1.z_exp - e2.z_exp == 0;
}

ExtensionElement multiply(const AlphaSequence& alpha, const ExtensionElement& e1, const ExtensionElement& e2) {
  auto product = evaluate(alpha, e1.g_word * e2.g_word);
  product.z_exp += e1.z_exp + e2.z_exp;
  return product;
}

ExtensionElement invert_elt(const AlphaSequence& alpha, const ExtensionElement& e) {
  auto inverse = evaluate(alpha, e.g_word.inverse());
  inverse.z_exp -= e.z_exp;
  return inverse;
}

NotRichInRange::NotRichInRange(std::int64_t gcd, int max_index)
    : std::runtime_error("not rich in range: gcd of alpha_0..alpha_" + std::to_string(max_index) + " is " +
                         std::to_string(gcd)),
      gcd_(gcd),
      max_index_(max_index) {}

BezoutCombination bezout_combination(const AlphaSequence& alpha, int max_index) {
  BezoutCombination out{0, {}};
  for (int i = 0; i <= max_index && out.gcd != 1; ++i) {
    const std::int64_t a = alpha.at(static_cast<std::size_t>(i));
    if (a == 0) continue;
    if (out.terms.empty()) {
      out.gcd = a < 0 ? -a : a;
      out.terms.push_back({i, a < 0 ? -1 : 1});
      continue;
    }
    if (a % out.gcd == 0) continue;
    auto [x, y] = extended_gcd(out.gcd, a);
    out.gcd = std::gcd(out.gcd, a);
    for (auto& term : out.terms) term.second *= x;
    out.terms.push_back({i, y});
    std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
  }
  return out;
}

Word express_central_generator(const AlphaSequence& alpha, int max_index) {
  if (max_index < 0) throw std::invalid_argument("express_central_generator: negative max_index");
  auto combination = bezout_combination(alpha, max_index);
  if (combination.gcd != 1) throw NotRichInRange(combination.gcd, max_index);
  return relator_product(combination.terms);
}

std::vector<Word> reduced_words_of_length(std::span<const Generator> gens, std::size_t length) {
  std::vector<Letter> alphabet;
  for (auto g : gens) {
    alphabet.push_back(letter(g, 1));
    alphabet.push_back(letter(g, -1));
  }
  std::vector<Word> out;
  std::vector<Letter> buf;
  auto extend = [&](auto&& self) -> void {
    if (buf.size() == length) {
      out.emplace_back(std::span<const Letter>(buf));
      return;
    }
    for (auto l : alphabet) {
      if (!buf.empty() && buf.back().cancels(l)) continue;
      buf.push_back(l);
      self(self);
      buf.pop_back();
    }
  };
  extend(extend);
  return out;
}

std::vector<TorsionWitness> order_probe(const std::optional<AlphaSequence>& alpha, int max_word_len,
                                        int max_exponent) {
  if (max_word_len < 0 || max_word_len > 3 || max_exponent > 5)
    throw std::invalid_argument("order_probe: bounds exceed max_word_len 3, max_exponent 5");
  std::vector<Generator> gens(kAllGenerators.begin(), kAllGenerators.begin() + kGroupGeneratorCount);
  if (alpha) gens.push_back(Generator::z);

  auto is_identity = [&](const Word& w) {
    if (!alpha) return is_trivial_in_G(w).trivial;
    auto e = evaluate(*alpha, w);
    return e.g_word.empty() && e.z_exp == 0;
  };

  std::vector<TorsionWitness> witnesses;
  for (int len = 1; len <= max_word_len; ++len)
    for (const Word& w : reduced_words_of_length(gens, static_cast<std::size_t>(len))) {
      if (is_identity(w)) continue;
      for (int k = 2; k <= max_exponent; ++k)
        if (is_identity(w.power(k))) {
          witnesses.push_back({w, k});
          break;
        }
    }
  return witnesses;
}

}  // namespace qiclass
