#include "qiclass/presentation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qiclass {

namespace {

Word conjugated_generator(Generator t, Generator a, int i) {
  Word tp = Word{letter(t)}.power(i);
  return tp * Word{letter(a)} * tp.inverse();
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

}  // namespace

Word relator(int i) {
  if (i < 0) throw std::invalid_argument("relator: negative index " + std::to_string(i));
  using enum Generator;
  Word r = commutator(conjugated_generator(t1, a1, i), conjugated_generator(t2, a2, i)) *
           commutator(conjugated_generator(t3, a3, i), conjugated_generator(t4, a4, i));
  if (r.size() != relator_length(i) || !r.is_cyclically_reduced())
    throw std::logic_error("relator: expansion of r_" + std::to_string(i) + " has length " +
                           std::to_string(r.size()));
  return r;
}

Word symmetrized_word(int index, int sign, std::size_t rotation) {
  Word base = sign > 0 ? relator(index) : relator(index).inverse();
  if (rotation >= base.size()) throw std::invalid_argument("symmetrized_word: rotation out of range");
  std::vector<Letter> buf(base.begin(), base.end());
  std::rotate(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(rotation), buf.end());
  return Word(std::span<const Letter>(buf));
}

std::vector<SymmetrizedRelator> symmetrized_relators(int max_index) {
  std::vector<SymmetrizedRelator> out;
  for (int i = 0; i <= max_index; ++i) {
    Word r = relator(i);
    for (int sign : {1, -1}) {
      auto rotations = cyclic_conjugates(sign > 0 ? r : r.inverse());
      for (std::size_t k = 0; k < rotations.size(); ++k) out.push_back({i, sign, k, std::move(rotations[k])});
    }
  }
  return out;
}

Word relator_product(std::span<const std::pair<int, std::int64_t>> factors) {
  Word out;
  for (auto [i, k] : factors) out *= relator(i).power(k);
  return out;
}

}  // namespace qiclass
