#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qiclass/extension.hpp"

namespace qiclass {

/// Finite integer combination of the 2-cell classes [c_i] in H_2(G, Z).
class CellClass {
 public:
  CellClass() = default;
  static CellClass cell(int index, std::int64_t coefficient = 1);

  /// `index:coefficient` pairs separated by commas, e.g. `0:1,3:-2`; the
  /// empty string is the zero class.
  static CellClass parse(std::string_view text);
  std::string to_string() const;

  std::int64_t coefficient(int index) const;
  void add(int index, std::int64_t coefficient);
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, std::int64_t>& terms() const { return terms_; }

  /// r_i^{c_i} multiplied in ascending index order; a 2-chain whose boundary
  /// realizes this class.
  Word relator_word() const;

  friend bool operator==(const CellClass&, const CellClass&) = default;

 private:
  std::map<int, std::int64_t> terms_;  // zero coefficients never stored
};

/// f_alpha(c) = sum_i c_i alpha_i.
std::int64_t pairing(const AlphaSequence& alpha, const CellClass& c);

struct RichVerdict {
  bool rich;
  std::int64_t gcd;  // gcd of the attained values
  std::optional<CellClass> witness;  // pairs to 1 when rich
};

/// Surjectivity of f_alpha onto Z: gcd of the finitely many attained values is 1.
RichVerdict is_rich(const AlphaSequence& alpha);

struct DistinguishingWitness {
  CellClass cell;
  /// true: f_beta(cell) = 0 != f_alpha(cell); false: the reverse.
  bool in_kernel_of_beta;
};

/// Returns x in exactly one of ker f_alpha, ker f_beta, or nothing when the
/// kernels coincide.
std::optional<DistinguishingWitness> are_distinguished(const AlphaSequence& alpha, const AlphaSequence& beta);

struct BoundednessCertificate {
  std::int64_t bound;
  std::string criterion;
};

/// Every represented sequence is bounded, and bounded sequences give weakly
/// bounded classes, so E_alpha is quasi-isometric to G x Z.
BoundednessCertificate weak_boundedness_bound(const AlphaSequence& alpha);

}  // namespace qiclass
