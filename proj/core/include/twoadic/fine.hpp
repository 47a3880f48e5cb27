#pragma once

#include <cstddef>
#include <vector>

#include "twoadic/padic.hpp"

namespace twoadic {

/// One term of a fine decomposition: either a scaled 1-dimensional odd
/// lattice 2^e * <t> or a scaled 2-dimensional even unimodular block.
struct FineTerm {
  enum class Kind { odd1, even2 };

  int scale_exp = 0;
  Kind kind = Kind::odd1;
  int oddity = 1;               // odd1 only, in {1,3,5,7}
  Sign even_sign = Sign::plus;  // even2 only

  static FineTerm odd(int scale_exp, Unit8 t) {
    return {scale_exp, Kind::odd1, t.value(), Sign::plus};
  }
  static FineTerm even(int scale_exp, Sign s) {
    return {scale_exp, Kind::even2, 0, s};
  }

  int dim() const { return kind == Kind::odd1 ? 1 : 2; }

  /// odd1 signs are forced by the subscript: + iff t = +-1.
  Sign sign() const {
    if (kind == Kind::even2) return even_sign;
    return legendre2(Unit8(oddity));
  }

  /// Givers have subscript 1 mod 4, receivers -1 mod 4.
  bool giver() const { return kind == Kind::odd1 && oddity % 4 == 1; }

  friend bool operator==(const FineTerm&, const FineTerm&) = default;
};

/// A multiset of fine terms.  At any one scale all terms are odd1 or all
/// are even2; term order is not significant.
struct FineSymbol {
  std::vector<FineTerm> terms;

  bool empty() const { return terms.empty(); }
  int total_dim() const;

  /// Throws if some scale mixes odd1 and even2 terms, or an odd1 term
  /// carries an even subscript.
  void validate() const;

  /// Canonically ordered copy (for multiset comparison).
  FineSymbol normalized() const;

  /// Multiset equality.
  friend bool operator==(const FineSymbol& a, const FineSymbol& b) {
    return a.normalized().terms == b.normalized().terms;
  }
};

/// Groups of term indices: the maximal sets of odd1 terms whose scales
/// form runs of consecutive exponents.  Groups come in scale order.
std::vector<std::vector<std::size_t>> fine_compartments(const FineSymbol& f);

}  // namespace twoadic
