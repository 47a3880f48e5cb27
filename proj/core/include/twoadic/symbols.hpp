#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twoadic/fine.hpp"

namespace twoadic {

/// Type I = scaled odd unimodular, type II = scaled even unimodular.
enum class Type { I, II };

/// One constituent of a Jordan decomposition, with its own oddity.
struct JordanConstituent {
  int scale_exp = 0;
  int dim = 0;
  Type type = Type::II;
  Sign sign = Sign::plus;
  int oddity = 0;  // mod 8, type I only

  friend bool operator==(const JordanConstituent&, const JordanConstituent&) = default;
};

/// Constituents at distinct scales, ascending.
using JordanSymbol = std::vector<JordanConstituent>;

/// The table of unimodular lattices that exist:
///   q^{+0}_II;  q^{+-n}_II, n even > 0;  q^{+1}_{+-1}, q^{-1}_{+-3};
///   q^{+2}_{0,+-2}, q^{-2}_{4,+-2};  q^{+-n}_t, n > 2, t = n mod 2.
bool is_legal_term(const JordanConstituent& c);

struct TwoAdicTerm {
  int scale_exp = 0;
  int dim = 0;
  Type type = Type::II;
  Sign sign = Sign::plus;

  friend bool operator==(const TwoAdicTerm&, const TwoAdicTerm&) = default;
};

/// A maximal run of type I terms at consecutive scales.  Member terms
/// carry no individual oddities; only the fused sum is well-defined.
struct Compartment {
  std::size_t first = 0;  // term index range, inclusive
  std::size_t last = 0;
  int oddity = 0;  // mod 8

  friend bool operator==(const Compartment&, const Compartment&) = default;
};

/// A 2-adic symbol: nontrivial terms at distinct ascending scales plus one
/// fused oddity per compartment.  Scales absent from the term list carry
/// the trivial constituent q^{+0}_II.
class TwoAdicSymbol {
 public:
  TwoAdicSymbol() = default;  // the 0-dimensional symbol

  /// Terms in any order (sorted internally) and one oddity per
  /// compartment, in scale order.  Validates legality, including that
  /// every compartment admits a legal subscript assignment.
  TwoAdicSymbol(std::vector<TwoAdicTerm> terms, std::vector<int> compartment_oddities);

  std::span<const TwoAdicTerm> terms() const { return terms_; }
  std::span<const Compartment> compartments() const { return comps_; }
  bool empty() const { return terms_.empty(); }

  /// nullptr when the scale is trivial (unoccupied).
  const TwoAdicTerm* term_at(int scale_exp) const;
  /// Compartment containing the (type I) term at this scale, else nullptr.
  const Compartment* compartment_at(int scale_exp) const;

  /// Total dimension of a compartment's terms.
  int compartment_dim(const Compartment& c) const;

  friend bool operator==(const TwoAdicSymbol&, const TwoAdicSymbol&) = default;

 private:
  std::vector<TwoAdicTerm> terms_;
  std::vector<Compartment> comps_;
};

/// Per scale: dimensions add, signs multiply, subscripts add, with
/// II + II = II and II + t = t.
JordanSymbol fine_to_jordan(const FineSymbol& f);

/// Brackets the maximal consecutive runs of type I constituents and fuses
/// their oddities.  Trivial constituents are dropped.
TwoAdicSymbol jordan_to_2adic(const JordanSymbol& j);

/// Is there a per-term oddity assignment t_i, legal for each (dim, sign),
/// with sum = oddity mod 8?  Returns a witness when one exists.
std::optional<std::vector<int>> compartment_assignment(
    std::span<const std::pair<int, Sign>> dims_and_signs, int oddity);
bool compartment_assignment_exists(
    std::span<const std::pair<int, Sign>> dims_and_signs, int oddity);

TwoAdicSymbol direct_sum(const TwoAdicSymbol& a, const TwoAdicSymbol& b);

/// Every scale replaced by its reciprocal.
TwoAdicSymbol dual(const TwoAdicSymbol& s);

/// Rescale inner products by 2^k.
TwoAdicSymbol scale_by_two(const TwoAdicSymbol& s, int k);

/// Rescale inner products by an odd unit u: odd1 subscripts become u*t.
/// Even blocks are untouched (their determinant moves by u^2 = 1 mod 8).
FineSymbol rescale_by_unit(const FineSymbol& f, Unit8 u);

/// Isometry invariants of the rationalized form, all computable term by
/// term from a fine symbol.
struct TotalInvariants {
  int total_dim = 0;
  int det_val = 0;          // 2-adic valuation of the determinant
  Unit8 det_unit{1};        // odd part of the determinant, mod 8
  int total_oddity = 0;     // mod 8, includes the antisquare correction

  friend bool operator==(const TotalInvariants&, const TotalInvariants&) = default;
};

TotalInvariants total_invariants(const FineSymbol& f);

}  // namespace twoadic
