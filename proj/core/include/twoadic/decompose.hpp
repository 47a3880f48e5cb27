#pragma once

#include "twoadic/gram.hpp"
#include "twoadic/symbols.hpp"

namespace twoadic {

/// A unimodular block split off at a scale: the original block divided by
/// 2^scale_exp.  Blocks are 1x1 with odd entry or 2x2 even unimodular.
struct ScaledBlock {
  int scale_exp = 0;
  GramMatrix block;
};

/// Orthogonally splits g into blocks of size 1 and 2.  At each step the
/// pivot is an entry of minimal 2-adic valuation, preferring diagonal
/// entries, then lowest row, then lowest column; a diagonal pivot splits
/// off that vector's span, an off-diagonal pivot splits off the
/// corresponding 2x2 block (even unimodular after rescaling).
/// Throws DegenerateFormError on degenerate input.
std::vector<ScaledBlock> jordan_split(const GramMatrix& g);

/// (dim, type, sign, oddity) of a 1x1 block with odd entry or a 2x2 even
/// unimodular block, as a scale-0 constituent.
JordanConstituent classify_unimodular_block(const GramMatrix& block);

/// The deterministic multiset of n subscripts in {1,7,3,5} with the given
/// sign product and sum: lexicographically smallest in the order
/// 1 < 7 < 3 < 5.  Throws std::domain_error("illegal symbol") when the
/// (n, sign, oddity) triple is not realizable.
std::vector<Unit8> choose_fine_units(int n, Sign sign, int oddity);

/// jordan_split + classify, then any scale carrying both odd and even
/// blocks is rewritten as a pure odd1 multiset with the same dimension,
/// sign and oddity (such a scale is odd unimodular after rescaling, so
/// choose_fine_units always succeeds).
FineSymbol fine_symbol_of(const GramMatrix& g);

/// Block-diagonal representative: 2^e * <t> per odd1 term, 2^e * (0 1;1 0)
/// or 2^e * (2 1;1 2) per even2 term, in normalized term order.
GramMatrix gram_of(const FineSymbol& f);

/// A fine symbol refining the given 2-adic symbol: compartments get a
/// deterministic witness assignment, each constituent then splits via
/// choose_fine_units (type I) or into even blocks (type II).
FineSymbol fine_refinement(const TwoAdicSymbol& s);

/// Full pipeline: fine_symbol_of, fine_to_jordan, jordan_to_2adic.
TwoAdicSymbol symbol_of(const GramMatrix& g);

}  // namespace twoadic
