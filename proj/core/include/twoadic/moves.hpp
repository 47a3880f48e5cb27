#pragma once

#include <array>

#include "twoadic/symbols.hpp"

namespace twoadic {

/// The four fine-level sign walk shapes.  Each negates the signs of the
/// two chosen terms and leaves an isometric lattice.
enum class WalkCase {
  same_scale = 0,     // any two terms of equal scale
  adjacent_mixed = 1, // adjacent scales, one odd1 and one even2
  adjacent_odd = 2,   // adjacent scales, both givers or both receivers
  jump = 3,           // scales differing by a factor of 4, both odd1
};

/// Walks the signs of terms a and b.  odd1 subscripts shift by 4 (cases
/// 0, 1, 3) or the terms trade giver/receiver status (case 2, subscripts
/// shift by +-2).  Throws "illegal sign walk" when the case's conditions
/// do not hold, notably case 2 on a giver/receiver pair.
FineSymbol fine_sign_walk(const FineSymbol& f, std::size_t a, std::size_t b, WalkCase c);

/// Swaps giver/receiver status between two odd1 terms of one compartment,
/// keeping each term's sign (subscript t becomes -t on the swapped pair).
FineSymbol giver_permute(const FineSymbol& f, std::size_t a, std::size_t b);

/// Converts four givers of one compartment to receivers or vice versa,
/// keeping signs (subscripts shift by -+2).
FineSymbol giver_convert(const FineSymbol& f, const std::array<std::size_t, 4>& indices);

/// Reassigns the subscripts of one compartment of a Jordan symbol.  The
/// pairs (scale_exp, new_oddity) must cover exactly the members of one
/// compartment, every reassigned term must stay legal, and the
/// compartment's oddity must not change.
JordanSymbol oddity_fuse(const JordanSymbol& j,
                         std::span<const std::pair<int, int>> new_oddities);

/// A sign walk generator acting on 2-adic symbols: negates the signs at
/// scales 2^i and 2^j and shifts the oddity of each involved compartment
/// by 4.  Whether it applies depends only on data that sign walks never
/// change, so the set of legal moves is an invariant of the lattice.
struct DeltaMove {
  int i = 0;  // scale exponents, i < j
  int j = 0;

  friend bool operator==(const DeltaMove&, const DeltaMove&) = default;
};

/// True iff the terms at scales 2^i and 2^j are nontrivial and
///  (1) the scales are adjacent and the types differ, or
///  (2) the scales are adjacent, both type I, and their compartment has
///      dimension > 2 or oddity +-2, or
///  (3) the scales differ by a factor of 4, both terms have type I, and
///      the scale between them is trivial.
bool can_walk_2adic(const TwoAdicSymbol& s, int i, int j);

/// Applies the generator; throws when can_walk_2adic fails.
TwoAdicSymbol delta(const TwoAdicSymbol& s, DeltaMove m);

}  // namespace twoadic
