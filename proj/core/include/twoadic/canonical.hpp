#pragma once

#include "twoadic/gram.hpp"
#include "twoadic/moves.hpp"
#include "twoadic/symbols.hpp"

namespace twoadic {

/// Equivalence classes of occupied scales under the interaction relation
/// (can_walk_2adic as the edge relation).  Classes and members ascending.
using SignwayPartition = std::vector<std::vector<int>>;

SignwayPartition signways(const TwoAdicSymbol& s);

/// Walks every minus sign as far left as possible: in the result all terms
/// have sign + except possibly the smallest-scale term of each signway,
/// which carries the product of that signway's signs.  Realized as a
/// composition of delta moves along interaction-graph paths, so the
/// compartment oddities come out right.  Idempotent and constant on
/// delta-orbits.
TwoAdicSymbol canonical_form(const TwoAdicSymbol& s);

/// Equality of canonical forms.
bool isometric_symbols(const TwoAdicSymbol& a, const TwoAdicSymbol& b);

/// Numeric invariants equivalent to the canonical form: per-scale
/// dimensions and types, the adjusted oddity of each compartment, and the
/// overall sign of each signway.
///
/// The adjusted oddity is the compartment's oddity plus 4 for each minus
/// sign in an odd position, positions counting the compartment's own terms
/// in scale order with every later term of the symbol occupying a single
/// virtual position after them.
struct InvariantVector {
  struct ScaleEntry {
    int scale_exp;
    int dim;
    Type type;
    friend bool operator==(const ScaleEntry&, const ScaleEntry&) = default;
  };
  struct CompartmentEntry {
    std::vector<int> scale_exps;
    int adjusted_oddity;
    friend bool operator==(const CompartmentEntry&, const CompartmentEntry&) = default;
  };
  struct SignwayEntry {
    std::vector<int> scale_exps;
    Sign sign;
    friend bool operator==(const SignwayEntry&, const SignwayEntry&) = default;
  };

  std::vector<ScaleEntry> scales;
  std::vector<CompartmentEntry> compartments;
  std::vector<SignwayEntry> signway_signs;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

InvariantVector invariant_vector(const TwoAdicSymbol& s);

/// Decides isometry of the 2-adic lattices given by two Gram matrices.
bool isometric_grams(const GramMatrix& a, const GramMatrix& b);

}  // namespace twoadic
