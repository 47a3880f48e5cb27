#pragma once

#include <cstdint>

#include "twoadic/gram.hpp"

namespace twoadic {

enum class Verdict { isometric, distinct, unknown };

struct OracleOptions {
  /// Search nodes before giving up with Verdict::unknown.
  std::uint64_t node_budget = 5'000'000;
  /// Nonzero randomizes the branch order (helps witness hunting in big
  /// spaces); zero keeps the lexicographic order.
  std::uint64_t seed = 0;
  /// Partition of the root branches for concurrent runs.  Shards are
  /// disjoint and cover the space: a witness in any shard means isometric,
  /// and only all shards exhausting means distinct.
  int shard_index = 0;
  int shard_count = 1;
};

/// Decides whether some X over Z/2^precision with odd determinant has
/// X^T a X = b mod 2^precision.  Entries must be integers.  The search
/// fixes one bit-plane of a column at a time, pruning by the congruences
/// mod the bits fixed so far, so a completed search is conclusive either
/// way; running out of budget yields unknown.  A witness is re-verified
/// with exact arithmetic, so isometric is never reported wrongly.
Verdict isometric_mod(const GramMatrix& a, const GramMatrix& b, int precision,
                      const OracleOptions& opts = {});

/// val2 of the determinants plus 3: enough precision that unit classes
/// mod 8 stay visible behind the determinant.
int default_precision(const GramMatrix& a, const GramMatrix& b);

/// Deterministic seeded generator: a random legal fine symbol with scales
/// in [min_scale_exp, max_scale_exp], realized block-diagonally and
/// conjugated by a random unimodular integer matrix with entries in
/// [-2, 2].  Same seed, same output.
GramMatrix random_lattice(int dim, int min_scale_exp, int max_scale_exp,
                          std::uint64_t seed);

}  // namespace twoadic
