#pragma once

#include <string>
#include <string_view>

#include "twoadic/gram.hpp"

namespace twoadic {

/// Reads the gram file format: a JSON object with fields
///   dim       - positive integer
///   entries   - dim x dim symmetric array of integers
///   denom_exp - integer >= 0, optional (default 0)
/// describing the matrix 2^{-denom_exp} * entries.
/// Throws std::invalid_argument on malformed input.
GramMatrix read_gram_json(std::string_view text);

/// Writes a matrix whose entries are dyadic rationals in the same format.
std::string write_gram_json(const GramMatrix& g);

}  // namespace twoadic
