#pragma once

#include <string>
#include <string_view>

#include "twoadic/symbols.hpp"

namespace twoadic {

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) +
                           ": " + message),
        position(position) {}
  std::size_t position;
};

/// Reads a 2-adic symbol (or a Jordan symbol with explicit subscripts)
/// from its text form.  Grammar:
///
///   symbol := item*
///   item   := term | '[' term+ ']' '_' int
///   term   := scale '^' [sign] [dim] ['_' sub]
///   scale  := power-of-two decimal | '1/' power-of-two decimal
///   sign   := '+' | '-'               (default '+')
///   dim    := nonnegative integer     (default 1)
///   sub    := 'II' | integer          (reduced mod 8)
///
/// Bracketed terms carry no individual subscript; bare terms must carry
/// one.  Bare type I terms at adjacent scales fuse into one compartment.
/// Throws ParseError, with the offending position, on non-power-of-two or
/// duplicate scales, illegal terms, non-consecutive bracketed scales, and
/// compartment oddities that admit no subscript assignment.
TwoAdicSymbol parse_symbol(std::string_view text);

/// Deterministic spelling: terms ascending by scale, '+' suppressed,
/// dimensions always written, single-term compartments unbracketed,
/// oddities written in -3..4.  parse_symbol(print_symbol(s)) == s.
std::string print_symbol(const TwoAdicSymbol& s);

/// Record serialization (JSON): a list of per-term records with fields
/// scale_exp, dim, type, sign, compartment_id, compartment_oddity.  The
/// compartment fields are null on type II terms.
std::string to_records(const TwoAdicSymbol& s);
TwoAdicSymbol from_records(std::string_view json);

}  // namespace twoadic
