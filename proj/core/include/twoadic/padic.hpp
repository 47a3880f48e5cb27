#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace twoadic {

/// Exact rational scalar.  Only the 2-adic valuation and the odd part
/// mod 8 of a value ever matter to the calculus, but keeping full
/// rationals makes every intermediate quantity exactly representable.
using Rational = mpq_class;

/// num/den in lowest terms; throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);

/// Sign of a unimodular lattice: the Legendre symbol of its determinant.
enum class Sign : int { plus = 1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus : Sign::minus;
}
constexpr Sign operator-(Sign s) {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}
constexpr char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Reduce into [0, 8).
constexpr int mod8(long long v) {
  int r = static_cast<int>(v % 8);
  return r < 0 ? r + 8 : r;
}

/// An odd residue mod 8, i.e. the class of a 2-adic unit up to squares.
class Unit8 {
 public:
  explicit Unit8(long long r) : v_(mod8(r)) {
    if (v_ % 2 == 0) throw std::domain_error("even residue is not a unit mod 8");
  }

  int value() const { return v_; }

  friend Unit8 operator*(Unit8 a, Unit8 b) {
    return Unit8(static_cast<long long>(a.v_) * b.v_);
  }
  friend bool operator==(Unit8 a, Unit8 b) { return a.v_ == b.v_; }

 private:
  int v_;
};

/// 2^e as an exact rational, e of either sign.
Rational pow2(int e);

/// "8" for exponent 3, "1/8" for exponent -3.
std::string scale_string(int scale_exp);

/// 2-adic valuation of a nonzero rational.  Throws on zero.
int val2(const Rational& x);

/// Odd part of a nonzero rational, mod 8: writing x = 2^v * a/b with a, b
/// odd, returns a * b^{-1} mod 8 (every odd residue is self-inverse mod 8).
Unit8 unit_part_mod8(const Rational& x);

/// + for u = +-1, - for u = +-3 mod 8.
Sign legendre2(Unit8 u);

/// True iff x = 2^odd * u with legendre2(u) = -.
bool is_antisquare(const Rational& x);

}  // namespace twoadic
