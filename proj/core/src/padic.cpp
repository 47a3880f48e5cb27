#include "twoadic/padic.hpp"

namespace twoadic {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// index of the lowest set bit; z must be nonzero
int low_bit(const mpz_class& z) {
  mpz_class a = abs(z);
  return static_cast<int>(mpz_scan1(a.get_mpz_t(), 0));
}

}  // namespace

Rational pow2(int e) {
  mpz_class z = 1;
  z <<= (e >= 0 ? e : -e);
  return e >= 0 ? Rational(z) : Rational(mpz_class(1), z);
}

std::string scale_string(int scale_exp) {
  mpz_class z = 1;
  z <<= (scale_exp >= 0 ? scale_exp : -scale_exp);
  const std::string s = z.get_str();
  return scale_exp >= 0 ? s : "1/" + s;
}

int val2(const Rational& x) {
  if (x == 0) throw std::domain_error("zero has no valuation");
  return low_bit(x.get_num()) - low_bit(x.get_den());
}

Unit8 unit_part_mod8(const Rational& x) {
  if (x == 0) throw std::domain_error("zero has no odd part");
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  num >>= low_bit(num);
  den >>= low_bit(den);
  const unsigned long rn = mpz_fdiv_ui(num.get_mpz_t(), 8);
  const unsigned long rd = mpz_fdiv_ui(den.get_mpz_t(), 8);
  return Unit8(static_cast<long long>(rn * rd));
}

Sign legendre2(Unit8 u) {
  return (u.value() == 1 || u.value() == 7) ? Sign::plus : Sign::minus;
}

bool is_antisquare(const Rational& x) {
  if (x == 0) throw std::domain_error("zero is not classifiable");
  return val2(x) % 2 != 0 && legendre2(unit_part_mod8(x)) == Sign::minus;
}

}  // namespace twoadic
