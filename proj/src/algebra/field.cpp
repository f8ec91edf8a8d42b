#include "s2det/field.hpp"

#include "s2det/errors.hpp"

namespace s2det {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos) {
    throw InputError("not a rational number: '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("not a rational number: '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(Residue r) { return std::to_string(r.value); }

Rational RationalField::inv(const Rational& a) const {
  if (sgn(a) == 0) throw InputError("division by zero");
  return 1 / a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p <= 3) throw InputError("field characteristic must differ from 2 and 3");
  if (p >= (std::uint64_t{1} << 62)) throw InputError("modulus too large");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

Residue PrimeField::from_int(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r)};
}

Residue PrimeField::from_rational(const Rational& q) const {
  mpz_class m(std::to_string(p_));
  mpz_class num = q.get_num() % m;
  mpz_class den = q.get_den() % m;
  if (num < 0) num += m;
  if (den == 0) throw InputError("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
  Residue a{std::stoull(num.get_str())};
  Residue b{std::stoull(den.get_str())};
  return mul(a, inv(b));
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a.value == 0) throw InputError("division by zero mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

}  // namespace s2det
