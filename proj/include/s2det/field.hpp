#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace s2det {

using Rational = mpq_class;

// Accepts "a", "-a", "a/b"; the result is canonical. Zero denominators are rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

__extension__ using uint128 = unsigned __int128;

struct Residue {
  std::uint64_t value = 0;

  friend bool operator==(Residue, Residue) = default;
};

std::string to_string(Residue r);

// Exact arithmetic in Q.
class RationalField {
 public:
  using value_type = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Rational parse(std::string_view text) const { return parse_rational(text); }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational inv(const Rational& a) const;
  bool is_zero(const Rational& a) const { return sgn(a) == 0; }
};

// GF(p) with p prime, 3 < p < 2^62.
class PrimeField {
 public:
  using value_type = Residue;

  static constexpr std::uint64_t kDefaultModulus = 101;

  explicit PrimeField(std::uint64_t p = kDefaultModulus);

  std::uint64_t modulus() const { return p_; }
  Residue zero() const { return {0}; }
  Residue one() const { return {1}; }
  Residue from_int(std::int64_t v) const;
  // a/b with b invertible mod p.
  Residue from_rational(const Rational& q) const;
  Residue parse(std::string_view text) const { return from_rational(parse_rational(text)); }
  Residue add(Residue a, Residue b) const { return {(a.value + b.value) % p_}; }
  Residue sub(Residue a, Residue b) const { return {(a.value + p_ - b.value) % p_}; }
  Residue mul(Residue a, Residue b) const {
    return {static_cast<std::uint64_t>(static_cast<uint128>(a.value) * b.value % p_)};
  }
  Residue neg(Residue a) const { return {(p_ - a.value) % p_}; }
  Residue pow(Residue a, std::uint64_t e) const;
  Residue inv(Residue a) const;
  bool is_zero(Residue a) const { return a.value == 0; }

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace s2det
