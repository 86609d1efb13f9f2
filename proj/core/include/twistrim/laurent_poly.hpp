#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace twistrim {

using Integer = mpz_class;

inline int cmpabs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

/// Integer Laurent polynomial in one variable t.
///
/// Stored as a dense coefficient run starting at t^min_exp. The zero
/// polynomial has no coefficients; any other value has nonzero leading and
/// trailing coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);
  LaurentPoly(std::int64_t min_exp, std::vector<Integer> coeffs);

  static LaurentPoly monomial(Integer coeff, std::int64_t exp);
  static LaurentPoly one() { return LaurentPoly(Integer(1)); }
  /// Builds from small coefficients, lowest exponent first.
  static LaurentPoly from_ints(std::int64_t min_exp,
                               const std::vector<long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// True when the value is ±t^k.
  bool is_unit() const;

  std::int64_t min_exp() const { return min_exp_; }
  std::int64_t max_exp() const;
  /// Span max_exp - min_exp; -1 for zero.
  std::int64_t width() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::int64_t exp) const;
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& trailing() const { return coeffs_.front(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& b) { return a *= b; }

  bool operator==(const LaurentPoly& rhs) const = default;

  /// Multiplication by t^k.
  LaurentPoly shifted(std::int64_t k) const;
  /// Substitution t -> t^{-1}.
  LaurentPoly reflected() const;
  /// Unit multiple ±t^k with min_exp = 0 and positive constant term.
  LaurentPoly normalized() const;
  /// Evaluation at an integer; x must be ±1 when min_exp < 0.
  Integer evaluate(const Integer& x) const;
  /// gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  /// Descending-exponent text such as "t^2 - 3*t + 1".
  std::string to_string() const;

 private:
  void trim();

  std::int64_t min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

/// Exact quotient num / den in Z[t, t^-1]; throws std::domain_error when
/// den does not divide num.
LaurentPoly divexact(const LaurentPoly& num, const LaurentPoly& den);

/// Equality up to units ±t^k.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

// Helpers on ordinary polynomials; exponents are taken literally and must
// be non-negative unless stated otherwise.

LaurentPoly primitive_part(const LaurentPoly& p);
/// lc(b)^(deg a - deg b + 1) * a mod b, both treated as polynomials from t^0.
LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b);
/// gcd in Z[t] of the non-negative-exponent normalizations; normalized.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact integer exponentiation helper used across modules.
Integer ipow(const Integer& base, unsigned long exp);

}  // namespace twistrim
