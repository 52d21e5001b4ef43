#ifndef HSAUTO_POLYNOMIAL_HPP
#define HSAUTO_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "hsauto/numeric.hpp"

namespace hsauto {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree with no trailing zeros (zero polynomial is
/// the empty list).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<BigInt> coeffs);
  static Polynomial constant(BigInt c) { return Polynomial(std::vector<BigInt>{std::move(c)}); }
  /// c * z^k
  static Polynomial monomial(BigInt c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }

  /// gcd of the coefficients, non-negative.
  BigInt content() const;
  Polynomial primitive_part() const;
  /// Divides every coefficient exactly by c.
  Polynomial divided_by(const BigInt& c) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigInt& c, const Polynomial& p);

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact quotient a / b over the integers; throws std::domain_error when b
/// does not divide a in Z[z].
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Primitive greatest common divisor in Z[z] with positive leading
/// coefficient; integer content is ignored. gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p);

/// Quotient of two integer polynomials, kept in a canonical form: no common
/// polynomial factor, no common integer content, and the lowest-degree
/// nonzero coefficient of the denominator positive.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction from_polynomial(Polynomial p) { return RationalFunction(std::move(p), Polynomial::constant(1)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);

  bool operator==(const RationalFunction&) const = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// First k_max + 1 Taylor coefficients at z = 0. Throws ZeroConstantTerm
/// if the denominator vanishes at 0 and std::domain_error if a coefficient
/// is not an integer.
std::vector<BigInt> series_coeffs(const RationalFunction& r, std::size_t k_max);

std::string to_string(const RationalFunction& r);

}  // namespace hsauto

#endif  // HSAUTO_POLYNOMIAL_HPP
