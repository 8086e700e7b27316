#pragma once

#include <string>
#include <vector>

#include "chowpow/bigint.hpp"

namespace chowpow {

// Polynomial in q with exact integer coefficients and no negative exponents.
// coeff index = exponent. Normal form: trailing zero coefficients stripped,
// so the zero polynomial has an empty coefficient vector.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial one() { return monomial(0); }
  static QPolynomial monomial(int exponent, BigInt c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int exponent) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff_sum() const;

  QPolynomial shifted(int exponent) const;  // multiply by q^exponent

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  // Exact division; throws std::domain_error if the remainder is nonzero or
  // the quotient would be non-integral.
  QPolynomial divided_exact(const QPolynomial& divisor) const;

  bool is_palindromic() const;
  std::string to_string() const;

  bool operator==(const QPolynomial&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// 1 - q^k
QPolynomial one_minus_q_pow(int k);

// Gaussian binomial [a+b choose a]_q = sum_r p_r(a,b) q^r, the generating
// function of partitions fitting inside an a x b rectangle. Degree a*b,
// palindromic, coefficients summing to C(a+b, a).
QPolynomial q_binomial(int a, int b);

// p_r(a,b): number of partitions of r fitting inside an a x b rectangle.
BigInt rect_partition_count(long long r, int a, int b);

}  // namespace chowpow
