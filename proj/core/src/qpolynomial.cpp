#include "chowpow/qpolynomial.hpp"

#include <stdexcept>

namespace chowpow {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPolynomial QPolynomial::monomial(int exponent, BigInt c) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = std::move(c);
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

BigInt QPolynomial::coeff_sum() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs_) s += c;
  return s;
}

QPolynomial QPolynomial::shifted(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> v(coeffs_.size() + static_cast<std::size_t>(exponent));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + exponent] = coeffs_[i];
  return QPolynomial(std::move(v));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::divided_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw std::domain_error("non-exact polynomial division (degree)");
  }
  std::vector<BigInt> rem = coeffs_;
  const std::vector<BigInt>& d = divisor.coeffs_;
  const BigInt& lead = d.back();
  std::vector<BigInt> quot(rem.size() - d.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + d.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("non-exact polynomial division");
    BigInt f = top / lead;
    quot[i] = f;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * d[j];
  }
  for (const BigInt& c : rem) {
    if (c != 0) throw std::domain_error("non-exact polynomial division (remainder)");
  }
  return QPolynomial(std::move(quot));
}

bool QPolynomial::is_palindromic() const {
  for (std::size_t i = 0, j = coeffs_.size(); i < j; ++i) {
    if (coeffs_[i] != coeffs_[j - i - 1]) return false;
  }
  return true;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += coeffs_[i] > 0 ? " + " : " - ";
    else if (coeffs_[i] < 0) out += "-";
    BigInt a = abs(coeffs_[i]);
    if (a != 1 || i == 0) out += a.str();
    if (i > 0) {
      if (a != 1) out += "*";
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

QPolynomial one_minus_q_pow(int k) {
  return QPolynomial::one() - QPolynomial::monomial(k);
}

QPolynomial q_binomial(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("q_binomial: negative side");
  if (a > b) std::swap(a, b);  // symmetric; fewer product steps
  // [b+i choose i]_q built up by i: each partial product is itself a
  // Gaussian binomial, so the division is exact at every step.
  QPolynomial acc = QPolynomial::one();
  for (int i = 1; i <= a; ++i) {
    acc = (acc * one_minus_q_pow(b + i)).divided_exact(one_minus_q_pow(i));
  }
  return acc;
}

BigInt rect_partition_count(long long r, int a, int b) {
  if (r < 0) throw std::invalid_argument("rect_partition_count: negative r");
  if (r > static_cast<long long>(a) * b) return 0;
  return q_binomial(a, b).coeff(static_cast<int>(r));
}

}  // namespace chowpow
