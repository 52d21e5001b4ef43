#include "hsauto/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hsauto/error.hpp"

namespace hsauto {

namespace {

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
  const long db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const std::size_t shift = static_cast<std::size_t>(a.degree() - db);
    a = b.leading() * a - Polynomial::monomial(a.leading(), shift) * b;
  }
  return a;
}

Polynomial positive_leading(Polynomial p) {
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

}  // namespace

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(BigInt c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  return divided_by(content());
}

Polynomial Polynomial::divided_by(const BigInt& c) const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    BigInt q, r;
    boost::multiprecision::divide_qr(coeffs_[i], c, q, r);
    if (r != 0) throw std::domain_error("coefficient not divisible by " + c.str());
    out[i] = std::move(q);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const BigInt& c, const Polynomial& p) {
  if (c == 0) return {};
  Polynomial out = p;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial rem = a;
  std::vector<BigInt> quot(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    BigInt q, r;
    boost::multiprecision::divide_qr(rem.leading(), b.leading(), q, r);
    if (r != 0) throw std::domain_error("polynomial division is not exact");
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
    quot[shift] = q;
    rem = rem - Polynomial::monomial(q, shift) * b;
  }
  if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
  return Polynomial(std::move(quot));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive_part();
  Polynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return positive_leading(x);
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const BigInt& c = p.coeffs()[k];
    if (c == 0) continue;
    BigInt mag = boost::multiprecision::abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << "z";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  const BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
  if (c > 1) {
    num_ = num_.divided_by(c);
    den_ = den_.divided_by(c);
  }
  for (const auto& coeff : den_.coeffs()) {
    if (coeff == 0) continue;
    if (coeff < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    break;
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

std::vector<BigInt> series_coeffs(const RationalFunction& r, std::size_t k_max) {
  const Polynomial& num = r.numerator();
  const Polynomial& den = r.denominator();
  const BigInt d0 = den.coeff(0);
  if (d0 == 0) throw ZeroConstantTerm("denominator " + to_string(den) + " vanishes at z = 0");
  std::vector<BigInt> out(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    BigInt acc = num.coeff(k);
    const std::size_t top = std::min<std::size_t>(k, den.coeffs().size() - 1);
    for (std::size_t j = 1; j <= top; ++j) acc -= den.coeffs()[j] * out[k - j];
    BigInt q, rem;
    boost::multiprecision::divide_qr(acc, d0, q, rem);
    if (rem != 0) throw std::domain_error("series coefficient " + std::to_string(k) + " is not an integer");
    out[k] = std::move(q);
  }
  return out;
}

std::string to_string(const RationalFunction& r) {
  return "(" + to_string(r.numerator()) + ") / (" + to_string(r.denominator()) + ")";
}

}  // namespace hsauto
