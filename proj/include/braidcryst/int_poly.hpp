#pragma once

#include "braidcryst/error.hpp"
#include "braidcryst/integer.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidcryst {

/// Integer polynomial, constant term first, no trailing zero coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long long> coeffs) {
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const Int& v) { return IntPoly(std::vector<Int>{v}); }
  static IntPoly monomial(int degree, const Int& coeff = 1) {
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return IntPoly(std::move(c));
  }
  /// x^n - 1
  static IntPoly x_pow_minus_one(int n) { return monomial(n) - constant(1); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Int(0);
  }
  Int leading() const { return c_.empty() ? Int(0) : c_.back(); }
  bool is_monic() const { return leading() == 1; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly pow(int k) const {
    IntPoly acc = constant(1);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
  }

  /// Quotient and remainder by a monic divisor; exact over the integers.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& d) const {
    if (!d.is_monic()) throw DomainError(Errc::InvalidArgument, "divisor must be monic");
    if (degree() < d.degree()) return {IntPoly{}, *this};
    std::vector<Int> rem = c_;
    std::vector<Int> q(static_cast<std::size_t>(degree() - d.degree() + 1));
    for (int k = degree(); k >= d.degree(); --k) {
      const Int f = rem[static_cast<std::size_t>(k)];
      if (f == 0) continue;
      const int shift = k - d.degree();
      q[static_cast<std::size_t>(shift)] = f;
      for (int j = 0; j <= d.degree(); ++j) rem[static_cast<std::size_t>(shift + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(rem))};
  }

  /// e.g. "x^2 - 2x + 1"
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      Int v = c_[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      const bool neg = v < 0;
      if (neg) v = -v;
      if (s.empty()) {
        if (neg) s += '-';
      } else {
        s += neg ? " - " : " + ";
      }
      if (v != 1 || k == 0) s += v.str();
      if (k >= 1) s += 'x';
      if (k >= 2) s += '^' + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

inline std::int64_t euler_phi(std::int64_t d) {
  std::int64_t result = d;
  std::int64_t m = d;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::int64_t moebius(std::int64_t d) {
  int factors = 0;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    ++factors;
  }
  if (d > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

/// Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}.
inline IntPoly cyclotomic(int d) {
  if (d < 1) throw DomainError(Errc::InvalidArgument, "cyclotomic index must be >= 1");
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const std::int64_t mu = moebius(d / e);
    if (mu == 1) num = num * IntPoly::x_pow_minus_one(e);
    if (mu == -1) den = den * IntPoly::x_pow_minus_one(e);
  }
  return num.divmod_monic(den).first;
}

/// Multiset {d -> multiplicity} with p = prod Phi_d^{m_d}. Trial division over
/// d with phi(d) <= remaining degree; anything left over that is not 1 means
/// p is not a product of cyclotomic polynomials.
inline std::map<int, int> cyclotomic_multiplicities(const IntPoly& p) {
  if (!p.is_monic())
    throw DomainError(Errc::NotProductOfCyclotomics, p.to_string() + " is not monic");
  std::map<int, int> mult;
  IntPoly rest = p;
  // phi(d) >= sqrt(d/2), so every candidate index is below 2 deg^2 + 2.
  const int bound = 2 * p.degree() * p.degree() + 2;
  for (int d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (euler_phi(d) > rest.degree()) continue;
    const IntPoly phi = cyclotomic(d);
    while (rest.degree() >= phi.degree()) {
      auto [q, r] = rest.divmod_monic(phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult[d];
    }
  }
  if (rest != IntPoly::constant(1))
    throw DomainError(Errc::NotProductOfCyclotomics,
                      p.to_string() + " leaves cofactor " + rest.to_string());
  return mult;
}

}  // namespace braidcryst
