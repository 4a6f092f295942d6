#ifndef PMDEPTH_QPOLY_HPP
#define PMDEPTH_QPOLY_HPP

// Dense polynomials in q with nonnegative integer coefficients and checked
// arithmetic. Enough to state generating-function identities exactly.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pmdepth/error.hpp"

namespace pmdepth {

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

}  // namespace detail

class QPolynomial {
 public:
  using Coeff = std::uint64_t;

  QPolynomial() = default;
  QPolynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit QPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPolynomial monomial(std::size_t exponent, Coeff c = 1) {
    std::vector<Coeff> v(exponent + 1, 0);
    v[exponent] = c;
    return QPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  Coeff coeff(std::size_t exponent) const { return exponent < coeffs_.size() ? coeffs_[exponent] : 0; }

  /// Sum of coefficients, i.e. the value at q = 1.
  Coeff eval_at_one() const {
    Coeff s = 0;
    for (Coeff c : coeffs_) s = detail::checked_add(s, c);
    return s;
  }

  /// Adds c * q^exponent in place.
  void add_term(std::size_t exponent, Coeff c = 1) {
    if (c == 0) return;
    if (exponent >= coeffs_.size()) coeffs_.resize(exponent + 1, 0);
    coeffs_[exponent] = detail::checked_add(coeffs_[exponent], c);
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = detail::checked_add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = detail::checked_add(out[i + j], detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return QPolynomial(std::move(out));
  }

  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;  // index = exponent
};

/// [k]_q = 1 + q + ... + q^{k-1}.
inline QPolynomial q_int(long k) {
  if (k < 1) throw DomainError("q-integer needs k >= 1");
  return QPolynomial(std::vector<QPolynomial::Coeff>(static_cast<std::size_t>(k), 1));
}

/// [2n-1]_q!! = [1]_q [3]_q ... [2n-1]_q.
inline QPolynomial q_double_factorial(long n) {
  if (n < 0) throw DomainError("q-double factorial needs n >= 0");
  QPolynomial out{1};
  for (long i = 1; i <= n; ++i) out *= q_int(2 * i - 1);
  return out;
}

/// p * q^k.
inline QPolynomial shift(const QPolynomial& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<QPolynomial::Coeff> v(k, 0);
  v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
  return QPolynomial(std::move(v));
}

/// q^m p(1/q) with m = deg p.
inline QPolynomial reverse(const QPolynomial& p) {
  if (p.is_zero()) throw DomainError("reverse of the zero polynomial");
  std::vector<QPolynomial::Coeff> v(p.coeffs().rbegin(), p.coeffs().rend());
  return QPolynomial(std::move(v));
}

inline bool is_palindromic(const QPolynomial& p) {
  if (p.is_zero()) throw DomainError("palindromicity of the zero polynomial");
  return reverse(p) == p;
}

/// "1 + 2q + q^3"; the zero polynomial prints as "0".
inline std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
    const auto c = p.coeffs()[e];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || e == 0) out += std::to_string(c);
    if (e >= 1) out += 'q';
    if (e >= 2) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace pmdepth

#endif  // PMDEPTH_QPOLY_HPP
