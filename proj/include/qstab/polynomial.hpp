#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/numeric.hpp"

namespace qstab {

// Dense univariate polynomial in q with exact rational coefficients.
// coeffs[k] is the coefficient of q^k; trailing zeros are normalized
// away, so the zero polynomial has an empty coefficient list.
class QPolynomial {
 public:
  QPolynomial() = default;

  explicit QPolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPolynomial constant(Rat v) {
    QPolynomial p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }

  static QPolynomial monomial(std::size_t exp, Rat v = Rat(1)) {
    QPolynomial p;
    if (v != 0) {
      p.c_.assign(exp + 1, Rat(0));
      p.c_[exp] = std::move(v);
    }
    return p;
  }

  // 1 - q^k
  static QPolynomial one_minus_q_pow(std::size_t k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[0] = 1;
    c[k] = -1;
    return QPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const std::vector<Rat>& coeffs() const { return c_; }

  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  bool integral() const {
    for (const auto& v : c_)
      if (!is_integer(v)) return false;
    return true;
  }

  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }

  QPolynomial operator-() const {
    QPolynomial r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  QPolynomial& operator-=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPolynomial(std::move(c));
  }

  friend QPolynomial operator*(const QPolynomial& a, const Rat& s) {
    QPolynomial r(a);
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
  }

  // Exact division by (1 - q^k); nullopt when the division leaves a
  // remainder.
  std::optional<QPolynomial> divide_by_one_minus_q_pow(std::size_t k) const {
    if (is_zero()) return QPolynomial{};
    if (c_.size() <= k) return std::nullopt;
    // quotient degree = deg - k; 1/(1-q^k) acts as prefix sums with stride k
    std::vector<Rat> quot(c_.size() - k, Rat(0));
    std::vector<Rat> rem(c_.begin(), c_.end());
    for (std::size_t i = 0; i < quot.size(); ++i) {
      quot[i] = rem[i];
      rem[i + k] += rem[i];  // subtract quot[i]*(1 - q^k)
      rem[i] = 0;
    }
    for (std::size_t i = quot.size(); i < rem.size(); ++i)
      if (rem[i] != 0) return std::nullopt;
    return QPolynomial(std::move(quot));
  }

  // Multiplication by q^k.
  QPolynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rat> c(c_.size() + k, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return QPolynomial(std::move(c));
  }

  // Order of vanishing at q = 0 (index of the first nonzero coefficient).
  std::size_t low_order() const {
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == 0) ++i;
    return i;
  }

  std::string str(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Rat& v = c_[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      Rat a = v;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (k == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

inline QPolynomial from_int_coeffs(std::vector<long long> coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.emplace_back(v);
  return QPolynomial(std::move(c));
}

} // namespace qstab
