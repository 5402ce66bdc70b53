#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/polynomial.hpp"

namespace qstab {

// q^{q_shift} * num / prod_k (1 - q^k), with the denominator kept as a
// multiset of cyclotomic-product factors. Every denominator arising from
// phi and b_pi has this shape, so reduction is exact trial division and
// never a general gcd. After normalization the numerator has a nonzero
// constant term (or is zero).
class RationalQ {
 public:
  RationalQ() = default;

  explicit RationalQ(QPolynomial num, std::vector<long long> denom_factors = {},
                     long long q_shift = 0)
      : num_(std::move(num)), denom_(std::move(denom_factors)), shift_(q_shift) {
    std::sort(denom_.begin(), denom_.end());
    normalize();
  }

  static RationalQ from_rat(const Rat& v) { return RationalQ(QPolynomial::constant(v)); }

  const QPolynomial& numerator() const { return num_; }
  const std::vector<long long>& denominator_factors() const { return denom_; }
  long long q_shift() const { return shift_; }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==(const RationalQ& o) const {
    // canonical after normalization up to residual common factors; compare
    // via cross multiplication to be safe
    RationalQ d = *this - o;
    return d.is_zero();
  }

  friend RationalQ operator*(const RationalQ& a, const RationalQ& b) {
    std::vector<long long> denom = a.denom_;
    denom.insert(denom.end(), b.denom_.begin(), b.denom_.end());
    return RationalQ(a.num_ * b.num_, std::move(denom), a.shift_ + b.shift_);
  }

  friend RationalQ operator*(const RationalQ& a, const Rat& s) {
    return RationalQ(a.num_ * s, a.denom_, a.shift_);
  }

  friend RationalQ operator+(const RationalQ& a, const RationalQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // common denominator: per-k maximum multiplicity
    std::map<long long, long long> ma = multiset_counts(a.denom_);
    std::map<long long, long long> mb = multiset_counts(b.denom_);
    std::map<long long, long long> mc = ma;
    for (auto [k, c] : mb) mc[k] = std::max(mc[k], c);
    QPolynomial na = a.num_;
    QPolynomial nb = b.num_;
    for (auto [k, c] : mc) {
      for (long long i = ma[k]; i < c; ++i)
        na = na * QPolynomial::one_minus_q_pow(static_cast<std::size_t>(k));
      for (long long i = mb[k]; i < c; ++i)
        nb = nb * QPolynomial::one_minus_q_pow(static_cast<std::size_t>(k));
    }
    long long shift = std::min(a.shift_, b.shift_);
    na = na.shifted(static_cast<std::size_t>(a.shift_ - shift));
    nb = nb.shifted(static_cast<std::size_t>(b.shift_ - shift));
    std::vector<long long> denom;
    for (auto [k, c] : mc) denom.insert(denom.end(), c, k);
    return RationalQ(na + nb, std::move(denom), shift);
  }

  friend RationalQ operator-(const RationalQ& a, const RationalQ& b) {
    return a + RationalQ(-b.num_, b.denom_, b.shift_);
  }

  // Exact conversion; throws when any denominator factor survives or the
  // result is a genuine Laurent polynomial.
  QPolynomial to_polynomial() const {
    if (num_.is_zero()) return {};
    if (!denom_.empty()) throw internal_error("ratq: not a polynomial (denominator survives)");
    if (shift_ < 0) throw internal_error("ratq: not a polynomial (negative q power)");
    return num_.shifted(static_cast<std::size_t>(shift_));
  }

 private:
  static std::map<long long, long long> multiset_counts(const std::vector<long long>& v) {
    std::map<long long, long long> m;
    for (long long k : v) ++m[k];
    return m;
  }

  void normalize() {
    if (num_.is_zero()) {
      denom_.clear();
      shift_ = 0;
      return;
    }
    std::size_t low = num_.low_order();
    if (low > 0) {
      std::vector<Rat> c(num_.coeffs().begin() + static_cast<long long>(low),
                         num_.coeffs().end());
      num_ = QPolynomial(std::move(c));
      shift_ += static_cast<long long>(low);
    }
    std::vector<long long> remaining;
    for (long long k : denom_) {
      auto q = num_.divide_by_one_minus_q_pow(static_cast<std::size_t>(k));
      if (q) {
        num_ = std::move(*q);
      } else {
        remaining.push_back(k);
      }
    }
    denom_ = std::move(remaining);
  }

  QPolynomial num_;
  std::vector<long long> denom_;
  long long shift_ = 0;
};

} // namespace qstab
