#pragma once

#include <algorithm>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/numeric.hpp"
#include "qstab/rational_q.hpp"

namespace qstab {

// Exact Laurent expansion around q = infinity, i.e. a series in u = 1/q,
// truncated above at a fixed exponent cutoff. Lower exponents are never
// truncated, so every coefficient at exponent <= cutoff is exact.
// coeffs[k] multiplies u^{low + k}; the array always extends to cutoff.
class LaurentU {
 public:
  explicit LaurentU(long long cutoff) : cutoff_(cutoff), low_(cutoff + 1) {}

  long long cutoff() const { return cutoff_; }
  long long low() const { return low_; }
  bool is_zero() const { return c_.empty(); }

  Rat coeff(long long exp) const {
    if (exp < low_ || exp > cutoff_) return Rat(0);
    return c_[static_cast<std::size_t>(exp - low_)];
  }

  static LaurentU zero(long long cutoff) { return LaurentU(cutoff); }

  // Expansion of a RationalQ value: q^{shift} num(q) / prod (1 - q^k).
  // num(q) = sum n_j q^j contributes n_j u^{-j}; each 1/(1-q^k) expands
  // to -(u^k + u^{2k} + ...).
  static LaurentU from_rational_q(const RationalQ& x, long long cutoff) {
    LaurentU r(cutoff);
    if (x.is_zero()) return r;
    const auto& num = x.numerator().coeffs();
    long long deg = static_cast<long long>(num.size()) - 1;
    r.low_ = -deg - x.q_shift();
    if (r.low_ > cutoff) {
      r.low_ = cutoff + 1;
      return r;  // entire expansion lies above the cutoff
    }
    r.c_.assign(static_cast<std::size_t>(cutoff - r.low_ + 1), Rat(0));
    for (long long j = 0; j <= deg; ++j) {
      long long exp = -j - x.q_shift();
      if (exp <= cutoff) r.c_[static_cast<std::size_t>(exp - r.low_)] = num[static_cast<std::size_t>(j)];
    }
    for (long long k : x.denominator_factors()) r.mul_inv_one_minus_q_pow(k);
    r.trim();
    return r;
  }

  // multiply by 1/(1 - q^k) = -u^k/(1 - u^k)
  void mul_inv_one_minus_q_pow(long long k) {
    if (is_zero()) return;
    // shift by u^k, negate, then divide by (1 - u^k) via prefix sums
    low_ += k;
    if (low_ > cutoff_) {
      c_.clear();
      low_ = cutoff_ + 1;
      return;
    }
    c_.resize(static_cast<std::size_t>(cutoff_ - low_ + 1));
    for (auto& v : c_) v = -v;
    for (std::size_t j = static_cast<std::size_t>(k); j < c_.size(); ++j)
      c_[j] += c_[j - static_cast<std::size_t>(k)];
  }

  friend LaurentU operator+(const LaurentU& a, const LaurentU& b) {
    if (a.cutoff_ != b.cutoff_) throw internal_error("laurent: cutoff mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LaurentU r(a.cutoff_);
    r.low_ = std::min(a.low_, b.low_);
    r.c_.assign(static_cast<std::size_t>(r.cutoff_ - r.low_ + 1), Rat(0));
    for (long long e = a.low_; e <= a.cutoff_; ++e)
      r.c_[static_cast<std::size_t>(e - r.low_)] += a.coeff(e);
    for (long long e = b.low_; e <= b.cutoff_; ++e)
      r.c_[static_cast<std::size_t>(e - r.low_)] += b.coeff(e);
    r.trim();
    return r;
  }

  friend LaurentU operator*(const LaurentU& a, const LaurentU& b) {
    if (a.cutoff_ != b.cutoff_) throw internal_error("laurent: cutoff mismatch");
    LaurentU r(a.cutoff_);
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    if (r.low_ > r.cutoff_) {
      r.low_ = r.cutoff_ + 1;
      return r;
    }
    r.c_.assign(static_cast<std::size_t>(r.cutoff_ - r.low_ + 1), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      long long ea = a.low_ + static_cast<long long>(i);
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        long long e = ea + b.low_ + static_cast<long long>(j);
        if (e > r.cutoff_) break;
        r.c_[static_cast<std::size_t>(e - r.low_)] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }

  friend LaurentU operator*(const LaurentU& a, const Rat& s) {
    LaurentU r = a;
    if (s == 0) return LaurentU(a.cutoff_);
    for (auto& v : r.c_) v *= s;
    return r;
  }

  // multiply by u^k (k may be negative); exponents above the cutoff drop
  LaurentU shifted(long long k) const {
    LaurentU r(cutoff_);
    if (is_zero()) return r;
    r.low_ = low_ + k;
    r.c_ = c_;
    if (r.low_ > cutoff_) return LaurentU(cutoff_);
    r.c_.resize(static_cast<std::size_t>(cutoff_ - r.low_ + 1));
    r.trim();
    return r;
  }

 private:
  void trim() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      low_ = cutoff_ + 1;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long long>(lead));
      low_ += static_cast<long long>(lead);
    }
  }

  long long cutoff_;
  long long low_;
  std::vector<Rat> c_;
};

} // namespace qstab
