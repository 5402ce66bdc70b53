#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/numeric.hpp"
#include "qstab/partition.hpp"
#include "qstab/polynomial.hpp"

namespace qstab {

// Power series in q truncated at order N: exactly N+1 coefficients, all
// arithmetic mod q^{N+1}. Mixing orders truncates to the minimum; there
// is no silent widening.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1, Rat(0)) {}

  static TruncatedSeries from_polynomial(const QPolynomial& p, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) s.c_[k] = p.coeff(k);
    return s;
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = 1;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat& at(std::size_t k) { return c_[k]; }

  TruncatedSeries truncated(std::size_t order) const {
    TruncatedSeries s(std::min(order, this->order()));
    for (std::size_t k = 0; k <= s.order(); ++k) s.c_[k] = c_[k];
    if (order > this->order()) throw validation_error("truncated: widening is not allowed");
    return s;
  }

  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  friend TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }

  friend TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }

  friend TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= r.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend TruncatedSeries series_scale(const TruncatedSeries& a, const Rat& s) {
    TruncatedSeries r(a.order());
    for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] * s;
    return r;
  }

  // Multiplicative inverse; requires an invertible constant term.
  friend TruncatedSeries series_inv(const TruncatedSeries& a) {
    if (a.c_[0] == 0) throw validation_error("series_inv: constant term is zero");
    TruncatedSeries r(a.order());
    Rat c0inv = Rat(1) / a.c_[0];
    r.c_[0] = c0inv;
    for (std::size_t k = 1; k <= r.order(); ++k) {
      Rat acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc += a.c_[j] * r.c_[k - j];
      r.c_[k] = -acc * c0inv;
    }
    return r;
  }

  // log f = sum_{k>=1} (-1)^{k+1} (f-1)^k / k; requires f(0) = 1.
  friend TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a.c_[0] != 1) throw validation_error("series_log: constant term must be 1");
    TruncatedSeries g = a;
    g.c_[0] = 0;
    TruncatedSeries r(a.order());
    TruncatedSeries pw = TruncatedSeries::one(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
      pw = series_mul(pw, g);
      Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
      for (std::size_t j = 0; j <= a.order(); ++j)
        r.c_[j] += sign * pw.c_[j] / Rat(static_cast<long long>(k));
    }
    return r;
  }

  // in-place multiplication by 1/(1 - q^k)
  TruncatedSeries& mul_inv_one_minus_q_pow(std::size_t k) {
    if (k == 0) throw validation_error("mul_inv_one_minus_q_pow: k = 0");
    for (std::size_t j = k; j <= order(); ++j) c_[j] += c_[j - k];
    return *this;
  }

  // in-place multiplication by (1 - q^k)
  TruncatedSeries& mul_one_minus_q_pow(std::size_t k) {
    if (k == 0) throw validation_error("mul_one_minus_q_pow: k = 0");
    for (std::size_t j = order(); j >= k; --j) c_[j] -= c_[j - k];
    return *this;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k <= order(); ++k) {
      if (k) os << ",";
      os << c_[k];
    }
    return os.str();
  }

 private:
  std::vector<Rat> c_;
};

// prod_{k=1..N} (1 - q^k)^{-l}: partitions into l colors.
inline TruncatedSeries partition_gf(long long colors, std::size_t order) {
  if (colors < 0) throw validation_error("partition_gf: negative color count");
  TruncatedSeries s = TruncatedSeries::one(order);
  for (long long c = 0; c < colors; ++c)
    for (std::size_t k = 1; k <= order; ++k) s.mul_inv_one_minus_q_pow(k);
  return s;
}

// q^n / prod_{k=1..n} (1 - q^k): partitions into exactly n parts.
inline TruncatedSeries partitions_exact_parts_gf(long long n, std::size_t order) {
  if (n < 0) throw validation_error("partitions_exact_parts_gf: negative n");
  TruncatedSeries s(order);
  if (static_cast<std::size_t>(n) <= order) {
    s.at(static_cast<std::size_t>(n)) = 1;
    for (long long k = 1; k <= n; ++k) s.mul_inv_one_minus_q_pow(static_cast<std::size_t>(k));
  }
  return s;
}

// Series in t and q truncated at (N_t, N_q); grid[i][j] multiplies t^i q^j.
class BivariateSeries {
 public:
  BivariateSeries(std::size_t t_order, std::size_t q_order)
      : grid_(t_order + 1, std::vector<Rat>(q_order + 1, Rat(0))) {}

  static BivariateSeries one(std::size_t t_order, std::size_t q_order) {
    BivariateSeries s(t_order, q_order);
    s.grid_[0][0] = 1;
    return s;
  }

  std::size_t t_order() const { return grid_.size() - 1; }
  std::size_t q_order() const { return grid_[0].size() - 1; }

  Rat coeff(std::size_t i, std::size_t j) const {
    return i < grid_.size() && j < grid_[0].size() ? grid_[i][j] : Rat(0);
  }
  Rat& at(std::size_t i, std::size_t j) { return grid_[i][j]; }

  // in-place multiplication by 1/(1 - t^a q^b); b >= 1 keeps the
  // recursion inside the grid.
  BivariateSeries& mul_inv_factor(std::size_t a, std::size_t b) {
    if (b == 0) throw validation_error("bivariate factor with q exponent 0");
    for (std::size_t i = a; i <= t_order(); ++i)
      for (std::size_t j = b; j <= q_order(); ++j) grid_[i][j] += grid_[i - a][j - b];
    return *this;
  }

 private:
  std::vector<std::vector<Rat>> grid_;
};

struct BivariateFactor {
  std::size_t t_exp;
  std::size_t q_exp;
  long long multiplicity;  // exponent c in (1 - t^a q^b)^{-c}
};

inline BivariateSeries bivariate_product(const std::vector<BivariateFactor>& factors,
                                         std::size_t t_order, std::size_t q_order) {
  BivariateSeries s = BivariateSeries::one(t_order, q_order);
  for (const auto& f : factors) {
    if (f.q_exp == 0) throw validation_error("bivariate_product: factor with q exponent 0");
    for (long long c = 0; c < f.multiplicity; ++c) s.mul_inv_factor(f.t_exp, f.q_exp);
  }
  return s;
}

} // namespace qstab
