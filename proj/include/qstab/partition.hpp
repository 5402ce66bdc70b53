#pragma once

#include <algorithm>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/polynomial.hpp"
#include "qstab/quiver.hpp"

namespace qstab {

// phi_n(q) = prod_{i=1..n} (1 - q^i); phi_0 = 1.
inline QPolynomial phi(long long n) {
  if (n < 0) throw validation_error("phi: negative n");
  QPolynomial p = QPolynomial::constant(1);
  for (long long i = 1; i <= n; ++i) p = p * QPolynomial::one_minus_q_pow(static_cast<std::size_t>(i));
  return p;
}

inline QPolynomial phi_dim(const DimVector& d) {
  QPolynomial p = QPolynomial::constant(1);
  for (long long di : d) p = p * phi(di);
  return p;
}

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (long long p : parts_)
      if (p <= 0) throw validation_error("partition: nonpositive part");
  }

  const std::vector<long long>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  long long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  long long size() const {
    long long s = 0;
    for (long long p : parts_) s += p;
    return s;
  }

  Partition dual() const {
    std::vector<long long> d;
    if (parts_.empty()) return Partition{};
    for (long long i = 1; i <= parts_[0]; ++i) {
      long long cnt = 0;
      for (long long p : parts_)
        if (p >= i) ++cnt;
      d.push_back(cnt);
    }
    return Partition(std::move(d));
  }

  // multiplicities r_i, indexed by part value i >= 1 (index 0 unused)
  std::vector<long long> multiplicities() const {
    std::vector<long long> r(parts_.empty() ? 1 : parts_[0] + 1, 0);
    for (long long p : parts_) ++r[p];
    return r;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

 private:
  std::vector<long long> parts_;
};

// All partitions of m, decreasing-lexicographic: (m), (m-1,1), ...
inline std::vector<Partition> partitions_of(long long m) {
  if (m < 0) throw validation_error("partitions_of: negative m");
  std::vector<Partition> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long rem, long long maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (long long p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

// <pi1, pi2> = sum_i (pi1')_i (pi2')_i
inline long long partition_pairing(const Partition& a, const Partition& b) {
  auto da = a.dual().parts();
  auto db = b.dual().parts();
  long long s = 0;
  for (std::size_t i = 0; i < std::min(da.size(), db.size()); ++i) s += da[i] * db[i];
  return s;
}

// b_pi(q) = prod_i phi_{r_i}(q)
inline QPolynomial b_poly(const Partition& pi) {
  QPolynomial p = QPolynomial::constant(1);
  auto r = pi.multiplicities();
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] > 0) p = p * phi(r[i]);
  return p;
}

// partitions of m into exactly n parts
inline long long p_exact(long long n, long long m) {
  if (n < 0 || m < 0) throw validation_error("p_exact: negative argument");
  // p(n, m) = p(n-1, m-1) + p(n, m-n)
  std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(m + 1, 0));
  t[0][0] = 1;
  for (long long i = 1; i <= n; ++i)
    for (long long j = 0; j <= m; ++j) {
      long long v = 0;
      if (j >= 1) v += t[i - 1][j - 1];
      if (j >= i) v += t[i][j - i];
      t[i][j] = v;
    }
  return t[n][m];
}

} // namespace qstab
