#pragma once

#include <optional>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/partition.hpp"
#include "qstab/quiver.hpp"
#include "qstab/series.hpp"
#include "qstab/stabilize.hpp"

namespace qstab {

// Framed setting routed through the Crawley-Boevey quiver: the framing w
// becomes w arrows from a new vertex at infinity, and dimension vectors
// get a 1 appended there.
struct NakajimaInstance {
  Quiver base;
  DimVector w;
  DimVector d;
  DimVector delta;
  Quiver cb;  // base with the infinity vertex appended last

  NakajimaInstance(Quiver base_, DimVector w_, DimVector d_, DimVector delta_)
      : base(std::move(base_)),
        w(std::move(w_)),
        d(std::move(d_)),
        delta(std::move(delta_)),
        cb(crawley_boevey(base, w)) {
    base.check_dim(d, "nakajima instance");
    base.check_dim(delta, "nakajima instance");
    if (is_zero(w)) throw validation_error("nakajima instance: w = 0");
  }

  DimVector cb_d() const { return cb_dim_vector(d); }
  DimVector cb_delta() const {
    DimVector r = delta;
    r.push_back(0);
    return r;
  }
  DimVector tau(long long n) const { return add(d, scale(n, delta)); }
};

// (i): weak star (Cartan) and (d, e_i) < 0 for all i.
// (ii): strict star (Cartan) and supp w meets supp delta.
enum class NakajimaMode { one, two };

struct NakajimaHypotheses {
  NakajimaMode mode;
  bool star_ok = false;
  bool extra_ok = false;  // vertex pairings in mode (i); support overlap in mode (ii)
  bool ok = false;
};

inline NakajimaHypotheses check_nakajima_hypotheses(const NakajimaInstance& inst,
                                                    NakajimaMode mode) {
  NakajimaHypotheses h{mode};
  if (mode == NakajimaMode::one) {
    h.star_ok = check_star(inst.base, inst.delta, BilinearForm::cartan,
                           Strictness::weak).overall;
    h.extra_ok = true;
    for (std::size_t i = 0; i < inst.base.n_vertices(); ++i)
      if (cartan_form(inst.base, inst.d, unit_vector(inst.base.n_vertices(), i)) >= 0)
        h.extra_ok = false;
  } else {
    h.star_ok = check_star(inst.base, inst.delta, BilinearForm::cartan,
                           Strictness::strict).overall;
    h.extra_ok = false;
    for (std::size_t i = 0; i < inst.w.size(); ++i)
      if (inst.w[i] != 0 && inst.delta[i] != 0) h.extra_ok = true;
  }
  h.ok = h.star_ok && h.extra_ok;
  return h;
}

// p^{|supp delta|}(q) / prod_{i not in supp delta} phi_{d_i}(q); supp delta
// taken inside the base quiver. Hypothesis violations are soft: callers
// read them from check_nakajima_hypotheses.
inline TruncatedSeries nakajima_limit_series(const NakajimaInstance& inst, std::size_t order) {
  long long s = static_cast<long long>(support(inst.delta).size());
  TruncatedSeries r = partition_gf(s, order);
  for (std::size_t i = 0; i < inst.d.size(); ++i) {
    if (inst.delta[i] != 0) continue;
    for (long long k = 1; k <= inst.d[i]; ++k)
      r.mul_inv_one_minus_q_pow(static_cast<std::size_t>(k));
  }
  return r;
}

// Sweep over (d + n*delta, 1) on the CB quiver; verdicts compare against
// the Nakajima limit series. Every row is indivisible (last coordinate 1).
inline SweepReport nakajima_kac_sweep(const NakajimaInstance& inst, long long n_lo,
                                      long long n_hi, long long depth,
                                      SweepOptions opts = {}) {
  opts.limit_override = nakajima_limit_series(inst, static_cast<std::size_t>(depth));
  return kac_sweep(inst.cb, inst.cb_d(), inst.cb_delta(), BilinearForm::cartan, n_lo, n_hi,
                   depth, opts);
}

// prod_{m>=1} (1 - t^{m-1} q^m)^{-1} (1 - t^m q^m)^{-b}, truncated.
inline BivariateSeries hilbert_series(long long b, std::size_t t_order, std::size_t q_order) {
  if (b < 0) throw validation_error("hilbert_series: negative exponent b");
  std::vector<BivariateFactor> factors;
  for (std::size_t m = 1; m <= q_order; ++m) {
    factors.push_back({m - 1, m, 1});
    if (m <= t_order) factors.push_back({m, m, b});
  }
  return bivariate_product(factors, t_order, q_order);
}

inline BivariateSeries hilbert_series_for_rank(long long r, std::size_t t_order,
                                               std::size_t q_order) {
  if (r < 2) throw validation_error("hilbert_series: rank must be >= 2");
  return hilbert_series(r - 1, t_order, q_order);
}

struct HilbertIdentity {
  Rat lhs;  // coefficient of t^k q^{k+a} in the product
  Rat rhs;  // sum_{m+n=k} p_{<=a}(m) * [q^n] p^b
  bool equal = false;
  std::optional<Rat> limit;  // coefficient k of p^{b+1}, when a >= k
  bool limit_equal = false;
};

// p_{<=a}(m) = number of partitions of m into at most a parts.
inline long long p_at_most(long long a, long long m) {
  long long s = 0;
  for (long long j = 0; j <= a; ++j) s += p_exact(j, m);
  return s;
}

inline HilbertIdentity hilbert_coefficient_identity_check(long long b, long long k, long long a) {
  if (k < 0 || a < 0) throw validation_error("hilbert identity: negative k or a");
  HilbertIdentity out;
  std::size_t qo = static_cast<std::size_t>(k + a);
  BivariateSeries h = hilbert_series(b, static_cast<std::size_t>(k), std::max<std::size_t>(qo, 1));
  out.lhs = h.coeff(static_cast<std::size_t>(k), qo);
  TruncatedSeries pb = partition_gf(b, static_cast<std::size_t>(k));
  Rat rhs(0);
  for (long long m = 0; m <= k; ++m)
    rhs += Rat(p_at_most(a, m)) * pb.coeff(static_cast<std::size_t>(k - m));
  out.rhs = rhs;
  out.equal = out.lhs == out.rhs;
  if (a >= k) {
    out.limit = partition_gf(b + 1, static_cast<std::size_t>(k)).coeff(static_cast<std::size_t>(k));
    out.limit_equal = out.equal && out.lhs == *out.limit;
  }
  return out;
}

struct MultiplicityBound {
  long long half_norm;  // 1 - (d,d)/2
  Int bound;            // coefficient at that index of the equivariant series
};

// Conditional root-multiplicity bound: dim g_d <= coefficient 1 - (d,d)/2
// of the equivariant Poincare series of the point.
inline MultiplicityBound multiplicity_bound_report(const Quiver& q, const DimVector& d) {
  q.check_dim(d, "multiplicity_bound_report");
  if (q.has_loops()) throw validation_error("multiplicity_bound_report: quiver has loops");
  if (is_zero(d)) throw validation_error("multiplicity_bound_report: d = 0");
  long long norm = cartan_form(q, d, d);
  if (norm % 2 != 0) throw internal_error("multiplicity_bound_report: odd Cartan norm");
  long long idx = 1 - norm / 2;
  if (idx < 0) throw validation_error("multiplicity_bound_report: (d,d) > 2");
  TruncatedSeries s = equivariant_poincare(d, static_cast<std::size_t>(idx));
  Rat c = s.coeff(static_cast<std::size_t>(idx));
  return {idx, numerator(c)};
}

} // namespace qstab
