#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/hua.hpp"
#include "qstab/numeric.hpp"
#include "qstab/polynomial.hpp"
#include "qstab/quiver.hpp"
#include "qstab/series.hpp"

namespace qstab {

// M_n = max{ max_i <e_i,tau>(1 - 1/tau_i), -(min_i tau_i)(min_{j in supp delta} tau_j) }
// with tau = d + n*delta and the pairing taken in the chosen form.
inline Rat stab_bound_Mn(const Quiver& q, const DimVector& d, const DimVector& delta,
                         long long n, BilinearForm form = BilinearForm::euler) {
  q.check_dim(d, "stab_bound_Mn");
  q.check_dim(delta, "stab_bound_Mn");
  if (is_zero(delta)) throw validation_error("stab_bound_Mn: delta = 0");
  DimVector tau = add(d, scale(n, delta));
  for (long long t : tau)
    if (t == 0) throw validation_error("stab_bound_Mn: some referenced tau_i = 0");
  std::optional<Rat> best;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    long long p = bilinear(q, form, unit_vector(tau.size(), i), tau);
    Rat v = Rat(p) * (Rat(1) - Rat(1, tau[i]));
    if (!best || v > *best) best = v;
  }
  long long min_tau = tau[0];
  for (long long t : tau) min_tau = std::min(min_tau, t);
  long long min_supp = 0;
  bool have = false;
  for (std::size_t j = 0; j < delta.size(); ++j)
    if (delta[j] != 0 && (!have || tau[j] < min_supp)) {
      min_supp = tau[j];
      have = true;
    }
  Rat second = Rat(-min_tau * min_supp);
  return std::max(*best, second);
}

struct MaxPairing {
  long long value;
  DimVector argmax;  // lexicographically least maximizer
};

// max over proper subvectors 0 < v < tau of <v, tau - v>.
inline MaxPairing max_pairing(const Quiver& q, const DimVector& tau, BilinearForm form,
                              long long cap = 10'000'000) {
  q.check_dim(tau, "max_pairing");
  if (detail::box_cells(tau) > cap) throw infeasible_error("max_pairing: enumeration cap exceeded");
  std::optional<MaxPairing> best;
  DimVector v(tau.size(), 0);
  while (detail::next_in_box(v, tau)) {
    if (v == tau) continue;
    long long p = bilinear(q, form, v, sub(tau, v));
    if (!best || p > best->value) best = MaxPairing{p, v};
  }
  if (!best) throw validation_error("max_pairing: tau has no proper subvector");
  return *best;
}

// minimum codimension of a Harder-Narasimhan stratum: -max <d1, tau-d1>.
inline long long min_hn_codim(const Quiver& q, const DimVector& tau,
                              long long cap = 10'000'000) {
  return -max_pairing(q, tau, BilinearForm::euler, cap).value;
}

// max over decompositions tau = d1 + ... + dl (2 <= l <= max_parts, as a
// multiset) of <tau,tau> - sum <dk,dk>.
inline long long multi_part_max(const Quiver& q, const DimVector& tau, BilinearForm form,
                                long long max_parts, long long cap = 10'000'000) {
  q.check_dim(tau, "multi_part_max");
  if (max_parts < 2) throw validation_error("multi_part_max: max_parts < 2");
  long long self = bilinear(q, form, tau, tau);
  std::optional<long long> best;
  long long nodes = 0;
  // parts in weakly decreasing lex order to enumerate multisets once
  auto rec = [&](auto&& rec_, const DimVector& remaining, const DimVector& bound_lex,
                 long long parts_used, long long acc) -> void {
    if (++nodes > cap) throw infeasible_error("multi_part_max: enumeration cap exceeded");
    if (is_zero(remaining)) {
      if (parts_used >= 2) {
        long long v = self - acc;
        if (!best || v > *best) best = v;
      }
      return;
    }
    if (parts_used == max_parts) return;
    DimVector part(remaining.size(), 0);
    while (detail::next_in_box(part, remaining)) {
      if (parts_used > 0 && bound_lex < part) continue;  // keep decreasing order
      rec_(rec_, sub(remaining, part), part, parts_used + 1,
           acc + bilinear(q, form, part, part));
    }
  };
  rec(rec, tau, tau, 0, 0);
  if (!best) throw validation_error("multi_part_max: no decomposition with >= 2 parts");
  return *best;
}

// (1 - q) p^{|supp delta|}(q) / prod_{i not in supp delta} phi_{d_i}(q)
inline TruncatedSeries limit_series(const Quiver& q, const DimVector& d, const DimVector& delta,
                                    std::size_t order) {
  q.check_dim(d, "limit_series");
  q.check_dim(delta, "limit_series");
  long long s = static_cast<long long>(support(delta).size());
  TruncatedSeries r = partition_gf(s, order);
  r.mul_one_minus_q_pow(1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (delta[i] != 0) continue;
    for (long long k = 1; k <= d[i]; ++k)
      r.mul_inv_one_minus_q_pow(static_cast<std::size_t>(k));
  }
  return r;
}

// (1 - q) prod_i prod_{j=1..d_i} (1 - q^j)^{-1}
inline TruncatedSeries equivariant_poincare(const DimVector& d, std::size_t order) {
  if (is_zero(d)) throw validation_error("equivariant_poincare: d = 0");
  TruncatedSeries r = TruncatedSeries::one(order);
  for (long long di : d)
    for (long long j = 1; j <= di; ++j)
      r.mul_inv_one_minus_q_pow(static_cast<std::size_t>(j));
  r.mul_one_minus_q_pow(1);
  return r;
}

enum class Verdict { matches_limit, below_limit, exceeds_limit, not_stabilized_in_range };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::matches_limit: return "matches_limit";
    case Verdict::below_limit: return "below_limit";
    case Verdict::exceeds_limit: return "exceeds_limit";
    default: return "not_stabilized_in_range";
  }
}

struct SweepRow {
  long long n = 0;
  DimVector tau;
  bool indivisible = false;          // divisible rows are skipped
  long long deg = -1;                // -1 when skipped or A = 0
  std::vector<Int> a;                // a_i = coefficient of q^{deg-i}, i = 0..K
  std::vector<bool> criterion_ok;    // per i: certification criterion holds at this n
  std::optional<Rat> m_n;            // closed-form bound in the sweep's form
  std::optional<Rat> m_n_other;      // same bound in the other form, for cross-reference
  std::optional<long long> max_pairing_value;  // Kac-mode criterion input
};

struct CoefficientSummary {
  long long i = 0;
  bool stabilized = false;
  Int stable_value = 0;                       // meaningful when stabilized
  std::optional<long long> empirical_index;   // first n with a_i constant afterwards
  std::optional<long long> certified_index;   // criterion holds from here through range end
  Rat limit_coeff = Rat(0);
  Verdict verdict = Verdict::not_stabilized_in_range;
};

struct SweepReport {
  DimVector d, delta;
  BilinearForm form = BilinearForm::cartan;
  long long n_lo = 0, n_hi = 0;
  long long depth = 0;  // K
  bool star_ok = false;            // strict star for the sweep's form; gates certification
  std::vector<SweepRow> rows;
  std::vector<CoefficientSummary> coefficients;
  std::vector<Rat> limit;          // limit-series coefficients 0..K
};

struct SweepOptions {
  std::optional<TruncatedSeries> limit_override;  // e.g. the Nakajima-side series
  long long pairing_cap = 10'000'000;
  long long hua_cost_cap = 50'000'000;
};

inline SweepReport kac_sweep(const Quiver& q, const DimVector& d, const DimVector& delta,
                             BilinearForm form, long long n_lo, long long n_hi, long long depth,
                             const SweepOptions& opts = {}) {
  q.check_dim(d, "kac_sweep");
  q.check_dim(delta, "kac_sweep");
  if (q.has_loops()) throw validation_error("kac_sweep: quiver has loops");
  if (is_zero(delta)) throw validation_error("kac_sweep: delta = 0");
  if (n_lo > n_hi) throw validation_error("kac_sweep: empty n range");
  if (depth < 0) throw validation_error("kac_sweep: negative depth");

  DimVector tau_max = add(d, scale(n_hi, delta));
  if (hua_cost_estimate(tau_max) > opts.hua_cost_cap)
    throw infeasible_error("kac_sweep: estimated enumeration cost exceeds cap");

  SweepReport rep;
  rep.d = d;
  rep.delta = delta;
  rep.form = form;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.depth = depth;
  rep.star_ok = check_star(q, delta, form, Strictness::strict).overall;

  std::size_t K = static_cast<std::size_t>(depth);
  {
    TruncatedSeries lim = opts.limit_override
                              ? *opts.limit_override
                              : limit_series(q, d, delta, K);
    if (lim.order() < K) throw validation_error("kac_sweep: limit series order below depth");
    for (std::size_t i = 0; i <= K; ++i) rep.limit.push_back(lim.coeff(i));
  }

  for (long long n = n_lo; n <= n_hi; ++n) {
    SweepRow row;
    row.n = n;
    row.tau = add(d, scale(n, delta));
    row.indivisible = !is_zero(row.tau) && is_indivisible(row.tau);
    row.criterion_ok.assign(K + 1, false);

    BilinearForm other =
        form == BilinearForm::euler ? BilinearForm::cartan : BilinearForm::euler;
    try {
      row.m_n = stab_bound_Mn(q, d, delta, n, form);
      row.m_n_other = stab_bound_Mn(q, d, delta, n, other);
    } catch (const validation_error&) {
      // some tau_i = 0: no closed-form bound at this n
    }
    try {
      if (form == BilinearForm::cartan) {
        row.max_pairing_value = max_pairing(q, row.tau, form, opts.pairing_cap).value;
        for (std::size_t i = 0; i <= K; ++i)
          row.criterion_ok[i] = *row.max_pairing_value < -static_cast<long long>(i);
      } else if (row.m_n) {
        for (std::size_t i = 0; i <= K; ++i)
          row.criterion_ok[i] = *row.m_n < Rat(-static_cast<long long>(i));
      }
    } catch (const validation_error&) {
    }

    if (row.indivisible) {
      QPolynomial a = kac_polynomial(q, row.tau);
      row.deg = a.degree();
      for (std::size_t i = 0; i <= K; ++i) {
        Rat c = row.deg >= static_cast<long long>(i)
                    ? a.coeff(static_cast<std::size_t>(row.deg - static_cast<long long>(i)))
                    : Rat(0);
        row.a.push_back(numerator(c));
      }
    }
    rep.rows.push_back(std::move(row));
  }

  // summaries over the indivisible rows
  std::vector<const SweepRow*> live;
  for (const auto& r : rep.rows)
    if (r.indivisible) live.push_back(&r);
  std::size_t window = std::max<std::size_t>(3, (live.size() + 2) / 3);

  for (std::size_t i = 0; i <= K; ++i) {
    CoefficientSummary cs;
    cs.i = static_cast<long long>(i);
    cs.limit_coeff = rep.limit[i];
    if (!live.empty() && live.size() >= window) {
      bool constant = true;
      const Int& last = live.back()->a[i];
      for (std::size_t k = live.size() - window; k < live.size(); ++k)
        if (live[k]->a[i] != last) constant = false;
      if (constant) {
        cs.stabilized = true;
        cs.stable_value = last;
        // first n after which a_i never changes
        std::size_t first = live.size() - 1;
        while (first > 0 && live[first - 1]->a[i] == last) --first;
        cs.empirical_index = live[first]->n;
      }
    }
    if (rep.star_ok) {
      // smallest n* with the criterion holding through the end of the range
      std::optional<long long> cert;
      for (auto it = rep.rows.rbegin(); it != rep.rows.rend(); ++it) {
        if (!it->criterion_ok[i]) break;
        cert = it->n;
      }
      cs.certified_index = cert;
    }
    if (cs.stabilized) {
      Rat v(cs.stable_value);
      if (v == cs.limit_coeff) cs.verdict = Verdict::matches_limit;
      else if (v < cs.limit_coeff) cs.verdict = Verdict::below_limit;
      else cs.verdict = Verdict::exceeds_limit;
    }
    rep.coefficients.push_back(std::move(cs));
  }
  return rep;
}

struct NearMaxDecomposition {
  DimVector part1, part2;  // unordered pair, part1 lex <= part2
  long long pairing;       // Cartan <part1, part2>
  bool part1_dominates = false;  // part >= (n - eps sqrt n) delta componentwise
  bool part2_dominates = false;
  std::optional<long long> delta_pairing_remainder;  // (delta, tau - dominant part)
};

struct NearMaxReport {
  DimVector tau;
  bool hypotheses_ok = false;  // weak star (Cartan) and (tau, e_i) < 0 for all i
  StarReport star;
  std::vector<bool> vertex_pairing_ok;
  std::vector<NearMaxDecomposition> decompositions;
};

// All two-part decompositions tau = v + (tau - v) with Cartan pairing
// <v, tau - v> > -M, with dominance diagnostics against (n - eps sqrt n) delta.
inline NearMaxReport near_max_decompositions(const Quiver& q, const DimVector& d,
                                             const DimVector& delta, long long n, long long M,
                                             const Rat& eps, long long cap = 10'000'000) {
  q.check_dim(d, "near_max_decompositions");
  q.check_dim(delta, "near_max_decompositions");
  if (is_zero(delta)) throw validation_error("near_max_decompositions: delta = 0");
  NearMaxReport rep{.tau = add(d, scale(n, delta)),
                    .star = check_star(q, delta, BilinearForm::cartan, Strictness::weak)};
  rep.hypotheses_ok = rep.star.overall;
  for (std::size_t i = 0; i < q.n_vertices(); ++i) {
    bool ok = cartan_form(q, rep.tau, unit_vector(q.n_vertices(), i)) < 0;
    rep.vertex_pairing_ok.push_back(ok);
    rep.hypotheses_ok = rep.hypotheses_ok && ok;
  }

  // p dominates iff n*delta_i - p_i <= 0 or (n*delta_i - p_i)^2 <= eps^2 delta_i^2 n
  auto dominates = [&](const DimVector& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      long long lack = n * delta[i] - p[i];
      if (lack <= 0) continue;
      if (Rat(lack * lack) > eps * eps * Rat(delta[i] * delta[i] * n)) return false;
    }
    return true;
  };

  if (detail::box_cells(rep.tau) > cap)
    throw infeasible_error("near_max_decompositions: enumeration cap exceeded");
  DimVector v(rep.tau.size(), 0);
  while (detail::next_in_box(v, rep.tau)) {
    if (v == rep.tau) continue;
    DimVector w = sub(rep.tau, v);
    if (w < v) continue;  // each unordered pair once
    long long p = cartan_form(q, v, w);
    if (p <= -M) continue;
    NearMaxDecomposition dec{v, w, p};
    dec.part1_dominates = dominates(v);
    dec.part2_dominates = dominates(w);
    if (dec.part1_dominates)
      dec.delta_pairing_remainder = cartan_form(q, delta, w);
    else if (dec.part2_dominates)
      dec.delta_pairing_remainder = cartan_form(q, delta, v);
    rep.decompositions.push_back(std::move(dec));
  }
  return rep;
}

} // namespace qstab
