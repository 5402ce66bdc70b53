#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/laurent.hpp"
#include "qstab/partition.hpp"
#include "qstab/polynomial.hpp"
#include "qstab/quiver.hpp"
#include "qstab/rational_q.hpp"

namespace qstab {

namespace detail {

// box iteration: all e with 0 <= e <= bound componentwise, row-major
inline bool next_in_box(DimVector& e, const DimVector& bound) {
  for (std::size_t i = e.size(); i-- > 0;) {
    if (e[i] < bound[i]) {
      ++e[i];
      for (std::size_t j = i + 1; j < e.size(); ++j) e[j] = 0;
      return true;
    }
  }
  return false;
}

inline long long box_cells(const DimVector& bound) {
  long long n = 1;
  for (long long b : bound) {
    n *= (b + 1);
    if (n > (1LL << 40)) return 1LL << 40;
  }
  return n;
}

// 1 / phi_v(q^{-1}) as an exact RationalQ: each phi_m(q^{-1}) equals
// (-1)^m q^{-m(m+1)/2} phi_m(q).
inline RationalQ inv_phi_dim_qinv(const DimVector& v) {
  long long sign = 0, shift = 0;
  std::vector<long long> denom;
  for (long long m : v) {
    sign += m;
    shift += m * (m + 1) / 2;
    for (long long k = 1; k <= m; ++k) denom.push_back(k);
  }
  return RationalQ(QPolynomial::constant(sign % 2 == 0 ? Rat(1) : Rat(-1)), std::move(denom),
                   shift);
}

} // namespace detail

// X^e-coefficients of Hua's generating function P_Gamma for all e <= target.
class HuaGrid {
 public:
  HuaGrid(DimVector target, std::vector<RationalQ> cells)
      : target_(std::move(target)), cells_(std::move(cells)) {}

  const DimVector& target() const { return target_; }

  std::size_t index(const DimVector& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      idx = idx * static_cast<std::size_t>(target_[i] + 1) + static_cast<std::size_t>(e[i]);
    return idx;
  }

  const RationalQ& cell(const DimVector& e) const { return cells_[index(e)]; }
  std::size_t n_cells() const { return cells_.size(); }

 private:
  DimVector target_;
  std::vector<RationalQ> cells_;
};

// Estimated number of partition-tuple terms needed to fill the grid for
// the given target; used for feasibility checks before a sweep.
inline long long hua_cost_estimate(const DimVector& target) {
  long long cost = 1;
  for (long long t : target) {
    long long s = 0;
    for (long long m = 0; m <= t; ++m) s += static_cast<long long>(partitions_of(m).size());
    cost *= s;
    if (cost > (1LL << 50)) return 1LL << 50;
  }
  return cost;
}

// c_e = sum over partition tuples (pi^1..pi^n) with |pi^i| = e_i of
//   q^{sum_{i<=j} a_ij <pi^i,pi^j> - sum_i <pi^i,pi^i>} / prod_i b_{pi^i}(q^{-1}),
// where a_ij counts edges in the underlying graph (a_ii = loops at i).
inline HuaGrid hua_coefficients(const Quiver& q, const DimVector& target) {
  q.check_dim(target, "hua_coefficients");
  std::size_t n = q.n_vertices();

  // partitions and their duals per vertex, by size
  std::vector<std::vector<std::vector<Partition>>> parts(n);
  for (std::size_t i = 0; i < n; ++i) {
    parts[i].resize(static_cast<std::size_t>(target[i]) + 1);
    for (long long m = 0; m <= target[i]; ++m)
      parts[i][static_cast<std::size_t>(m)] = partitions_of(m);
  }

  std::vector<RationalQ> cells(static_cast<std::size_t>(detail::box_cells(target)));

  DimVector e(n, 0);
  do {
    RationalQ sum;
    // streamed enumeration of the partition tuple for this cell
    std::vector<const Partition*> tuple(n, nullptr);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
      if (v == n) {
        long long exponent = 0;
        long long sign_parts = 0;
        long long shift = 0;
        std::vector<long long> denom;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i; j < n; ++j) {
            long long a = q.underlying_edges(i, j);
            if (a != 0) exponent += a * partition_pairing(*tuple[i], *tuple[j]);
          }
          exponent -= partition_pairing(*tuple[i], *tuple[i]);
          auto r = tuple[i]->multiplicities();
          for (std::size_t m = 1; m < r.size(); ++m) {
            sign_parts += r[m];
            shift += r[m] * (r[m] + 1) / 2;
            for (long long k = 1; k <= r[m]; ++k) denom.push_back(k);
          }
        }
        RationalQ term(QPolynomial::constant(sign_parts % 2 == 0 ? Rat(1) : Rat(-1)),
                       std::move(denom), exponent + shift);
        sum = sum + term;
        return;
      }
      for (const Partition& p : parts[v][static_cast<std::size_t>(e[v])]) {
        tuple[v] = &p;
        rec(v + 1);
      }
    };
    rec(0);
    // deterministic per-cell reduction order: the recursion above is a
    // fixed decreasing-lex sweep
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      idx = idx * static_cast<std::size_t>(target[i] + 1) + static_cast<std::size_t>(e[i]);
    cells[idx] = std::move(sum);
  } while (detail::next_in_box(e, target));

  return HuaGrid(std::move(target), std::move(cells));
}

namespace detail {

// Grid of Laurent expansions indexed like a HuaGrid.
struct LaurentGrid {
  DimVector target;
  std::vector<LaurentU> cells;

  std::size_t index(const DimVector& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      idx = idx * static_cast<std::size_t>(target[i] + 1) + static_cast<std::size_t>(e[i]);
    return idx;
  }
};

} // namespace detail

// Kac polynomial via (q-1) [X^d] log P_Gamma, computed on exact Laurent
// expansions in u = 1/q. Instead of summing powers (P-1)^l the log
// satisfies the derivative recurrence
//   e_j L[e] = e_j P[e] - sum_{0 < f < e} f_j L[f] P[e-f]   (P[0] = 1),
// giving L[d] in one convolution pass over the grid.
//
// Truncation soundness: expansions are cut above a global cutoff, and a
// product x*y is only exact up to cutoff + min(0, low(x), low(y)) --
// factors with negative low pull dropped content back down. The exact
// lows of the P cells are known from their rational form, lows of the L
// cells are bounded by a min-plus pass, and a second pass accumulates the
// worst descent; the cutoff is widened by exactly that much.
inline QPolynomial kac_polynomial_from_grid(const HuaGrid& grid) {
  const DimVector& d = grid.target();
  if (is_zero(d)) throw validation_error("kac_polynomial: d = 0");
  if (!is_indivisible(d)) throw validation_error("kac_polynomial: d must be indivisible");
  const long long guard = 2;
  const long long inf = 1LL << 50;

  std::size_t n_cells = grid.n_cells();

  // exact u-low of each P cell: -(top q-degree of the rational function)
  std::vector<long long> low_p(n_cells, inf);
  {
    DimVector e(d.size(), 0);
    do {
      const RationalQ& c = grid.cell(e);
      if (!c.is_zero()) {
        long long topdeg = c.q_shift() + c.numerator().degree();
        for (long long k : c.denominator_factors()) topdeg -= k;
        low_p[grid.index(e)] = -topdeg;
      }
    } while (detail::next_in_box(e, d));
  }

  // low_l[e] <= low of L[e]; pen[e] = how far above the final cutoff the
  // coefficients of L[e] may be polluted
  std::vector<long long> low_l(n_cells, inf), pen(n_cells, 0);
  {
    DimVector e(d.size(), 0);
    while (detail::next_in_box(e, d)) {
      std::size_t ie = grid.index(e);
      low_l[ie] = low_p[ie];
      DimVector f(d.size(), 0);
      while (detail::next_in_box(f, e)) {
        if (f == e) continue;
        std::size_t jf = grid.index(f), jg = grid.index(sub(e, f));
        if (low_l[jf] >= inf || low_p[jg] >= inf) continue;
        low_l[ie] = std::min(low_l[ie], low_l[jf] + low_p[jg]);
        long long step = std::max(pen[jf] - std::min(0LL, low_p[jg]),
                                  -std::min(0LL, low_l[jf]));
        pen[ie] = std::max(pen[ie], step);
      }
    }
  }
  // +1 absorbs the final (q-1) = (1-u)/u shift
  const long long cutoff = guard + 1 + pen[grid.index(d)];

  detail::LaurentGrid p{d, {}};
  {
    DimVector e(d.size(), 0);
    std::vector<LaurentU> cells(n_cells, LaurentU(cutoff));
    do {
      cells[p.index(e)] = LaurentU::from_rational_q(grid.cell(e), cutoff);
    } while (detail::next_in_box(e, d));
    p.cells = std::move(cells);
  }

  detail::LaurentGrid lg{d, std::vector<LaurentU>(n_cells, LaurentU(cutoff))};
  DimVector e(d.size(), 0);
  while (detail::next_in_box(e, d)) {
    std::size_t j = 0;
    while (e[j] == 0) ++j;
    LaurentU acc(cutoff);
    DimVector f(d.size(), 0);
    while (detail::next_in_box(f, e)) {
      if (f == e) continue;
      const LaurentU& lf = lg.cells[lg.index(f)];
      if (lf.is_zero() || f[j] == 0) continue;
      const LaurentU& pe = p.cells[p.index(sub(e, f))];
      if (pe.is_zero()) continue;
      acc = acc + (lf * pe) * Rat(f[j]);
    }
    lg.cells[lg.index(e)] =
        p.cells[p.index(e)] + acc * Rat(-1, e[j]);
  }
  const LaurentU& log_at_d = lg.cells[lg.index(d)];

  // multiply by (q - 1) = (1 - u)/u
  LaurentU a_series = log_at_d.shifted(-1) + log_at_d * Rat(-1);

  for (long long e = 1; e <= guard; ++e)
    if (a_series.coeff(e) != 0)
      throw internal_error("kac_polynomial: not a polynomial (positive 1/q tail)");
  if (a_series.is_zero()) return {};
  long long deg = -a_series.low();
  if (deg < 0) throw internal_error("kac_polynomial: not a polynomial (negative q power)");
  std::vector<Rat> coeffs(static_cast<std::size_t>(deg) + 1, Rat(0));
  for (long long e = a_series.low(); e <= 0; ++e) {
    Rat c = a_series.coeff(e);
    if (!is_integer(c)) throw internal_error("kac_polynomial: non-integer coefficient");
    coeffs[static_cast<std::size_t>(-e)] = c;
  }
  return QPolynomial(std::move(coeffs));
}

inline QPolynomial kac_polynomial(const Quiver& q, const DimVector& d) {
  q.check_dim(d, "kac_polynomial");
  if (is_zero(d)) throw validation_error("kac_polynomial: d = 0");
  if (!is_indivisible(d))
    throw validation_error("kac_polynomial: d must be indivisible (divisible input)");
  return kac_polynomial_from_grid(hua_coefficients(q, d));
}

// Independent evaluation of eq. A_d = (q-1) sum_l (-1)^{l+1}/l over
// ordered compositions d = a^1 + ... + a^l, each factor summed over
// componentwise-decreasing chains. Exponential; the test oracle for the
// log route. All arithmetic stays in RationalQ and the final value goes
// through the exact to_polynomial conversion.
class HuaDecompositionRoute {
 public:
  explicit HuaDecompositionRoute(const Quiver& q) : q_(q) {}

  // sum over chains alpha = d^1 + ... + d^s, d^1 >= ... >= d^s, of
  // q^{-sum <d^k,d^k>} / prod phi_{d^k - d^{k+1}}(q^{-1})
  RationalQ chain_sum(const DimVector& alpha) {
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
    RationalQ sum;
    DimVector first(alpha.size(), 0);
    while (detail::next_in_box(first, alpha)) {
      RationalQ prefix(QPolynomial::constant(1), {}, -euler_form(q_, first, first));
      chains(alpha, first, prefix, sum);
    }
    memo_.emplace(alpha, sum);
    return sum;
  }

  QPolynomial kac(const DimVector& d) {
    q_.check_dim(d, "kac_polynomial_decomposition_route");
    if (is_zero(d)) throw validation_error("kac decomposition route: d = 0");
    if (!is_indivisible(d))
      throw validation_error("kac decomposition route: d must be indivisible");
    RationalQ total_sum;
    compositions(d, 1, RationalQ::from_rat(Rat(1)), total_sum);
    RationalQ a = total_sum * RationalQ(from_int_coeffs({-1, 1}));  // times (q-1)
    QPolynomial p = a.to_polynomial();
    if (!p.integral()) throw internal_error("kac decomposition route: non-integer coefficient");
    return p;
  }

 private:
  // enumerate tails of the chain after the part `prev`
  void chains(const DimVector& remaining_after_first, const DimVector& prev, const RationalQ& acc,
              RationalQ& sum) {
    DimVector rem = sub(remaining_after_first, prev);
    if (is_zero(rem)) {
      sum = sum + acc * detail::inv_phi_dim_qinv(prev);
      return;
    }
    DimVector next(rem.size(), 0);
    while (detail::next_in_box(next, prev)) {
      if (is_zero(next)) continue;
      if (!leq(next, rem)) continue;
      bool coverable = true;  // later parts are <= next, so next must hit rem's support
      for (std::size_t i = 0; i < rem.size(); ++i)
        if (rem[i] > 0 && next[i] == 0) coverable = false;
      if (!coverable) continue;
      RationalQ acc2 =
          acc * detail::inv_phi_dim_qinv(sub(prev, next)) *
          RationalQ(QPolynomial::constant(1), {}, -euler_form(q_, next, next));
      chains(rem, next, acc2, sum);
    }
  }

  // ordered compositions of d into nonzero vectors; l tracked for the
  // (-1)^{l+1}/l weight
  void compositions(const DimVector& remaining, long long l, const RationalQ& product,
                    RationalQ& out) {
    DimVector part(remaining.size(), 0);
    while (detail::next_in_box(part, remaining)) {
      RationalQ p2 = product * chain_sum(part);
      DimVector rem = sub(remaining, part);
      if (is_zero(rem)) {
        Rat w(l % 2 == 1 ? 1 : -1, l);
        out = out + p2 * w;
      } else {
        compositions(rem, l + 1, p2, out);
      }
    }
  }

  const Quiver& q_;
  std::map<DimVector, RationalQ> memo_;
};

inline QPolynomial kac_polynomial_decomposition_route(const Quiver& q, const DimVector& d) {
  HuaDecompositionRoute route(q);
  return route.kac(d);
}

} // namespace qstab
