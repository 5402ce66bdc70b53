#pragma once

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/polynomial.hpp"
#include "qstab/quiver.hpp"

namespace qstab {

// Thin dimension vectors: an indecomposable representation is a choice of
// nonzero scalars on an arrow subset whose underlying graph connects the
// support; each connected subset S contributes (q-1)^{|S|+1-|supp d|}
// absolutely indecomposable classes.
inline QPolynomial thin_kac(const Quiver& q, const DimVector& d) {
  q.check_dim(d, "thin_kac");
  if (is_zero(d)) throw validation_error("thin_kac: d = 0");
  for (long long v : d)
    if (v > 1) throw validation_error("thin_kac: d is not thin (some d_i >= 2)");

  std::vector<std::size_t> supp = support(d);
  std::size_t r = supp.size();
  std::vector<long long> vertex_of(q.n_vertices(), -1);
  for (std::size_t k = 0; k < r; ++k) vertex_of[supp[k]] = static_cast<long long>(k);

  // individual arrows inside the support (multiplicities expanded)
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t i : supp)
    for (std::size_t j : supp)
      for (long long m = 0; m < q.arrows(i, j); ++m)
        arrows.emplace_back(static_cast<std::size_t>(vertex_of[i]),
                            static_cast<std::size_t>(vertex_of[j]));
  if (arrows.size() > 24) throw infeasible_error("thin_kac: too many arrows in the support");

  // subsets connecting the support, counted by size
  std::vector<Int> count(arrows.size() + 1, 0);
  for (std::uint64_t mask = 0; mask < (1ULL << arrows.size()); ++mask) {
    std::vector<std::size_t> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t comps = r;
    std::size_t bits = 0;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (!(mask >> a & 1)) continue;
      ++bits;
      std::size_t x = find(arrows[a].first), y = find(arrows[a].second);
      if (x != y) {
        parent[x] = y;
        --comps;
      }
    }
    if (comps == 1) count[bits] += 1;
  }

  QPolynomial qm1 = from_int_coeffs({-1, 1});
  QPolynomial result;
  QPolynomial pw = QPolynomial::constant(1);
  for (std::size_t s = 0; s < count.size(); ++s) {
    // (q-1)^{s+1-r}; connectivity forces s >= r-1
    if (s + 1 >= r && count[s] != 0) result = result + pw * Rat(count[s]);
    if (s + 1 >= r) pw = pw * qm1;
  }
  return result;
}

namespace fp {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

// dense row-major matrix over F_p with machine-integer entries
struct Matrix {
  long long rows = 0, cols = 0;
  std::vector<long long> a;

  Matrix() = default;
  Matrix(long long r, long long c) : rows(r), cols(c), a(r * c, 0) {}

  long long& at(long long i, long long j) { return a[i * cols + j]; }
  long long at(long long i, long long j) const { return a[i * cols + j]; }

  static Matrix identity(long long n) {
    Matrix m(n, n);
    for (long long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
  }
};

inline Matrix mul(const Matrix& x, const Matrix& y, long long p) {
  Matrix r(x.rows, y.cols);
  for (long long i = 0; i < x.rows; ++i)
    for (long long k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (!v) continue;
      for (long long j = 0; j < y.cols; ++j) r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % p;
    }
  return r;
}

inline std::optional<Matrix> inverse(Matrix m, long long p) {
  long long n = m.rows;
  Matrix inv = Matrix::identity(n);
  for (long long col = 0; col < n; ++col) {
    long long piv = -1;
    for (long long i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    for (long long j = 0; j < n; ++j) {
      std::swap(m.at(col, j), m.at(piv, j));
      std::swap(inv.at(col, j), inv.at(piv, j));
    }
    // scale pivot row by the modular inverse
    long long s = 1, base = m.at(col, col) % p, e = p - 2;
    while (e) {
      if (e & 1) s = s * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (long long j = 0; j < n; ++j) {
      m.at(col, j) = m.at(col, j) * s % p;
      inv.at(col, j) = inv.at(col, j) * s % p;
    }
    for (long long i = 0; i < n; ++i) {
      if (i == col) continue;
      long long f = m.at(i, col);
      if (!f) continue;
      for (long long j = 0; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) - f * m.at(col, j) % p + p) % p;
        inv.at(i, j) = (inv.at(i, j) - f * inv.at(col, j) % p + p) % p;
      }
    }
  }
  return inv;
}

inline bool is_nilpotent(const Matrix& m, long long p) {
  Matrix pw = m;
  for (long long k = 1; k < m.rows; ++k) {
    if (pw.is_zero()) return true;
    pw = mul(pw, m, p);
  }
  return pw.is_zero();
}

// basis of the right nullspace of an (r x c) matrix
inline std::vector<std::vector<long long>> nullspace(Matrix m, long long p) {
  long long rows = m.rows, cols = m.cols;
  std::vector<long long> pivot_col;
  long long rank = 0;
  for (long long col = 0; col < cols && rank < rows; ++col) {
    long long piv = -1;
    for (long long i = rank; i < rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (long long j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
    long long s = 1, base = m.at(rank, col) % p, e = p - 2;
    while (e) {
      if (e & 1) s = s * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (long long j = 0; j < cols; ++j) m.at(rank, j) = m.at(rank, j) * s % p;
    for (long long i = 0; i < rows; ++i) {
      if (i == rank) continue;
      long long f = m.at(i, col);
      if (!f) continue;
      for (long long j = 0; j < cols; ++j)
        m.at(i, j) = (m.at(i, j) - f * m.at(rank, j) % p + p) % p;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (long long c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<long long>> basis;
  for (long long free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long long> v(cols, 0);
    v[free] = 1;
    for (long long r2 = 0; r2 < rank; ++r2)
      v[pivot_col[r2]] = (p - m.at(r2, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace fp

struct CensusResult {
  long long prime = 0;
  long long total = 0;        // |Rep_d(F_p)|
  long long classes = 0;      // isomorphism classes
  long long indecomposable = 0;
  long long abs_indecomposable = 0;
  long long millis = 0;
};

struct CensusCaps {
  long long rep_cap = 10'000'000;    // total representations
  long long group_cap = 10'000'000;  // |GL_d(F_p)| product
  long long end_dim_cap = 8;         // dim End(V)
};

// Exhaustive isomorphism census of Rep_d(F_p): explicit orbit generation
// under GL_d(F_p), then endomorphism-algebra tests per class.
inline CensusResult census(const Quiver& quiv, const DimVector& d, long long p,
                           const CensusCaps& caps = {}) {
  auto t0 = std::chrono::steady_clock::now();
  quiv.check_dim(d, "census");
  if (!fp::is_prime(p) || p >= (1LL << 15)) throw validation_error("census: q must be a prime < 2^15");
  if (is_zero(d)) throw validation_error("census: d = 0");

  std::size_t n = quiv.n_vertices();
  // arrow slots with multiplicities expanded
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (long long m = 0; m < quiv.arrows(i, j); ++m) slots.emplace_back(i, j);

  long long entries = 0;
  for (auto [i, j] : slots) entries += d[i] * d[j];
  long long total = 1;
  for (long long e = 0; e < entries; ++e) {
    if (total > caps.rep_cap / p) throw infeasible_error("census: representation cap exceeded");
    total *= p;
  }

  // the group: all tuples of invertible matrices, with inverses
  struct GroupElement {
    std::vector<fp::Matrix> g, ginv;
  };
  std::vector<std::vector<std::pair<fp::Matrix, fp::Matrix>>> gl(n);
  long long group_order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] == 0) {
      gl[i].push_back({fp::Matrix(0, 0), fp::Matrix(0, 0)});
      continue;
    }
    long long cells = d[i] * d[i], count = 1;
    for (long long e = 0; e < cells; ++e) {
      if (count > caps.group_cap / p) throw infeasible_error("census: group cap exceeded");
      count *= p;
    }
    for (long long code = 0; code < count; ++code) {
      fp::Matrix m(d[i], d[i]);
      long long c = code;
      for (long long e = 0; e < cells; ++e) {
        m.a[e] = c % p;
        c /= p;
      }
      if (auto inv = fp::inverse(m, p)) gl[i].push_back({std::move(m), std::move(*inv)});
    }
    group_order *= static_cast<long long>(gl[i].size());
    if (group_order > caps.group_cap) throw infeasible_error("census: group cap exceeded");
  }
  std::vector<GroupElement> group;
  group.reserve(group_order);
  {
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      GroupElement e;
      for (std::size_t i = 0; i < n; ++i) {
        e.g.push_back(gl[i][pick[i]].first);
        e.ginv.push_back(gl[i][pick[i]].second);
      }
      group.push_back(std::move(e));
      std::size_t i = 0;
      while (i < n && ++pick[i] == gl[i].size()) pick[i++] = 0;
      if (i == n) break;
    }
  }

  auto decode = [&](long long code) {
    std::vector<fp::Matrix> rep;
    for (auto [i, j] : slots) {
      fp::Matrix m(d[j], d[i]);  // map F_p^{d_i} -> F_p^{d_j}, columns = source
      for (long long e = 0; e < d[i] * d[j]; ++e) {
        m.a[e] = code % p;
        code /= p;
      }
      rep.push_back(std::move(m));
    }
    return rep;
  };
  auto encode = [&](const std::vector<fp::Matrix>& rep) {
    long long code = 0;
    for (std::size_t s = slots.size(); s-- > 0;)
      for (std::size_t e = rep[s].a.size(); e-- > 0;) code = code * p + rep[s].a[e];
    return code;
  };

  CensusResult out;
  out.prime = p;
  out.total = total;
  std::vector<bool> visited(static_cast<std::size_t>(total), false);
  long long covered = 0;

  for (long long code = 0; code < total; ++code) {
    if (visited[static_cast<std::size_t>(code)]) continue;
    std::vector<fp::Matrix> rep = decode(code);
    // orbit sweep
    std::vector<long long> orbit;
    for (const auto& ge : group) {
      std::vector<fp::Matrix> im;
      im.reserve(slots.size());
      for (std::size_t s = 0; s < slots.size(); ++s) {
        auto [i, j] = slots[s];
        im.push_back(fp::mul(fp::mul(ge.g[j], rep[s], p), ge.ginv[i], p));
      }
      orbit.push_back(encode(im));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (long long o : orbit) visited[static_cast<std::size_t>(o)] = true;
    covered += static_cast<long long>(orbit.size());
    ++out.classes;

    // End(V): nullspace of f_j B = B f_i over all arrows
    std::vector<long long> block_offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) block_offset[i + 1] = block_offset[i] + d[i] * d[i];
    long long unknowns = block_offset[n];
    long long eqs = 0;
    for (auto [i, j] : slots) eqs += d[j] * d[i];
    fp::Matrix sys(std::max<long long>(eqs, 1), unknowns);
    long long row = 0;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      const fp::Matrix& b = rep[s];  // d_j x d_i
      for (long long r2 = 0; r2 < d[j]; ++r2)
        for (long long c2 = 0; c2 < d[i]; ++c2) {
          // (f_j B)_{r2,c2} - (B f_i)_{r2,c2} = 0
          for (long long k = 0; k < d[j]; ++k)
            sys.at(row, block_offset[j] + r2 * d[j] + k) =
                (sys.at(row, block_offset[j] + r2 * d[j] + k) + b.at(k, c2)) % p;
          for (long long k = 0; k < d[i]; ++k)
            sys.at(row, block_offset[i] + k * d[i] + c2) =
                (sys.at(row, block_offset[i] + k * d[i] + c2) + p - b.at(r2, k)) % p;
          ++row;
        }
    }
    auto basis = eqs == 0 ? fp::nullspace(fp::Matrix(1, unknowns), p) : fp::nullspace(sys, p);
    if (static_cast<long long>(basis.size()) > caps.end_dim_cap)
      throw infeasible_error("census: endomorphism algebra too large");

    bool indec = true, absindec = true;
    std::vector<long long> coef(basis.size(), 0);
    while (indec || absindec) {
      // assemble f from the current coefficient tuple
      std::vector<fp::Matrix> f(n);
      for (std::size_t i = 0; i < n; ++i) f[i] = fp::Matrix(d[i], d[i]);
      for (std::size_t b2 = 0; b2 < basis.size(); ++b2) {
        if (coef[b2] == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
          for (long long e = 0; e < d[i] * d[i]; ++e)
            f[i].a[e] = (f[i].a[e] + coef[b2] * basis[b2][block_offset[i] + e]) % p;
      }
      if (indec) {
        bool inv = true, nil = true;
        for (std::size_t i = 0; i < n; ++i) {
          if (d[i] == 0) continue;
          if (!fp::inverse(f[i], p)) inv = false;
          if (!fp::is_nilpotent(f[i], p)) nil = false;
        }
        if (!inv && !nil) indec = false;
      }
      if (absindec) {
        bool some_lambda = false;
        for (long long lam = 0; lam < p && !some_lambda; ++lam) {
          bool all_nil = true;
          for (std::size_t i = 0; i < n && all_nil; ++i) {
            if (d[i] == 0) continue;
            fp::Matrix g = f[i];
            for (long long r2 = 0; r2 < d[i]; ++r2)
              g.at(r2, r2) = (g.at(r2, r2) + p - lam) % p;
            if (!fp::is_nilpotent(g, p)) all_nil = false;
          }
          some_lambda = all_nil;
        }
        if (!some_lambda) absindec = false;
      }
      std::size_t k = 0;
      while (k < coef.size() && ++coef[k] == p) coef[k++] = 0;
      if (k == coef.size()) break;
    }
    if (indec) ++out.indecomposable;
    if (absindec) ++out.abs_indecomposable;
  }
  if (covered != total) throw internal_error("census: orbits do not cover the space");
  out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return out;
}

// Unique polynomial of degree <= degree_bound through the points; extra
// points are consistency-checked.
inline QPolynomial interpolate(const std::vector<std::pair<long long, Int>>& points,
                               long long degree_bound) {
  if (degree_bound < 0) throw validation_error("interpolate: negative degree bound");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw validation_error("interpolate: duplicate abscissae");
  std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (points.size() < need) throw validation_error("interpolate: insufficient points");

  QPolynomial result;
  for (std::size_t i = 0; i < need; ++i) {
    QPolynomial term = QPolynomial::constant(Rat(points[i].second));
    for (std::size_t j = 0; j < need; ++j) {
      if (j == i) continue;
      // (x - x_j) / (x_i - x_j)
      QPolynomial lin = from_int_coeffs({-points[j].first, 1});
      term = term * lin * (Rat(1) / Rat(points[i].first - points[j].first));
    }
    result = result + term;
  }
  for (std::size_t i = need; i < points.size(); ++i)
    if (result(Rat(points[i].first)) != Rat(points[i].second))
      throw validation_error("interpolate: over-determined points are inconsistent");
  return result;
}

inline QPolynomial brute_force_kac(const Quiver& q, const DimVector& d,
                                   const std::vector<long long>& primes,
                                   const CensusCaps& caps = {}) {
  q.check_dim(d, "brute_force_kac");
  if (is_zero(d)) throw validation_error("brute_force_kac: d = 0");
  long long bound = 1 - euler_form(q, d, d);
  if (bound < 0) bound = 0;
  if (static_cast<long long>(primes.size()) < bound + 1)
    throw validation_error("brute_force_kac: insufficient sample primes for the degree bound");
  std::vector<std::pair<long long, Int>> pts;
  for (long long p : primes) pts.emplace_back(p, Int(census(q, d, p, caps).abs_indecomposable));
  QPolynomial a = interpolate(pts, bound);
  if (!a.integral()) throw internal_error("brute_force_kac: non-integer coefficients");
  if (a.degree() > bound) throw internal_error("brute_force_kac: degree bound violated");
  return a;
}

} // namespace qstab
