#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "qstab/errors.hpp"
#include "qstab/numeric.hpp"
#include "qstab/polynomial.hpp"

namespace qstab {

using DimVector = std::vector<long long>;

enum class BilinearForm { euler, cartan };
enum class Strictness { strict, weak };
enum class RootType { real, imaginary, not_root };

inline long long total(const DimVector& d) {
  return std::accumulate(d.begin(), d.end(), 0LL);
}

inline bool is_zero(const DimVector& d) {
  return std::all_of(d.begin(), d.end(), [](long long v) { return v == 0; });
}

inline DimVector unit_vector(std::size_t n, std::size_t i) {
  DimVector e(n, 0);
  e[i] = 1;
  return e;
}

inline DimVector add(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline DimVector sub(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline DimVector scale(long long s, const DimVector& a) {
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

// componentwise a <= b
inline bool leq(const DimVector& a, const DimVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::vector<std::size_t> support(const DimVector& d) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) s.push_back(i);
  return s;
}

inline bool is_indivisible(const DimVector& d) {
  if (is_zero(d)) throw validation_error("is_indivisible: zero vector");
  long long g = 0;
  for (long long v : d) g = std::gcd(g, v);
  return g == 1;
}

// Directed multigraph: arrows[i][j] counts arrows i -> j.
class Quiver {
 public:
  Quiver(std::size_t n, std::vector<std::string> labels = {})
      : arrows_(n, std::vector<long long>(n, 0)), labels_(std::move(labels)) {
    if (labels_.empty())
      for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i + 1));
    if (labels_.size() != n) throw validation_error("quiver: label count mismatch");
  }

  static Quiver from_adjacency(std::vector<std::vector<long long>> a,
                               std::vector<std::string> labels = {}) {
    Quiver q(a.size(), std::move(labels));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].size() != a.size()) throw validation_error("quiver: adjacency not square");
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[i][j] < 0) throw validation_error("quiver: negative arrow count");
        q.arrows_[i][j] = a[i][j];
      }
    }
    return q;
  }

  std::size_t n_vertices() const { return arrows_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  long long arrows(std::size_t i, std::size_t j) const { return arrows_[i][j]; }
  const std::vector<std::vector<long long>>& adjacency() const { return arrows_; }

  void add_arrows(std::size_t from, std::size_t to, long long count = 1) {
    if (count < 0) throw validation_error("quiver: negative arrow count");
    arrows_[from][to] += count;
  }

  bool has_loops() const {
    for (std::size_t i = 0; i < n_vertices(); ++i)
      if (arrows_[i][i] != 0) return true;
    return false;
  }

  // edges between i and j in the underlying graph (both directions; a
  // loop counts once)
  long long underlying_edges(std::size_t i, std::size_t j) const {
    return i == j ? arrows_[i][i] : arrows_[i][j] + arrows_[j][i];
  }

  void check_dim(const DimVector& d, const char* op) const {
    if (d.size() != n_vertices())
      throw validation_error(std::string(op) + ": dimension vector has wrong length");
    for (long long v : d)
      if (v < 0) throw validation_error(std::string(op) + ": negative dimension");
  }

 private:
  std::vector<std::vector<long long>> arrows_;
  std::vector<std::string> labels_;
};

// <d, v> = sum_i d_i v_i - sum_{i->j} d_i v_j
inline long long euler_form(const Quiver& q, const DimVector& d, const DimVector& v) {
  q.check_dim(d, "euler_form");
  q.check_dim(v, "euler_form");
  long long r = 0;
  for (std::size_t i = 0; i < q.n_vertices(); ++i) {
    r += d[i] * v[i];
    for (std::size_t j = 0; j < q.n_vertices(); ++j) r -= q.arrows(i, j) * d[i] * v[j];
  }
  return r;
}

inline long long cartan_form(const Quiver& q, const DimVector& d, const DimVector& v) {
  return euler_form(q, d, v) + euler_form(q, v, d);
}

inline long long bilinear(const Quiver& q, BilinearForm f, const DimVector& d,
                          const DimVector& v) {
  return f == BilinearForm::euler ? euler_form(q, d, v) : cartan_form(q, d, v);
}

inline bool is_symmetric(const Quiver& q) {
  for (std::size_t i = 0; i < q.n_vertices(); ++i)
    for (std::size_t j = i + 1; j < q.n_vertices(); ++j)
      if (q.arrows(i, j) != q.arrows(j, i)) return false;
  return true;
}

// Connected components of supp(delta) in the underlying graph, plus the
// pairwise component distances measured in the full underlying graph.
struct SupportComponents {
  std::vector<std::vector<std::size_t>> components;
  // distances[k][l]: shortest underlying-graph distance between
  // components k and l; -1 when unreachable.
  std::vector<std::vector<long long>> distances;
};

inline std::vector<long long> bfs_distances(const Quiver& q, std::size_t start) {
  std::vector<long long> dist(q.n_vertices(), -1);
  std::queue<std::size_t> todo;
  dist[start] = 0;
  todo.push(start);
  while (!todo.empty()) {
    std::size_t u = todo.front();
    todo.pop();
    for (std::size_t v = 0; v < q.n_vertices(); ++v)
      if (v != u && q.underlying_edges(u, v) > 0 && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        todo.push(v);
      }
  }
  return dist;
}

inline SupportComponents support_components(const Quiver& q, const DimVector& delta) {
  q.check_dim(delta, "support_components");
  SupportComponents out;
  std::vector<int> comp(q.n_vertices(), -1);
  for (std::size_t s = 0; s < q.n_vertices(); ++s) {
    if (delta[s] == 0 || comp[s] >= 0) continue;
    // flood fill inside the support
    std::vector<std::size_t> members;
    std::queue<std::size_t> todo;
    comp[s] = static_cast<int>(out.components.size());
    todo.push(s);
    while (!todo.empty()) {
      std::size_t u = todo.front();
      todo.pop();
      members.push_back(u);
      for (std::size_t v = 0; v < q.n_vertices(); ++v)
        if (v != u && delta[v] != 0 && comp[v] < 0 && q.underlying_edges(u, v) > 0) {
          comp[v] = comp[u];
          todo.push(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
  }
  std::size_t k = out.components.size();
  out.distances.assign(k, std::vector<long long>(k, -1));
  for (std::size_t a = 0; a < k; ++a) {
    out.distances[a][a] = 0;
    std::vector<long long> best(q.n_vertices(), -1);
    for (std::size_t u : out.components[a]) {
      auto dist = bfs_distances(q, u);
      for (std::size_t v = 0; v < q.n_vertices(); ++v)
        if (dist[v] >= 0 && (best[v] < 0 || dist[v] < best[v])) best[v] = dist[v];
    }
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      long long m = -1;
      for (std::size_t v : out.components[b])
        if (best[v] >= 0 && (m < 0 || best[v] < m)) m = best[v];
      out.distances[a][b] = m;
    }
  }
  return out;
}

// Which reading of the component-proximity clause to use. The proof
// interpretation allows an edge between components or a shared neighbor
// (graph distance <= 2); the literal one requires distance <= 1.
enum class DistInterpretation { proof, literal };

struct StarVertexVerdict {
  long long left_pairing;   // <e_i, delta> (or Cartan pairing)
  long long right_pairing;  // <delta, e_i> (same value for Cartan)
  bool left_ok;
  bool right_ok;
};

struct StarReport {
  BilinearForm form_used;
  Strictness strictness;
  DistInterpretation dist_interpretation;
  std::vector<StarVertexVerdict> vertices;
  bool components_ok;
  long long max_component_distance;  // 0 when a single component
  bool overall;
};

inline StarReport check_star(const Quiver& q, const DimVector& delta, BilinearForm form,
                             Strictness strictness,
                             DistInterpretation dist = DistInterpretation::proof) {
  q.check_dim(delta, "check_star");
  if (is_zero(delta)) throw validation_error("check_star: delta = 0");
  StarReport rep;
  rep.form_used = form;
  rep.strictness = strictness;
  rep.dist_interpretation = dist;
  rep.overall = true;
  for (std::size_t i = 0; i < q.n_vertices(); ++i) {
    auto e = unit_vector(q.n_vertices(), i);
    StarVertexVerdict v;
    if (form == BilinearForm::euler) {
      v.left_pairing = euler_form(q, e, delta);
      v.right_pairing = euler_form(q, delta, e);
    } else {
      v.left_pairing = cartan_form(q, e, delta);
      v.right_pairing = v.left_pairing;
    }
    auto ok = [&](long long x) { return strictness == Strictness::strict ? x < 0 : x <= 0; };
    v.left_ok = ok(v.left_pairing);
    v.right_ok = ok(v.right_pairing);
    rep.overall = rep.overall && v.left_ok && v.right_ok;
    rep.vertices.push_back(v);
  }
  auto sc = support_components(q, delta);
  long long limit = dist == DistInterpretation::proof ? 2 : 1;
  rep.components_ok = true;
  rep.max_component_distance = 0;
  for (std::size_t a = 0; a < sc.components.size(); ++a)
    for (std::size_t b = a + 1; b < sc.components.size(); ++b) {
      long long dab = sc.distances[a][b];
      if (dab < 0 || dab > limit) rep.components_ok = false;
      if (dab > rep.max_component_distance) rep.max_component_distance = dab;
    }
  rep.overall = rep.overall && rep.components_ok;
  return rep;
}

// Reflection descent: s_i(d) = d - (d, e_i) e_i at any vertex with
// positive Cartan pairing. Height strictly decreases, so this
// terminates.
inline RootType root_type(const Quiver& q, DimVector d) {
  q.check_dim(d, "root_type");
  if (q.has_loops()) throw validation_error("root_type: quiver has loops");
  if (is_zero(d)) throw validation_error("root_type: d = 0");
  const long long cap = 10 * total(d) + 10;
  for (long long iter = 0; iter < cap; ++iter) {
    if (total(d) == 1) return RootType::real;  // some e_i reached
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i < q.n_vertices(); ++i) {
      if (d[i] == 0) continue;
      if (cartan_form(q, d, unit_vector(q.n_vertices(), i)) > 0) {
        pos = i;
        break;
      }
    }
    if (!pos) {
      // fundamental-region candidate
      auto sc = support_components(q, d);
      return sc.components.size() == 1 ? RootType::imaginary : RootType::not_root;
    }
    long long pairing = cartan_form(q, d, unit_vector(q.n_vertices(), *pos));
    d[*pos] -= pairing;
    if (d[*pos] < 0) return RootType::not_root;
  }
  throw internal_error("root_type: reflection descent did not terminate");
}

using Character = std::vector<long long>;

inline Rat slope(const Character& chi, const DimVector& d) {
  if (chi.size() != d.size()) throw validation_error("slope: size mismatch");
  if (is_zero(d)) throw validation_error("slope: d = 0");
  long long num = 0;
  for (std::size_t i = 0; i < d.size(); ++i) num += chi[i] * d[i];
  return Rat(num, total(d));
}

// No proper subvector 0 < v < d shares the slope of d. Checking every
// subvector is a superset of the positive roots, hence sufficient.
inline bool is_generic(const Quiver& q, const DimVector& d, const Character& chi) {
  q.check_dim(d, "is_generic");
  Rat sd = slope(chi, d);
  DimVector v(d.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < d.size() && v[i] == d[i]) v[i++] = 0;
    if (i == d.size()) break;
    ++v[i];
    if (is_zero(v) || v == d) continue;
    if (slope(chi, v) == sd) return false;
  }
  return true;
}

// Deterministic search by increasing max-norm, lexicographic within a
// norm. Existence for indivisible d is the paper's lemma; divisible d
// has no generic character at all.
inline Character generic_character(const Quiver& q, const DimVector& d) {
  q.check_dim(d, "generic_character");
  if (is_zero(d)) throw validation_error("generic_character: d = 0");
  if (!is_indivisible(d))
    throw validation_error("generic_character: no generic character exists (d divisible)");
  std::size_t n = d.size();
  for (long long norm = 0;; ++norm) {
    Character chi(n, -norm);
    while (true) {
      long long maxabs = 0;
      for (long long w : chi) maxabs = std::max(maxabs, std::abs(w));
      // vectors with smaller max-norm were tested at earlier rounds
      if (maxabs == norm && is_generic(q, d, chi)) return chi;
      std::size_t j = n;
      while (j > 0 && chi[j - 1] == norm) chi[--j] = -norm;
      if (j == 0) break;
      ++chi[j - 1];
    }
  }
}

inline Quiver double_quiver(const Quiver& q) {
  Quiver r(q.n_vertices(), q.labels());
  for (std::size_t i = 0; i < q.n_vertices(); ++i)
    for (std::size_t j = 0; j < q.n_vertices(); ++j)
      r.add_arrows(i, j, q.arrows(i, j) + q.arrows(j, i));
  return r;
}

// One framing vertex 1_i with a single arrow 1_i -> i per vertex.
// Framing vertices are appended after the originals.
inline Quiver framed_quiver(const Quiver& q) {
  std::size_t n = q.n_vertices();
  std::vector<std::string> labels = q.labels();
  for (std::size_t i = 0; i < n; ++i) labels.push_back("f:" + q.labels()[i]);
  Quiver r(2 * n, std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.add_arrows(i, j, q.arrows(i, j));
  for (std::size_t i = 0; i < n; ++i) r.add_arrows(n + i, i, 1);
  return r;
}

// Crawley-Boevey quiver: vertex infinity appended last, w_i arrows
// infinity -> i.
inline Quiver crawley_boevey(const Quiver& q, const DimVector& w) {
  q.check_dim(w, "crawley_boevey");
  if (is_zero(w)) throw validation_error("crawley_boevey: w = 0");
  std::size_t n = q.n_vertices();
  std::vector<std::string> labels = q.labels();
  labels.push_back("inf");
  Quiver r(n + 1, std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.add_arrows(i, j, q.arrows(i, j));
  for (std::size_t i = 0; i < n; ++i) r.add_arrows(n, i, w[i]);
  return r;
}

// (d, 1): d on the base quiver, 1 at infinity.
inline DimVector cb_dim_vector(const DimVector& d) {
  DimVector r = d;
  r.push_back(1);
  return r;
}

struct FiniteFieldCounts {
  QPolynomial rep_count;  // |Rep_d(F_q)| = q^{sum over arrows d_i d_j}
  QPolynomial gl_count;   // |GL_d(F_q)|
};

inline FiniteFieldCounts finite_field_counts(const Quiver& q, const DimVector& d) {
  q.check_dim(d, "finite_field_counts");
  long long exp = 0;
  for (std::size_t i = 0; i < q.n_vertices(); ++i)
    for (std::size_t j = 0; j < q.n_vertices(); ++j) exp += q.arrows(i, j) * d[i] * d[j];
  FiniteFieldCounts out;
  out.rep_count = QPolynomial::monomial(static_cast<std::size_t>(exp));
  QPolynomial gl = QPolynomial::constant(1);
  for (long long di : d)
    for (long long k = 0; k < di; ++k) {
      // q^{d_i} - q^k
      QPolynomial f = QPolynomial::monomial(static_cast<std::size_t>(di)) -
                      QPolynomial::monomial(static_cast<std::size_t>(k));
      gl = gl * f;
    }
  out.gl_count = gl;
  return out;
}

} // namespace qstab
