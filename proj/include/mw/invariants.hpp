#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "mw/bigint.hpp"
#include "mw/complex.hpp"

namespace mw {

/// A vertex permutation: perm[v-1] is the image of vertex v.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i] - 1];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

/// Cycle notation, fixed points omitted: "(1,2,3)(4,5)"; "()" for identity.
inline std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i) + 1) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      out += (first ? "" : ",") + std::to_string(j + 1);
      first = false;
      j = p[j] - 1;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

/// Parses cycle notation such as "(1,2,3)(7,8,9)" into a permutation of 1..n.
inline Permutation parse_cycles(const std::string& s, int n) {
  Permutation p = identity_permutation(n);
  std::vector<int> cyc;
  std::string num;
  auto flush_num = [&] {
    if (!num.empty()) cyc.push_back(std::stoi(num));
    num.clear();
  };
  for (char ch : s) {
    if (ch == '(') {
      cyc.clear();
    } else if (ch == ')') {
      flush_num();
      for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    } else if (ch == ',' || ch == ' ') {
      flush_num();
    } else {
      num += ch;
    }
  }
  return p;
}

inline bool is_automorphism(const Complex& c, const Permutation& p) {
  for (Face f : c.facets()) {
    Face g;
    for (int v : f) g.insert(p[v - 1]);
    if (!c.has_facet(g)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Altshuler-Steinberg determinants

/// det(M) for a square integer matrix, fraction-free (Bareiss) elimination.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// A*A^T for the vertex-facet incidence matrix A: entry (u,v) counts the
/// facets containing both u and v.  Vertices are the labels in `verts`.
inline std::vector<std::vector<BigInt>> incidence_gram(std::span<const Face> facets, const std::vector<int>& verts) {
  const int m = static_cast<int>(verts.size());
  std::vector<std::vector<BigInt>> g(m, std::vector<BigInt>(m, 0));
  std::vector<std::vector<long>> cnt(m, std::vector<long>(m, 0));
  std::vector<int> pos(kMaxVertices + 1, -1);
  for (int i = 0; i < m; ++i) pos[verts[i]] = i;
  for (Face f : facets)
    for (int u : f)
      for (int v : f) ++cnt[pos[u]][pos[v]];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g[i][j] = cnt[i][j];
  return g;
}

/// det(A*A^T) of the vertex-facet incidence matrix of the complex.
inline BigInt as_determinant(const Complex& c) {
  std::vector<int> verts;
  for (int v = 1; v <= c.num_vertices(); ++v) verts.push_back(v);
  return bareiss_determinant(incidence_gram(c.facets(), verts));
}

/// det(A*A^T) of the incidence matrix of each vertex link, for vertices 1..n.
inline std::vector<BigInt> as_link_determinants(const Complex& c) {
  std::vector<BigInt> out;
  out.reserve(c.num_vertices());
  for (int v = 1; v <= c.num_vertices(); ++v) {
    const Complex lk = link(c, Face{v});
    Face used;
    for (Face f : lk.facets()) used = used | f;
    out.push_back(bareiss_determinant(incidence_gram(lk.facets(), used.vertices())));
  }
  return out;
}

/// det(A*A^T) modulo a prime below 2^62 (Gaussian elimination in Z/p).
inline std::uint64_t as_determinant_mod(const Complex& c, std::uint64_t p) {
  const int n = c.num_vertices();
  using u128 = unsigned __int128;
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
  for (Face f : c.facets())
    for (int u : f)
      for (int v : f) m[u - 1][v - 1] = (m[u - 1][v - 1] + 1) % p;
  auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>(u128(r) * b % p);
      b = static_cast<std::uint64_t>(u128(b) * b % p);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k]) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = (p - det) % p;
    }
    det = static_cast<std::uint64_t>(u128(det) * m[k][k] % p);
    const std::uint64_t inv = pow_mod(m[k][k], p - 2);
    for (int i = k + 1; i < n; ++i) {
      if (!m[i][k]) continue;
      const std::uint64_t f = static_cast<std::uint64_t>(u128(m[i][k]) * inv % p);
      for (int j = k; j < n; ++j)
        m[i][j] = (m[i][j] + p - static_cast<std::uint64_t>(u128(f) * m[k][j] % p)) % p;
    }
  }
  return det;
}

/// Two 62-bit primes for the modular determinant pre-check.
inline constexpr std::uint64_t kDetPrimeA = 4611686018427387847ull;  // 2^62 - 57
inline constexpr std::uint64_t kDetPrimeB = 4611686018427387817ull;  // 2^62 - 87

// ---------------------------------------------------------------------------
// Canonical labeling by partition refinement and backtracking

namespace detail {

/// Ordered partition of the vertices, stored as a color per vertex
/// (colors 0..cells-1; cell order is the color order).
struct Coloring {
  std::vector<int> color;  // index v-1
  int cells = 0;

  bool discrete() const { return cells == static_cast<int>(color.size()); }
};

/// Re-ranks arbitrary sortable keys into dense colors 0..k-1.
template <class Key>
Coloring rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring c;
  c.color.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    c.color[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  c.cells = static_cast<int>(sorted.size());
  return c;
}

class Canonizer {
 public:
  explicit Canonizer(const Complex& c) : c_(c), n_(c.num_vertices()) {
    incident_.resize(n_);
    const auto fs = c.facets();
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (int v : fs[i]) incident_[v - 1].push_back(static_cast<int>(i));
  }

  /// Isomorphism-invariant starting partition: per-vertex link face counts
  /// and link determinant.
  Coloring initial_coloring() const {
    const auto dets = as_link_determinants(c_);
    std::vector<std::pair<std::vector<std::int64_t>, BigInt>> keys;
    for (int v = 1; v <= n_; ++v) {
      Complex lk = link(c_, Face{v});
      std::vector<std::int64_t> counts;
      if (lk.dim() >= 0) counts = f_vector(lk).counts;
      counts.insert(counts.begin(), static_cast<std::int64_t>(incident_[v - 1].size()));
      keys.emplace_back(std::move(counts), dets[v - 1]);
    }
    return rank_keys(keys);
  }

  /// Colour refinement: a vertex's new colour is its old colour plus the
  /// multiset of colour-multisets of the facets through it.
  Coloring refine(Coloring col) const {
    const auto fs = c_.facets();
    while (true) {
      std::vector<std::vector<std::int64_t>> keys(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<std::int64_t> facet_codes;
        facet_codes.reserve(incident_[v].size());
        for (int fi : incident_[v]) {
          std::vector<int> cs;
          for (int u : fs[fi])
            if (u != v + 1) cs.push_back(col.color[u - 1]);
          std::sort(cs.begin(), cs.end());
          std::int64_t code = 1469598103934665603ll;
          for (int x : cs) code = (code ^ (x + 1)) * 1099511628211ll;
          facet_codes.push_back(code);
        }
        std::sort(facet_codes.begin(), facet_codes.end());
        keys[v].push_back(col.color[v]);
        keys[v].insert(keys[v].end(), facet_codes.begin(), facet_codes.end());
      }
      Coloring next = rank_keys(keys);
      if (next.cells == col.cells) return col;
      col = std::move(next);
    }
  }

  Coloring individualize(const Coloring& col, int v) const {
    std::vector<std::pair<int, int>> keys(n_);
    for (int u = 0; u < n_; ++u) keys[u] = {col.color[u], u == v - 1 ? 0 : 1};
    return refine(rank_keys(keys));
  }

  /// Vertices of the first non-singleton cell, ascending.
  std::vector<int> target_cell(const Coloring& col) const {
    std::vector<int> size(col.cells, 0);
    for (int x : col.color) ++size[x];
    int target = -1;
    for (int k = 0; k < col.cells; ++k)
      if (size[k] > 1) {
        target = k;
        break;
      }
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (col.color[u] == target) out.push_back(u + 1);
    return out;
  }

  std::vector<Face> certificate(const Permutation& p) const {
    std::vector<Face> out;
    out.reserve(c_.num_facets());
    for (Face f : c_.facets()) {
      Face g;
      for (int v : f) g.insert(p[v - 1]);
      out.push_back(g);
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
  }

  struct Result {
    Permutation labeling;  // vertex v -> canonical label
    std::vector<Face> certificate;
    std::vector<Permutation> generators;
    BigInt group_order = 1;
  };

  Result run() {
    Coloring root = refine(initial_coloring());
    std::vector<int> path;
    search(root, path);

    Result r;
    r.labeling = best_perm_;
    r.certificate = best_cert_;
    r.generators = generators_;
    r.group_order = 1;
    // Stabilizer chain along the first path.
    for (std::size_t level = 0; level < first_path_.size(); ++level) {
      std::vector<int> prefix(first_path_.begin(), first_path_.begin() + level);
      r.group_order *= orbit(first_path_[level], prefix).size();
    }
    return r;
  }

 private:
  static bool cert_less(const std::vector<Face>& a, const std::vector<Face>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
  }

  bool fixes(const Permutation& g, const std::vector<int>& pts) const {
    return std::all_of(pts.begin(), pts.end(), [&](int v) { return g[v - 1] == v; });
  }

  /// Orbit of v under the generators that fix every point of `prefix`.
  std::set<int> orbit(int v, const std::vector<int>& prefix) const {
    std::vector<const Permutation*> gens;
    for (const auto& g : generators_)
      if (fixes(g, prefix)) gens.push_back(&g);
    std::set<int> orb{v};
    std::vector<int> todo{v};
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (const auto* g : gens) {
        int y = (*g)[x - 1];
        if (orb.insert(y).second) todo.push_back(y);
      }
    }
    return orb;
  }

  static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  /// Returns the level to unwind to (the search continues only at nodes whose
  /// depth is at most the returned value), or SIZE_MAX to continue normally.
  std::size_t search(const Coloring& col, std::vector<int>& path) {
    if (col.discrete()) return leaf(col, path);
    const std::vector<int> cell = target_cell(col);
    std::vector<int> tried;
    for (int w : cell) {
      bool equivalent = false;
      if (!tried.empty()) {
        const auto orb = orbit(w, path);
        for (int t : tried)
          if (orb.count(t)) {
            equivalent = true;
            break;
          }
      }
      if (equivalent) continue;
      tried.push_back(w);
      path.push_back(w);
      const std::size_t jump = search(individualize(col, w), path);
      path.pop_back();
      if (jump < path.size()) return jump;
    }
    return SIZE_MAX;
  }

  std::size_t leaf(const Coloring& col, const std::vector<int>& path) {
    Permutation p(n_);
    for (int v = 0; v < n_; ++v) p[v] = col.color[v] + 1;
    auto cert = certificate(p);
    if (!have_first_) {
      have_first_ = true;
      first_path_ = path;
      first_perm_ = p;
      first_cert_ = cert;
      best_perm_ = p;
      best_cert_ = std::move(cert);
      best_path_ = path;
      return SIZE_MAX;
    }
    if (cert == first_cert_) {
      // p^{-1} o first maps the first leaf onto this one: an automorphism.
      generators_.push_back(compose(inverse(p), first_perm_));
      return common_prefix(path, first_path_);
    }
    if (cert == best_cert_) {
      generators_.push_back(compose(inverse(p), best_perm_));
      return common_prefix(path, best_path_);
    }
    if (cert_less(cert, best_cert_)) {
      best_cert_ = std::move(cert);
      best_perm_ = p;
      best_path_ = path;
    }
    return SIZE_MAX;
  }

  const Complex& c_;
  int n_;
  std::vector<std::vector<int>> incident_;
  bool have_first_ = false;
  std::vector<int> first_path_, best_path_;
  Permutation first_perm_, best_perm_;
  std::vector<Face> first_cert_, best_cert_;
  std::vector<Permutation> generators_;
};

}  // namespace detail

struct CanonicalForm {
  Complex complex;
  /// relabeling[v-1] is the canonical label of input vertex v.
  Permutation relabeling;
};

/// Canonical representative: isomorphic complexes give identical facet lists.
inline CanonicalForm canonical_form(const Complex& c) {
  detail::Canonizer cz(c);
  auto r = cz.run();
  return {Complex::from_canonical(c.dim(), c.num_vertices(), std::move(r.certificate)), std::move(r.labeling)};
}

struct GroupDescription {
  std::vector<Permutation> generators;
  BigInt order = 1;
};

/// Facet-preserving vertex permutations: generators and exact order.
inline GroupDescription automorphism_group(const Complex& c) {
  detail::Canonizer cz(c);
  auto r = cz.run();
  return {std::move(r.generators), r.group_order};
}

/// Size of the group generated by `gens` by explicit closure; stops and
/// returns limit+1 once the group exceeds `limit` elements.
inline std::size_t group_closure_size(const std::vector<Permutation>& gens, int n, std::size_t limit = 1000000) {
  std::set<Permutation> seen{identity_permutation(n)};
  std::vector<Permutation> todo{identity_permutation(n)};
  while (!todo.empty()) {
    Permutation x = std::move(todo.back());
    todo.pop_back();
    for (const auto& g : gens) {
      Permutation y = compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > limit) return limit + 1;
        todo.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

/// Sorted multiset of vertex-link determinants.
inline std::vector<BigInt> link_determinant_multiset(const Complex& c) {
  auto v = as_link_determinants(c);
  std::sort(v.begin(), v.end());
  return v;
}

inline bool are_isomorphic(const Complex& a, const Complex& b) {
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets()) return false;
  if (f_vector(a) != f_vector(b)) return false;
  if (as_determinant_mod(a, kDetPrimeA) != as_determinant_mod(b, kDetPrimeA) ||
      as_determinant_mod(a, kDetPrimeB) != as_determinant_mod(b, kDetPrimeB))
    return false;
  if (link_determinant_multiset(a) != link_determinant_multiset(b)) return false;
  return canonical_form(a).complex == canonical_form(b).complex;
}

}  // namespace mw
