#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mw/complex.hpp"
#include "mw/error.hpp"
#include "mw/homology.hpp"

namespace mw {

/// Boundary of the (d+1)-simplex: d+2 vertices, every (d+1)-subset a facet.
inline Complex boundary_simplex(int d) {
  if (d < 1 || d + 2 > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "boundary_simplex needs 1 <= d <= 62");
  const Face all((std::uint64_t{1} << (d + 2)) - 1);
  std::vector<Face> facets;
  for (int v : all) facets.push_back(all - Face{v});
  std::sort(facets.begin(), facets.end(), LexLess{});
  return Complex::from_canonical(d, d + 2, std::move(facets));
}

/// The full d-simplex as a single-facet complex.
inline Complex simplex(int d) {
  if (d < 1 || d + 1 > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "simplex needs 1 <= d <= 63");
  return Complex::from_canonical(d, d + 1, {Face((std::uint64_t{1} << (d + 1)) - 1)});
}

/// Path with k vertices 1-2-...-k (k >= 2).
inline Complex path(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "path needs at least 2 vertices");
  std::vector<std::vector<long>> raw;
  for (int i = 1; i < k; ++i) raw.push_back({i, i + 1});
  return from_facets(raw);
}

/// Cycle with k vertices (k >= 3).
inline Complex cycle(int k) {
  if (k < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<std::vector<long>> raw;
  for (int i = 1; i <= k; ++i) raw.push_back({i, i % k + 1});
  return from_facets(raw);
}

/// Join: every union of a facet of a with a facet of b; b's labels shift by n(a).
inline Complex join(const Complex& a, const Complex& b) {
  const int na = a.num_vertices();
  if (na + b.num_vertices() > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "join exceeds 64 vertices");
  std::vector<Face> out;
  for (Face f : a.facets())
    for (Face g : b.facets()) out.push_back(f | Face(g.bits() << na));
  std::sort(out.begin(), out.end(), LexLess{});
  return Complex::from_canonical(a.dim() + b.dim() + 1, na + b.num_vertices(), std::move(out));
}

/// Cone with apex n+1.
inline Complex cone(const Complex& c) {
  return join(c, Complex::from_canonical(0, 1, {Face{1}}));
}

/// Suspension with apexes n+1 and n+2.
inline Complex suspension(const Complex& c) {
  return join(c, Complex::from_canonical(0, 2, {Face{1}, Face{2}}));
}

/// Linear vertex orders for the staircase product; empty means label order.
struct ProductOrders {
  std::vector<int> first;
  std::vector<int> second;
};

/// Staircase product.  Vertex (a,b) gets label (a-1)*n2 + b.  Each pair of
/// facets contributes one facet per monotone lattice path through their
/// vertex grid, with both facets' vertices sorted by the given orders.
inline Complex product(const Complex& a, const Complex& b, const ProductOrders& orders = {}) {
  const int n1 = a.num_vertices(), n2 = b.num_vertices();
  if (n1 * n2 > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "product exceeds 64 vertices");
  auto ranks = [](const std::vector<int>& order, int n) {
    std::vector<int> r(n + 1);
    if (order.empty()) {
      std::iota(r.begin(), r.end(), 0);
      return r;
    }
    if (static_cast<int>(order.size()) != n) throw Error(ErrorKind::InvalidArgument, "vertex order has wrong length");
    std::vector<char> seen(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      if (order[i] < 1 || order[i] > n || seen[order[i]]) throw Error(ErrorKind::InvalidArgument, "vertex order is not a permutation");
      seen[order[i]] = 1;
      r[order[i]] = i;
    }
    return r;
  };
  const auto r1 = ranks(orders.first, n1), r2 = ranks(orders.second, n2);
  auto sorted = [](Face f, const std::vector<int>& r) {
    auto v = f.vertices();
    std::sort(v.begin(), v.end(), [&](int x, int y) { return r[x] < r[y]; });
    return v;
  };
  std::vector<Face> out;
  for (Face f : a.facets()) {
    const auto xs = sorted(f, r1);
    for (Face g : b.facets()) {
      const auto ys = sorted(g, r2);
      const int p = static_cast<int>(xs.size()) - 1, q = static_cast<int>(ys.size()) - 1;
      // Enumerate paths as bitmasks of p+q steps with exactly q "up" steps.
      std::vector<int> steps(p + q, 0);
      std::fill(steps.begin() + p, steps.end(), 1);
      do {
        int i = 0, j = 0;
        Face cell;
        cell.insert((xs[i] - 1) * n2 + ys[j]);
        for (int s : steps) {
          (s ? j : i) += 1;
          cell.insert((xs[i] - 1) * n2 + ys[j]);
        }
        out.push_back(cell);
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  }
  return from_facets(out);
}

/// Bijection between the vertices of two facets: from[i] is glued to to[i].
struct GluingMap {
  std::vector<int> from;
  std::vector<int> to;
  /// Parity of the correspondence relative to sorted vertex order
  /// (true = odd, i.e. orientation-reversing between the sorted simplices).
  bool odd = false;
};

inline bool permutation_parity_odd(std::vector<int> v) {
  bool odd = false;
  for (std::size_t i = 0; i < v.size(); ++i)
    while (v[i] != static_cast<int>(i)) {
      std::swap(v[i], v[v[i]]);
      odd = !odd;
    }
  return odd;
}

/// Label-order correspondence, with the last two vertices swapped when
/// needed so that oriented inputs produce an oriented sum.
inline GluingMap default_gluing(const Complex& c1, Face f1, const Complex& c2, Face f2) {
  GluingMap m;
  const auto v1 = f1.vertices(), v2 = f2.vertices();
  m.from.assign(v1.begin(), v1.end());
  m.to.assign(v2.begin(), v2.end());
  if (v1.size() != v2.size()) return m;
  auto sign_of = [](const Complex& c, Face f) -> int {
    if (!is_pseudomanifold(c)) return 0;
    const auto o = facet_orientation(c);
    if (!o) return 0;
    const auto fs = c.facets();
    const auto it = std::lower_bound(fs.begin(), fs.end(), f, LexLess{});
    return (it != fs.end() && *it == f) ? (*o)[it - fs.begin()] : 0;
  };
  const int s1 = sign_of(c1, f1), s2 = sign_of(c2, f2);
  // Coherence across each glued ridge needs parity(map) * s1 == -s2.
  if (s1 != 0 && s2 != 0 && s1 == s2 && m.to.size() >= 2) {
    std::swap(m.to[m.to.size() - 1], m.to[m.to.size() - 2]);
    m.odd = true;
  }
  return m;
}

/// Removes f1 and f2 and glues the two boundary spheres along `map`.
/// Vertices of c2 outside f2 are relabeled after c1's; f0 = n1 + n2 - (d+1).
inline Complex connected_sum(const Complex& c1, Face f1, const Complex& c2, Face f2, const GluingMap& map) {
  if (c1.dim() != c2.dim()) throw Error(ErrorKind::IncompatibleGluing, "dimensions differ");
  if (!c1.has_facet(f1)) throw Error(ErrorKind::NotAFacet, "{" + f1.str() + "} is not a facet of the first complex");
  if (!c2.has_facet(f2)) throw Error(ErrorKind::NotAFacet, "{" + f2.str() + "} is not a facet of the second complex");
  const int d = c1.dim();
  if (static_cast<int>(map.from.size()) != d + 1 || map.to.size() != map.from.size())
    throw Error(ErrorKind::IncompatibleGluing, "gluing map must pair the d+1 vertices of both facets");
  Face src, dst;
  for (int v : map.from) src.insert(v);
  for (int v : map.to) dst.insert(v);
  if (src != f1 || dst != f2 || src.size() != d + 1 || dst.size() != d + 1)
    throw Error(ErrorKind::IncompatibleGluing, "gluing map is not a bijection between the two facets");
  const int n1 = c1.num_vertices();
  if (n1 + c2.num_vertices() - (d + 1) > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "sum exceeds 64 vertices");
  std::vector<int> image(c2.num_vertices() + 1, 0);
  for (std::size_t i = 0; i < map.to.size(); ++i) image[map.to[i]] = map.from[i];
  int next = n1;
  for (int v = 1; v <= c2.num_vertices(); ++v)
    if (!image[v]) image[v] = ++next;
  std::vector<Face> out;
  for (Face f : c1.facets())
    if (f != f1) out.push_back(f);
  for (Face f : c2.facets()) {
    if (f == f2) continue;
    Face g;
    for (int v : f) g.insert(image[v]);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(ErrorKind::IncompatibleGluing, "gluing produces a repeated facet");
  return Complex::from_canonical(d, next, std::move(out));
}

inline Complex connected_sum(const Complex& c1, Face f1, const Complex& c2, Face f2) {
  return connected_sum(c1, f1, c2, f2, default_gluing(c1, f1, c2, f2));
}

/// Subdivides facet f by a new vertex n+1 (a bistellar 0-move).
inline Complex stack(const Complex& c, Face f) {
  if (!c.has_facet(f)) throw Error(ErrorKind::NotAFacet, "{" + f.str() + "}");
  const int v = c.num_vertices() + 1;
  if (v > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "stacking exceeds 64 vertices");
  std::vector<Face> out;
  for (Face g : c.facets())
    if (g != f) out.push_back(g);
  for (int u : f) {
    Face g = f - Face{u};
    g.insert(v);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return Complex::from_canonical(c.dim(), v, std::move(out));
}

namespace detail {

/// boundary_simplex(d) x path(4), then level 4 glued to level 1 through
/// `perm` (a permutation of 1..d+1).
inline Complex sphere_bundle(int d, const std::vector<int>& perm) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "bundle needs d >= 2");
  const int m = d + 1;
  if (4 * m > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "bundle exceeds 64 vertices");
  const Complex prod = product(boundary_simplex(d - 1), path(4));
  // Product label (a-1)*4 + level; map to the 3m quotient labels.
  auto quotient = [&](int label) {
    int a = (label - 1) / 4 + 1, level = (label - 1) % 4 + 1;
    if (level == 4) {
      a = perm[a - 1];
      level = 1;
    }
    return (level - 1) * m + a;
  };
  std::vector<Face> out;
  for (Face f : prod.facets()) {
    Face g;
    for (int v : f) g.insert(quotient(v));
    if (g.size() != f.size()) throw Error(ErrorKind::IncompatibleGluing, "identification collapses a facet");
    out.push_back(g);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(ErrorKind::IncompatibleGluing, "identification repeats a facet");
  return Complex::from_canonical(d, 3 * m, std::move(out));
}

}  // namespace detail

/// The non-orientable S^{d-1}-bundle over S^1 on 3d+3 vertices: the ends of
/// (boundary of the d-simplex) x (4-vertex interval) glued through a reflection.
inline Complex twisted_bundle(int d) {
  std::vector<int> perm(d + 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm[0], perm[1]);
  return detail::sphere_bundle(d, perm);
}

/// S^{d-1} x S^1 on 3d+3 vertices: the same product glued by the identity.
inline Complex orientable_bundle(int d) {
  std::vector<int> perm(d + 1);
  std::iota(perm.begin(), perm.end(), 1);
  return detail::sphere_bundle(d, perm);
}

}  // namespace mw
