#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "mw/complex.hpp"
#include "mw/error.hpp"
#include "mw/surface.hpp"

namespace mw {

inline constexpr int kCensusMaxVertices = 15;

struct CensusOptions {
  /// Largest n accepted without CapExceeded.
  int cap = 10;
  /// Worker threads; counts and sink order do not depend on it.
  int threads = 1;
  /// Called once per isomorphism class with its canonical representative.
  std::function<void(const Complex&, const SurfaceClass&)> sink;
};

struct CensusResult {
  int n = 0;
  std::map<SurfaceClass, std::int64_t> counts;

  std::int64_t count(const SurfaceClass& s) const {
    const auto it = counts.find(s);
    return it == counts.end() ? 0 : it->second;
  }
  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [s, c] : counts) t += c;
    return t;
  }
};

/// One line per class: `n=<n> chi=<chi> orient=<+|-> genus=<g> count=<c>`,
/// orientable classes first, then by genus.
inline std::string census_lines(const CensusResult& r) {
  std::vector<std::pair<SurfaceClass, std::int64_t>> rows(r.counts.begin(), r.counts.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.orientable != b.first.orientable) return a.first.orientable;
    return a.first.genus < b.first.genus;
  });
  std::string out;
  for (const auto& [s, c] : rows)
    out += "n=" + std::to_string(r.n) + " chi=" + std::to_string(s.euler) + " orient=" + (s.orientable ? "+" : "-") +
           " genus=" + std::to_string(s.genus) + " count=" + std::to_string(c) + "\n";
  return out;
}

namespace detail {

using Triangle = std::array<std::uint8_t, 3>;

/// Closed surface on vertices 0..n-1 given by its triangles, with the cyclic
/// order of every vertex link.
class SurfaceCode {
 public:
  SurfaceCode(int n, const std::vector<Triangle>& tris) : n_(n) {
    std::array<std::vector<std::pair<int, int>>, kCensusMaxVertices> edges;
    for (const auto& t : tris)
      for (int j = 0; j < 3; ++j) edges[t[j]].emplace_back(t[(j + 1) % 3], t[(j + 2) % 3]);
    for (int x = 0; x < n; ++x) {
      auto& es = edges[x];
      auto& cyc = cyc_[x];
      cyc.clear();
      // Walk the link cycle.
      int prev = es[0].first, cur = es[0].second;
      cyc.push_back(prev);
      while (cur != cyc.front()) {
        cyc.push_back(cur);
        for (const auto& [a, b] : es) {
          int nxt = -1;
          if (a == cur && b != prev) nxt = b;
          else if (b == cur && a != prev) nxt = a;
          if (nxt >= 0) {
            prev = cur;
            cur = nxt;
            break;
          }
        }
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) pos_[x][cyc[i]] = static_cast<std::uint8_t>(i);
    }
  }

  /// Minimum BFS code over all starting flags at vertices of maximum degree,
  /// plus the vertex relabeling that produces it.
  std::vector<std::uint8_t> canonical(std::vector<int>* relabel = nullptr) const {
    std::size_t maxdeg = 0;
    for (int x = 0; x < n_; ++x) maxdeg = std::max(maxdeg, cyc_[x].size());
    std::vector<std::uint8_t> best, cur;
    std::array<int, kCensusMaxVertices> lab{}, best_lab{};
    for (int u = 0; u < n_; ++u) {
      if (cyc_[u].size() != maxdeg) continue;
      const int d = static_cast<int>(cyc_[u].size());
      for (int i = 0; i < d; ++i)
        for (int dir : {1, -1}) {
          const int r = cyc_[u][i], s = cyc_[u][(i + dir + d) % d];
          if (run(u, r, s, best, cur, lab)) {
            best.swap(cur);
            best_lab = lab;
          }
        }
    }
    if (relabel) relabel->assign(best_lab.begin(), best_lab.begin() + n_);
    return best;
  }

 private:
  /// BFS from flag (u; r, s).  Returns true if the code beats `best`
  /// (or best is empty); aborts early when it cannot.
  bool run(int u, int r, int s, const std::vector<std::uint8_t>& best, std::vector<std::uint8_t>& code,
           std::array<int, kCensusMaxVertices>& lab) const {
    lab.fill(-1);
    std::array<int, kCensusMaxVertices> order{}, ref{}, nxt{};
    int labeled = 0;
    lab[u] = labeled;
    order[labeled++] = u;
    ref[u] = r;
    nxt[u] = s;
    code.clear();
    bool smaller = best.empty();
    auto emit = [&](std::uint8_t v) {
      const std::size_t k = code.size();
      code.push_back(v);
      if (smaller) return true;
      if (v < best[k]) {
        smaller = true;
        return true;
      }
      return v == best[k];
    };
    for (int q = 0; q < labeled; ++q) {
      const int x = order[q];
      const auto& cyc = cyc_[x];
      const int d = static_cast<int>(cyc.size());
      const int start = pos_[x][ref[x]];
      const int step = cyc[(start + 1) % d] == nxt[x] ? 1 : d - 1;
      for (int k = 0; k < d; ++k) {
        const int y = cyc[(start + k * step) % d];
        if (lab[y] < 0) {
          lab[y] = labeled;
          order[labeled++] = y;
          ref[y] = x;
          nxt[y] = cyc[(start + (k - 1) * step + d) % d];
        }
        if (!emit(static_cast<std::uint8_t>(lab[y]))) return false;
      }
      if (!emit(0xff)) return false;
    }
    return smaller;
  }

  int n_;
  std::array<std::vector<int>, kCensusMaxVertices> cyc_;
  std::array<std::array<std::uint8_t, kCensusMaxVertices>, kCensusMaxVertices> pos_{};
};

inline Complex triangles_to_complex(int n, const std::vector<Triangle>& tris, const std::vector<int>& relabel) {
  std::vector<Face> fs;
  for (const auto& t : tris) fs.push_back(Face{relabel[t[0]] + 1, relabel[t[1]] + 1, relabel[t[2]] + 1});
  std::sort(fs.begin(), fs.end(), LexLess{});
  return Complex::from_canonical(2, n, std::move(fs));
}

struct CodeHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

/// Backtracking generator: vertex 0 has maximal degree k and link 1..k; the
/// smallest vertex with an open link is closed next, and a new vertex always
/// takes the smallest unused label.
class SurfaceGenerator {
 public:
  SurfaceGenerator(int n, std::function<void(const std::vector<Triangle>&)> emit) : n_(n), emit_(std::move(emit)) {}

  /// Surfaces whose maximal vertex degree is k.
  void run(int k) {
    State s{};
    k_ = k;
    s.m = k + 1;
    for (int i = 1; i <= k; ++i) add(s, 0, i, i % k + 1);
    recurse(s);
  }

 private:
  struct State {
    std::array<std::array<std::uint8_t, kCensusMaxVertices>, kCensusMaxVertices> edeg{};   // triangles per edge
    std::array<std::array<std::int8_t, kCensusMaxVertices>, kCensusMaxVertices> other{};   // path end partner in link
    std::array<std::uint8_t, kCensusMaxVertices> deg{};     // link vertices
    std::array<std::uint8_t, kCensusMaxVertices> comps{};   // open path components in link
    std::uint16_t closed = 0;
    int m = 0;
    std::bitset<kCensusMaxVertices * kCensusMaxVertices * kCensusMaxVertices> tri;
    std::vector<Triangle> tris;
  };

  static int tri_index(int a, int b, int c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return (a * kCensusMaxVertices + b) * kCensusMaxVertices + c;
  }

  /// Adds edge a-b to the link of x; false if it would pinch the link.
  static bool link_add(State& s, int x, int a, int b) {
    const int da = s.edeg[x][a], db = s.edeg[x][b];  // degrees before this triangle
    if (da == 0 && db == 0) {
      s.other[x][a] = static_cast<std::int8_t>(b);
      s.other[x][b] = static_cast<std::int8_t>(a);
      ++s.comps[x];
    } else if (da == 1 && db == 0) {
      const int o = s.other[x][a];
      s.other[x][o] = static_cast<std::int8_t>(b);
      s.other[x][b] = static_cast<std::int8_t>(o);
    } else if (da == 0 && db == 1) {
      const int o = s.other[x][b];
      s.other[x][o] = static_cast<std::int8_t>(a);
      s.other[x][a] = static_cast<std::int8_t>(o);
    } else {
      if (s.other[x][a] == b) {
        if (s.comps[x] != 1) return false;
        s.comps[x] = 0;
        s.closed |= static_cast<std::uint16_t>(1u << x);
      } else {
        const int oa = s.other[x][a], ob = s.other[x][b];
        s.other[x][oa] = static_cast<std::int8_t>(ob);
        s.other[x][ob] = static_cast<std::int8_t>(oa);
        --s.comps[x];
      }
    }
    return true;
  }

  bool add(State& s, int a, int b, int c) const {
    // Link updates read edge degrees before they change.
    if (!link_add(s, a, b, c) || !link_add(s, b, a, c) || !link_add(s, c, a, b)) return false;
    for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
      if (s.edeg[x][y] == 0) {
        if (++s.deg[x] > k_ || ++s.deg[y] > k_) return false;
      }
      ++s.edeg[x][y];
      ++s.edeg[y][x];
    }
    s.tri.set(tri_index(a, b, c));
    s.tris.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)});
    return true;
  }

  void recurse(State& s) {
    int v = -1;
    for (int x = 0; x < s.m; ++x)
      if (!(s.closed >> x & 1)) {
        v = x;
        break;
      }
    if (v < 0) {
      if (s.m == n_) emit_(s.tris);
      return;
    }
    // Smallest endpoint of an open path in link(v).
    int e = -1;
    for (int y = 0; y < s.m; ++y)
      if (s.edeg[v][y] == 1) {
        e = y;
        break;
      }
    const int limit = std::min(s.m + 1, n_);
    for (int w = 0; w < limit; ++w) {
      if (w == v || w == e) continue;
      if (w < s.m) {
        if (s.closed >> w & 1) continue;
        if (s.edeg[v][w] >= 2 || s.edeg[e][w] >= 2) continue;
        if (s.tri.test(tri_index(v, e, w))) continue;
      }
      State t = s;
      if (w == s.m) ++t.m;
      if (!add(t, v, e, w)) continue;
      recurse(t);
    }
  }

  int n_;
  int k_ = 0;
  std::function<void(const std::vector<Triangle>&)> emit_;
};

inline bool triangles_orientable(int n, const std::vector<Triangle>& tris) {
  // Orientation propagation over shared edges.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_edge;  // edge -> (triangle, sign of a->b)
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (int j = 0; j < 3; ++j) {
      int a = tris[i][j], b = tris[i][(j + 1) % 3];
      const int sg = a < b ? 1 : -1;
      if (a > b) std::swap(a, b);
      by_edge[{a, b}].emplace_back(static_cast<int>(i), sg);
    }
  (void)n;
  std::vector<int> sign(tris.size(), 0);
  sign[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    const int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < 3; ++j) {
      int a = tris[i][j], b = tris[i][(j + 1) % 3];
      const int sg = (a < b ? 1 : -1) * sign[i];
      if (a > b) std::swap(a, b);
      for (auto [o, osg] : by_edge[{a, b}]) {
        if (o == static_cast<int>(i)) continue;
        const int want = -sg * osg;
        if (sign[o] == 0) {
          sign[o] = want;
          todo.push_back(o);
        } else if (sign[o] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

inline SurfaceClass classify_triangles(int n, const std::vector<Triangle>& tris) {
  const int f2 = static_cast<int>(tris.size());
  const int chi = n - 3 * f2 / 2 + f2;
  const bool o = triangles_orientable(n, tris);
  return SurfaceClass::from(o, o ? (2 - chi) / 2 : 2 - chi);
}

inline void check_census_n(int n, int cap, const char* what) {
  if (n < 4) throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs n >= 4");
  if (n > cap) throw Error(ErrorKind::CapExceeded, std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (n > kCensusMaxVertices) throw Error(ErrorKind::CapExceeded, "census supports at most 15 vertices");
}

}  // namespace detail

/// All closed surfaces on exactly n vertices, one per isomorphism class.
/// The search splits by maximal vertex degree, an isomorphism invariant, so
/// branches share no classes and run on `threads` workers.  Representatives
/// reach the sink ordered by (maximal degree, canonical code).
inline CensusResult enumerate_surfaces(int n, const CensusOptions& opt = {}) {
  detail::check_census_n(n, opt.cap, "enumerate_surfaces");
  struct Branch {
    std::map<SurfaceClass, std::int64_t> counts;
    std::vector<std::pair<std::vector<std::uint8_t>, std::vector<detail::Triangle>>> reps;
  };
  std::vector<Branch> branches(static_cast<std::size_t>(n - 3));
  auto work = [&](int k) {
    Branch& b = branches[static_cast<std::size_t>(k - 3)];
    std::unordered_set<std::vector<std::uint8_t>, detail::CodeHash> seen;
    detail::SurfaceGenerator gen(n, [&](const std::vector<detail::Triangle>& tris) {
      auto code = detail::SurfaceCode(n, tris).canonical();
      if (!seen.insert(code).second) return;
      ++b.counts[detail::classify_triangles(n, tris)];
      if (opt.sink) b.reps.emplace_back(std::move(code), tris);
    });
    gen.run(k);
    std::sort(b.reps.begin(), b.reps.end());
  };
  std::atomic<int> next{3};
  auto worker = [&] {
    for (int k; (k = next++) <= n - 1;) work(k);
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::max(1, opt.threads); ++t) pool.emplace_back(worker);
    worker();
  }
  CensusResult res;
  res.n = n;
  for (const auto& b : branches) {
    for (const auto& [cls, c] : b.counts) res.counts[cls] += c;
    for (const auto& [code, tris] : b.reps) {
      std::vector<int> relabel;
      detail::SurfaceCode(n, tris).canonical(&relabel);
      opt.sink(detail::triangles_to_complex(n, tris, relabel), detail::classify_triangles(n, tris));
    }
  }
  return res;
}

namespace detail {

/// All vertex splits of a sphere, each passed to `emit` as a triangle list on
/// n+1 vertices.
inline void vertex_splits(int n, const std::vector<Triangle>& tris, const std::function<void(const std::vector<Triangle>&)>& emit) {
  std::array<std::vector<int>, kCensusMaxVertices> cyc;
  {
    std::array<std::vector<std::pair<int, int>>, kCensusMaxVertices> es;
    for (const auto& t : tris)
      for (int j = 0; j < 3; ++j) es[t[j]].emplace_back(t[(j + 1) % 3], t[(j + 2) % 3]);
    for (int x = 0; x < n; ++x) {
      int prev = es[x][0].first, cur = es[x][0].second;
      cyc[x].push_back(prev);
      while (cur != cyc[x].front()) {
        cyc[x].push_back(cur);
        for (const auto& [a, b] : es[x]) {
          int nx = -1;
          if (a == cur && b != prev) nx = b;
          else if (b == cur && a != prev) nx = a;
          if (nx >= 0) {
            prev = cur;
            cur = nx;
            break;
          }
        }
      }
    }
  }
  const std::uint8_t w = static_cast<std::uint8_t>(n);
  for (int v = 0; v < n; ++v) {
    const auto& c = cyc[v];
    const int d = static_cast<int>(c.size());
    std::vector<Triangle> rest;
    for (const auto& t : tris)
      if (t[0] != v && t[1] != v && t[2] != v) rest.push_back(t);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        // v keeps the arc c[i..j], w takes the arc c[j..i].
        std::vector<Triangle> out = rest;
        const auto V = static_cast<std::uint8_t>(v);
        for (int k = i; k < j; ++k) out.push_back({V, static_cast<std::uint8_t>(c[k]), static_cast<std::uint8_t>(c[k + 1])});
        for (int k = j; k != i + d; ++k)
          out.push_back({w, static_cast<std::uint8_t>(c[k % d]), static_cast<std::uint8_t>(c[(k + 1) % d])});
        out.push_back({V, w, static_cast<std::uint8_t>(c[i])});
        out.push_back({V, w, static_cast<std::uint8_t>(c[j])});
        emit(out);
      }
  }
}

}  // namespace detail

/// Number of combinatorial types of triangulated 2-spheres with n vertices,
/// generated by vertex splits from n-1 (every sphere with n >= 5 vertices has
/// a contractible edge).
inline std::int64_t enumerate_spheres(int n, const CensusOptions& opt) {
  detail::check_census_n(n, opt.cap, "enumerate_spheres");
  using detail::Triangle;
  std::vector<std::vector<Triangle>> level = {{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  for (int m = 4; m < n; ++m) {
    std::unordered_set<std::vector<std::uint8_t>, detail::CodeHash> seen;
    std::vector<std::vector<Triangle>> next;
    for (const auto& s : level)
      detail::vertex_splits(m, s, [&](const std::vector<Triangle>& t) {
        detail::SurfaceCode sc(m + 1, t);
        if (seen.insert(sc.canonical()).second) next.push_back(t);
      });
    level = std::move(next);
  }
  if (opt.sink) {
    const auto cls = SurfaceClass::from(true, 0);
    for (const auto& t : level) {
      detail::SurfaceCode sc(n, t);
      std::vector<int> relabel;
      sc.canonical(&relabel);
      opt.sink(detail::triangles_to_complex(n, t, relabel), cls);
    }
  }
  return static_cast<std::int64_t>(level.size());
}

/// Spheres default to a cap of 12 vertices.
inline std::int64_t enumerate_spheres(int n) {
  CensusOptions opt;
  opt.cap = 12;
  return enumerate_spheres(n, opt);
}

/// Canonical form of a closed surface under the census code; equal for
/// isomorphic surfaces.
inline Complex surface_canonical_form(const Complex& c) {
  if (!is_closed_surface(c)) throw Error(ErrorKind::NotASurface, "not a closed surface");
  if (c.num_vertices() > kCensusMaxVertices) throw Error(ErrorKind::CapExceeded, "surface code supports at most 15 vertices");
  std::vector<detail::Triangle> tris;
  for (Face f : c.facets()) {
    auto v = f.vertices();
    tris.push_back({static_cast<std::uint8_t>(v[0] - 1), static_cast<std::uint8_t>(v[1] - 1), static_cast<std::uint8_t>(v[2] - 1)});
  }
  detail::SurfaceCode sc(c.num_vertices(), tris);
  std::vector<int> relabel;
  sc.canonical(&relabel);
  return detail::triangles_to_complex(c.num_vertices(), tris, relabel);
}

}  // namespace mw
