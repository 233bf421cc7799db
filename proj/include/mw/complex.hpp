#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mw/error.hpp"
#include "mw/face.hpp"

namespace mw {

/// Face counts f_0..f_d and the Euler characteristic.
struct FVector {
  std::vector<std::int64_t> counts;
  std::int64_t euler = 0;

  std::int64_t operator[](int i) const { return counts.at(i); }
  int dim() const { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const FVector&) const = default;
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(counts[i]);
    }
    return s + ")";
  }
};

inline FVector make_fvector(std::vector<std::int64_t> counts) {
  FVector f{std::move(counts), 0};
  for (std::size_t i = 0; i < f.counts.size(); ++i)
    f.euler += (i % 2 == 0 ? 1 : -1) * f.counts[i];
  return f;
}

/// A pure d-dimensional simplicial complex on the vertices 1..n.
///
/// Facets are duplicate-free and lexicographically sorted, so two Complex
/// values compare equal exactly when they have the same facet list.
/// The optional side map remembers the labels the complex was read with.
class Complex {
 public:
  Complex() = default;

  int dim() const { return dim_; }
  int num_vertices() const { return n_; }
  std::span<const Face> facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }

  /// Original input label of vertex v (1-based); v itself when unknown.
  long original_label(int v) const {
    return original_.empty() ? v : original_.at(v - 1);
  }
  const std::vector<long>& original_labels() const { return original_; }

  bool has_facet(Face f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f, LexLess{});
  }

  bool has_face(Face f) const {
    if (f.empty()) return true;
    return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return g.contains(f); });
  }

  Face vertex_set() const { return Face(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1); }

  bool operator==(const Complex& o) const { return dim_ == o.dim_ && n_ == o.n_ && facets_ == o.facets_; }

  /// Builds a complex from already-canonical data.  Callers outside this
  /// header should go through from_facets().
  static Complex from_canonical(int dim, int n, std::vector<Face> facets, std::vector<long> original = {}) {
    Complex c;
    c.dim_ = dim;
    c.n_ = n;
    c.facets_ = std::move(facets);
    c.original_ = std::move(original);
    return c;
  }

 private:
  int dim_ = -1;
  int n_ = 0;
  std::vector<Face> facets_;
  std::vector<long> original_;
};

/// Canonicalizes a raw facet list: labels are compacted to 1..n preserving
/// their relative order, facets are deduplicated and sorted.
inline Complex from_facets(const std::vector<std::vector<long>>& raw) {
  if (raw.empty()) throw Error(ErrorKind::EmptyInput, "no facets given");
  std::set<long> labels;
  for (const auto& f : raw) {
    if (f.empty()) throw Error(ErrorKind::EmptyInput, "empty facet");
    std::set<long> distinct(f.begin(), f.end());
    if (distinct.size() != f.size()) throw Error(ErrorKind::InvalidArgument, "facet with repeated vertex");
    labels.insert(f.begin(), f.end());
  }
  if (labels.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorKind::InvalidArgument, "more than 64 vertices");

  std::map<long, int> compact;
  std::vector<long> original;
  for (long l : labels) {
    compact.emplace(l, static_cast<int>(original.size()) + 1);
    original.push_back(l);
  }
  std::vector<Face> facets;
  facets.reserve(raw.size());
  bool pure = true;
  for (const auto& f : raw) {
    Face face;
    for (long l : f) face.insert(compact.at(l));
    facets.push_back(face);
    pure = pure && f.size() == raw.front().size();
  }
  if (!pure) {
    for (Face a : facets)
      for (Face b : facets)
        if (a.size() < b.size() && b.contains(a))
          throw Error(ErrorKind::ContainedFacet, "{" + a.str() + "} inside {" + b.str() + "}");
    throw Error(ErrorKind::NotPure, "facets of different dimensions");
  }
  if (raw.front().size() < 2) throw Error(ErrorKind::InvalidArgument, "0-dimensional complexes are not supported");
  std::sort(facets.begin(), facets.end(), LexLess{});
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  bool identity = true;
  for (std::size_t i = 0; i < original.size(); ++i)
    if (original[i] != static_cast<long>(i + 1)) identity = false;
  const int n = static_cast<int>(original.size());
  if (identity) original.clear();
  return Complex::from_canonical(static_cast<int>(raw.front().size()) - 1, n, std::move(facets), std::move(original));
}

/// Same as the raw overload, for facets already given as vertex sets.
inline Complex from_facets(std::span<const Face> faces) {
  std::vector<std::vector<long>> raw;
  raw.reserve(faces.size());
  for (Face f : faces) {
    auto v = f.vertices();
    raw.emplace_back(v.begin(), v.end());
  }
  return from_facets(raw);
}

inline Complex from_facets(std::initializer_list<std::initializer_list<long>> raw) {
  std::vector<std::vector<long>> v;
  for (const auto& f : raw) v.emplace_back(f);
  return from_facets(v);
}

/// Applies a vertex permutation (perm[v-1] is the image of v) and
/// re-canonicalizes.  The original-label map is dropped.
inline Complex relabel(const Complex& c, std::span<const int> perm) {
  std::vector<Face> out;
  out.reserve(c.num_facets());
  for (Face f : c.facets()) {
    Face g;
    for (int v : f) g.insert(perm[v - 1]);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return Complex::from_canonical(c.dim(), c.num_vertices(), std::move(out));
}

/// All faces of dimension k, lexicographically sorted.
inline std::vector<Face> faces(const Complex& c, int k) {
  if (k < 0 || k > c.dim()) return {};
  if (k == c.dim()) return {c.facets().begin(), c.facets().end()};
  std::unordered_set<Face, FaceHash> seen;
  for (Face f : c.facets()) for_each_subface(f, k + 1, [&](Face s) { seen.insert(s); });
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

inline FVector f_vector(const Complex& c) {
  std::vector<std::int64_t> counts(c.dim() + 1, 0);
  if (c.dim() < 0) return make_fvector(counts);
  // Small complexes: enumerate every non-empty subset of every facet once.
  std::unordered_set<Face, FaceHash> seen;
  seen.reserve(c.num_facets() * 8);
  for (Face f : c.facets())
    for_each_nonempty_subset(f, [&](Face s) {
      if (seen.insert(s).second) ++counts[s.size() - 1];
    });
  return make_fvector(counts);
}

/// Facets containing `f`.  Throws NotAFace if there are none.
inline std::vector<Face> star_facets(const Complex& c, Face f) {
  std::vector<Face> out;
  for (Face g : c.facets())
    if (g.contains(f)) out.push_back(g);
  if (out.empty()) throw Error(ErrorKind::NotAFace, "{" + f.str() + "}");
  return out;
}

/// The closed star of `f`, as the complex generated by the facets through it.
/// Vertex labels are kept (no compaction) so the result can be compared with
/// the ambient complex; n is the largest label used.
inline Complex star(const Complex& c, Face f) {
  auto st = star_facets(c, f);
  Face all;
  for (Face g : st) all = all | g;
  return Complex::from_canonical(c.dim(), all.back(), std::move(st));
}

/// Link of `f`: {G \ f : G a facet containing f}, a complex of dimension
/// d - |f|.  Labels are those of the ambient complex; vertex count is the
/// number of distinct labels used.  The link of a facet is the empty complex
/// (dimension -1, no facets).
inline Complex link(const Complex& c, Face f) {
  auto st = star_facets(c, f);
  std::vector<Face> lk;
  lk.reserve(st.size());
  for (Face g : st) lk.push_back(g - f);
  std::sort(lk.begin(), lk.end(), LexLess{});
  Face all;
  for (Face g : lk) all = all | g;
  return Complex::from_canonical(c.dim() - f.size(), all.size(), std::move(lk));
}

/// Link relabeled to 1..m in label order, suitable as a standalone complex.
inline Complex link_compacted(const Complex& c, Face f) {
  Complex lk = link(c, f);
  if (lk.num_facets() == 0 || lk.dim() < 0) return lk;
  std::vector<std::vector<long>> raw;
  for (Face g : lk.facets()) {
    auto v = g.vertices();
    raw.emplace_back(v.begin(), v.end());
  }
  if (lk.dim() == 0) {
    // Two points (a 0-sphere) or more; from_facets refuses d=0, so build it directly.
    std::vector<Face> pts;
    for (std::size_t i = 0; i < raw.size(); ++i) pts.push_back(Face{static_cast<int>(i) + 1});
    return Complex::from_canonical(0, static_cast<int>(pts.size()), std::move(pts));
  }
  return from_facets(raw);
}

enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

struct ManifoldVerdict {
  Verdict status = Verdict::unknown;
  std::string witness;
  explicit operator bool() const { return status == Verdict::yes; }
};

/// Number of facets containing each ridge.
inline std::unordered_map<Face, int, FaceHash> ridge_degrees(const Complex& c) {
  std::unordered_map<Face, int, FaceHash> deg;
  for (Face f : c.facets())
    for (int v : f) ++deg[f - Face{v}];
  return deg;
}

/// Pseudomanifold test: every ridge lies in exactly two facets and the
/// facet-ridge adjacency graph is connected (strong connectivity).
inline ManifoldVerdict is_pseudomanifold(const Complex& c) {
  if (c.num_facets() == 0) return {Verdict::no, "empty complex"};
  auto deg = ridge_degrees(c);
  std::vector<Face> ridges;
  for (const auto& [r, k] : deg) ridges.push_back(r);
  std::sort(ridges.begin(), ridges.end(), LexLess{});
  for (Face r : ridges)
    if (deg[r] != 2) return {Verdict::no, "ridge {" + r.str() + "} lies in " + std::to_string(deg[r]) + " facet(s)"};

  std::unordered_map<Face, std::vector<int>, FaceHash> by_ridge;
  const auto facets = c.facets();
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (int v : facets[i]) by_ridge[facets[i] - Face{v}].push_back(static_cast<int>(i));
  std::vector<char> seen(facets.size(), 0);
  std::vector<int> todo{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int v : facets[i])
      for (int j : by_ridge[facets[i] - Face{v}])
        if (!seen[j]) {
          seen[j] = 1;
          ++reached;
          todo.push_back(j);
        }
  }
  if (reached != facets.size())
    return {Verdict::no, "facet graph disconnected (" + std::to_string(reached) + " of " +
                             std::to_string(facets.size()) + " facets reachable)"};
  return {Verdict::yes, {}};
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// True iff every k-subset of the vertices is a face.
inline bool is_k_neighborly(const Complex& c, int k) {
  if (k < 1 || k > c.dim() + 1) throw Error(ErrorKind::InvalidArgument, "k outside 1..d+1");
  return f_vector(c)[k - 1] == binomial(c.num_vertices(), k);
}

/// Largest k for which the complex is k-neighborly.
inline int neighborliness(const Complex& c) {
  const FVector f = f_vector(c);
  int k = 0;
  while (k < c.dim() + 1 && f[k] == binomial(c.num_vertices(), k + 1)) ++k;
  return k;
}

}  // namespace mw
