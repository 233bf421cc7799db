#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mw/bigint.hpp"
#include "mw/complex.hpp"
#include "mw/smith.hpp"

namespace mw {

/// One homology group: Z^free_rank plus torsion in invariant-factor form.
struct HomologyGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;

  bool operator==(const HomologyGroup&) const = default;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }

  /// Rendering like "Z", "Z^2", "Z_2", "Z+Z_2", "Z_2^2", "0".
  std::string str() const {
    std::string out;
    auto add = [&](const std::string& s) { out += (out.empty() ? "" : "+") + s; };
    if (free_rank == 1) add("Z");
    if (free_rank > 1) add("Z^" + std::to_string(free_rank));
    for (std::size_t i = 0; i < torsion.size();) {
      std::size_t j = i;
      while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
      std::string t = "Z_" + torsion[i].str();
      if (j - i > 1) t += "^" + std::to_string(j - i);
      add(t);
      i = j;
    }
    return out.empty() ? "0" : out;
  }
};

/// H_0..H_d over the integers (unreduced).
struct HomologyVector {
  std::vector<HomologyGroup> groups;

  bool operator==(const HomologyVector&) const = default;
  const HomologyGroup& operator[](int k) const { return groups.at(k); }
  int dim() const { return static_cast<int>(groups.size()) - 1; }

  std::int64_t euler() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < groups.size(); ++k) chi += (k % 2 ? -1 : 1) * groups[k].free_rank;
    return chi;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < groups.size(); ++k) s += (k ? ", " : "") + groups[k].str();
    return s + ")";
  }
};

/// Convenience for writing expectations: free rank plus torsion list.
inline HomologyGroup make_group(int free_rank, std::vector<int> torsion = {}) {
  HomologyGroup g;
  g.free_rank = free_rank;
  for (int t : torsion) g.torsion.emplace_back(t);
  return g;
}

/// Betti numbers over a field: characteristic 0 (Q) or a prime p.
struct BettiVector {
  std::int64_t characteristic = 0;
  std::vector<int> ranks;
  bool operator==(const BettiVector&) const = default;
  int operator[](int k) const { return ranks.at(k); }
};

/// Chain-complex data: the faces of each dimension and the boundary
/// matrices between them.
class ChainComplex {
 public:
  explicit ChainComplex(const Complex& c) : dim_(c.dim()) {
    faces_.resize(dim_ + 1);
    for (int k = 0; k <= dim_; ++k) faces_[k] = faces(c, k);
  }

  int dim() const { return dim_; }
  const std::vector<Face>& faces_of(int k) const { return faces_.at(k); }

  /// Boundary matrix of dimension k (1 <= k <= d): rows are (k-1)-faces and
  /// columns are k-faces, both in lexicographic order.  The face
  /// [v_0 < ... < v_k] maps to sum_j (-1)^j [.. omit v_j ..].
  SparseMatrix<CheckedInt> boundary(int k) const {
    const auto& lower = faces_.at(k - 1);
    const auto& upper = faces_.at(k);
    std::unordered_map<Face, int, FaceHash> index;
    index.reserve(lower.size() * 2);
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], static_cast<int>(i));
    SparseMatrix<CheckedInt> m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (std::size_t c = 0; c < upper.size(); ++c) {
      auto& col = m.columns[c];
      int j = 0;
      for (int v : upper[c]) {
        col.emplace_back(index.at(upper[c] - Face{v}), (j % 2 == 0) ? 1 : -1);
        ++j;
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
  }

 private:
  int dim_;
  std::vector<std::vector<Face>> faces_;
};

inline SparseMatrix<CheckedInt> boundary_matrix(const Complex& c, int k) {
  if (k < 1 || k > c.dim()) throw Error(ErrorKind::InvalidArgument, "boundary dimension outside 1..d");
  return ChainComplex(c).boundary(k);
}

/// Integral homology via Smith normal forms of the boundary matrices.
inline HomologyVector homology(const Complex& c) {
  const ChainComplex cc(c);
  const int d = cc.dim();
  std::vector<SmithResult> snf(d + 2);
  for (int k = 1; k <= d; ++k) snf[k] = smith_normal_form(cc.boundary(k));
  HomologyVector h;
  h.groups.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    const int fk = static_cast<int>(cc.faces_of(k).size());
    const int rank_k = k >= 1 ? snf[k].rank : 0;
    const int rank_k1 = k + 1 <= d ? snf[k + 1].rank : 0;
    h.groups[k].free_rank = fk - rank_k - rank_k1;
    if (k + 1 <= d)
      for (const auto& x : snf[k + 1].factors)
        if (x > 1) h.groups[k].torsion.push_back(x);
  }
  return h;
}

/// Betti numbers over Z/p (p prime) or over Q (p == 0).
inline BettiVector betti(const Complex& c, std::int64_t p = 0) {
  const ChainComplex cc(c);
  const int d = cc.dim();
  std::vector<int> rank(d + 2, 0);
  for (int k = 1; k <= d; ++k) rank[k] = rank_mod(cc.boundary(k), p);
  BettiVector b;
  b.characteristic = p;
  for (int k = 0; k <= d; ++k)
    b.ranks.push_back(static_cast<int>(cc.faces_of(k).size()) - rank[k] - (k + 1 <= d ? rank[k + 1] : 0));
  return b;
}

/// Reduced Betti numbers: beta~_0 = beta_0 - 1, the rest unchanged.
inline std::vector<int> reduced_betti(const BettiVector& b) {
  std::vector<int> r = b.ranks;
  if (!r.empty()) r[0] -= 1;
  return r;
}

enum class Orientability { orientable, non_orientable };

/// Coherent facet signs, or nullopt for a non-orientable pseudomanifold.
/// Facet F = [v_0 < ... < v_d] with sign s induces sign s*(-1)^j on the ridge
/// obtained by dropping v_j; coherence means the two induced signs on every
/// ridge are opposite.  signs[i] belongs to facets()[i]; facets()[0] gets +1.
inline std::optional<std::vector<int>> facet_orientation(const Complex& c) {
  if (!is_pseudomanifold(c)) throw Error(ErrorKind::NotPseudomanifold, "orientation needs a pseudomanifold");
  const auto facets = c.facets();
  std::unordered_map<Face, std::vector<std::pair<int, int>>, FaceHash> by_ridge;  // ridge -> (facet, j)
  for (std::size_t i = 0; i < facets.size(); ++i) {
    int j = 0;
    for (int v : facets[i]) by_ridge[facets[i] - Face{v}].emplace_back(static_cast<int>(i), j++);
  }
  std::vector<int> sign(facets.size(), 0);
  sign[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    const int i = todo.back();
    todo.pop_back();
    int j = 0;
    for (int v : facets[i]) {
      const int induced = sign[i] * ((j % 2) ? -1 : 1);
      for (auto [other, oj] : by_ridge[facets[i] - Face{v}]) {
        if (other == i) continue;
        const int want = -induced * ((oj % 2) ? -1 : 1);
        if (sign[other] == 0) {
          sign[other] = want;
          todo.push_back(other);
        } else if (sign[other] != want) {
          return std::nullopt;
        }
      }
      ++j;
    }
  }
  return sign;
}

inline Orientability orientability(const Complex& c) {
  return facet_orientation(c) ? Orientability::orientable : Orientability::non_orientable;
}

}  // namespace mw
