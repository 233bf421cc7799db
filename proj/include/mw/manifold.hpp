#pragma once

#include <cstdint>
#include <string>

#include "mw/complex.hpp"
#include "mw/flips.hpp"
#include "mw/homology.hpp"

namespace mw {

inline constexpr std::int64_t kDefaultLinkBudget = 10000;

/// True iff h is the homology of a k-sphere: (Z, 0, ..., 0, Z).
inline bool is_sphere_homology(const HomologyVector& h) {
  const int k = h.dim();
  for (int i = 0; i <= k; ++i) {
    const bool want_z = (i == 0 || i == k);
    if (want_z ? !(h[i].free_rank == 1 && h[i].torsion.empty()) : !h[i].is_zero()) return false;
  }
  return true;
}

/// Decides whether a complex is a PL sphere by reducing it to the boundary of
/// a simplex.  `no` when it is not a pseudomanifold or has non-sphere
/// homology; `unknown` when the flip budget runs out.
inline ManifoldVerdict recognize_sphere(const Complex& c, std::int64_t flip_budget, std::uint64_t seed = 1) {
  if (c.dim() == 0) {
    if (c.num_facets() == 2) return {Verdict::yes, {}};
    return {Verdict::no, std::to_string(c.num_facets()) + " points instead of 2"};
  }
  if (auto pm = is_pseudomanifold(c); pm.status != Verdict::yes) return {Verdict::no, pm.witness};
  const auto h = homology(c);
  if (!is_sphere_homology(h)) return {Verdict::no, "homology " + h.str()};
  if (c.num_vertices() == c.dim() + 2) return {Verdict::yes, {}};
  Schedule s;
  s.target_vertices = c.dim() + 2;
  const auto r = reduce(c, seed, flip_budget, s);
  if (r.reached_target) return {Verdict::yes, {}};
  return {Verdict::unknown, "flip budget exhausted at " + f_vector(r.best).str()};
}

/// Combinatorial manifold test: every vertex link must reduce to the boundary
/// of a d-simplex.  Links are checked in vertex order; the first `no` wins,
/// otherwise the first `unknown`.
inline ManifoldVerdict is_combinatorial_manifold(const Complex& c, std::int64_t flip_budget = kDefaultLinkBudget) {
  if (auto pm = is_pseudomanifold(c); pm.status != Verdict::yes) return {Verdict::no, pm.witness};
  ManifoldVerdict first_unknown{Verdict::yes, {}};
  for (int v = 1; v <= c.num_vertices(); ++v) {
    const auto lk = link_compacted(c, Face{v});
    const auto verdict = recognize_sphere(lk, flip_budget, static_cast<std::uint64_t>(v));
    if (verdict.status == Verdict::no) return {Verdict::no, "link of vertex " + std::to_string(v) + ": " + verdict.witness};
    if (verdict.status == Verdict::unknown && first_unknown.status == Verdict::yes)
      first_unknown = {Verdict::unknown, "link of vertex " + std::to_string(v) + ": " + verdict.witness};
  }
  return first_unknown;
}

}  // namespace mw
