#pragma once

#include <string>

#include "mw/complex.hpp"
#include "mw/error.hpp"
#include "mw/homology.hpp"

namespace mw {

struct SurfaceClass {
  bool orientable = true;
  int genus = 0;
  int euler = 2;

  auto operator<=>(const SurfaceClass&) const = default;

  /// "S2", "T2", "RP2", "K2", "M(g,+)" or "M(g,-)".
  std::string name() const {
    if (orientable) {
      if (genus == 0) return "S2";
      if (genus == 1) return "T2";
      return "M(" + std::to_string(genus) + ",+)";
    }
    if (genus == 1) return "RP2";
    if (genus == 2) return "K2";
    return "M(" + std::to_string(genus) + ",-)";
  }

  static SurfaceClass from(bool orientable, int genus) {
    return {orientable, genus, orientable ? 2 - 2 * genus : 2 - genus};
  }
};

/// Pure 2-dimensional, every edge in two triangles, every vertex link one cycle.
inline bool is_closed_surface(const Complex& c) {
  if (c.dim() != 2 || !is_pseudomanifold(c)) return false;
  for (int v = 1; v <= c.num_vertices(); ++v) {
    const Complex lk = link(c, Face{v});
    // The link is a 1-dimensional complex where each vertex has degree 2
    // (ridge condition); it is a single cycle iff it is connected.
    Face seen{lk.facets().front().front()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (Face e : lk.facets())
        if (!(e & seen).empty() && !seen.contains(e)) {
          seen = seen | e;
          grew = true;
        }
    }
    Face all;
    for (Face e : lk.facets()) all = all | e;
    if (seen != all) return false;
  }
  return true;
}

inline SurfaceClass classify_surface(const Complex& c) {
  if (!is_closed_surface(c)) throw Error(ErrorKind::NotASurface, "not a closed surface");
  const int chi = static_cast<int>(f_vector(c).euler);
  const bool orient = orientability(c) == Orientability::orientable;
  return SurfaceClass::from(orient, orient ? (2 - chi) / 2 : 2 - chi);
}

/// Orientable genus 2, the Klein bottle and the non-orientable genus 3
/// surface need one vertex more than the Heawood bound predicts.
inline bool is_heawood_exceptional(const SurfaceClass& s) {
  return (s.orientable && s.genus == 2) || (!s.orientable && (s.genus == 2 || s.genus == 3));
}

}  // namespace mw
