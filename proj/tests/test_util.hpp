#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "mw/complex.hpp"
#include "mw/io.hpp"

namespace mwtest {

/// The 6-vertex real projective plane (hemi-icosahedron).
inline mw::Complex rp2_6() {
  return mw::from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                          {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline mw::Complex random_relabel(const mw::Complex& c, std::mt19937_64& rng) {
  const auto p = random_permutation(c.num_vertices(), rng);
  return mw::relabel(c, p);
}

/// Face counts by explicit subset enumeration of every facet, deduplicated
/// through a set of sorted label vectors.
inline std::vector<std::int64_t> brute_f_vector(const mw::Complex& c) {
  std::vector<std::set<std::vector<int>>> seen(static_cast<std::size_t>(c.dim() + 1));
  for (mw::Face f : c.facets()) {
    const auto v = f.vertices();
    const int m = static_cast<int>(v.size());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) sub.push_back(v[static_cast<std::size_t>(i)]);
      seen[sub.size() - 1].insert(sub);
    }
  }
  std::vector<std::int64_t> out;
  for (const auto& s : seen) out.push_back(static_cast<std::int64_t>(s.size()));
  return out;
}

}  // namespace mwtest
