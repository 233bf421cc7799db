#include <gtest/gtest.h>

#include "mw/bounds.hpp"
#include "mw/catalog.hpp"
#include "mw/census.hpp"
#include "mw/constructions.hpp"
#include "mw/invariants.hpp"
#include "test_util.hpp"

using namespace mw;

namespace {

SurfaceClass S(bool orientable, int genus) { return SurfaceClass::from(orientable, genus); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify_surface(catalog_entry("csaszar-torus").complex), S(true, 1));
  EXPECT_EQ(classify_surface(mwtest::rp2_6()), S(false, 1));
  EXPECT_EQ(classify_surface(boundary_simplex(2)), S(true, 0));
  EXPECT_EQ(classify_surface(twisted_bundle(2)), S(false, 2));
  EXPECT_EQ(twisted_bundle(2).num_vertices(), 9);
  EXPECT_EQ(S(false, 2).name(), "K2");
  EXPECT_EQ(S(true, 3).euler, -4);
  EXPECT_EQ(kind_of([] { classify_surface(boundary_simplex(3)); }), ErrorKind::NotASurface);
  // Two tetrahedra sharing a vertex: every edge has degree two, the link of
  // the shared vertex is two triangles.
  const auto pinched = from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 5, 6}, {1, 5, 7}, {1, 6, 7}, {5, 6, 7}});
  EXPECT_FALSE(is_closed_surface(pinched));
}

TEST(Census, TableUpToEight) {
  const std::map<int, std::map<SurfaceClass, std::int64_t>> expect{
      {4, {{S(true, 0), 1}}},
      {5, {{S(true, 0), 1}}},
      {6, {{S(true, 0), 2}, {S(false, 1), 1}}},
      {7, {{S(true, 0), 5}, {S(true, 1), 1}, {S(false, 1), 3}}},
      {8, {{S(true, 0), 14}, {S(true, 1), 7}, {S(false, 1), 16}, {S(false, 2), 6}}},
  };
  for (const auto& [n, counts] : expect) EXPECT_EQ(enumerate_surfaces(n).counts, counts) << n;
}

TEST(Census, NineVertices) {
  const auto r = enumerate_surfaces(9);
  const std::map<SurfaceClass, std::int64_t> expect{{S(true, 0), 50}, {S(true, 1), 112}, {S(false, 1), 134},
                                                    {S(false, 2), 187}, {S(false, 3), 133}, {S(false, 4), 37},
                                                    {S(false, 5), 2}};
  EXPECT_EQ(r.counts, expect);
  EXPECT_EQ(r.total(), 655);
}

TEST(Census, LinesFormat) {
  const auto r = enumerate_surfaces(7);
  EXPECT_EQ(census_lines(r),
            "n=7 chi=2 orient=+ genus=0 count=5\n"
            "n=7 chi=0 orient=+ genus=1 count=1\n"
            "n=7 chi=1 orient=- genus=1 count=3\n");
}

TEST(Census, RepresentativesAreValidAndDistinct) {
  for (int n = 4; n <= 8; ++n) {
    std::vector<Complex> reps;
    std::vector<SurfaceClass> cls;
    CensusOptions opt;
    opt.sink = [&](const Complex& c, const SurfaceClass& s) {
      reps.push_back(c);
      cls.push_back(s);
    };
    const auto r = enumerate_surfaces(n, opt);
    ASSERT_EQ(static_cast<std::int64_t>(reps.size()), r.total());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      EXPECT_EQ(reps[i].num_vertices(), n);
      EXPECT_EQ(classify_surface(reps[i]), cls[i]);
      // Heawood: every class that occurs respects the vertex bound.
      EXPECT_GE(n, heawood_min_vertices(cls[i].euler, is_heawood_exceptional(cls[i])));
      for (std::size_t j = 0; j < i; ++j)
        if (cls[i] == cls[j]) {
          EXPECT_FALSE(are_isomorphic(reps[i], reps[j])) << n << ": " << i << " " << j;
        }
    }
  }
}

TEST(Census, CanonicalFormIsRelabelInvariant) {
  std::mt19937_64 rng(4);
  for (const auto& c : {catalog_entry("csaszar-torus").complex, mwtest::rp2_6(), twisted_bundle(2)}) {
    const auto cf = surface_canonical_form(c);
    for (int t = 0; t < 10; ++t) EXPECT_EQ(surface_canonical_form(mwtest::random_relabel(c, rng)), cf);
  }
  EXPECT_NE(surface_canonical_form(mwtest::rp2_6()), surface_canonical_form(catalog_entry("csaszar-torus").complex));
}

TEST(Census, ThreadCountDoesNotChangeOutput) {
  auto run = [](int threads) {
    std::string out;
    CensusOptions opt;
    opt.threads = threads;
    opt.sink = [&](const Complex& c, const SurfaceClass&) { out += write_facets(c); };
    enumerate_surfaces(8, opt);
    return out;
  };
  EXPECT_EQ(run(1), run(4));
}

TEST(Census, Limits) {
  EXPECT_EQ(kind_of([] { enumerate_surfaces(3); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { enumerate_surfaces(11); }), ErrorKind::CapExceeded);
  EXPECT_EQ(kind_of([] { enumerate_spheres(13); }), ErrorKind::CapExceeded);
  CensusOptions wide;
  wide.cap = 20;
  EXPECT_EQ(kind_of([&] { enumerate_surfaces(16, wide); }), ErrorKind::CapExceeded);
}

TEST(Spheres, SplitsAgreeWithGenerator) {
  const std::vector<std::int64_t> table{1, 1, 2, 5, 14, 50};
  for (int n = 4; n <= 9; ++n) {
    const auto s = enumerate_spheres(n);
    EXPECT_EQ(s, table[static_cast<std::size_t>(n - 4)]) << n;
    EXPECT_EQ(s, enumerate_surfaces(n).count(S(true, 0))) << n;
  }
}

TEST(Spheres, ElevenVertices) { EXPECT_EQ(enumerate_spheres(11), 1249); }
