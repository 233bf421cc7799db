#include <gtest/gtest.h>

#include "mw/bounds.hpp"
#include "mw/catalog.hpp"
#include "mw/constructions.hpp"
#include "test_util.hpp"

using namespace mw;

namespace {

/// Facets of the cyclic (d+1)-polytope on n vertices by Gale's evenness
/// condition: between any two non-members, an even number of members.
std::int64_t gale_facets(int d, int n) {
  const int D = d + 1;
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != D) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b) {
        if ((mask >> a & 1) || (mask >> b & 1)) continue;
        int between = 0;
        for (int x = a + 1; x < b; ++x) between += mask >> x & 1;
        ok = between % 2 == 0;
      }
    count += ok;
  }
  return count;
}

TopologyHints hints(std::initializer_list<const char*> kv) {
  TopologyHints h;
  for (const char* s : kv) h.set(s);
  return h;
}

}  // namespace

TEST(Cyclic, FacetsMatchGaleEvenness) {
  for (int d = 1; d <= 5; ++d)
    for (int n = d + 2; n <= 13; ++n) EXPECT_EQ(cyclic_f(d, n)[d], gale_facets(d, n)) << d << " " << n;
}

TEST(Cyclic, NeighborlyAndDehnSommerville) {
  EXPECT_EQ(cyclic_f(3, 9)[1], 36);
  for (int d = 1; d <= 6; ++d)
    for (int n = d + 2; n <= 14; ++n) {
      const auto f = cyclic_f(d, n);
      EXPECT_EQ(f.euler, d % 2 ? 0 : 2) << d << " " << n;
      // h-vector symmetry: h_i = sum_k (-1)^(i-k) C(d+1-k, i-k) f_{k-1}.
      std::vector<std::int64_t> fx{1};
      for (int k = 0; k <= d; ++k) fx.push_back(f[k]);
      std::vector<std::int64_t> h(d + 2, 0);
      for (int i = 0; i <= d + 1; ++i)
        for (int k = 0; k <= i; ++k) h[i] += ((i - k) % 2 ? -1 : 1) * binomial(d + 1 - k, i - k) * fx[k];
      for (int i = 0; i <= d + 1; ++i) EXPECT_EQ(h[i], h[d + 1 - i]) << d << " " << n;
    }
  EXPECT_EQ(cyclic_f(4, 6).counts, f_vector(boundary_simplex(4)).counts);
}

TEST(Heawood, Examples) {
  EXPECT_EQ(heawood_min_vertices(0), 7);
  EXPECT_EQ(heawood_min_vertices(1), 6);
  EXPECT_EQ(heawood_min_vertices(2), 4);
  EXPECT_EQ(heawood_min_vertices(-2, true), 10);
  EXPECT_TRUE(heawood_check(7, 0).sharp());
  EXPECT_EQ(surface_f_from_n(7, 0).counts, (std::vector<std::int64_t>{7, 21, 14}));
}

TEST(Heawood, MonotoneAndAgreesWithKalai) {
  for (int chi = 2; chi > -40; --chi) {
    EXPECT_LE(heawood_min_vertices(chi), heawood_min_vertices(chi - 1));
    const int n = heawood_min_vertices(chi);
    // Direct search for the least n with (n-3)(n-4) >= 6(2-chi).
    int m = 4;
    while ((m - 3) * (m - 4) < 6 * (2 - chi)) ++m;
    EXPECT_EQ(n, m);
    for (int k = n - 2; k <= n + 2; ++k) {
      const auto a = kuehnel_kalai_bound(1, k, chi), b = heawood_check(k, chi);
      EXPECT_EQ(a.satisfied(), b.satisfied());
      EXPECT_EQ(a.sharp(), b.sharp());
      EXPECT_TRUE(a.conjectural);
    }
  }
  EXPECT_THROW(heawood_min_vertices(3), Error);
}

TEST(BrehmKuehnel, Examples) {
  auto min_of = [](int d, const TopologyHints& h, const std::string& id) {
    for (const auto& b : brehm_kuehnel_bounds(d, h))
      if (b.id == id) return b.min_vertices;
    return -1;
  };
  EXPECT_EQ(min_of(5, hints({"sphere=false"}), "bk-nonsphere"), 12);
  EXPECT_EQ(min_of(6, hints({"sphere=false"}), "bk-nonsphere"), 13);
  EXPECT_EQ(min_of(3, hints({"not-simply-connected"}), "bk-not-simply-connected"), 9);
  EXPECT_EQ(min_of(4, hints({"sphere=false"}), "bk-nonsphere"), 9);
  EXPECT_TRUE(vertex_bound_check(9, brehm_kuehnel_bounds(4, hints({"sphere=false"}))[0]).sharp());
  EXPECT_TRUE(brehm_kuehnel_bounds(4, {}).empty());
  EXPECT_THROW(hints({"bogus=1"}), Error);
}

TEST(Kuehnel4d, Examples) {
  const auto cp2 = kuehnel_4d_check(9, 3);
  EXPECT_TRUE(cp2.satisfied && cp2.sharp && !cp2.sharp_but_excluded);
  const auto k3 = kuehnel_4d_check(16, 24);
  EXPECT_TRUE(k3.satisfied && k3.sharp);
  EXPECT_EQ(k3.lhs, 220);
  const auto ten = kuehnel_4d_check(10, 4);
  EXPECT_TRUE(ten.satisfied && ten.sharp && ten.sharp_but_excluded);
  EXPECT_FALSE(kuehnel_4d_check(10, 5).satisfied);
}

TEST(KuehnelKalai, Examples) {
  EXPECT_TRUE(kuehnel_kalai_bound(2, 9, 3).sharp());
  EXPECT_EQ(kuehnel_kalai_bound(3, 15, 3).satisfied(), Satisfied::yes);
  EXPECT_EQ(kuehnel_kalai_bound(3, 15, 3).lhs, 210);
}

TEST(KuehnelTriangle, RowsReduceToKnownBounds) {
  // j=0: C(n-d-2,1) >= C(d+2,1)*0, i.e. n >= d+2.
  for (int d = 3; d <= 6; ++d) {
    std::vector<int> rb(d / 2 + 1, 0);
    rb[1] = 1;
    const auto at = [&](int n) { return kuehnel_triangle_bounds(d, n, rb)[1]; };
    EXPECT_EQ(at(2 * d + 3).satisfied(), Satisfied::yes) << d;
    EXPECT_EQ(at(2 * d + 2).satisfied(), Satisfied::no) << d;
  }
}

TEST(LowerBound, Examples) {
  const auto rp3 = lbt_check(catalog_entry("RP3-11").expected_f, 3);
  EXPECT_EQ(rp3[0].lhs, 51);
  EXPECT_EQ(rp3[0].rhs, 34);
  for (const auto& e : lbt_check(f_vector(boundary_simplex(4)), 4)) EXPECT_TRUE(e.sharp()) << e.id;
  EXPECT_EQ(lbt_check(f_vector(boundary_simplex(3)), 3)[2].rhs, 5);
}

TEST(UpperBound, Examples) {
  const auto l31 = ubt_check(catalog_entry("L31-12").expected_f, 3, {1, 0, 0, 1});
  EXPECT_TRUE(l31[0].sharp());
  const auto tb = ubt_check(make_fvector({9, 36, 54, 27}), 3, {1, 1, 1, 1});
  EXPECT_TRUE(tb[0].sharp());
  const auto torus = ubt_check(catalog_entry("csaszar-torus").expected_f, 2, {1, 2, 1});
  EXPECT_EQ(torus[0].satisfied(), Satisfied::not_applicable);
  for (const auto& e : ubt_check(f_vector(boundary_simplex(5)), 5, {1, 0, 0, 0, 0, 1})) EXPECT_TRUE(e.sharp()) << e.id;
}

TEST(Walkup, Examples) {
  const auto rp3 = walkup_relation(catalog_entry("RP3-11").expected_f, walkup_gamma("RP3")->gamma);
  EXPECT_TRUE(rp3.consistent);
  EXPECT_EQ(rp3.slack, 0);
  const auto l31 = walkup_relation(catalog_entry("L31-12").expected_f, walkup_gamma("L31")->gamma);
  EXPECT_EQ(l31.slack, 0);
  EXPECT_TRUE(walkup_gamma("L31")->conjectural);
  EXPECT_FALSE(walkup_relation(make_fvector({5, 10, 11, 5}), -10).consistent);
  EXPECT_THROW(walkup_relation(make_fvector({7, 21, 14}), 0), Error);
  EXPECT_EQ(walkup_gamma("S2xS1")->gamma_star, 1);
}

TEST(Novik, Examples) {
  const auto torus = novik_bounds(2, 7, {1, 2, 1});
  EXPECT_EQ(torus[0].lhs, 6);
  EXPECT_EQ(torus[0].rhs, 6);
  EXPECT_TRUE(torus[0].sharp());
  EXPECT_TRUE(novik_bounds(2, 6, {1, 1, 1})[0].applicable);
  const auto odd = novik_bounds(3, 11, {1, 0, 0, 1});
  EXPECT_EQ(odd[2].rhs, 0);
  EXPECT_EQ(odd[2].satisfied(), Satisfied::yes);
}

TEST(Misc, ProjectiveAndHomologySpheres) {
  const auto rp4 = arnoux_marin_min(ProjectiveKind::real, 4);
  EXPECT_EQ(rp4.bound, 15);
  EXPECT_EQ(rp4.effective, 16);
  EXPECT_EQ(arnoux_marin_min(ProjectiveKind::complex, 2).effective, 9);
  EXPECT_EQ(arnoux_marin_min(ProjectiveKind::real, 2).effective, 6);
  EXPECT_EQ(bagchi_datta_min(3), 12);
  EXPECT_THROW(bagchi_datta_min(7), Error);
}

TEST(Report, CatalogHasNoViolations) {
  for (const auto& e : catalog()) {
    const auto r = bound_report(e.complex);
    EXPECT_FALSE(r.any_violation()) << e.name << "\n" << report_text(r);
  }
}

TEST(Report, RP3WithName) {
  const auto r = bound_report(catalog_entry("RP3-11").complex, hints({"name=RP3"}));
  ASSERT_NE(r.find("walkup-gamma"), nullptr);
  EXPECT_TRUE(r.find("walkup-gamma")->sharp());
  EXPECT_EQ(r.find("bk-not-simply-connected")->rhs, 9);
  EXPECT_EQ(r.find("bk-not-simply-connected")->satisfied(), Satisfied::yes);
  EXPECT_EQ(r.find("arnoux-marin")->rhs, 11);
  EXPECT_TRUE(r.find("arnoux-marin")->sharp());
}

TEST(Report, CsaszarHeawoodSharp) {
  const auto r = bound_report(catalog_entry("csaszar-torus").complex);
  EXPECT_TRUE(r.find("heawood")->sharp());
  EXPECT_TRUE(r.find("novik-1")->sharp());
}

TEST(Report, SimplexBoundary) {
  const auto r = bound_report(boundary_simplex(5));
  EXPECT_FALSE(r.any_violation());
  for (int k = 1; k <= 5; ++k) EXPECT_TRUE(r.find("ubt-" + std::to_string(k))->sharp());
  EXPECT_EQ(r.find("bk-nonsphere")->satisfied(), Satisfied::not_applicable);
}

TEST(Report, FormatsAreStable) {
  const auto r = bound_report(catalog_entry("L31-12").complex, hints({"name=L31"}));
  EXPECT_EQ(report_text(r), report_text(bound_report(catalog_entry("L31-12").complex, hints({"name=L31"}))));
  EXPECT_NE(report_kv(r).find("walkup-gamma"), std::string::npos);
  EXPECT_FALSE(r.any_violation());
}
