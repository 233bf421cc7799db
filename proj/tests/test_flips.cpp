#include <gtest/gtest.h>

#include <sstream>

#include "mw/catalog.hpp"
#include "mw/constructions.hpp"
#include "mw/flips.hpp"
#include "mw/homology.hpp"
#include "test_util.hpp"

using namespace mw;

namespace {

FlipMove inverse_move(const FlipMove& m, int d) { return {m.insert, m.remove, d - m.kind}; }

}  // namespace

TEST(LegalMoves, TetrahedronBoundary) {
  const auto c = boundary_simplex(2);
  EXPECT_EQ(legal_moves(c, 0).size(), 4u);
  EXPECT_TRUE(legal_moves(c, 1).empty());
  EXPECT_TRUE(legal_moves(c, 2).empty());
  for (const auto& m : legal_moves(c, 0)) EXPECT_EQ(m.insert, Face{5});
}

TEST(LegalMoves, ZeroMoveAndItsReverse) {
  const auto c = boundary_simplex(2);
  const auto s = apply_move(c, {Face{1, 2, 3}, Face{5}, 0});
  EXPECT_EQ(f_vector(s).counts, (std::vector<std::int64_t>{5, 9, 6}));
  // Vertex 4 now also has a removable link {1,2,3}.
  const auto back = legal_moves(s, 2);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].remove, Face{5});
  EXPECT_EQ(back[1].insert, (Face{1, 2, 3}));
  EXPECT_EQ(apply_move(s, back[1]), c);
  EXPECT_EQ(apply_move(s, back[0]), c);
}

TEST(LegalMoves, NeighborlyTorusHasNoEdgeFlips) {
  // Every edge flip would insert an edge that already exists.
  EXPECT_TRUE(legal_moves(catalog_entry("csaszar-torus").complex, 1).empty());
  EXPECT_TRUE(legal_moves(catalog_entry("csaszar-torus").complex, 2).empty());
}

TEST(LegalMoves, MatchDefinitionOnSmallSphere) {
  // Oracle: an i-move is legal iff A is a face whose link is the boundary of
  // a simplex B with B not a face.
  auto c = boundary_simplex(2);
  c = stack(c, Face{1, 2, 3});
  c = stack(c, Face{1, 2, 4});
  for (int i = 1; i <= 2; ++i) {
    std::vector<FlipMove> expect;
    for (Face a : faces(c, 2 - i)) {
      const auto lk = link(c, a);
      Face b;
      for (Face g : lk.facets()) b = b | g;
      if (b.size() != i + 1 || static_cast<int>(lk.num_facets()) != i + 1) continue;
      if (c.has_face(b)) continue;
      expect.push_back({a, b, i});
    }
    EXPECT_EQ(legal_moves(c, i), expect) << "i=" << i;
  }
}

TEST(ApplyMove, IllegalMoves) {
  const auto c = catalog_entry("csaszar-torus").complex;
  auto kind = [&](FlipMove m) {
    try {
      apply_move(c, m);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind({Face{1, 2}, Face{3, 4}, 1}), ErrorKind::IllegalMove);
  EXPECT_EQ(kind({Face{1, 2, 3}, Face{3}, 0}), ErrorKind::IllegalMove);
  EXPECT_EQ(kind({Face{1, 2, 3}, Face{9}, 0}), ErrorKind::IllegalMove);
  EXPECT_EQ(kind({Face{1}, Face{2, 3}, 1}), ErrorKind::IllegalMove);
}

TEST(ApplyMove, EveryMoveHasAnInverse) {
  std::vector<Complex> cs{catalog_entry("RP3-11").complex, twisted_bundle(3)};
  for (const auto& c : cs)
    for (int i = 0; i <= c.dim(); ++i) {
      auto moves = legal_moves(c, i);
      if (moves.size() > 6) moves.resize(6);
      for (const auto& m : moves) {
        FlipComplex fc(c);
        fc.apply(m);
        fc.apply(inverse_move(m, c.dim()));
        EXPECT_EQ(fc.to_complex(), c) << m.str();
      }
    }
}

TEST(Trace, RoundTrip) {
  const std::vector<FlipMove> t{{Face{1, 2, 3}, Face{8}, 0}, {Face{2, 5}, Face{1, 7}, 1}, {Face{8}, Face{1, 2, 3}, 2}};
  std::istringstream in("# comment\n" + format_trace(t));
  EXPECT_EQ(parse_trace(in), t);
  EXPECT_EQ(parse_move("1: 2 5 -> 1 7").insert, (Face{1, 7}));
  for (const char* bad : {"1 2 5 -> 1 7", "x: 1 -> 2", "1: 1 2", "1: 1 q -> 2", "1: 0 -> 2"}) {
    try {
      parse_move(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
  }
}

TEST(Rng, SplitMix64Reference) {
  // First outputs for seed 0 of the reference splitmix64.
  SplitMix64 r(0);
  EXPECT_EQ(r.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(r.next(), 0x6e789e6aa1b965f4ULL);
  SplitMix64 s(5);
  for (int k = 0; k < 1000; ++k) EXPECT_LT(s.below(7), 7u);
}

TEST(Reduce, DeterministicAndReplayable) {
  auto c = twisted_bundle(2);
  for (int k = 0; k < 3; ++k) c = stack(c, c.facets()[static_cast<std::size_t>(5 * k)]);
  const auto a = reduce(c, 3, 4000);
  const auto b = reduce(c, 3, 4000);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(replay(c, a.trace), a.best);
  EXPECT_LE(f_vector(a.best).counts, f_vector(c).counts);
  EXPECT_EQ(homology(a.best), homology(c));
}

TEST(Reduce, StackedSphereCollapsesToSimplexBoundary) {
  auto c = boundary_simplex(3);
  for (int i = 0; i < 6; ++i) c = stack(c, c.facets()[static_cast<std::size_t>(2 * i)]);
  const auto r = reduce(c, 1, 10000);
  EXPECT_EQ(r.best, boundary_simplex(3));
}

TEST(Reduce, BundleReachesNineVertices) {
  // The twisted S^2-bundle over the circle has a 9-vertex triangulation.
  Schedule s;
  s.target_vertices = 9;
  const auto r = reduce_multi(twisted_bundle(3), {1, 2, 3, 4}, 200000, s, 2);
  EXPECT_TRUE(r.reached_target);
  EXPECT_EQ(f_vector(r.best).counts, (std::vector<std::int64_t>{9, 36, 54, 27}));
  EXPECT_EQ(homology(r.best), homology(twisted_bundle(3)));
}

TEST(Reduce, MultiIndependentOfThreads) {
  const auto c = twisted_bundle(2);
  const auto a = reduce_multi(c, {5, 6, 7}, 3000, {}, 1);
  const auto b = reduce_multi(c, {5, 6, 7}, 3000, {}, 3);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.trace, b.trace);
}

TEST(Replay, ReportsFailingStep) {
  const auto c = boundary_simplex(2);
  try {
    replay(c, {{Face{1, 2, 3}, Face{5}, 0}, {Face{1, 2}, Face{3, 4}, 1}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IllegalMove);
    EXPECT_NE(std::string(e.what()).find("step 2"), std::string::npos);
  }
}

TEST(RandomWalk, PreservesHomologyAndEuler) {
  for (const char* name : {"RP3-11", "L31-12"}) {
    const auto c0 = catalog_entry(name).complex;
    FlipComplex fc(c0);
    SplitMix64 rng(42);
    for (int step = 0; step < 300; ++step) {
      std::vector<FlipMove> all;
      for (int i = 0; i <= fc.dim(); ++i) {
        if (i == 0 && step % 4) continue;  // keep the vertex count bounded
        for (auto& m : fc.legal_of_kind(i)) all.push_back(m);
      }
      ASSERT_FALSE(all.empty());
      fc.apply(all[rng.below(all.size())]);
    }
    const auto c = fc.to_complex();
    EXPECT_EQ(homology(c), homology(c0)) << name;
    EXPECT_EQ(f_vector(c).euler, 0);
    EXPECT_EQ(is_pseudomanifold(c).status, Verdict::yes);
  }
}
