#pragma once

// Verbatim copies of the files in catalog/; a unit test keeps them in sync.

#include <array>
#include <string_view>

namespace mw::detail {

struct CatalogFile {
  std::string_view name;
  std::string_view text;
};

inline constexpr std::array<CatalogFile, 8> kCatalogFiles{{
    {"csaszar-torus.coords", R"mwcat(# source: Csaszar's straight-line embedding of the 7-vertex torus
1 3 -3 0
2 -3 3 0
3 -3 -3 1
4 3 3 1
5 -1 -2 3
6 1 2 3
7 0 0 15
)mwcat"},
    {"csaszar-torus.tri", R"mwcat(# source: Csaszar's 7-vertex torus (Moebius torus), 14 triangles
# straight-line coordinates in csaszar-torus.coords
2 7
1 2 3
1 2 4
1 3 7
1 4 5
1 5 6
1 6 7
2 3 6
2 4 7
2 5 6
2 5 7
3 4 5
3 4 6
3 5 7
4 6 7
)mwcat"},
    {"l31-12.tri", R"mwcat(# source: 12-vertex lens space L(3,1), found by bistellar flips from Brehm-Swiatkowski S_{2.5}
3 12
1 2 3 4
1 2 3 10
1 2 4 9
1 2 5 6
1 2 5 9
1 2 6 11
1 2 10 11
1 3 4 7
1 3 7 8
1 3 8 10
1 4 7 9
1 5 6 12
1 5 7 9
1 5 7 12
1 6 11 12
1 7 8 12
1 8 10 11
1 8 11 12
2 3 4 12
2 3 10 12
2 4 8 9
2 4 8 12
2 5 6 8
2 5 8 9
2 6 7 8
2 6 7 11
2 7 8 12
2 7 10 11
2 7 10 12
3 4 5 6
3 4 5 11
3 4 6 7
3 4 11 12
3 5 6 8
3 5 8 9
3 5 9 11
3 6 7 8
3 8 9 10
3 9 10 12
3 9 11 12
4 5 6 10
4 5 10 11
4 6 7 9
4 6 9 10
4 8 9 10
4 8 10 11
4 8 11 12
5 6 10 12
5 7 9 11
5 7 10 11
5 7 10 12
6 7 9 11
6 9 10 12
6 9 11 12
)mwcat"},
    {"rp3-11.tri", R"mwcat(# source: Walkup's 11-vertex RP^3, isomorphic to Brehm-Swiatkowski S_{2.4}
3 11
1 2 3 7
1 2 3 11
1 2 6 9
1 2 6 11
1 2 7 9
1 3 5 10
1 3 5 11
1 3 7 10
1 4 7 9
1 4 7 10
1 4 8 9
1 4 8 10
1 5 6 8
1 5 6 11
1 5 8 10
1 6 8 9
2 3 4 8
2 3 4 11
2 3 7 8
2 4 6 10
2 4 6 11
2 4 8 10
2 5 7 8
2 5 7 9
2 5 8 10
2 5 9 10
2 6 9 10
3 4 5 9
3 4 5 11
3 4 8 9
3 5 9 10
3 6 7 8
3 6 7 10
3 6 8 9
3 6 9 10
4 5 6 7
4 5 6 11
4 5 7 9
4 6 7 10
5 6 7 8
)mwcat"},
    {"s2xs2-11.tri", R"mwcat(# source: 11-vertex S^2xS^2, found by bistellar flips from the 16-vertex product
# letters a,b,c written as 10,11,12
4 11
1 2 3 4 6
1 2 3 4 7
1 2 3 6 9
1 2 3 7 9
1 2 4 5 8
1 2 4 5 9
1 2 4 6 8
1 2 4 7 9
1 2 5 6 8
1 2 5 6 9
1 3 4 6 7
1 3 5 6 7
1 3 5 6 9
1 3 5 7 10
1 3 5 9 11
1 3 5 10 11
1 3 7 9 10
1 3 9 10 11
1 4 5 8 10
1 4 5 9 11
1 4 5 10 11
1 4 6 7 11
1 4 6 8 10
1 4 6 10 11
1 4 7 9 11
1 5 6 7 8
1 5 7 8 10
1 6 7 8 11
1 6 8 10 11
1 7 8 10 11
1 7 9 10 11
2 3 4 6 8
2 3 4 7 8
2 3 5 7 10
2 3 5 7 11
2 3 5 10 11
2 3 6 8 10
2 3 6 9 10
2 3 7 8 11
2 3 7 9 10
2 3 8 10 11
2 4 5 8 9
2 4 7 8 9
2 5 6 8 11
2 5 6 9 10
2 5 6 10 11
2 5 7 8 9
2 5 7 8 11
2 5 7 9 10
2 6 8 10 11
3 4 6 7 11
3 4 6 8 10
3 4 6 9 10
3 4 6 9 11
3 4 7 8 11
3 4 8 9 10
3 4 8 9 11
3 5 6 7 11
3 5 6 9 11
3 8 9 10 11
4 5 6 9 10
4 5 6 9 11
4 5 6 10 11
4 5 8 9 10
4 7 8 9 11
5 6 7 8 11
5 7 8 9 10
7 8 9 10 11
)mwcat"},
    {"s3xs1-twisted-12.tri", R"mwcat(# source: 12-vertex twisted S^3-bundle over S^1, f = (12,60,120,120,48)
# letters a,b,c written as 10,11,12
4 12
1 2 6 7 8
1 2 6 7 9
1 2 6 8 10
1 2 6 9 10
1 2 7 8 12
1 2 7 9 10
1 2 7 10 12
1 2 8 10 12
1 3 4 8 11
1 3 4 8 12
1 3 4 11 12
1 3 5 8 11
1 3 5 8 12
1 3 5 11 12
1 4 8 11 12
1 5 7 8 10
1 5 7 8 11
1 5 7 10 12
1 5 7 11 12
1 5 8 10 12
1 6 7 8 10
1 6 7 9 10
1 7 8 11 12
2 3 4 6 7
2 3 4 6 11
2 3 4 7 9
2 3 4 9 11
2 3 6 7 10
2 3 6 9 10
2 3 6 9 11
2 3 7 9 10
2 4 6 7 9
2 4 6 9 11
2 6 7 8 10
2 7 8 10 12
3 4 6 7 9
3 4 6 9 12
3 4 6 11 12
3 4 8 9 11
3 4 8 9 12
3 5 8 11 12
3 6 7 9 10
3 6 9 11 12
3 8 9 11 12
4 6 9 11 12
4 8 9 11 12
5 7 8 10 12
5 7 8 11 12
)mwcat"},
    {"s3xs2-a-12.tri", R"mwcat(# source: 12-vertex S^3xS^2, found by bistellar flips
# letters a,b,c written as 10,11,12
# facet 2 3 5 6 8 10 is the unique facet closing the ridges left open by the other 111
5 12
1 2 3 4 6 10
1 2 3 4 6 11
1 2 3 4 7 8
1 2 3 4 7 11
1 2 3 4 8 10
1 2 3 5 7 11
1 2 3 5 7 12
1 2 3 5 9 11
1 2 3 5 9 12
1 2 3 6 10 11
1 2 3 7 8 12
1 2 3 8 10 12
1 2 3 9 10 11
1 2 3 9 10 12
1 2 4 6 7 8
1 2 4 6 7 11
1 2 4 6 8 9
1 2 4 6 9 10
1 2 4 8 9 10
1 2 5 7 11 12
1 2 5 9 11 12
1 2 6 7 8 12
1 2 6 7 11 12
1 2 6 8 9 12
1 2 6 9 10 11
1 2 6 9 11 12
1 2 8 9 10 12
1 3 4 6 7 8
1 3 4 6 7 11
1 3 4 6 8 10
1 3 5 7 9 11
1 3 5 7 9 12
1 3 6 7 8 12
1 3 6 7 11 12
1 3 6 8 10 12
1 3 6 10 11 12
1 3 7 9 10 11
1 3 7 9 10 12
1 3 7 10 11 12
1 4 5 6 8 9
1 4 5 6 8 10
1 4 5 6 9 10
1 4 5 8 9 12
1 4 5 8 10 12
1 4 5 9 10 12
1 4 8 9 10 12
1 5 6 8 9 11
1 5 6 8 10 11
1 5 6 9 10 11
1 5 7 9 10 11
1 5 7 9 10 12
1 5 7 10 11 12
1 5 8 9 11 12
1 5 8 10 11 12
1 6 8 9 11 12
1 6 8 10 11 12
2 3 4 5 6 10
2 3 4 5 6 12
2 3 4 5 8 10
2 3 4 5 8 11
2 3 4 5 11 12
2 3 4 6 11 12
2 3 4 7 8 11
2 3 5 6 7 8
2 3 5 6 7 12
2 3 5 6 8 10
2 3 5 7 8 11
2 3 5 9 11 12
2 3 6 7 8 12
2 3 6 8 10 12
2 3 6 10 11 12
2 3 9 10 11 12
2 4 5 6 7 10
2 4 5 6 7 12
2 4 5 7 8 10
2 4 5 7 8 11
2 4 5 7 11 12
2 4 6 7 8 9
2 4 6 7 9 10
2 4 6 7 11 12
2 4 7 8 9 10
2 5 6 7 8 10
2 6 7 8 9 10
2 6 8 9 10 12
2 6 9 10 11 12
3 4 5 6 7 9
3 4 5 6 7 12
3 4 5 6 8 9
3 4 5 6 8 10
3 4 5 7 9 12
3 4 5 8 9 11
3 4 5 9 11 12
3 4 6 7 8 9
3 4 6 7 11 12
3 4 7 8 9 11
3 4 7 9 11 12
3 5 6 7 8 9
3 5 7 8 9 11
3 7 9 10 11 12
4 5 6 7 9 10
4 5 7 8 10 11
4 5 7 9 10 12
4 5 7 10 11 12
4 5 8 9 11 12
4 5 8 10 11 12
4 7 8 9 10 11
4 7 9 10 11 12
4 8 9 10 11 12
5 6 7 8 9 10
5 6 8 9 10 11
5 7 8 9 10 11
6 8 9 10 11 12
)mwcat"},
    {"s3xs3-a-13.tri", R"mwcat(# source: 13-vertex S^3xS^3, 4-neighborly
# letters a,b,c,d written as 10,11,12,13
6 13
1 2 3 4 5 6 12
1 2 3 4 5 6 13
1 2 3 4 5 10 11
1 2 3 4 5 10 12
1 2 3 4 5 11 13
1 2 3 4 6 12 13
1 2 3 4 7 9 10
1 2 3 4 7 9 13
1 2 3 4 7 10 13
1 2 3 4 8 10 11
1 2 3 4 8 10 13
1 2 3 4 8 11 13
1 2 3 4 9 10 12
1 2 3 4 9 12 13
1 2 3 5 6 11 12
1 2 3 5 6 11 13
1 2 3 5 10 11 12
1 2 3 6 11 12 13
1 2 3 7 9 10 13
1 2 3 8 9 10 11
1 2 3 8 9 10 13
1 2 3 8 9 11 13
1 2 3 9 10 11 12
1 2 3 9 11 12 13
1 2 4 5 6 7 8
1 2 4 5 6 7 11
1 2 4 5 6 8 9
1 2 4 5 6 9 10
1 2 4 5 6 10 12
1 2 4 5 6 11 13
1 2 4 5 7 8 9
1 2 4 5 7 9 10
1 2 4 5 7 10 11
1 2 4 6 7 8 11
1 2 4 6 8 9 11
1 2 4 6 9 10 12
1 2 4 6 9 11 13
1 2 4 6 9 12 13
1 2 4 7 8 9 13
1 2 4 7 8 10 11
1 2 4 7 8 10 13
1 2 4 8 9 11 13
1 2 5 6 7 8 12
1 2 5 6 7 11 12
1 2 5 6 8 9 10
1 2 5 6 8 10 12
1 2 5 7 8 9 10
1 2 5 7 8 10 12
1 2 5 7 10 11 12
1 2 6 7 8 10 11
1 2 6 7 8 10 12
1 2 6 7 10 11 12
1 2 6 8 9 10 11
1 2 6 9 10 11 12
1 2 6 9 11 12 13
1 2 7 8 9 10 13
1 3 4 5 6 7 9
1 3 4 5 6 7 13
1 3 4 5 6 9 10
1 3 4 5 6 10 12
1 3 4 5 7 9 10
1 3 4 5 7 10 13
1 3 4 5 10 11 13
1 3 4 6 7 9 12
1 3 4 6 7 12 13
1 3 4 6 9 10 12
1 3 4 7 9 12 13
1 3 4 8 10 11 13
1 3 5 6 7 8 9
1 3 5 6 7 8 12
1 3 5 6 7 11 12
1 3 5 6 7 11 13
1 3 5 6 8 9 10
1 3 5 6 8 10 12
1 3 5 7 8 9 12
1 3 5 7 9 10 13
1 3 5 7 9 11 12
1 3 5 7 9 11 13
1 3 5 8 9 10 13
1 3 5 8 9 11 12
1 3 5 8 9 11 13
1 3 5 8 10 11 12
1 3 5 8 10 11 13
1 3 6 7 8 9 12
1 3 6 7 11 12 13
1 3 6 8 9 10 12
1 3 7 9 11 12 13
1 3 8 9 10 11 12
1 4 5 6 7 8 9
1 4 5 6 7 11 13
1 4 5 7 10 11 13
1 4 6 7 8 9 12
1 4 6 7 8 11 13
1 4 6 7 8 12 13
1 4 6 8 9 11 12
1 4 6 8 11 12 13
1 4 6 9 11 12 13
1 4 7 8 9 12 13
1 4 7 8 10 11 13
1 4 8 9 11 12 13
1 5 7 8 9 10 13
1 5 7 8 9 12 13
1 5 7 8 10 12 13
1 5 7 9 11 12 13
1 5 7 10 11 12 13
1 5 8 9 11 12 13
1 5 8 10 11 12 13
1 6 7 8 10 11 13
1 6 7 8 10 12 13
1 6 7 10 11 12 13
1 6 8 9 10 11 12
1 6 8 10 11 12 13
2 3 4 5 6 12 13
2 3 4 5 8 11 12
2 3 4 5 8 11 13
2 3 4 5 8 12 13
2 3 4 5 10 11 12
2 3 4 7 8 10 11
2 3 4 7 8 10 13
2 3 4 7 8 11 12
2 3 4 7 8 12 13
2 3 4 7 9 10 12
2 3 4 7 9 12 13
2 3 4 7 10 11 12
2 3 5 6 7 8 11
2 3 5 6 7 8 12
2 3 5 6 7 11 12
2 3 5 6 8 9 11
2 3 5 6 8 9 13
2 3 5 6 8 12 13
2 3 5 6 9 11 13
2 3 5 7 8 11 12
2 3 5 8 9 11 13
2 3 6 7 8 10 11
2 3 6 7 8 10 13
2 3 6 7 8 12 13
2 3 6 7 9 10 11
2 3 6 7 9 10 13
2 3 6 7 9 11 13
2 3 6 7 11 12 13
2 3 6 8 9 10 11
2 3 6 8 9 10 13
2 3 7 9 10 11 12
2 3 7 9 11 12 13
2 4 5 6 7 8 11
2 4 5 6 8 9 11
2 4 5 6 9 10 12
2 4 5 6 9 11 13
2 4 5 6 9 12 13
2 4 5 7 8 9 12
2 4 5 7 8 11 12
2 4 5 7 9 10 12
2 4 5 7 10 11 12
2 4 5 8 9 11 13
2 4 5 8 9 12 13
2 4 7 8 9 12 13
2 5 6 8 9 10 13
2 5 6 8 10 12 13
2 5 6 9 10 12 13
2 5 7 8 9 10 13
2 5 7 8 9 12 13
2 5 7 8 10 12 13
2 5 7 9 10 12 13
2 6 7 8 10 12 13
2 6 7 9 10 11 13
2 6 7 10 11 12 13
2 6 9 10 11 12 13
2 7 9 10 11 12 13
3 4 5 6 7 9 10
3 4 5 6 7 10 13
3 4 5 6 10 12 13
3 4 5 8 10 11 12
3 4 5 8 10 11 13
3 4 5 8 10 12 13
3 4 6 7 8 9 11
3 4 6 7 8 9 12
3 4 6 7 8 10 11
3 4 6 7 8 10 13
3 4 6 7 8 12 13
3 4 6 7 9 10 11
3 4 6 8 9 10 11
3 4 6 8 9 10 12
3 4 6 8 10 12 13
3 4 7 8 9 11 12
3 4 7 9 10 11 12
3 4 8 9 10 11 12
3 5 6 7 8 9 11
3 5 6 7 9 10 13
3 5 6 7 9 11 13
3 5 6 8 9 10 13
3 5 6 8 10 12 13
3 5 7 8 9 11 12
4 5 6 7 8 9 11
4 5 6 7 9 10 11
4 5 6 7 10 11 13
4 5 6 9 10 11 13
4 5 6 9 10 12 13
4 5 7 8 9 11 12
4 5 7 9 10 11 12
4 5 8 9 11 12 13
4 5 8 10 11 12 13
4 5 9 10 11 12 13
4 6 7 8 10 11 13
4 6 8 9 10 11 12
4 6 8 10 11 12 13
4 6 9 10 11 12 13
5 6 7 9 10 11 13
5 7 9 10 11 12 13
)mwcat"},
}};

}  // namespace mw::detail
