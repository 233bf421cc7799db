#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mw/catalog.hpp"
#include "mw/constructions.hpp"
#include "mw/io.hpp"
#include "mw/realization.hpp"
#include "test_util.hpp"

using namespace mw;

namespace {

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_facets(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Embedding embed(const std::string& text, int n) {
  std::istringstream in(text);
  return parse_embedding(in, n);
}

const char* kTetra = "1 0 0 0\n2 1 0 0\n3 0 1 0\n4 0 0 1\n";

}  // namespace

TEST(Facets, RoundTrip) {
  for (const auto& e : catalog()) {
    const auto text = write_facets(e.complex);
    EXPECT_EQ(parse_facets(text), e.complex) << e.name;
    EXPECT_EQ(write_facets(parse_facets(text)), text) << e.name;
  }
}

TEST(Facets, LettersCommentsAndBlankLines) {
  const auto c = parse_facets("# four triangles\n2 4\n\n1 2 3\n1 2 4\n  1 3 4\n2 3 4 \n");
  EXPECT_EQ(c, boundary_simplex(2));
  const auto big = parse_facets("1 11\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 a\na b\n1 b\n");
  EXPECT_EQ(big, cycle(11));
}

TEST(Facets, ParseErrors) {
  EXPECT_EQ(parse_error_kind(""), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("2\n1 2 3\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("2 4\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("2 4\n1 2\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("2 4\n1 2 x3\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("2 4\n1 2 5\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("2 5\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n"), ErrorKind::ParseError);
  try {
    parse_facets("2 3\n1 2 3\n1 2 2\n");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
}

TEST(Facets, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "mw_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "t.tri").string();
  write_facet_file(catalog_entry("L31-12").complex, path);
  EXPECT_EQ(read_facet_file(path), catalog_entry("L31-12").complex);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_facet_file((dir / "missing.tri").string()), Error);
}

TEST(Catalog, EmbeddedCopiesMatchFiles) {
  const std::filesystem::path dir = MW_SOURCE_CATALOG_DIR;
  std::size_t seen = 0;
  for (const auto& f : detail::kCatalogFiles) {
    EXPECT_EQ(std::string(f.text), slurp(dir / std::string(f.name))) << f.name;
    ++seen;
  }
  std::size_t on_disk = 0;
  for (const auto& ent : std::filesystem::directory_iterator(dir)) on_disk += ent.is_regular_file();
  EXPECT_EQ(seen, on_disk);
}

TEST(Catalog, EveryEntryVerifies) {
  for (const auto& e : catalog()) {
    EXPECT_TRUE(verify_catalog_entry(e).empty()) << e.name;
    EXPECT_FALSE(e.provenance.empty()) << e.name;
  }
  EXPECT_THROW(catalog_entry("nope"), Error);
}

TEST(Catalog, DirectoryOverride) {
  const auto dir = std::filesystem::temp_directory_path() / "mw_catalog_override";
  std::filesystem::create_directories(dir);
  for (const auto& f : detail::kCatalogFiles) std::ofstream(dir / std::string(f.name)) << f.text;
  // Swap in a different complex so the override is observable.
  std::ofstream(dir / "csaszar-torus.tri") << write_facets(mwtest::rp2_6());
  ::setenv("MW_CATALOG_DIR", dir.c_str(), 1);
  try {
    const auto e = catalog_entry("csaszar-torus");
    EXPECT_EQ(e.complex, mwtest::rp2_6());
  } catch (const Error& err) {
    ADD_FAILURE() << err.what();
  }
  ::setenv("MW_CATALOG_DIR", (dir / "absent").c_str(), 1);
  EXPECT_THROW(catalog(), Error);
  ::unsetenv("MW_CATALOG_DIR");
  std::filesystem::remove_all(dir);
  EXPECT_EQ(catalog_entry("csaszar-torus").complex.num_vertices(), 7);
}

TEST(Coordinates, Formats) {
  bool inexact = false;
  EXPECT_EQ(detail::parse_coordinate("-3", 1, inexact), Rational(-3));
  EXPECT_EQ(detail::parse_coordinate("7/2", 1, inexact), Rational(7, 2));
  EXPECT_FALSE(inexact);
  EXPECT_EQ(detail::parse_coordinate("1.25", 1, inexact), Rational(5, 4));
  EXPECT_TRUE(inexact);
  EXPECT_EQ(detail::parse_coordinate("-2e-1", 1, inexact), Rational(-1, 5));
  for (const char* bad : {"", "1/0", "1..2", "abc", "1e", "3x"}) EXPECT_THROW(detail::parse_coordinate(bad, 1, inexact), Error) << bad;
}

TEST(Realization, Tetrahedron) {
  const auto r = realization_check(boundary_simplex(2), embed(kTetra, 4));
  EXPECT_TRUE(r.valid) << r.witness;
  EXPECT_TRUE(r.exact);
  const auto d = realization_check(boundary_simplex(2), embed("1 0.0 0 0\n2 1 0 0\n3 0 1 0\n4 0 0 1\n", 4));
  EXPECT_TRUE(d.valid);
  EXPECT_FALSE(d.exact);
}

TEST(Realization, Csaszar) {
  const auto e = catalog_entry("csaszar-torus");
  ASSERT_TRUE(e.embedding);
  const auto r = realization_check(e.complex, *e.embedding);
  EXPECT_TRUE(r.valid) << r.witness;
  EXPECT_TRUE(r.exact);
  // Flattening vertex 7 onto the xy-plane introduces an intersection.
  auto moved = *e.embedding;
  moved.points[6][2] = 0;
  EXPECT_FALSE(realization_check(e.complex, moved).valid);
}

TEST(Realization, Failures) {
  const auto all_zero = embed("1 0 0 0\n2 0 0 0\n3 0 0 0\n4 0 0 0\n", 4);
  const auto r = realization_check(boundary_simplex(2), all_zero);
  EXPECT_FALSE(r.valid);
  EXPECT_NE(r.witness.find("degenerate"), std::string::npos);
  // Octahedron boundary; lifting apex 6 above the top pyramid makes
  // triangle {3,4,6} pierce {1,2,5}.
  const auto oct = suspension(cycle(4));
  EXPECT_TRUE(realization_check(oct, embed("1 1 0 0\n2 0 1 0\n3 -1 0 0\n4 0 -1 0\n5 0 0 1\n6 0 0 -1\n", 6)).valid);
  EXPECT_FALSE(realization_check(oct, embed("1 1 0 0\n2 0 1 0\n3 -1 0 0\n4 0 -1 0\n5 0 0 1\n6 1/2 1/2 1\n", 6)).valid);
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind([] { embed("1 0 0 0\n2 1 0 0\n", 4); }), ErrorKind::IncompleteEmbedding);
  EXPECT_EQ(kind([] { embed("1 0 0\n", 1); }), ErrorKind::ParseError);
  EXPECT_EQ(kind([] { embed("9 0 0 0\n", 1); }), ErrorKind::ParseError);
  EXPECT_EQ(kind([] { realization_check(boundary_simplex(3), embed("1 0 0 0\n2 1 0 0\n3 0 1 0\n4 0 0 1\n5 1 1 1\n", 5)); }),
            ErrorKind::WrongDimension);
}
