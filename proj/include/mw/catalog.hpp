#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mw/bigint.hpp"
#include "mw/catalog_data.hpp"
#include "mw/complex.hpp"
#include "mw/homology.hpp"
#include "mw/invariants.hpp"
#include "mw/io.hpp"
#include "mw/realization.hpp"

namespace mw {

/// A bundled triangulation with the values it is known to have.
struct CatalogEntry {
  std::string name;
  std::string file;  // file name inside the catalog directory
  std::string provenance;
  Complex complex;
  FVector expected_f;
  HomologyVector expected_homology;
  std::optional<BigInt> expected_as_determinant;
  /// (determinant, number of vertices) for the vertex links, when known.
  std::vector<std::pair<BigInt, int>> expected_link_determinants;
  std::optional<std::int64_t> expected_aut_order;
  std::vector<std::string> aut_generators;  // cycle notation
  std::string group_name;                   // recorded as printed, not checked
  int neighborly = 1;                       // k with every k-subset a face
  std::optional<Embedding> embedding;
};

namespace detail {

inline std::string catalog_text(const std::string& file) {
  if (const char* dir = std::getenv("MW_CATALOG_DIR"); dir && *dir) {
    std::ifstream in(std::string(dir) + "/" + file);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + std::string(dir) + "/" + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  for (const auto& f : kCatalogFiles)
    if (f.name == file) return std::string(f.text);
  throw Error(ErrorKind::InvalidArgument, "no bundled catalog file " + file);
}

/// First '# source:' comment of a catalog file.
inline std::string catalog_provenance(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("# source: ", 0) == 0) return line.substr(10);
  return {};
}

inline HomologyVector hv(std::vector<HomologyGroup> g) { return HomologyVector{std::move(g)}; }

}  // namespace detail

/// The seven bundled triangulations.  Data comes from the embedded copies of
/// catalog/*.tri, or from $MW_CATALOG_DIR when set.
inline std::vector<CatalogEntry> catalog() {
  using detail::hv;
  const auto Z = make_group(1), O = make_group(0);
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string file, std::vector<std::int64_t> f, HomologyVector h) -> CatalogEntry& {
    CatalogEntry e;
    e.name = std::move(name);
    e.file = std::move(file);
    const auto text = detail::catalog_text(e.file);
    e.provenance = detail::catalog_provenance(text);
    e.complex = parse_facets(text);
    e.expected_f = make_fvector(std::move(f));
    e.expected_homology = std::move(h);
    out.push_back(std::move(e));
    return out.back();
  };

  {
    auto& e = add("csaszar-torus", "csaszar-torus.tri", {7, 21, 14}, hv({Z, make_group(2), Z}));
    e.neighborly = 2;
    e.expected_aut_order = 42;
    std::istringstream coords(detail::catalog_text("csaszar-torus.coords"));
    e.embedding = parse_embedding(coords, 7);
  }
  {
    auto& e = add("RP3-11", "rp3-11.tri", {11, 51, 80, 40}, hv({Z, make_group(0, {2}), O, Z}));
    e.expected_link_determinants = {{BigInt(41616), 6}, {BigInt(12096), 4}, {BigInt(0), 1}};
    e.expected_aut_order = 48;
    e.aut_generators = {"(1,2,3,4,5,6)(7,8,9)", "(1,2)(3,6)(4,5)(7,9)", "(3,6)(7,9)(8,10)"};
    e.group_name = "2S4";
  }
  {
    auto& e = add("L31-12", "l31-12.tri", {12, 66, 108, 54}, hv({Z, make_group(0, {3}), O, Z}));
    e.neighborly = 2;
    e.expected_aut_order = 6;
    e.aut_generators = {"(1,2)(3,6)(4,5)(7,8)(10,11)", "(1,3,5)(2,4,6)(7,8,9)(10,11,12)"};
    e.group_name = "S3";
  }
  {
    auto& e = add("S2xS2-11", "s2xs2-11.tri", {11, 55, 150, 170, 68}, hv({Z, O, make_group(2), O, Z}));
    e.neighborly = 2;
  }
  add("S3xS1-twisted-12", "s3xs1-twisted-12.tri", {12, 60, 120, 120, 48}, hv({Z, Z, O, make_group(0, {2}), O}));
  {
    auto& e = add("S3xS2-a-12", "s3xs2-a-12.tri", {12, 66, 220, 390, 336, 112}, hv({Z, O, Z, Z, O, Z}));
    e.neighborly = 3;
    e.expected_as_determinant = BigInt("4471184572226676864");
  }
  {
    auto& e = add("S3xS3-a-13", "s3xs3-a-13.tri", {13, 78, 286, 715, 1014, 728, 208}, hv({Z, O, O, make_group(2), O, O, Z}));
    e.neighborly = 4;
    e.expected_as_determinant = BigInt("745714154823444619853824");
  }
  return out;
}

/// Looks up a catalog entry by name (case-sensitive); throws InvalidArgument.
inline CatalogEntry catalog_entry(const std::string& name) {
  for (auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorKind::InvalidArgument, "no catalog entry named " + name);
}

/// Recomputes every expected value of an entry; returns the mismatches.
inline std::vector<std::string> verify_catalog_entry(const CatalogEntry& e) {
  std::vector<std::string> bad;
  const Complex& c = e.complex;
  if (const auto f = f_vector(c); f != e.expected_f) bad.push_back("f-vector " + f.str() + " != " + e.expected_f.str());
  if (const auto h = homology(c); h != e.expected_homology)
    bad.push_back("homology " + h.str() + " != " + e.expected_homology.str());
  if (const int k = neighborliness(c); k != e.neighborly)
    bad.push_back(std::to_string(k) + "-neighborly, expected " + std::to_string(e.neighborly));
  if (e.expected_as_determinant)
    if (const auto det = as_determinant(c); det != *e.expected_as_determinant)
      bad.push_back("AS determinant " + det.str() + " != " + e.expected_as_determinant->str());
  if (!e.expected_link_determinants.empty()) {
    std::vector<std::pair<BigInt, int>> got;
    for (const auto& det : as_link_determinants(c)) {
      auto it = std::find_if(got.begin(), got.end(), [&](const auto& p) { return p.first == det; });
      if (it == got.end()) got.emplace_back(det, 1);
      else ++it->second;
    }
    auto want = e.expected_link_determinants;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) bad.push_back("link determinant multiset differs");
  }
  if (e.expected_aut_order || !e.aut_generators.empty()) {
    const auto g = automorphism_group(c);
    if (e.expected_aut_order && g.order != *e.expected_aut_order)
      bad.push_back("automorphism group order " + g.order.str() + " != " + std::to_string(*e.expected_aut_order));
    for (const auto& gen : e.aut_generators)
      if (!is_automorphism(c, parse_cycles(gen, c.num_vertices()))) bad.push_back("not an automorphism: " + gen);
  }
  if (e.embedding)
    if (const auto r = realization_check(c, *e.embedding); !r.valid) bad.push_back("realization: " + r.witness);
  return bad;
}

}  // namespace mw
