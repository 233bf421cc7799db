// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Set MW_ACCEPT_SKIP_N10=1 to skip the 10-vertex surface census.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "mw/bounds.hpp"
#include "mw/catalog.hpp"
#include "mw/census.hpp"
#include "mw/constructions.hpp"
#include "mw/flips.hpp"
#include "mw/invariants.hpp"
#include "mw/surface.hpp"

using namespace mw;

namespace {

using Clock = std::chrono::steady_clock;

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)), start_(Clock::now()) {}

  void check(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }

  void note(const std::string& s) { notes_.push_back(s); }

  bool finish() const {
    const double secs = std::chrono::duration<double>(Clock::now() - start_).count();
    std::cout << (failures_.empty() ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_;
    std::ostringstream t;
    t.precision(1);
    t << std::fixed << secs;
    std::cout << " (" << t.str() << " s)\n";
    for (const auto& n : notes_) std::cout << "    " << n << "\n";
    for (const auto& f : failures_) std::cout << "    mismatch: " << f << "\n";
    return failures_.empty();
  }

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  int id_;
  std::string title_;
  Clock::time_point start_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

HomologyVector hv(std::vector<HomologyGroup> g) { return HomologyVector{std::move(g)}; }
const HomologyGroup Z = make_group(1), O = make_group(0);

int worker_count() { return std::max(1u, std::min(16u, std::thread::hardware_concurrency())); }

std::string fstr(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

bool criterion_catalog() {
  Criterion c(1, "catalog verification");
  struct Want {
    const char* name;
    std::vector<std::int64_t> f;
    HomologyVector h;
  };
  const std::vector<Want> wants{
      {"RP3-11", {11, 51, 80, 40}, hv({Z, make_group(0, {2}), O, Z})},
      {"L31-12", {12, 66, 108, 54}, hv({Z, make_group(0, {3}), O, Z})},
      {"S2xS2-11", {11, 55, 150, 170, 68}, hv({Z, O, make_group(2), O, Z})},
      {"S3xS1-twisted-12", {12, 60, 120, 120, 48}, hv({Z, Z, O, make_group(0, {2}), O})},
      {"S3xS2-a-12", {12, 66, 220, 390, 336, 112}, hv({Z, O, Z, Z, O, Z})},
      {"S3xS3-a-13", {13, 78, 286, 715, 1014, 728, 208}, hv({Z, O, O, make_group(2), O, O, Z})},
      {"csaszar-torus", {7, 21, 14}, hv({Z, make_group(2), Z})},
  };
  for (const auto& w : wants) {
    const auto e = catalog_entry(w.name);
    const auto f = f_vector(e.complex);
    c.check(f.counts == w.f, std::string(w.name) + " f=" + f.str());
    c.check(homology(e.complex) == w.h, std::string(w.name) + " H=" + homology(e.complex).str());
    for (const auto& m : verify_catalog_entry(e)) c.check(false, std::string(w.name) + ": " + m);
  }
  const auto rp3 = catalog_entry("RP3-11").complex;
  std::map<BigInt, int> dets;
  for (const auto& d : as_link_determinants(rp3)) ++dets[d];
  c.check(dets == std::map<BigInt, int>{{BigInt(41616), 6}, {BigInt(12096), 4}, {BigInt(0), 1}}, "RP3-11 link determinants");
  c.check(automorphism_group(rp3).order == 48, "RP3-11 |Aut|");
  c.check(automorphism_group(catalog_entry("L31-12").complex).order == 6, "L31-12 |Aut|");
  c.check(f_vector(catalog_entry("S2xS2-11").complex).euler == 4, "S2xS2-11 chi");
  c.check(as_determinant(catalog_entry("S3xS2-a-12").complex) == BigInt("4471184572226676864"), "S3xS2-a-12 AS determinant");
  const auto s3s3 = catalog_entry("S3xS3-a-13").complex;
  c.check(is_k_neighborly(s3s3, 4), "S3xS3-a-13 4-neighborly");
  c.check(as_determinant(s3s3) == BigInt("745714154823444619853824"), "S3xS3-a-13 AS determinant");
  const auto torus = catalog_entry("csaszar-torus");
  c.check(is_k_neighborly(torus.complex, 2), "torus 2-neighborly");
  c.check(classify_surface(torus.complex) == SurfaceClass::from(true, 1), "torus classification");
  const auto r = realization_check(torus.complex, *torus.embedding);
  c.check(r.valid && r.exact, "torus realization: " + r.witness);
  c.check(c.elapsed() < 60, "runtime over one minute");
  return c.finish();
}

bool criterion_census() {
  Criterion c(2, "surface and sphere census");
  using Row = std::map<SurfaceClass, std::int64_t>;
  auto S = SurfaceClass::from;
  const std::map<int, Row> table{
      {4, {{S(true, 0), 1}}},
      {5, {{S(true, 0), 1}}},
      {6, {{S(true, 0), 2}, {S(false, 1), 1}}},
      {7, {{S(true, 0), 5}, {S(true, 1), 1}, {S(false, 1), 3}}},
      {8, {{S(true, 0), 14}, {S(true, 1), 7}, {S(false, 1), 16}, {S(false, 2), 6}}},
      {9, {{S(true, 0), 50}, {S(true, 1), 112}, {S(false, 1), 134}, {S(false, 2), 187}, {S(false, 3), 133},
           {S(false, 4), 37}, {S(false, 5), 2}}},
      {10, {{S(true, 0), 233}, {S(true, 1), 2109}, {S(true, 2), 865}, {S(true, 3), 20}, {S(false, 1), 1210},
            {S(false, 2), 4462}, {S(false, 3), 11784}, {S(false, 4), 13657}, {S(false, 5), 7050}, {S(false, 6), 1022},
            {S(false, 7), 14}}},
  };
  const bool skip10 = std::getenv("MW_ACCEPT_SKIP_N10") != nullptr;
  CensusOptions opt;
  opt.threads = worker_count();
  for (const auto& [n, want] : table) {
    if (n == 10 && skip10) {
      c.note("n=10 skipped (optional gate)");
      continue;
    }
    const auto t0 = Clock::now();
    const auto got = enumerate_surfaces(n, opt);
    c.check(got.counts == want, "surfaces n=" + std::to_string(n) + "\n" + census_lines(got));
    if (n >= 9) {
      std::ostringstream s;
      s.precision(1);
      s << std::fixed << "surfaces n=" << n << ": " << got.total() << " types in "
        << std::chrono::duration<double>(Clock::now() - t0).count() << " s";
      c.note(s.str());
    }
  }
  for (const auto& [n, want] : std::map<int, std::int64_t>{{11, 1249}, {12, 7595}}) {
    const auto got = enumerate_spheres(n);
    c.check(got == want, "spheres n=" + std::to_string(n) + ": " + std::to_string(got));
    c.note("spheres n=" + std::to_string(n) + ": " + std::to_string(got));
  }
  return c.finish();
}

/// Replays the trace and checks homology at ten evenly spaced checkpoints.
bool homology_along_trace(const Complex& start, const std::vector<FlipMove>& trace, const HomologyVector& want) {
  FlipComplex fc(start);
  const std::size_t step = std::max<std::size_t>(1, trace.size() / 10);
  for (std::size_t k = 0; k < trace.size(); ++k) {
    fc.apply(trace[k]);
    if ((k + 1) % step == 0 || k + 1 == trace.size())
      if (homology(fc.to_complex()) != want) return false;
  }
  return true;
}

bool criterion_flips() {
  Criterion c(3, "bistellar flip reduction");
  std::vector<std::uint64_t> seeds(16);
  for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = i + 1;
  {
    const auto start = product(boundary_simplex(2), boundary_simplex(2));
    const auto want = hv({Z, O, make_group(2), O, Z});
    c.check(start.num_vertices() == 16 && homology(start) == want, "S2xS2 product input");
    Schedule s;
    s.target_vertices = 12;
    const auto r = reduce_multi(start, seeds, 500000, s, worker_count());
    const auto f = f_vector(r.best);
    c.check(r.reached_target && f[0] <= 12, "S2xS2 best f=" + f.str());
    c.check(homology_along_trace(start, r.trace, want), "S2xS2 homology changed along the trace");
    c.check(replay(start, r.trace) == r.best, "S2xS2 replay");
    c.note("S2xS2: 16 -> " + std::to_string(f[0]) + " vertices, f=" + f.str() + ", " + std::to_string(r.stats.moves) + " moves");
  }
  {
    const auto start = twisted_bundle(3);
    Schedule s;
    s.target_vertices = 9;
    const auto r = reduce_multi(start, seeds, 500000, s, worker_count());
    const auto f = f_vector(r.best).counts;
    c.check(f == std::vector<std::int64_t>{9, 36, 54, 27}, "twisted bundle best f=" + fstr(f));
    c.check(homology_along_trace(start, r.trace, homology(start)), "twisted bundle homology changed along the trace");
    c.note("twisted bundle: 12 -> f=" + fstr(f) + ", " + std::to_string(r.stats.moves) + " moves");
  }
  c.check(c.elapsed() < 900, "runtime over 15 minutes");
  return c.finish();
}

bool criterion_bounds() {
  Criterion c(4, "bound suite");
  const std::map<std::string, std::string> names{{"RP3-11", "name=RP3"}, {"L31-12", "name=L31"}};
  for (const auto& e : catalog()) {
    TopologyHints h;
    if (const auto it = names.find(e.name); it != names.end()) h.set(it->second);
    const auto r = bound_report(e.complex, h);
    for (const auto& b : r.entries) c.check(!b.violated(), e.name + " violates " + b.id);
  }
  const auto torus = bound_report(catalog_entry("csaszar-torus").complex);
  c.check(torus.find("heawood")->sharp(), "Heawood not sharp at the 7-vertex torus");
  c.check(heawood_check(7, 0).sharp() && heawood_min_vertices(0) == 7, "Heawood at n=7, chi=0");

  // 9-vertex complex projective plane, represented by its numbers only.
  TopologyHints nonsphere;
  nonsphere.set("sphere=false");
  bool bk_sharp = false;
  for (const auto& b : brehm_kuehnel_bounds(4, nonsphere))
    if (b.id == "bk-nonsphere") bk_sharp = vertex_bound_check(9, b).sharp();
  c.check(bk_sharp, "Brehm-Kuehnel non-sphere bound not sharp at n=9, d=4");
  const auto cp2 = kuehnel_4d_check(9, 3);
  c.check(cp2.sharp && !cp2.sharp_but_excluded, "Kuehnel 4-dim at (9,3)");

  TopologyHints rp3;
  rp3.set("name=RP3");
  const auto w = bound_report(catalog_entry("RP3-11").complex, rp3).find("walkup-gamma");
  c.check(w && w->sharp() && w->rhs == 4 * 11 + 7, "Walkup gamma=7 not sharp at RP3-11");

  const auto k3 = kuehnel_4d_check(16, 24);
  c.check(k3.satisfied && k3.sharp, "Kuehnel 4-dim at (16,24)");
  const auto ten = kuehnel_4d_check(10, 4);
  c.check(ten.sharp_but_excluded, "Kuehnel 4-dim at (10,4) should be sharp-but-excluded");
  // Equality is not claimed for the 11-vertex S2xS2.
  const auto s22 = bound_report(catalog_entry("S2xS2-11").complex);
  c.check(!s22.find("kuehnel-4d")->sharp(), "Kuehnel 4-dim sharp at S2xS2-11");
  return c.finish();
}

bool criterion_properties() {
  Criterion c(5, "property suites");
  // Random flip walks.
  for (const char* name : {"csaszar-torus", "RP3-11", "L31-12", "S2xS2-11", "S3xS1-twisted-12"}) {
    const auto c0 = catalog_entry(name).complex;
    const auto h0 = homology(c0);
    const auto chi0 = f_vector(c0).euler;
    FlipComplex fc(c0);
    SplitMix64 rng(2024);
    bool ok = true;
    for (int step = 1; step <= 1000 && ok; ++step) {
      // Uniform kind among those with a legal move; stacking only while the
      // vertex count stays within four of the start.
      std::vector<std::vector<FlipMove>> by_kind;
      for (int i = 0; i <= fc.dim(); ++i) {
        if (i == 0 && fc.num_vertices() >= c0.num_vertices() + 4) continue;
        auto ms = fc.legal_of_kind(i);
        if (!ms.empty()) by_kind.push_back(std::move(ms));
      }
      if (by_kind.empty()) {
        ok = false;
        break;
      }
      const auto& ms = by_kind[rng.below(by_kind.size())];
      fc.apply(ms[rng.below(ms.size())]);
      if (step % 250 == 0) {
        const auto cur = fc.to_complex();
        ok = homology(cur) == h0 && f_vector(cur).euler == chi0 && is_pseudomanifold(cur).status == Verdict::yes;
      }
    }
    c.check(ok, std::string(name) + " random walk");
  }
  // Canonical form under relabelings.
  std::mt19937_64 rng(77);
  for (const auto& e : catalog()) {
    const auto cf = canonical_form(e.complex).complex;
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
      std::vector<int> p(static_cast<std::size_t>(e.complex.num_vertices()));
      std::iota(p.begin(), p.end(), 1);
      std::shuffle(p.begin(), p.end(), rng);
      ok = canonical_form(relabel(e.complex, p)).complex == cf;
    }
    c.check(ok, e.name + " canonical form changed under relabeling");
  }
  // Isomorphism separation: relabel, then one flip, then its reverse.
  const auto a = catalog_entry("S3xS2-a-12").complex;
  std::vector<int> p(12);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  const auto b = relabel(a, p);
  c.check(are_isomorphic(a, b), "relabeled S3xS2 not isomorphic");
  int variants = 0;
  for (int i = 0; i <= b.dim(); ++i) {
    auto ms = legal_moves(b, i);
    if (ms.size() > 5) ms.resize(5);
    for (const auto& m : ms) {
      FlipComplex fc(b);
      fc.apply(m);
      c.check(!are_isomorphic(a, fc.to_complex()), "one-flip variant compares equal: " + m.str());
      fc.apply({m.insert, m.remove, b.dim() - m.kind});
      c.check(are_isomorphic(a, fc.to_complex()), "reversed flip does not compare equal: " + m.str());
      ++variants;
    }
  }
  c.check(variants > 0, "no flip variants");
  c.note(std::to_string(variants) + " flip variants of S3xS2-a-12 checked");
  return c.finish();
}

}  // namespace

int main() {
  bool ok = true;
  for (auto* crit : {criterion_catalog, criterion_census, criterion_flips, criterion_bounds, criterion_properties}) {
    try {
      ok = crit() && ok;
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion: exception " << e.what() << "\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
