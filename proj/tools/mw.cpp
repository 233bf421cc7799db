// mw: command-line front end for the manifold workbench.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 budget or cap exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mw/bounds.hpp"
#include "mw/catalog.hpp"
#include "mw/census.hpp"
#include "mw/complex.hpp"
#include "mw/constructions.hpp"
#include "mw/flips.hpp"
#include "mw/homology.hpp"
#include "mw/invariants.hpp"
#include "mw/io.hpp"
#include "mw/manifold.hpp"
#include "mw/realization.hpp"
#include "mw/surface.hpp"

namespace {

constexpr int kOk = 0, kFailed = 1, kInputError = 2, kBudget = 3;

struct Options {
  std::string in, in2, out, trace, coords, format = "text", facet, facet2, mode;
  std::vector<std::uint64_t> seeds;
  std::int64_t budget = 200000;
  int threads = 1, cap = 0, n = 0, dim = 0, target = 0, field = 0;
  std::vector<std::string> hints;
  bool spheres = false, orientable = false, links = false;
};

mw::Complex load(const std::string& path) {
  if (path.empty()) throw mw::Error(mw::ErrorKind::InvalidArgument, "--in is required");
  if (path == "-") return mw::parse_facets(std::cin);
  return mw::read_facet_file(path);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw mw::Error(mw::ErrorKind::InvalidArgument, "cannot write " + out);
  f << text;
}

mw::Face parse_face(const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream in(t);
  std::vector<int> vs;
  for (int v; in >> v;) vs.push_back(v);
  if (vs.empty() || !in.eof()) throw mw::Error(mw::ErrorKind::InvalidArgument, "bad face '" + s + "'");
  for (int v : vs)
    if (v < 1 || v > mw::kMaxVertices) throw mw::Error(mw::ErrorKind::InvalidArgument, "bad label in '" + s + "'");
  return mw::Face(std::span<const int>(vs));
}

/// `key: value` lines, or `key=value` with --format kv.
class Report {
 public:
  explicit Report(bool kv) : kv_(kv) {}
  void add(const std::string& key, const std::string& value) { out_ += key + (kv_ ? "=" : ": ") + value + "\n"; }
  const std::string& str() const { return out_; }

 private:
  bool kv_;
  std::string out_;
};

std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int cmd_info(const Options& o) {
  const auto c = load(o.in);
  Report r(o.format == "kv");
  r.add("dim", std::to_string(c.dim()));
  r.add("vertices", std::to_string(c.num_vertices()));
  r.add("facets", std::to_string(c.num_facets()));
  const auto f = mw::f_vector(c);
  r.add("f", f.str());
  r.add("euler", std::to_string(f.euler));
  r.add("neighborly", std::to_string(mw::neighborliness(c)));
  const auto pm = mw::is_pseudomanifold(c);
  r.add("pseudomanifold", mw::to_string(pm.status));
  if (pm) {
    r.add("orientable", mw::orientability(c) == mw::Orientability::orientable ? "yes" : "no");
    r.add("homology", mw::homology(c).str());
    if (mw::is_closed_surface(c)) r.add("surface", mw::classify_surface(c).name());
  }
  emit(r.str(), o.out);
  return kOk;
}

int cmd_fvector(const Options& o) {
  emit(mw::f_vector(load(o.in)).str() + "\n", o.out);
  return kOk;
}

int cmd_homology(const Options& o) {
  const auto c = load(o.in);
  Report r(o.format == "kv");
  r.add("homology", mw::homology(c).str());
  r.add(o.field ? "betti_F" + std::to_string(o.field) : "betti_Q", join_ints(mw::betti(c, o.field).ranks));
  emit(r.str(), o.out);
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.mode == "catalog") {
    int failures = 0;
    for (const auto& e : mw::catalog()) {
      const auto bad = mw::verify_catalog_entry(e);
      std::cout << e.name << ": " << (bad.empty() ? "ok" : "FAILED") << "\n";
      for (const auto& b : bad) std::cout << "  " << b << "\n";
      failures += !bad.empty();
    }
    return failures ? kFailed : kOk;
  }
  const auto c = load(o.in);
  const auto v = o.mode == "pseudomanifold" ? mw::is_pseudomanifold(c) : mw::is_combinatorial_manifold(c, o.budget);
  std::cout << o.mode << ": " << mw::to_string(v.status);
  if (!v.witness.empty()) std::cout << " (" << v.witness << ")";
  std::cout << "\n";
  if (v.status == mw::Verdict::yes) return kOk;
  return v.status == mw::Verdict::no ? kFailed : kBudget;
}

int cmd_reduce(const Options& o) {
  const auto c = load(o.in);
  mw::Schedule sched;
  sched.target_vertices = o.target;
  const auto seeds = o.seeds.empty() ? std::vector<std::uint64_t>{1} : o.seeds;
  const auto r = mw::reduce_multi(c, seeds, o.budget, sched, o.threads);
  emit(mw::write_facets(r.best), o.out);
  std::string trace_path = o.trace;
  if (trace_path.empty() && !o.out.empty() && o.out != "-") trace_path = o.out + ".trace";
  if (!trace_path.empty()) emit(mw::format_trace(r.trace), trace_path);
  std::cerr << "f = " << mw::f_vector(r.best).str() << " after " << r.stats.moves << " moves (best at move "
            << r.stats.best_at_move << ", " << r.trace.size() << " in trace)\n";
  if (o.target && !r.reached_target) {
    std::cerr << "target of " << o.target << " vertices not reached\n";
    return kBudget;
  }
  return kOk;
}

int cmd_construct(const Options& o) {
  mw::Complex c;
  if (o.mode == "boundary") {
    c = mw::boundary_simplex(o.dim);
  } else if (o.mode == "bundle") {
    c = o.orientable ? mw::orientable_bundle(o.dim) : mw::twisted_bundle(o.dim);
  } else if (o.mode == "product") {
    c = mw::product(load(o.in), load(o.in2));
  } else if (o.mode == "join") {
    c = mw::join(load(o.in), load(o.in2));
  } else if (o.mode == "sum") {
    const auto a = load(o.in), b = load(o.in2);
    const mw::Face fa = o.facet.empty() ? a.facets().front() : parse_face(o.facet);
    const mw::Face fb = o.facet2.empty() ? b.facets().front() : parse_face(o.facet2);
    c = mw::connected_sum(a, fa, b, fb);
  } else if (o.mode == "stack") {
    const auto a = load(o.in);
    c = mw::stack(a, o.facet.empty() ? a.facets().front() : parse_face(o.facet));
  } else {
    throw mw::Error(mw::ErrorKind::InvalidArgument, "unknown construction '" + o.mode + "'");
  }
  emit(mw::write_facets(c), o.out);
  return kOk;
}

int cmd_iso(const Options& o) {
  const bool iso = mw::are_isomorphic(load(o.in), load(o.in2));
  std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? kOk : kFailed;
}

int cmd_auto(const Options& o) {
  const auto g = mw::automorphism_group(load(o.in));
  std::string s = "order: " + g.order.str() + "\n";
  for (const auto& p : g.generators) s += "generator: " + mw::cycle_string(p) + "\n";
  emit(s, o.out);
  return kOk;
}

int cmd_det(const Options& o) {
  const auto c = load(o.in);
  std::string s = "det: " + mw::as_determinant(c).str() + "\n";
  if (o.links) {
    const auto dets = mw::as_link_determinants(c);
    for (std::size_t v = 0; v < dets.size(); ++v) s += "link " + std::to_string(v + 1) + ": " + dets[v].str() + "\n";
  }
  emit(s, o.out);
  return kOk;
}

int cmd_bounds(const Options& o) {
  mw::TopologyHints hints;
  for (const auto& h : o.hints) hints.set(h);
  const auto r = mw::bound_report(load(o.in), hints);
  emit(o.format == "kv" ? mw::report_kv(r) : mw::report_text(r), o.out);
  return r.any_violation() ? kFailed : kOk;
}

int cmd_census(const Options& o) {
  mw::CensusOptions opt;
  opt.threads = o.threads;
  const int default_cap = o.spheres ? 12 : 10;
  opt.cap = o.cap ? o.cap : default_cap;
  if (opt.cap > default_cap)
    std::cerr << "warning: cap raised to " << opt.cap << "; runtime and memory grow steeply\n";
  std::ofstream reps;
  if (!o.out.empty()) {
    reps.open(o.out);
    if (!reps) throw mw::Error(mw::ErrorKind::InvalidArgument, "cannot write " + o.out);
    opt.sink = [&](const mw::Complex& c, const mw::SurfaceClass& s) { reps << "# " << s.name() << "\n" << mw::write_facets(c); };
  }
  if (o.spheres) {
    std::cout << "n=" << o.n << " chi=2 orient=+ genus=0 count=" << mw::enumerate_spheres(o.n, opt) << "\n";
  } else {
    std::cout << mw::census_lines(mw::enumerate_surfaces(o.n, opt));
  }
  return kOk;
}

int cmd_realize(const Options& o) {
  const auto c = load(o.in);
  if (o.coords.empty()) throw mw::Error(mw::ErrorKind::InvalidArgument, "--coords is required");
  const auto r = mw::realization_check(c, mw::read_embedding_file(o.coords, c.num_vertices()));
  std::cout << (r.valid ? "valid" : "invalid") << (r.exact ? "" : " (inexact input)");
  if (!r.witness.empty()) std::cout << ": " << r.witness;
  std::cout << "\n";
  return r.valid ? kOk : kFailed;
}

int cmd_replay(const Options& o) {
  const auto c = load(o.in);
  if (o.trace.empty()) throw mw::Error(mw::ErrorKind::InvalidArgument, "--trace is required");
  std::ifstream t(o.trace);
  if (!t) throw mw::Error(mw::ErrorKind::ParseError, "cannot open " + o.trace);
  const auto result = mw::replay(c, mw::parse_trace(t));
  if (!o.out.empty()) emit(mw::write_facets(result), o.out);
  std::cout << "f = " << mw::f_vector(result).str() << "\n";
  return kOk;
}

int exit_code(mw::ErrorKind k) {
  switch (k) {
    case mw::ErrorKind::CapExceeded: return kBudget;
    case mw::ErrorKind::IllegalMove:
    case mw::ErrorKind::NotPseudomanifold:
    case mw::ErrorKind::NotASurface: return kFailed;
    default: return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Manifold workbench: triangulations, homology, bistellar flips, bounds and census"};
  app.require_subcommand(1);
  Options o;
  int (*run)(const Options&) = nullptr;

  auto in = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--in,-i", o.in, "facet file ('-' for stdin)");
    if (required) opt->required();
  };
  auto out = [&](CLI::App* s) { s->add_option("--out,-o", o.out, "output file (default stdout)"); };
  auto format = [&](CLI::App* s) { s->add_option("--format", o.format, "text or kv")->check(CLI::IsMember({"text", "kv"})); };
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&run, fn] { run = fn; });
    return s;
  };

  auto* info = sub("info", "summary of a complex", cmd_info);
  in(info), out(info), format(info);
  auto* fv = sub("fvector", "print the f-vector", cmd_fvector);
  in(fv), out(fv);
  auto* hom = sub("homology", "integral homology and Betti numbers", cmd_homology);
  in(hom), out(hom), format(hom);
  hom->add_option("--field", o.field, "prime p for Betti numbers over Z/p (0 = rationals)");

  auto* ver = sub("verify", "pseudomanifold, manifold or catalog checks", cmd_verify);
  ver->add_option("what", o.mode, "pseudomanifold | manifold | catalog")
      ->required()
      ->check(CLI::IsMember({"pseudomanifold", "manifold", "catalog"}));
  in(ver, false);
  ver->add_option("--budget", o.budget, "flip budget per vertex link");

  auto* red = sub("reduce", "simplify by bistellar flips", cmd_reduce);
  in(red), out(red);
  red->add_option("--seed", o.seeds, "seed(s); the first to reach the target wins");
  red->add_option("--budget", o.budget, "moves per seed")->check(CLI::PositiveNumber);
  red->add_option("--target", o.target, "stop at this many vertices");
  red->add_option("--trace", o.trace, "trace file (default <out>.trace)");
  red->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* con = sub("construct", "build a complex", cmd_construct);
  con->add_option("kind", o.mode, "boundary | product | sum | bundle | stack | join")
      ->required()
      ->check(CLI::IsMember({"boundary", "product", "sum", "bundle", "stack", "join"}));
  in(con, false), out(con);
  con->add_option("--in2", o.in2, "second input for product, sum and join");
  con->add_option("--dim,-d", o.dim, "dimension for boundary and bundle");
  con->add_option("--facet", o.facet, "facet of the first input, e.g. \"1 2 3 4\"");
  con->add_option("--facet2", o.facet2, "facet of the second input");
  con->add_flag("--orientable", o.orientable, "bundle: the product S^(d-1) x S^1 instead of the twisted one");

  auto* iso = sub("iso", "isomorphism test (exit 1 when not isomorphic)", cmd_iso);
  in(iso);
  iso->add_option("--in2", o.in2, "second complex")->required();

  auto* aut = sub("auto", "automorphism group", cmd_auto);
  in(aut), out(aut);
  auto* det = sub("det", "Altshuler-Steinberg determinant", cmd_det);
  in(det), out(det);
  det->add_flag("--links", o.links, "also print each vertex link's determinant");

  auto* bnd = sub("bounds", "evaluate lower and upper bounds", cmd_bounds);
  in(bnd), out(bnd), format(bnd);
  bnd->add_option("--hint", o.hints, "topology hint key=value (sphere, connectivity, simply-connected, name, ...)");

  auto* cen = sub("census", "enumerate triangulated surfaces", cmd_census);
  cen->add_option("--n,-n", o.n, "number of vertices")->required();
  cen->add_flag("--spheres", o.spheres, "count 2-spheres only");
  cen->add_option("--cap", o.cap, "largest n allowed (default 10, spheres 12)");
  cen->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  cen->add_option("--out,-o", o.out, "write canonical representatives here");

  auto* rea = sub("realize", "check a straight-line embedding of a surface", cmd_realize);
  in(rea);
  rea->add_option("--coords", o.coords, "coordinate file: label x y z per line")->required();

  auto* rep = sub("replay", "apply a trace of moves", cmd_replay);
  in(rep), out(rep);
  rep->add_option("--trace", o.trace, "trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  try {
    return run(o);
  } catch (const mw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
