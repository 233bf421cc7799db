#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mw/bigint.hpp"
#include "mw/complex.hpp"
#include "mw/error.hpp"
#include "mw/homology.hpp"
#include "mw/manifold.hpp"
#include "mw/surface.hpp"

namespace mw {

inline BigInt big_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Facts about the underlying manifold that cannot be read off a complex.
struct TopologyHints {
  std::optional<bool> is_sphere;
  /// i such that the manifold is (i-1)-connected but not i-connected.
  std::optional<int> connectivity;
  std::optional<bool> simply_connected;
  /// "Z" or "Z2": known to be a homology sphere over that ring.
  std::optional<std::string> homology_sphere;
  /// Known manifold, e.g. "S3", "S2xS1", "S2~S1", "RP3", "L31", "T3", "RP4", "CP2".
  std::optional<std::string> name;

  /// Reads one `key=value` hint (or a bare flag such as `not-simply-connected`).
  void set(const std::string& kv) {
    const auto eq = kv.find('=');
    const std::string key = kv.substr(0, eq);
    const std::string val = eq == std::string::npos ? "" : kv.substr(eq + 1);
    auto as_bool = [&](const std::string& v) {
      if (v.empty() || v == "true" || v == "yes" || v == "1") return true;
      if (v == "false" || v == "no" || v == "0") return false;
      throw Error(ErrorKind::InvalidArgument, "hint '" + kv + "' needs a boolean");
    };
    if (key == "sphere") is_sphere = as_bool(val);
    else if (key == "not-sphere" || key == "non-sphere") is_sphere = false;
    else if (key == "simply-connected") simply_connected = as_bool(val);
    else if (key == "not-simply-connected") simply_connected = false;
    else if (key == "connectivity") {
      try {
        connectivity = std::stoi(val);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "hint '" + kv + "' needs an integer");
      }
    } else if (key == "homology-sphere") {
      if (val != "Z" && val != "Z2") throw Error(ErrorKind::InvalidArgument, "homology-sphere must be Z or Z2");
      homology_sphere = val;
    } else if (key == "name") {
      name = val;
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown hint '" + key + "'");
    }
  }
};

enum class Satisfied { yes, no, not_applicable };

inline const char* to_string(Satisfied s) {
  switch (s) {
    case Satisfied::yes: return "yes";
    case Satisfied::no: return "no";
    case Satisfied::not_applicable: return "n/a";
  }
  return "?";
}

/// One evaluated inequality lhs >= rhs.
struct BoundEntry {
  std::string id;
  std::string name;
  bool applicable = false;
  bool conjectural = false;
  BigInt lhs = 0;
  BigInt rhs = 0;
  std::string notes;

  BigInt slack() const { return lhs - rhs; }
  bool sharp() const { return applicable && lhs == rhs; }
  Satisfied satisfied() const {
    if (!applicable) return Satisfied::not_applicable;
    return lhs >= rhs ? Satisfied::yes : Satisfied::no;
  }
  /// A failed theorem is a violation; a failed conjecture is only reported.
  bool violated() const { return !conjectural && satisfied() == Satisfied::no; }
};

inline BoundEntry make_entry(std::string id, std::string name, BigInt lhs, BigInt rhs, std::string notes = {},
                             bool conjectural = false) {
  BoundEntry e;
  e.id = std::move(id);
  e.name = std::move(name);
  e.applicable = true;
  e.conjectural = conjectural;
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  e.notes = std::move(notes);
  return e;
}

inline BoundEntry not_applicable(std::string id, std::string name, std::string why, bool conjectural = false) {
  BoundEntry e;
  e.id = std::move(id);
  e.name = std::move(name);
  e.notes = std::move(why);
  e.conjectural = conjectural;
  return e;
}

// ---------------------------------------------------------------------------
// Individual bounds

/// Least n with C(n-3,2) >= 3(2-chi), or C(n-4,2) for the exceptional surfaces.
inline int heawood_min_vertices(int chi, bool exceptional = false) {
  if (chi > 2) throw Error(ErrorKind::InvalidArgument, "surfaces have chi <= 2");
  const int shift = exceptional ? 4 : 3;
  for (int n = 4;; ++n)
    if (big_binomial(n - shift, 2) >= 3 * (2 - chi)) return n;
}

inline BoundEntry heawood_check(int n, int chi, bool exceptional = false) {
  const int shift = exceptional ? 4 : 3;
  return make_entry("heawood", "Heawood surface bound", big_binomial(n - shift, 2), BigInt(3 * (2 - chi)),
                    exceptional ? "exceptional surface: C(n-4,2) >= 3(2-chi)" : "C(n-3,2) >= 3(2-chi)");
}

/// A lower bound on the vertex count.
struct VertexBound {
  std::string id;
  std::string name;
  int min_vertices = 0;
  std::string notes;
};

/// Brehm-Kuehnel lower bounds that the hints make applicable.
inline std::vector<VertexBound> brehm_kuehnel_bounds(int d, const TopologyHints& hints) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "Brehm-Kuehnel bounds need d >= 2");
  std::vector<VertexBound> out;
  if (hints.is_sphere == false) {
    // For even d the value 3d/2+3 is attained only in dimensions 2, 4, 8, 16.
    const bool attainable = d % 2 == 1 || d == 2 || d == 4 || d == 8 || d == 16;
    out.push_back({"bk-nonsphere", "Brehm-Kuehnel non-sphere bound", 3 * ((d + 1) / 2) + 3 + (attainable ? 0 : 1),
                   attainable ? "n >= 3*ceil(d/2)+3" : "n >= 3d/2+3, equality impossible for this d"});
  }
  if (hints.connectivity) {
    const int i = *hints.connectivity;
    if (i >= 1 && 2 * i < d)
      out.push_back({"bk-connectivity", "Brehm-Kuehnel connectivity bound", 2 * d + 4 - i,
                     "(i-1)-connected, not i-connected, i=" + std::to_string(i) + ": n >= 2d+4-i"});
  }
  if (hints.simply_connected == false)
    out.push_back({"bk-not-simply-connected", "Brehm-Kuehnel non-simply-connected bound", d == 2 ? 6 : 2 * d + 3,
                   d == 2 ? "n >= 6" : "n >= 2d+3"});
  return out;
}

inline BoundEntry vertex_bound_check(int n, const VertexBound& b) {
  return make_entry(b.id, b.name, BigInt(n), BigInt(b.min_vertices), b.notes);
}

struct Kuehnel4dResult {
  bool satisfied = false;
  bool sharp = false;
  /// Equality holds numerically, but no 3-neighborly 4-manifold other than
  /// the 5-simplex boundary (n=6) and CP^2_9 (n=9) exists for n <= 13.
  bool sharp_but_excluded = false;
  BigInt lhs, rhs;
};

/// C(n-4,3) >= 10(chi-2) for combinatorial 4-manifolds.
inline Kuehnel4dResult kuehnel_4d_check(int n, int chi) {
  Kuehnel4dResult r;
  r.lhs = big_binomial(n - 4, 3);
  r.rhs = BigInt(10) * (chi - 2);
  r.satisfied = r.lhs >= r.rhs;
  r.sharp = r.lhs == r.rhs;
  r.sharp_but_excluded = r.sharp && n <= 13 && !(n == 6 && chi == 2) && !(n == 9 && chi == 3);
  return r;
}

/// C(n-k-2,k+1) >= (-1)^k C(2k+1,k+1)(chi-2) for 2k-manifolds (conjectural).
inline BoundEntry kuehnel_kalai_bound(int k, int n, int chi) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  BigInt rhs = big_binomial(2 * k + 1, k + 1) * (chi - 2);
  if (k % 2) rhs = -rhs;
  return make_entry("kuehnel-kalai", "Kuehnel-Kalai bound (conjectural)", big_binomial(n - k - 2, k + 1), rhs,
                    "k=" + std::to_string(k) + "; equality iff (k+1)-neighborly", true);
}

/// The Pascal-like triangle bounds, one entry per j = 0..floor(d/2)
/// (conjectural).  reduced_betti[j] is the reduced Betti number in degree j.
inline std::vector<BoundEntry> kuehnel_triangle_bounds(int d, int n, const std::vector<int>& reduced_betti) {
  std::vector<BoundEntry> out;
  if (static_cast<int>(reduced_betti.size()) < d / 2 + 1)
    throw Error(ErrorKind::InvalidArgument, "need reduced Betti numbers for j = 0..floor(d/2)");
  for (int j = 0; 2 * j <= d; ++j) {
    const std::string id = "kuehnel-triangle-" + std::to_string(j);
    if (2 * j < d) {
      out.push_back(make_entry(id, "Kuehnel triangle bound (conjectural)", big_binomial(n - d + j - 2, j + 1),
                               big_binomial(d + 2, j + 1) * reduced_betti[j],
                               "C(n-d+j-2,j+1) >= C(d+2,j+1)*b~_j", true));
    } else {
      // Middle dimension: compare 2*C(...) >= C(...)*b~ to stay integral.
      out.push_back(make_entry(id, "Kuehnel triangle bound (conjectural)", 2 * big_binomial(n - d / 2 - 2, d / 2 + 1),
                               big_binomial(d + 2, d / 2 + 1) * reduced_betti[j],
                               "middle dimension, both sides doubled: 2*C(n-d/2-2,d/2+1) >= C(d+2,d/2+1)*b~_{d/2}",
                               true));
    }
  }
  return out;
}

/// Lower bound theorem, one entry per k = 1..d.
inline std::vector<BoundEntry> lbt_check(const FVector& f, int d) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "LBT needs d >= 2");
  std::vector<BoundEntry> out;
  const std::int64_t n = f[0];
  for (int k = 1; k <= d; ++k) {
    BigInt rhs = k < d ? big_binomial(d + 1, k) * n - big_binomial(d + 2, k + 1) * k
                       : BigInt(d) * n - BigInt(d - 1) * (d + 2);
    out.push_back(make_entry("lbt-" + std::to_string(k), "Lower bound theorem", BigInt(f[k]), rhs,
                             k < d ? "f_k >= C(d+1,k)n - C(d+2,k+1)k" : "f_d >= dn - (d-1)(d+2)"));
  }
  return out;
}

/// f-vector of the boundary of the cyclic (d+1)-polytope with n vertices,
/// a d-sphere, from its h-vector: h_i = C(n-d-2+i, i) below the middle,
/// then h_i = h_{d+1-i}.
inline FVector cyclic_f(int d, int n) {
  const int D = d + 1;
  if (d < 1 || n < D + 1) throw Error(ErrorKind::InvalidArgument, "cyclic polytope needs n >= d+2");
  std::vector<std::int64_t> h(D + 1);
  for (int i = 0; 2 * i <= D; ++i) h[i] = binomial(n - D - 1 + i, i);
  for (int i = 0; i <= D; ++i)
    if (2 * i > D) h[i] = h[D - i];
  std::vector<std::int64_t> f(D);
  for (int k = 1; k <= D; ++k) {
    std::int64_t s = 0;
    for (int i = 0; i <= k; ++i) s += binomial(D - i, k - i) * h[i];
    f[k - 1] = s;
  }
  return make_fvector(std::move(f));
}

/// Upper bound theorem: f_k <= f_k(cyclic) for 1 <= k <= d.  For even
/// d = 2k it applies only when b~_k <= 2 b~_{k-1} + 2 sum_{i=1}^{k-3} b~_i
/// (reduced Betti numbers over F_2, so surfaces other than spheres are excluded).
inline std::vector<BoundEntry> ubt_check(const FVector& f, int d, const std::vector<int>& betti_f2) {
  std::vector<BoundEntry> out;
  const int n = static_cast<int>(f[0]);
  bool applicable = d % 2 == 1;
  std::string why = "odd dimension";
  if (d % 2 == 0) {
    const int k = d / 2;
    if (static_cast<int>(betti_f2.size()) > d) {
      long rhs = 2L * (k - 1 == 0 ? betti_f2[0] - 1 : betti_f2[k - 1]);
      for (int i = 1; i <= k - 3; ++i) rhs += 2L * betti_f2[i];
      applicable = betti_f2[k] <= rhs;
      why = "b_k=" + std::to_string(betti_f2[k]) + (applicable ? " <= " : " > ") + std::to_string(rhs);
    } else {
      why = "no Betti numbers";
    }
  }
  if (n < d + 2) {
    applicable = false;
    why = "n < d+2";
  }
  for (int k = 1; k <= d; ++k) {
    const std::string id = "ubt-" + std::to_string(k);
    if (!applicable) {
      out.push_back(not_applicable(id, "Upper bound theorem", why));
      continue;
    }
    const FVector c = cyclic_f(d, n);
    out.push_back(make_entry(id, "Upper bound theorem", BigInt(c[k]), BigInt(f[k]), "f_k(cyclic) >= f_k; " + why));
  }
  return out;
}

struct WalkupGamma {
  std::string name;
  int gamma = 0;
  int gamma_star = 0;
  bool conjectural = false;
  std::string notes;
};

/// Known values of the 3-manifold constants with f_1 >= 4n + gamma.
inline const std::vector<WalkupGamma>& walkup_gamma_table() {
  static const std::vector<WalkupGamma> table = {
      {"S3", -10, -10, false, ""},
      {"S2~S1", 0, 0, false, "twisted bundle"},
      {"S2xS1", 0, 1, false, "(n,f1) = (9,36) does not occur"},
      {"RP3", 7, 7, false, ""},
      {"other", 8, 8, false, "lower bound for every other 3-manifold"},
      {"L31", 18, 18, true, ""},
      {"T3", 45, 45, true, ""},
  };
  return table;
}

inline std::optional<WalkupGamma> walkup_gamma(const std::string& name) {
  for (const auto& g : walkup_gamma_table())
    if (g.name == name) return g;
  return std::nullopt;
}

struct WalkupResult {
  bool consistent = false;  // f_2 = 2f_1 - 2n and f_3 = f_1 - n
  std::int64_t slack = 0;   // f_1 - (4n + gamma)
};

inline WalkupResult walkup_relation(const FVector& f, int gamma) {
  if (f.counts.size() != 4) throw Error(ErrorKind::WrongDimension, "Walkup's relation needs d = 3");
  WalkupResult r;
  r.consistent = f[2] == 2 * f[1] - 2 * f[0] && f[3] == f[1] - f[0];
  r.slack = f[1] - (4 * f[0] + gamma);
  return r;
}

/// Novik's three inequalities, each only inside its (n,k) window.
/// betti_f2 holds b_0..b_d over F_2.
inline std::vector<BoundEntry> novik_bounds(int d, int n, const std::vector<int>& betti_f2) {
  std::vector<BoundEntry> out;
  if (static_cast<int>(betti_f2.size()) < d + 1) throw Error(ErrorKind::InvalidArgument, "need b_0..b_d over F_2");
  auto reduced = [&](int i) { return i == 0 ? betti_f2[0] - 1 : betti_f2[i]; };
  if (d % 2 == 0) {
    const int k = d / 2;
    const BigInt lhs = big_binomial(n - k - 2, k + 1);
    const BigInt c = big_binomial(2 * k + 1, k + 1);
    if (n <= 3 * k + 3 || n >= 4 * k + 3) {
      long s = betti_f2[k];
      for (int i = 0; i <= k - 2; ++i) s += 2L * reduced(i);
      out.push_back(make_entry("novik-1", "Novik even-dimensional bound", lhs, c * s, "C(n-k-2,k+1) >= C(2k+1,k+1)(b_k + 2 sum_{i=0}^{k-2} b~_i)"));
    } else {
      out.push_back(not_applicable("novik-1", "Novik even-dimensional bound", "n outside n <= 3k+3 or n >= 4k+3"));
    }
    if (n <= 3 * k + 3 || n >= 7 * k + 3) {
      long s = betti_f2[k];
      for (int i = 1; i <= k - 1; ++i) s += 2L * betti_f2[i];
      out.push_back(make_entry("novik-2", "Novik even-dimensional bound", lhs, c * s, "C(n-k-2,k+1) >= C(2k+1,k+1)(b_k + 2 sum_{i=1}^{k-1} b_i)"));
    } else {
      out.push_back(not_applicable("novik-2", "Novik even-dimensional bound", "n outside n <= 3k+3 or n >= 7k+3"));
    }
    out.push_back(not_applicable("novik-3", "Novik odd-dimensional bound", "even dimension"));
  } else {
    const int k = (d + 1) / 2;
    out.push_back(not_applicable("novik-1", "Novik even-dimensional bound", "odd dimension"));
    out.push_back(not_applicable("novik-2", "Novik even-dimensional bound", "odd dimension"));
    if (n <= 3 * k + 2 || n >= 4 * k + 1) {
      long s = 0;
      for (int i = 1; i <= k - 1; ++i) s += 2L * betti_f2[i];
      // 2n/(n+k+2) C(n-k-2,k) >= C(2k-1,k) s, cleared of the denominator.
      out.push_back(make_entry("novik-3", "Novik odd-dimensional bound", BigInt(2 * n) * big_binomial(n - k - 2, k),
                               BigInt(n + k + 2) * big_binomial(2 * k - 1, k) * s,
                               "2n C(n-k-2,k) >= (n+k+2) C(2k-1,k) 2 sum_{i=1}^{k-1} b_i"));
    } else {
      out.push_back(not_applicable("novik-3", "Novik odd-dimensional bound", "n outside n <= 3k+2 or n >= 4k+1"));
    }
  }
  return out;
}

/// (n, 3n - 3chi, 2n - 2chi).
inline FVector surface_f_from_n(int n, int chi) {
  return make_fvector({n, 3L * n - 3L * chi, 2L * n - 2L * chi});
}

enum class ProjectiveKind { real, complex };

struct ArnouxMarinBound {
  int bound = 0;
  /// Smallest n not excluded: bound+1 when equality is impossible.
  int effective = 0;
};

/// RP^d needs (d+1)(d+2)/2 vertices, CP^r needs (r+1)^2; equality only for
/// d = 2 and r = 2.
inline ArnouxMarinBound arnoux_marin_min(ProjectiveKind kind, int dim) {
  if (dim < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  ArnouxMarinBound b;
  b.bound = kind == ProjectiveKind::real ? (dim + 1) * (dim + 2) / 2 : (dim + 1) * (dim + 1);
  b.effective = dim == 2 ? b.bound : b.bound + 1;
  return b;
}

/// Z_2-homology spheres (other than spheres) of dimension 3..6 need d+9 vertices.
inline int bagchi_datta_min(int d) {
  if (d < 3 || d > 6) throw Error(ErrorKind::InvalidArgument, "Bagchi-Datta bound covers 3 <= d <= 6");
  return d + 9;
}

// ---------------------------------------------------------------------------
// Report

struct BoundReport {
  int n = 0;
  int d = 0;
  FVector f;
  HomologyVector homology;
  BettiVector betti_f2;
  std::vector<std::string> inputs;  // facts used, one per line
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }

  bool any_violation() const {
    for (const auto& e : entries)
      if (e.violated()) return true;
    return false;
  }
};

namespace detail {

/// Homology of S^{d-i} x S^i for some 1 <= i <= d/2; returns i or 0.
inline int sphere_product_index(const HomologyVector& h) {
  const int d = h.dim();
  for (int i = 1; 2 * i <= d; ++i) {
    bool ok = true;
    for (int k = 0; k <= d && ok; ++k) {
      int want = (k == 0 || k == d) ? 1 : 0;
      if (k == i) ++want;
      if (k == d - i && d - i != i) ++want;
      ok = h[k].torsion.empty() && h[k].free_rank == want;
    }
    if (ok) return i;
  }
  return 0;
}

inline bool f2_sphere(const BettiVector& b) {
  for (std::size_t k = 0; k < b.ranks.size(); ++k)
    if (b.ranks[k] != ((k == 0 || k + 1 == b.ranks.size()) ? 1 : 0)) return false;
  return true;
}

}  // namespace detail

/// Evaluates every bound whose hypotheses are known, in a fixed order.
inline BoundReport bound_report(const Complex& c, const TopologyHints& hints = {}) {
  BoundReport r;
  r.n = c.num_vertices();
  r.d = c.dim();
  r.f = f_vector(c);
  r.homology = homology(c);
  r.betti_f2 = betti(c, 2);
  const int n = r.n, d = r.d;
  const int chi = static_cast<int>(r.f.euler);
  const auto& b2 = r.betti_f2.ranks;

  // Derived facts, each recorded in the report.
  const bool sphere_homology = is_sphere_homology(r.homology);
  TopologyHints h = hints;
  r.inputs.push_back("n=" + std::to_string(n));
  r.inputs.push_back("d=" + std::to_string(d));
  r.inputs.push_back("f=" + r.f.str());
  r.inputs.push_back("chi=" + std::to_string(chi));
  r.inputs.push_back("H=" + r.homology.str());
  std::string bs;
  for (std::size_t k = 0; k < b2.size(); ++k) bs += (k ? "," : "") + std::to_string(b2[k]);
  r.inputs.push_back("betti_F2=(" + bs + ")");
  if (!h.is_sphere && !sphere_homology) {
    h.is_sphere = false;
    r.inputs.push_back("not a sphere (homology)");
  }
  if (!h.simply_connected && !r.homology[1].is_zero()) {
    h.simply_connected = false;
    r.inputs.push_back("not simply connected (H_1 != 0)");
  }
  if (hints.is_sphere) r.inputs.push_back(std::string("hint sphere=") + (*hints.is_sphere ? "true" : "false"));
  if (hints.simply_connected)
    r.inputs.push_back(std::string("hint simply-connected=") + (*hints.simply_connected ? "true" : "false"));
  if (hints.connectivity) r.inputs.push_back("hint connectivity=" + std::to_string(*hints.connectivity));
  if (hints.homology_sphere) r.inputs.push_back("hint homology-sphere=" + *hints.homology_sphere);
  if (hints.name) r.inputs.push_back("hint name=" + *hints.name);

  // Surfaces.
  if (d == 2 && is_closed_surface(c)) {
    const auto s = classify_surface(c);
    r.entries.push_back(heawood_check(n, chi, is_heawood_exceptional(s)));
    r.entries.back().notes += "; " + s.name();
  } else {
    r.entries.push_back(not_applicable("heawood", "Heawood surface bound", "not a closed surface"));
  }

  // Brehm-Kuehnel family.
  if (d >= 2) {
    const auto bk = brehm_kuehnel_bounds(d, h);
    auto push_bk = [&](const std::string& id, const std::string& name) {
      for (const auto& b : bk)
        if (b.id == id) {
          r.entries.push_back(vertex_bound_check(n, b));
          return;
        }
      r.entries.push_back(not_applicable(id, name, "hypothesis unknown or false"));
    };
    push_bk("bk-nonsphere", "Brehm-Kuehnel non-sphere bound");
    push_bk("bk-connectivity", "Brehm-Kuehnel connectivity bound");
    push_bk("bk-not-simply-connected", "Brehm-Kuehnel non-simply-connected bound");
    if (const int i = detail::sphere_product_index(r.homology))
      r.entries.push_back(make_entry("bk-sphere-product", "Brehm-Kuehnel sphere-product bound", BigInt(n),
                                     BigInt(2 * d + 4 - i),
                                     "homology of S^" + std::to_string(d - i) + " x S^" + std::to_string(i) + ": n >= 2d+4-i"));
    else
      r.entries.push_back(not_applicable("bk-sphere-product", "Brehm-Kuehnel sphere-product bound", "homology is not that of a sphere product"));
  }

  // Homology spheres (non-spheres only).
  const bool z2_sphere = h.homology_sphere.has_value() || detail::f2_sphere(r.betti_f2);
  if (h.is_sphere == false && z2_sphere && d >= 3 && d <= 6)
    r.entries.push_back(make_entry("bagchi-datta", "Bagchi-Datta Z2-homology sphere bound", BigInt(n),
                                   BigInt(bagchi_datta_min(d)), "n >= d+9"));
  else
    r.entries.push_back(not_applicable("bagchi-datta", "Bagchi-Datta Z2-homology sphere bound", "needs a non-sphere Z2-homology sphere, 3 <= d <= 6"));
  const bool z_sphere = h.homology_sphere == std::string("Z") || sphere_homology;
  if (h.is_sphere == false && z_sphere && d >= 6)
    r.entries.push_back(make_entry("bk-homology-sphere", "Brehm-Kuehnel Z-homology sphere bound", BigInt(n), BigInt(2 * d + 3), "n >= 2d+3"));
  else
    r.entries.push_back(not_applicable("bk-homology-sphere", "Brehm-Kuehnel Z-homology sphere bound", "needs a non-sphere Z-homology sphere, d >= 6"));

  // Projective spaces.
  if (h.name && h.name->size() >= 3 && (h.name->rfind("RP", 0) == 0 || h.name->rfind("CP", 0) == 0)) {
    const bool real = h.name->rfind("RP", 0) == 0;
    int k = 0;
    try {
      k = std::stoi(h.name->substr(2));
    } catch (const std::exception&) {
    }
    if (k >= 1) {
      const auto am = arnoux_marin_min(real ? ProjectiveKind::real : ProjectiveKind::complex, k);
      r.entries.push_back(make_entry("arnoux-marin", "Arnoux-Marin projective space bound", BigInt(n), BigInt(am.effective),
                                     "bound " + std::to_string(am.bound) + (am.effective > am.bound ? ", equality impossible" : "")));
    }
  }
  if (!r.find("arnoux-marin"))
    r.entries.push_back(not_applicable("arnoux-marin", "Arnoux-Marin projective space bound", "needs hint name=RP<d> or CP<r>"));

  // Euler-characteristic bounds in even dimension.
  if (d == 4) {
    const auto k4 = kuehnel_4d_check(n, chi);
    BoundEntry e = make_entry("kuehnel-4d", "Kuehnel 4-manifold bound", k4.lhs, k4.rhs, "C(n-4,3) >= 10(chi-2)");
    if (k4.sharp) e.notes += is_k_neighborly(c, 3) ? "; 3-neighborly" : "; equality without 3-neighborliness";
    r.entries.push_back(e);
  } else {
    r.entries.push_back(not_applicable("kuehnel-4d", "Kuehnel 4-manifold bound", "d != 4"));
  }
  if (d % 2 == 0 && d >= 2)
    r.entries.push_back(kuehnel_kalai_bound(d / 2, n, chi));
  else
    r.entries.push_back(not_applicable("kuehnel-kalai", "Kuehnel-Kalai bound (conjectural)", "odd dimension", true));
  for (auto& e : kuehnel_triangle_bounds(d, n, reduced_betti(r.betti_f2))) r.entries.push_back(std::move(e));

  // f-vector theorems.
  if (d >= 2)
    for (auto& e : lbt_check(r.f, d)) r.entries.push_back(std::move(e));
  for (auto& e : ubt_check(r.f, d, b2)) r.entries.push_back(std::move(e));
  for (auto& e : novik_bounds(d, n, b2)) r.entries.push_back(std::move(e));

  // Walkup.
  if (d == 3) {
    const auto w0 = walkup_relation(r.f, 0);
    BoundEntry rel = make_entry("walkup-relation", "3-manifold f-vector relation", BigInt(w0.consistent ? 1 : 0), BigInt(1),
                                "f_2 = 2f_1 - 2n and f_3 = f_1 - n");
    r.entries.push_back(rel);
    std::optional<WalkupGamma> g;
    if (h.name) g = walkup_gamma(*h.name);
    if (g) {
      r.entries.push_back(make_entry("walkup-gamma", "Walkup bound", BigInt(r.f[1]), BigInt(4 * n + g->gamma),
                                     "f_1 >= 4n + gamma, gamma(" + g->name + ")=" + std::to_string(g->gamma) +
                                         (g->notes.empty() ? "" : "; " + g->notes),
                                     g->conjectural));
    } else {
      r.entries.push_back(make_entry("walkup-gamma", "Walkup bound", BigInt(r.f[1]), BigInt(4 * n - 10),
                                     "f_1 >= 4n - 10 (no manifold name given, gamma >= -10)"));
    }
  } else {
    r.entries.push_back(not_applicable("walkup-relation", "3-manifold f-vector relation", "d != 3"));
    r.entries.push_back(not_applicable("walkup-gamma", "Walkup bound", "d != 3"));
  }
  return r;
}

inline std::string report_text(const BoundReport& r) {
  std::string out;
  for (const auto& s : r.inputs) out += "# " + s + "\n";
  for (const auto& e : r.entries) {
    out += e.id + (e.conjectural ? " [conjectural]" : "") + ": ";
    if (!e.applicable) {
      out += "n/a (" + e.notes + ")\n";
      continue;
    }
    out += std::string(e.satisfied() == Satisfied::yes ? "satisfied" : "VIOLATED") + " " + e.lhs.str() +
           " >= " + e.rhs.str() + " slack=" + e.slack().str() + (e.sharp() ? " sharp" : "");
    if (!e.notes.empty()) out += " (" + e.notes + ")";
    out += "\n";
  }
  return out;
}

inline std::string report_kv(const BoundReport& r) {
  std::string out;
  out += "n=" + std::to_string(r.n) + "\nd=" + std::to_string(r.d) + "\n";
  out += "f=" + r.f.str() + "\nchi=" + std::to_string(r.f.euler) + "\n\n";
  for (const auto& e : r.entries) {
    out += "id=" + e.id + "\n";
    out += "name=" + e.name + "\n";
    out += std::string("applicable=") + (e.applicable ? "true" : "false") + "\n";
    out += std::string("conjectural=") + (e.conjectural ? "true" : "false") + "\n";
    out += std::string("satisfied=") + to_string(e.satisfied()) + "\n";
    if (e.applicable) {
      out += "lhs=" + e.lhs.str() + "\nrhs=" + e.rhs.str() + "\nslack=" + e.slack().str() + "\n";
      out += std::string("sharp=") + (e.sharp() ? "true" : "false") + "\n";
    }
    out += "notes=" + e.notes + "\n\n";
  }
  return out;
}

}  // namespace mw
