#pragma once

#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mw/complex.hpp"
#include "mw/error.hpp"

namespace mw {

using Rational = boost::multiprecision::cpp_rational;
using Point3 = std::array<Rational, 3>;

/// Vertex coordinates for a complex; points[v-1] belongs to vertex v.
/// `exact` is false when any coordinate was written as a decimal.
struct Embedding {
  std::vector<Point3> points;
  bool exact = true;
};

namespace detail {

/// Exact value of an integer, fraction "p/q" or decimal "-1.25e-3".
inline Rational parse_coordinate(const std::string& tok, int line, bool& inexact) {
  auto fail = [&] { throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad coordinate '" + tok + "'"); };
  if (tok.empty()) fail();
  if (const auto slash = tok.find('/'); slash != std::string::npos) {
    try {
      const boost::multiprecision::cpp_int p(tok.substr(0, slash)), q(tok.substr(slash + 1));
      if (q == 0) fail();
      return Rational(p, q);
    } catch (const std::runtime_error&) {
      fail();
    }
  }
  std::size_t i = 0;
  bool neg = false;
  if (tok[i] == '+' || tok[i] == '-') neg = tok[i++] == '-';
  boost::multiprecision::cpp_int mant = 0;
  int scale = 0;
  bool digits = false, dot = false;
  for (; i < tok.size() && (std::isdigit(static_cast<unsigned char>(tok[i])) || tok[i] == '.'); ++i) {
    if (tok[i] == '.') {
      if (dot) fail();
      dot = true;
      inexact = true;
      continue;
    }
    digits = true;
    mant = mant * 10 + (tok[i] - '0');
    if (dot) --scale;
  }
  if (!digits) fail();
  if (i < tok.size()) {
    if (tok[i] != 'e' && tok[i] != 'E') fail();
    inexact = true;
    try {
      std::size_t used = 0;
      scale += std::stoi(tok.substr(i + 1), &used);
      if (used != tok.size() - i - 1) fail();
    } catch (const std::logic_error&) {
      fail();
    }
  }
  Rational r(neg ? -mant : mant);
  const boost::multiprecision::cpp_int ten = 10;
  if (scale > 0) r *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(scale)));
  if (scale < 0) r /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-scale)));
  return r;
}

}  // namespace detail

/// Reads `label x y z` lines ('#' comments allowed) for a complex with n
/// vertices.  Throws IncompleteEmbedding when a vertex has no coordinates.
inline Embedding parse_embedding(std::istream& in, int n) {
  Embedding e;
  std::vector<std::optional<Point3>> pts(static_cast<std::size_t>(n));
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ls(text);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    long v = 0;
    try {
      std::size_t used = 0;
      v = std::stol(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad vertex label '" + first + "'");
    }
    if (v < 1 || v > n) throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": label out of range");
    Point3 p;
    bool inexact = false;
    for (auto& x : p) {
      std::string tok;
      if (!(ls >> tok)) throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": expected 3 coordinates");
      x = detail::parse_coordinate(tok, line, inexact);
    }
    if (std::string extra; ls >> extra) throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": trailing data");
    if (inexact) e.exact = false;
    pts[static_cast<std::size_t>(v - 1)] = p;
  }
  for (int v = 1; v <= n; ++v) {
    if (!pts[static_cast<std::size_t>(v - 1)])
      throw Error(ErrorKind::IncompleteEmbedding, "no coordinates for vertex " + std::to_string(v));
    e.points.push_back(*pts[static_cast<std::size_t>(v - 1)]);
  }
  return e;
}

inline Embedding read_embedding_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parse_embedding(in, n);
}

struct RealizationResult {
  bool valid = false;
  bool exact = true;
  std::string witness;  // first failure found, empty when valid
};

namespace detail {

inline Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Rational dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Point3 lerp(const Point3& a, const Point3& b, const Rational& t) {
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])};
}
inline bool is_zero(const Point3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

/// Parameter interval [lo, hi] of the part of segment uv inside triangle
/// abc (normal nonzero), or nullopt when they are disjoint.
inline std::optional<std::pair<Rational, Rational>> clip_segment(const Point3& u, const Point3& v,
                                                                 const std::array<Point3, 3>& t) {
  const Point3 nrm = cross(sub(t[1], t[0]), sub(t[2], t[0]));
  const Rational h0 = dot(nrm, sub(u, t[0])), h1 = dot(nrm, sub(v, t[0]));
  Rational lo = 0, hi = 1;
  if (h0 != 0 || h1 != 0) {
    if ((h0 > 0 && h1 > 0) || (h0 < 0 && h1 < 0)) return std::nullopt;
    lo = hi = h0 / (h0 - h1);
  }
  for (int i = 0; i < 3; ++i) {
    const Point3& a = t[i];
    const Point3& b = t[(i + 1) % 3];
    const Point3 side = cross(sub(b, a), nrm);  // points out of the triangle
    const Rational g0 = -dot(side, sub(u, a)), g1 = -dot(side, sub(v, a));
    // g(s) = g0 + s (g1 - g0) >= 0
    const Rational dg = g1 - g0;
    if (dg == 0) {
      if (g0 < 0) return std::nullopt;
    } else {
      const Rational root = -g0 / dg;
      if (dg > 0) {
        if (root > lo) lo = root;
      } else if (root < hi) {
        hi = root;
      }
    }
    if (lo > hi) return std::nullopt;
  }
  return std::pair{lo, hi};
}

/// Point lies in the shared part: one vertex, or the closed segment between
/// two vertices.
inline bool in_shared(const Point3& p, const std::vector<Point3>& shared) {
  if (shared.empty()) return false;
  if (shared.size() == 1) return p == shared[0];
  const Point3 ab = sub(shared[1], shared[0]), ap = sub(p, shared[0]);
  if (!is_zero(cross(ab, ap))) return false;
  const Rational s = dot(ap, ab);
  return s >= 0 && s <= dot(ab, ab);
}

}  // namespace detail

/// Checks that the embedding realizes the 2-dimensional complex with straight
/// edges and flat triangles: no degenerate triangle, and any two triangles
/// meet exactly in their common vertex or edge (or not at all).
/// Predicates are exact; with decimal input the degeneracy test uses
/// area < 1e-12 * bbox^2 and the result is flagged inexact.
inline RealizationResult realization_check(const Complex& c, const Embedding& e) {
  if (c.dim() != 2) throw Error(ErrorKind::WrongDimension, "realization needs a 2-dimensional complex");
  if (static_cast<int>(e.points.size()) != c.num_vertices())
    throw Error(ErrorKind::IncompleteEmbedding, std::to_string(e.points.size()) + " coordinates for " +
                                                   std::to_string(c.num_vertices()) + " vertices");
  using detail::cross;
  using detail::sub;
  RealizationResult res;
  res.exact = e.exact;
  const auto& P = e.points;
  auto pt = [&](int v) -> const Point3& { return P[static_cast<std::size_t>(v - 1)]; };

  Rational tol4 = 0;  // (1e-12 * bbox^2)^2, compared with |cross|^2 / 4
  if (!e.exact) {
    Rational ext = 0;
    for (int k = 0; k < 3; ++k) {
      Rational lo = P[0][k], hi = P[0][k];
      for (const auto& p : P) {
        if (p[k] < lo) lo = p[k];
        if (p[k] > hi) hi = p[k];
      }
      if (hi - lo > ext) ext = hi - lo;
    }
    const Rational eps(1, boost::multiprecision::pow(boost::multiprecision::cpp_int(10), 24));
    tol4 = eps * ext * ext * ext * ext;
  }

  const auto& fs = c.facets();
  for (Face f : fs) {
    const auto v = f.vertices();
    const Point3 n = cross(sub(pt(v[1]), pt(v[0])), sub(pt(v[2]), pt(v[0])));
    const Rational area2 = detail::dot(n, n) / 4;
    if (detail::is_zero(n) || (!e.exact && area2 < tol4)) {
      res.witness = "degenerate triangle " + f.str();
      return res;
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const Face common = fs[i] & fs[j];
      std::vector<Point3> shared;
      for (int v : common) shared.push_back(pt(v));
      for (auto [x, y] : {std::pair{fs[i], fs[j]}, std::pair{fs[j], fs[i]}}) {
        const auto xv = x.vertices(), yv = y.vertices();
        const std::array<Point3, 3> tri{pt(yv[0]), pt(yv[1]), pt(yv[2])};
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b) {
            const Point3 &u = pt(xv[a]), &w = pt(xv[b]);
            const auto part = detail::clip_segment(u, w, tri);
            if (!part) continue;
            if (!detail::in_shared(detail::lerp(u, w, part->first), shared) ||
                !detail::in_shared(detail::lerp(u, w, part->second), shared)) {
              res.witness = "triangles " + fs[i].str() + " and " + fs[j].str() + " intersect";
              return res;
            }
          }
      }
    }
  res.valid = true;
  return res;
}

}  // namespace mw
