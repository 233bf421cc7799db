#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "mw/complex.hpp"
#include "mw/error.hpp"

namespace mw {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] inline void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

/// Decimal label, or a single letter a..z standing for 10..35.
inline long parse_label(const std::string& tok, int line) {
  if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z') return 10 + (tok[0] - 'a');
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    parse_fail(line, "bad vertex label '" + tok + "'");
  if (tok.size() > 9) parse_fail(line, "label out of range '" + tok + "'");
  return std::stol(tok);
}

}  // namespace detail

/// Reads a facet file: `d n` header, then one facet of d+1 labels per line.
/// Lines starting with '#' and blank lines are ignored.
inline Complex parse_facets(std::istream& in) {
  std::string raw_line;
  int line_no = 0;
  int d = -1;
  long n = -1;
  int header_line = 0;
  std::vector<std::vector<long>> facets;
  while (std::getline(in, raw_line)) {
    ++line_no;
    const std::string line = detail::trim(raw_line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::vector<std::string> toks;
    for (std::string t; is >> t;) toks.push_back(t);
    if (d < 0) {
      if (toks.size() != 2) detail::parse_fail(line_no, "header must be 'd n'");
      try {
        d = std::stoi(toks[0]);
        n = std::stol(toks[1]);
      } catch (const std::exception&) {
        detail::parse_fail(line_no, "header must be two integers");
      }
      if (d < 1 || n < 1) detail::parse_fail(line_no, "header values must be positive");
      header_line = line_no;
      continue;
    }
    if (static_cast<int>(toks.size()) != d + 1)
      detail::parse_fail(line_no, "facet has " + std::to_string(toks.size()) + " labels, expected " + std::to_string(d + 1));
    std::vector<long> f;
    for (const auto& t : toks) {
      const long v = detail::parse_label(t, line_no);
      if (v < 1 || v > n) detail::parse_fail(line_no, "label " + std::to_string(v) + " outside 1.." + std::to_string(n));
      f.push_back(v);
    }
    facets.push_back(std::move(f));
  }
  if (d < 0) detail::parse_fail(line_no, "missing header");
  if (facets.empty()) detail::parse_fail(line_no, "no facets");
  Complex c;
  try {
    c = from_facets(facets);
  } catch (const Error& e) {
    detail::parse_fail(line_no, e.what());
  }
  if (c.num_vertices() != n)
    detail::parse_fail(header_line, "header declares " + std::to_string(n) + " vertices, body uses " +
                                        std::to_string(c.num_vertices()));
  return c;
}

inline Complex parse_facets(const std::string& text) {
  std::istringstream is(text);
  return parse_facets(is);
}

inline Complex read_facet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parse_facets(in);
}

/// Canonical text: header, then facets in lexicographic order, labels
/// ascending, decimal only.
inline std::string write_facets(const Complex& c) {
  std::string out = std::to_string(c.dim()) + " " + std::to_string(c.num_vertices()) + "\n";
  for (Face f : c.facets()) out += f.str() + "\n";
  return out;
}

inline void write_facet_file(const Complex& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << write_facets(c);
}

}  // namespace mw
