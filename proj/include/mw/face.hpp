#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mw {

/// Largest vertex label a face can carry. Faces are stored as 64-bit
/// vertex sets, which bounds every complex in the workbench to 64 vertices.
inline constexpr int kMaxVertices = 64;

/// A face of a simplicial complex: a set of 1-based vertex labels.
///
/// Stored as a bit set (label v occupies bit v-1).  Iteration yields labels in
/// increasing order, which is the "strictly increasing sequence" view.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
  Face(std::initializer_list<int> labels) {
    for (int v : labels) insert(v);
  }
  explicit Face(std::span<const int> labels) {
    for (int v : labels) insert(v);
  }

  static Face from_labels(std::span<const int> labels) { return Face(labels); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int dim() const { return size() - 1; }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1u);
  }
  constexpr bool contains(Face other) const { return (bits_ & other.bits_) == other.bits_; }
  constexpr bool disjoint(Face other) const { return (bits_ & other.bits_) == 0; }

  void insert(int v) {
    if (v < 1 || v > kMaxVertices)
      throw std::out_of_range("vertex label " + std::to_string(v) + " outside 1..64");
    bits_ |= std::uint64_t{1} << (v - 1);
  }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  /// Set difference.
  constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }
  constexpr bool operator==(const Face&) const = default;

  /// Smallest label, or 0 for the empty face.
  constexpr int front() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  constexpr int back() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (int v : *this) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    return os.str();
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the increasing vertex sequences.
///
/// Let t be the smallest label in exactly one of the two faces.  Below t the
/// sequences agree.  The face holding t is smaller unless the other face has
/// run out of labels, in which case the other one is a prefix.
constexpr bool lex_less(Face a, Face b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int t = std::countr_zero(diff);
  const std::uint64_t above = t == 63 ? 0 : (~std::uint64_t{0} << (t + 1));
  const bool a_has = (a.bits() >> t) & 1u;
  const Face lacking = a_has ? b : a;
  const bool lacking_continues = (lacking.bits() & above) != 0;
  // The face holding t wins whenever the other still has larger labels.
  return a_has ? lacking_continues : !lacking_continues;
}

struct LexLess {
  constexpr bool operator()(Face a, Face b) const { return lex_less(a, b); }
};

struct FaceHash {
  std::size_t operator()(Face f) const noexcept {
    std::uint64_t x = f.bits() + 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

/// Calls fn(sub) for every subset of `f` with exactly k elements.
template <class Fn>
void for_each_subface(Face f, int k, Fn&& fn) {
  const auto verts = f.vertices();
  const int m = static_cast<int>(verts.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= std::uint64_t{1} << (verts[i] - 1);
    fn(Face(bits));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls fn(sub) for every non-empty subset of `f`, in no particular order.
template <class Fn>
void for_each_nonempty_subset(Face f, Fn&& fn) {
  const std::uint64_t all = f.bits();
  for (std::uint64_t s = all; s; s = (s - 1) & all) fn(Face(s));
}

}  // namespace mw
