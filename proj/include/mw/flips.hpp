#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mw/complex.hpp"
#include "mw/error.hpp"

namespace mw {

/// A bistellar i-move: replaces remove * boundary(insert) by
/// boundary(remove) * insert.  |remove| = d-i+1, |insert| = i+1.
struct FlipMove {
  Face remove;
  Face insert;
  int kind = 0;

  bool operator==(const FlipMove&) const = default;

  std::string str() const { return std::to_string(kind) + ": " + remove.str() + " -> " + insert.str(); }
};

/// Parses one trace line `i: A -> B`.
inline FlipMove parse_move(const std::string& line) {
  const auto colon = line.find(':');
  const auto arrow = line.find("->");
  if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
    throw Error(ErrorKind::ParseError, "bad move line '" + line + "'");
  FlipMove m;
  try {
    m.kind = std::stoi(line.substr(0, colon));
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad move kind in '" + line + "'");
  }
  auto read_face = [&](const std::string& s) {
    std::istringstream is(s);
    Face f;
    for (long v; is >> v;) {
      if (v < 1 || v > kMaxVertices) throw Error(ErrorKind::ParseError, "label out of range in '" + line + "'");
      f.insert(static_cast<int>(v));
    }
    if (!is.eof()) throw Error(ErrorKind::ParseError, "bad label in '" + line + "'");
    return f;
  };
  m.remove = read_face(line.substr(colon + 1, arrow - colon - 1));
  m.insert = read_face(line.substr(arrow + 2));
  return m;
}

inline std::string format_trace(const std::vector<FlipMove>& trace) {
  std::string out;
  for (const auto& m : trace) out += m.str() + "\n";
  return out;
}

inline std::vector<FlipMove> parse_trace(std::istream& in) {
  std::vector<FlipMove> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_move(line));
  }
  return out;
}

/// SplitMix64.  Draws below a bound use rejection, so sequences are identical
/// on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Mutable complex with incremental face counts, used by the reducer.
/// Labels are not compacted: a removed vertex leaves a gap and a 0-move uses
/// the smallest free label.
class FlipComplex {
 public:
  explicit FlipComplex(const Complex& c) : dim_(c.dim()) {
    for (int i = 0; i <= dim_; ++i) candidates_[i].clear();
    for (Face f : c.facets()) add_facet(f);
    refresh_all();
  }

  int dim() const { return dim_; }
  int num_vertices() const { return static_cast<int>(vertex_facets_count()); }

  /// f-vector (f_0..f_d), maintained incrementally.
  const std::array<std::int64_t, kMaxVertices + 1>& counts() const { return fcount_; }

  /// Lexicographic key comparison on (f_0, f_1, ...): negative if a < b.
  int compare_counts(const std::array<std::int64_t, kMaxVertices + 1>& other) const {
    for (int k = 0; k <= dim_; ++k)
      if (fcount_[k] != other[k]) return fcount_[k] < other[k] ? -1 : 1;
    return 0;
  }

  bool has_face(Face f) const { return star_count_.count(f) > 0; }

  /// Smallest label not in use.
  int fresh_label() const {
    for (int v = 1; v <= kMaxVertices; ++v)
      if (!used_.contains(v)) return v;
    return 0;
  }

  /// Legal move with `remove` = a, or nullopt.  For a facet the insert is
  /// the fresh label (nullopt when all 64 labels are in use).
  std::optional<FlipMove> move_at(Face a) const {
    const auto it = star_count_.find(a);
    if (it == star_count_.end()) return std::nullopt;
    const int cnt = it->second;
    if (a.size() + cnt != dim_ + 2) return std::nullopt;
    const int i = dim_ + 1 - a.size();
    if (i == 0) {
      const int v = fresh_label();
      if (v == 0) return std::nullopt;
      return FlipMove{a, Face{v}, 0};
    }
    Face all;
    for (Face f : facets_of_vertex(a.front()))
      if (f.contains(a)) all = all | f;
    const Face b = all - a;
    if (b.size() != i + 1) return std::nullopt;
    if (has_face(b)) return std::nullopt;
    return FlipMove{a, b, i};
  }

  /// All legal moves of kind i, in candidate-pool order.
  std::vector<FlipMove> legal_of_kind(int i) const {
    std::vector<FlipMove> out;
    for (Face a : candidates_[i])
      if (auto m = move_at(a)) out.push_back(*m);
    return out;
  }

  /// Number of structural candidates (|A| + starcount(A) = d+2) of kind i.
  std::size_t candidate_count(int i) const { return candidates_[i].size(); }
  Face candidate(int i, std::size_t k) const { return candidates_[i][k]; }

  /// Validates and applies a move; throws IllegalMove with the violated clause.
  void apply(const FlipMove& m) {
    const int i = m.kind;
    if (i < 0 || i > dim_) throw Error(ErrorKind::IllegalMove, "kind outside 0..d");
    if (m.remove.size() != dim_ + 1 - i || m.insert.size() != i + 1)
      throw Error(ErrorKind::IllegalMove, "face sizes do not match the move kind");
    if (!m.remove.disjoint(m.insert)) throw Error(ErrorKind::IllegalMove, "remove and insert faces intersect");
    if (i == 0) {
      if (!facets_.count(m.remove)) throw Error(ErrorKind::IllegalMove, "0-move needs a facet");
      if (used_.contains(m.insert.front())) throw Error(ErrorKind::IllegalMove, "0-move vertex is not fresh");
    } else {
      const auto it = star_count_.find(m.remove);
      if (it == star_count_.end()) throw Error(ErrorKind::IllegalMove, "{" + m.remove.str() + "} is not a face");
      if (it->second != i + 1) throw Error(ErrorKind::IllegalMove, "link of {" + m.remove.str() + "} is not the boundary of an " + std::to_string(i) + "-simplex");
      for (int b : m.insert)
        if (!facets_.count(m.remove | (m.insert - Face{b})))
          throw Error(ErrorKind::IllegalMove, "link of {" + m.remove.str() + "} is not the boundary of {" + m.insert.str() + "}");
      if (has_face(m.insert)) throw Error(ErrorKind::IllegalMove, "{" + m.insert.str() + "} is already a face");
    }
    apply_unchecked(m);
  }

  void apply_unchecked(const FlipMove& m) {
    touched_.clear();
    if (m.kind == 0) {
      remove_facet(m.remove);
    } else {
      for (int b : m.insert) remove_facet(m.remove | (m.insert - Face{b}));
    }
    if (m.kind == dim_) {
      add_facet(m.insert);
    } else {
      for (int a : m.remove) add_facet(m.insert | (m.remove - Face{a}));
    }
    std::sort(touched_.begin(), touched_.end(), [](Face x, Face y) { return x.bits() < y.bits(); });
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    for (Face f : touched_) refresh(f);
  }

  /// Snapshot as a canonical Complex (labels compacted).
  Complex to_complex() const {
    std::vector<Face> fs(facets_.begin(), facets_.end());
    return from_facets(fs);
  }

 private:
  std::size_t vertex_facets_count() const { return static_cast<std::size_t>(fcount_[0]); }

  const std::vector<Face>& facets_of_vertex(int v) const { return vfacets_[v]; }

  void bump(Face f, int delta) {
    auto [it, inserted] = star_count_.try_emplace(f, 0);
    if (inserted) ++fcount_[f.size() - 1];
    it->second += delta;
    if (it->second == 0) {
      star_count_.erase(it);
      --fcount_[f.size() - 1];
    }
    touched_.push_back(f);
  }

  void add_facet(Face f) {
    facets_.insert(f);
    for (int v : f) {
      vfacets_[v].push_back(f);
      used_.insert(v);
    }
    for_each_nonempty_subset(f, [&](Face s) { bump(s, +1); });
  }

  void remove_facet(Face f) {
    facets_.erase(f);
    for (int v : f) {
      auto& vec = vfacets_[v];
      auto it = std::find(vec.begin(), vec.end(), f);
      *it = vec.back();
      vec.pop_back();
      if (vec.empty()) used_.erase(v);
    }
    for_each_nonempty_subset(f, [&](Face s) { bump(s, -1); });
  }

  void refresh(Face f) {
    const auto it = star_count_.find(f);
    int want = -1;
    if (it != star_count_.end() && f.size() + it->second == dim_ + 2) want = dim_ + 1 - f.size();
    const auto pos = cand_pos_.find(f);
    const int have = pos == cand_pos_.end() ? -1 : pos->second.first;
    if (want == have) return;
    if (have >= 0) {
      auto& vec = candidates_[have];
      const std::size_t idx = pos->second.second;
      cand_pos_[vec.back()].second = idx;
      vec[idx] = vec.back();
      vec.pop_back();
      cand_pos_.erase(f);
    }
    if (want >= 0) {
      cand_pos_[f] = {want, candidates_[want].size()};
      candidates_[want].push_back(f);
    }
  }

  void refresh_all() {
    std::vector<Face> all;
    all.reserve(star_count_.size());
    for (const auto& [f, c] : star_count_) all.push_back(f);
    std::sort(all.begin(), all.end(), LexLess{});
    for (Face f : all) refresh(f);
    touched_.clear();
  }

  int dim_;
  std::unordered_map<Face, int, FaceHash> star_count_;
  std::unordered_map<Face, std::pair<int, std::size_t>, FaceHash> cand_pos_;
  std::array<std::vector<Face>, kMaxVertices + 1> candidates_{};
  std::array<std::vector<Face>, kMaxVertices + 1> vfacets_{};
  std::array<std::int64_t, kMaxVertices + 1> fcount_{};
  std::unordered_set<Face, FaceHash> facets_;
  Face used_;
  std::vector<Face> touched_;
};

/// All legal i-moves of C, ordered by the removed face.  For i = 0 the
/// inserted vertex is n+1.
inline std::vector<FlipMove> legal_moves(const Complex& c, int i) {
  if (i < 0 || i > c.dim()) throw Error(ErrorKind::InvalidArgument, "move kind outside 0..d");
  std::vector<FlipMove> out;
  if (i == 0) {
    if (c.num_vertices() >= kMaxVertices) return out;
    for (Face f : c.facets()) out.push_back({f, Face{c.num_vertices() + 1}, 0});
    return out;
  }
  FlipComplex fc(c);
  out = fc.legal_of_kind(i);
  std::sort(out.begin(), out.end(), [](const FlipMove& a, const FlipMove& b) { return lex_less(a.remove, b.remove); });
  return out;
}

/// Applies a move and re-canonicalizes: a removed vertex closes its gap, a
/// 0-move's new vertex must be n+1.
inline Complex apply_move(const Complex& c, const FlipMove& m) {
  if (m.kind == 0 && m.insert != Face{c.num_vertices() + 1})
    throw Error(ErrorKind::IllegalMove, "0-move must insert vertex " + std::to_string(c.num_vertices() + 1));
  FlipComplex fc(c);
  fc.apply(m);
  return fc.to_complex();
}

/// Annealing parameters.
struct Schedule {
  int initial_heat = 10;
  double heat_growth = 1.5;
  int max_heat = 200;
  /// Relative weights of move kinds during heating, by class.
  double weight_neutral = 4.0;
  double weight_increasing = 1.0;
  double weight_decreasing = 1.0;
  /// Stop as soon as the best complex has at most this many vertices (0: never).
  int target_vertices = 0;
};

struct ReduceStats {
  std::int64_t moves = 0;
  std::int64_t heating_rounds = 0;
  std::vector<std::int64_t> moves_by_kind;
  std::int64_t best_at_move = 0;
};

struct ReduceResult {
  Complex best;
  /// Moves from the input to `best`, in working labels (see FlipComplex).
  std::vector<FlipMove> trace;
  ReduceStats stats;
  bool reached_target = false;
};

/// Simulated-annealing reduction towards the lexicographically smallest
/// f-vector.  Deterministic in (input, seed, budget, schedule).
inline ReduceResult reduce(const Complex& c, std::uint64_t seed, std::int64_t budget, const Schedule& sched = {}) {
  if (budget <= 0) throw Error(ErrorKind::BudgetZero, "flip budget must be positive");
  const int d = c.dim();
  FlipComplex fc(c);
  SplitMix64 rng(seed);
  ReduceResult res;
  res.stats.moves_by_kind.assign(d + 1, 0);
  auto best_counts = fc.counts();
  std::vector<FlipMove> trace;
  std::size_t best_len = 0;
  double heat = sched.initial_heat;
  int heat_left = 0;

  auto reached = [&] { return sched.target_vertices > 0 && best_counts[0] <= sched.target_vertices; };
  auto done = [&] { return best_counts[0] == d + 2 || reached(); };

  auto do_move = [&](const FlipMove& m) {
    fc.apply_unchecked(m);
    trace.push_back(m);
    ++res.stats.moves;
    ++res.stats.moves_by_kind[m.kind];
    if (fc.compare_counts(best_counts) < 0) {
      best_counts = fc.counts();
      best_len = trace.size();
      res.stats.best_at_move = res.stats.moves;
      heat = sched.initial_heat;
    }
  };

  // Decreasing kinds: i > d/2; neutral: 2i == d; increasing: 1 <= i < d/2.
  std::vector<int> decreasing, neutral, increasing;
  for (int i = 1; i <= d; ++i) {
    if (2 * i > d) decreasing.push_back(i);
    else if (2 * i == d) neutral.push_back(i);
    else increasing.push_back(i);
  }
  std::reverse(decreasing.begin(), decreasing.end());

  while (res.stats.moves < budget && !done()) {
    if (heat_left == 0) {
      // Greedy: take a random move from the highest kind that lowers the key.
      bool moved = false;
      for (int i : decreasing) {
        auto ms = fc.legal_of_kind(i);
        if (ms.empty()) continue;
        do_move(ms[rng.below(ms.size())]);
        moved = true;
        break;
      }
      if (moved) continue;
      ++res.stats.heating_rounds;
      heat_left = static_cast<int>(heat);
      heat = std::min<double>(heat * sched.heat_growth, sched.max_heat);
    }
    // Heating: a random walk over all moves except vertex insertion.  A move
    // of class c is drawn with probability proportional to its class weight,
    // by rejection from the structural candidates.
    --heat_left;
    std::array<double, kMaxVertices + 1> kind_weight{};
    for (int i : decreasing) kind_weight[i] = sched.weight_decreasing;
    for (int i : neutral) kind_weight[i] = sched.weight_neutral;
    for (int i : increasing) kind_weight[i] = sched.weight_increasing;
    double total = 0;
    for (int i = 1; i <= d; ++i) total += kind_weight[i] * static_cast<double>(fc.candidate_count(i));
    std::optional<FlipMove> pick;
    for (int attempt = 0; attempt < 64 && total > 0 && !pick; ++attempt) {
      double x = rng.unit() * total;
      int i = 1;
      while (i < d && x >= kind_weight[i] * static_cast<double>(fc.candidate_count(i))) {
        x -= kind_weight[i] * static_cast<double>(fc.candidate_count(i));
        ++i;
      }
      if (fc.candidate_count(i) == 0) continue;
      pick = fc.move_at(fc.candidate(i, rng.below(fc.candidate_count(i))));
    }
    if (!pick) {
      // Rejection kept failing: draw from the explicit list instead.
      std::vector<FlipMove> pool;
      std::vector<double> weight;
      double sum = 0;
      for (int i = 1; i <= d; ++i)
        for (auto& m : fc.legal_of_kind(i)) {
          pool.push_back(m);
          weight.push_back(kind_weight[i]);
          sum += kind_weight[i];
        }
      if (pool.empty()) {
        // Nothing but 0-moves remain: subdivide a random facet.
        auto ms = fc.legal_of_kind(0);
        if (ms.empty()) break;
        do_move(ms[rng.below(ms.size())]);
        continue;
      }
      double x = rng.unit() * sum;
      std::size_t k = 0;
      while (k + 1 < pool.size() && x >= weight[k]) x -= weight[k++];
      pick = pool[k];
    }
    do_move(*pick);
  }

  trace.resize(best_len);
  FlipComplex replayed(c);
  for (const auto& m : trace) replayed.apply_unchecked(m);
  res.best = replayed.to_complex();
  res.trace = std::move(trace);
  res.reached_target = reached();
  return res;
}

/// Replays a trace produced by reduce() (working labels) and returns the
/// final complex.  Throws IllegalMove on the first illegal step.
inline Complex replay(const Complex& c, const std::vector<FlipMove>& trace) {
  FlipComplex fc(c);
  for (std::size_t k = 0; k < trace.size(); ++k) {
    try {
      fc.apply(trace[k]);
    } catch (const Error& e) {
      throw Error(ErrorKind::IllegalMove, "step " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return fc.to_complex();
}

/// Runs every seed and returns the first run (in seed order) reaching the
/// target; without a target (or if none reaches it) the run with the
/// smallest (f-vector, seed index) wins.  Seeds run on `threads` workers and
/// the choice does not depend on the thread count.
inline ReduceResult reduce_multi(const Complex& c, const std::vector<std::uint64_t>& seeds, std::int64_t budget,
                                 const Schedule& sched = {}, int threads = 1) {
  if (seeds.empty()) throw Error(ErrorKind::InvalidArgument, "no seeds");
  std::vector<std::optional<ReduceResult>> runs(seeds.size());
  std::atomic<std::size_t> next{0}, first_hit{seeds.size()};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < seeds.size();) {
      if (i > first_hit) continue;  // an earlier seed already succeeded
      runs[i] = reduce(c, seeds[i], budget, sched);
      if (runs[i]->reached_target)
        for (std::size_t cur = first_hit; i < cur && !first_hit.compare_exchange_weak(cur, i);) {
        }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::max(1, threads); ++t) pool.emplace_back(worker);
    worker();
  }
  if (first_hit < seeds.size()) return std::move(*runs[first_hit]);
  std::size_t best = 0;
  std::vector<std::int64_t> best_f;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    auto f = f_vector(runs[i]->best).counts;
    if (i == 0 || f < best_f) {
      best_f = std::move(f);
      best = i;
    }
  }
  return std::move(*runs[best]);
}

}  // namespace mw
