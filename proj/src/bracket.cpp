#include "ptangle/bracket.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <string>

#include "ptangle/errors.hpp"

namespace ptangle {

namespace {

constexpr int kDefaultLimit = 24;
constexpr int kHardLimit = 28;

void require_closed(const TangleDiagram& d) {
  if (!d.is_closed()) throw ValidationError("bracket needs a closed diagram (no boundary points)");
}

void guard(const TangleDiagram& d) {
  if (d.crossings() > crossing_limit())
    throw GuardExceeded("diagram has " + std::to_string(d.crossings()) + " crossings; limit is " +
                        std::to_string(crossing_limit()));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Union-find without path compression so unions can be undone in stack order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] > size_[b]) std::swap(a, b);
    parent_[a] = b;
    size_[b] += size_[a];
    history_.push_back(a);
    return true;
  }
  void undo() {
    int a = history_.back();
    history_.pop_back();
    size_[parent_[a]] -= size_[a];
    parent_[a] = a;
  }

 private:
  std::vector<int> parent_, size_, history_;
};

CycInt sum_by_a_count(const std::array<std::int64_t, 4>& count, int crossings) {
  CycInt total;
  for (int r = 0; r < 4; ++r)
    if (count[r]) total = total + cyc_scale(CycInt::power(2L * r - crossings), count[r]);
  return total;
}

// Monocyclic-state search. Edges of the loop graph are the smoothing pairs; nodes are arcs.
// A state is monocyclic iff the first 2c-1 smoothing joins each merge two components, so a
// branch is cut as soon as one join closes a loop early.
class MonocyclicSearch {
 public:
  explicit MonocyclicSearch(const TangleDiagram& d) : c_(d.crossings()), uf_(2 * d.crossings()) {
    std::vector<int> arc_of(d.port_count(), -1);
    int next = 0;
    for (int p = 0; p < d.port_count(); ++p)
      if (arc_of[p] < 0) arc_of[p] = arc_of[d.mate(p)] = next++;
    // Visit crossings breadth-first so partial states stay connected and prune early.
    std::vector<char> placed(c_, 0);
    for (int s = 0; s < c_; ++s) {
      if (placed[s]) continue;
      std::vector<int> queue{s};
      placed[s] = 1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        int j = queue[h];
        order_.push_back(j);
        for (int k = 0; k < 4; ++k) {
          int other = d.mate(4 * j + k) / 4;
          if (!placed[other]) {
            placed[other] = 1;
            queue.push_back(other);
          }
        }
      }
    }
    for (int j : order_) arcs_.push_back({arc_of[4 * j], arc_of[4 * j + 1], arc_of[4 * j + 2], arc_of[4 * j + 3]});
  }

  std::array<std::int64_t, 4> run() {
    count_ = {0, 0, 0, 0};
    visit(0, 0);
    return count_;
  }

 private:
  void visit(int depth, int a_count) {
    if (depth == c_) {
      ++count_[a_count & 3];
      return;
    }
    const auto& a = arcs_[depth];
    const bool last = depth == c_ - 1;
    // A joins slots (0,1),(2,3); B joins (0,3),(1,2).
    try_pair(depth, a_count + 1, a[0], a[1], a[2], a[3], last);
    try_pair(depth, a_count, a[0], a[3], a[1], a[2], last);
  }
  void try_pair(int depth, int a_count, int u1, int v1, int u2, int v2, bool last) {
    if (!uf_.unite(u1, v1)) return;
    bool merged = uf_.unite(u2, v2);
    if (merged || last) visit(depth + 1, a_count);
    if (merged) uf_.undo();
    uf_.undo();
  }

  int c_;
  RollbackUnionFind uf_;
  std::vector<int> order_;
  std::vector<std::array<int, 4>> arcs_;
  std::array<std::int64_t, 4> count_{};
};

// Bracket of a diagram with no crossings: one circle is 1, more are 0.
CycInt crossingless(const TangleDiagram& d) {
  if (d.free_loops() == 0) throw ValidationError("bracket of the empty diagram is undefined");
  return CycInt(d.free_loops() == 1 ? 1 : 0);
}

}  // namespace

int crossing_limit() {
  if (const char* env = std::getenv("PTANGLE_MAX_CROSSINGS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, kHardLimit));
  }
  return kDefaultLimit;
}

int loop_count(const TangleDiagram& d, State s) {
  require_closed(d);
  UnionFind uf(d.port_count());
  int joins = 0;
  for (int p = 0; p < d.port_count(); ++p)
    if (p < d.mate(p)) joins += uf.unite(p, d.mate(p));
  for (int j = 0; j < d.crossings(); ++j) {
    int c = 4 * j;
    if (s >> j & 1) {
      joins += uf.unite(c, c + 1);
      joins += uf.unite(c + 2, c + 3);
    } else {
      joins += uf.unite(c, c + 3);
      joins += uf.unite(c + 1, c + 2);
    }
  }
  return d.port_count() - joins + d.free_loops();
}

CycInt bracket_cyc(const TangleDiagram& d) {
  require_closed(d);
  guard(d);
  if (d.crossings() == 0) return crossingless(d);
  if (d.free_loops() > 0) return CycInt();
  auto count = MonocyclicSearch(d).run();
  if ((count[0] || count[2]) && (count[1] || count[3]))
    throw CoherenceError("monocyclic states disagree on exponent mod 4 (diagram not planar?)");
  return sum_by_a_count(count, d.crossings());
}

ZPhi bracket(const TangleDiagram& d) {
  auto z = to_zphi(bracket_cyc(d));
  if (!z) throw CoherenceError("bracket is not a monomial p*A^k");
  return *z;
}

CycInt bracket_exhaustive(const TangleDiagram& d) {
  require_closed(d);
  guard(d);
  if (d.crossings() == 0) return crossingless(d);
  CycInt total;
  const State states = State(1) << d.crossings();
  for (State s = 0; s < states; ++s)
    if (loop_count(d, s) == 1)
      total = total + CycInt::power(2L * __builtin_popcountll(s) - d.crossings());
  return total;
}

SkeinReport skein_check(const TangleDiagram& d, int crossing) {
  CycInt lhs = bracket_cyc(d);
  CycInt rhs = cyc_mul_power(bracket_cyc(smooth(d, crossing, Smoothing::A)), 1) +
               cyc_mul_power(bracket_cyc(smooth(d, crossing, Smoothing::B)), -1);
  return {lhs == rhs, lhs, rhs};
}

std::map<Matching, CycInt> boundary_expansion(const TangleDiagram& d) {
  if (d.hole_count() != 0) throw ValidationError("boundary_expansion needs a diagram without holes");
  guard(d);
  std::map<Matching, CycInt> out;
  const int c = d.crossings(), base = d.crossing_offset();
  const State states = State(1) << c;
  for (State s = 0; s < states; ++s) {
    auto across = [&](int p) {
      int j = (p - base) / 4, k = (p - base) % 4;
      int partner = (s >> j & 1) ? (k ^ 1) : (3 - k);
      return base + 4 * j + partner;
    };
    std::vector<char> seen(d.port_count(), 0);
    Matching m(d.outer_points(), -1);
    for (int o = 0; o < d.outer_points(); ++o) {
      if (seen[o]) continue;
      int p = d.mate(o);
      seen[o] = 1;
      while (p >= base) {
        seen[p] = 1;
        int q = across(p);
        seen[q] = 1;
        p = d.mate(q);
      }
      seen[p] = 1;
      m[o] = p;
      m[p] = o;
    }
    bool loops = d.free_loops() > 0;
    for (int p = base; p < d.port_count() && !loops; ++p) loops = !seen[p];
    if (loops) continue;
    out[m] = out[m] + CycInt::power(2L * __builtin_popcountll(s) - c);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace ptangle
