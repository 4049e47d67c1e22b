#include "ptangle/diagram.hpp"

#include <cstdlib>

#include "ptangle/errors.hpp"

namespace ptangle {

std::string port_name(const Port& p) {
  switch (p.kind) {
    case PortKind::Outer: return "outer." + std::to_string(p.slot);
    case PortKind::Hole: return "hole" + std::to_string(p.owner) + "." + std::to_string(p.slot);
    case PortKind::Crossing: return "x" + std::to_string(p.owner) + "." + std::to_string(p.slot);
  }
  return "?";
}

// ---------------------------------------------------------------- TangleDiagram

void TangleDiagram::layout() {
  hole_offset_.clear();
  int at = outer_;
  for (int h : holes_) {
    hole_offset_.push_back(at);
    at += h;
  }
  crossing_base_ = at;
}

TangleDiagram::TangleDiagram(int outer_points, std::vector<int> hole_points, int crossings,
                             const std::vector<std::pair<Port, Port>>& arcs, int free_loops)
    : outer_(outer_points), holes_(std::move(hole_points)), crossings_(crossings), free_loops_(free_loops) {
  if (outer_ < 0 || crossings_ < 0 || free_loops_ < 0) throw ValidationError("negative diagram size");
  for (int h : holes_)
    if (h <= 0) throw ValidationError("a hole needs at least one point");
  layout();
  mate_.assign(crossing_base_ + 4 * crossings_, -1);
  for (const auto& [a, b] : arcs) {
    int i = index(a), j = index(b);
    if (i == j) throw ValidationError("arc joins " + port_name(a) + " to itself");
    if (mate_[i] != -1) throw ValidationError("port " + port_name(a) + " used twice");
    if (mate_[j] != -1) throw ValidationError("port " + port_name(b) + " used twice");
    mate_[i] = j;
    mate_[j] = i;
  }
  for (int i = 0; i < port_count(); ++i)
    if (mate_[i] == -1) throw ValidationError("port " + port_name(port(i)) + " is not on any arc");
}

TangleDiagram TangleDiagram::from_mates(int outer_points, std::vector<int> hole_points, int crossings,
                                        std::vector<int> mates, int free_loops) {
  TangleDiagram d;
  d.outer_ = outer_points;
  d.holes_ = std::move(hole_points);
  d.crossings_ = crossings;
  d.free_loops_ = free_loops;
  d.layout();
  d.mate_ = std::move(mates);
  d.validate();
  return d;
}

void TangleDiagram::validate() const {
  if (static_cast<int>(mate_.size()) != crossing_base_ + 4 * crossings_)
    throw ValidationError("mate array has the wrong size");
  for (int i = 0; i < port_count(); ++i) {
    int j = mate_[i];
    if (j < 0 || j >= port_count() || j == i || mate_[j] != i)
      throw ValidationError("arcs are not a perfect matching");
  }
}

bool TangleDiagram::four_point() const {
  if (outer_ != 4) return false;
  for (int h : holes_)
    if (h != 4) return false;
  return true;
}

int TangleDiagram::index(const Port& p) const {
  switch (p.kind) {
    case PortKind::Outer:
      if (p.slot < 1 || p.slot > outer_) throw ValidationError("no port " + port_name(p));
      return p.slot - 1;
    case PortKind::Hole:
      if (p.owner < 1 || p.owner > hole_count() || p.slot < 1 || p.slot > holes_[p.owner - 1])
        throw ValidationError("no port " + port_name(p));
      return hole_offset_[p.owner - 1] + p.slot - 1;
    case PortKind::Crossing:
      if (p.owner < 0 || p.owner >= crossings_ || p.slot < 0 || p.slot > 3)
        throw ValidationError("no port " + port_name(p));
      return crossing_base_ + 4 * p.owner + p.slot;
  }
  throw ValidationError("bad port kind");
}

Port TangleDiagram::port(int idx) const {
  if (idx < outer_) return Port::outer(idx + 1);
  if (idx >= crossing_base_) return Port::crossing((idx - crossing_base_) / 4, (idx - crossing_base_) % 4);
  for (int h = hole_count(); h >= 1; --h)
    if (idx >= hole_offset_[h - 1]) return Port::hole(h, idx - hole_offset_[h - 1] + 1);
  throw ValidationError("port index out of range");
}

std::vector<std::pair<Port, Port>> TangleDiagram::arcs() const {
  std::vector<std::pair<Port, Port>> out;
  for (int i = 0; i < port_count(); ++i)
    if (i < mate_[i]) out.emplace_back(port(i), port(mate_[i]));
  return out;
}

// ---------------------------------------------------------------- assembly

namespace {

// Several diagrams laid side by side in one flat port space. Ports that are glued act as
// pass-through points and disappear; every other port must be listed as a survivor.
struct Assembly {
  std::vector<int> mate;
  std::vector<int> glue;
  std::vector<int> outer;
  std::vector<std::vector<int>> holes;
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;

  int add(const TangleDiagram& d) {
    int base = static_cast<int>(mate.size());
    for (int i = 0; i < d.port_count(); ++i) mate.push_back(base + d.mate(i));
    glue.resize(mate.size(), -1);
    free_loops += d.free_loops();
    return base;
  }
  void join(int a, int b) {
    glue[a] = b;
    glue[b] = a;
  }
  void keep_crossings(const TangleDiagram& d, int base) {
    for (int j = 0; j < d.crossings(); ++j) {
      int c = base + d.crossing_offset() + 4 * j;
      crossings.push_back({c, c + 1, c + 2, c + 3});
    }
  }

  TangleDiagram build() const {
    const int n = static_cast<int>(mate.size());
    std::vector<int> id(n, -1);
    int next = 0;
    for (int p : outer) id[p] = next++;
    std::vector<int> hole_points;
    for (const auto& h : holes) {
      for (int p : h) id[p] = next++;
      hole_points.push_back(static_cast<int>(h.size()));
    }
    for (const auto& c : crossings)
      for (int p : c) id[p] = next++;

    std::vector<int> out(next, -1);
    std::vector<char> seen(n, 0);
    for (int p = 0; p < n; ++p) {
      if (id[p] < 0 || seen[p]) continue;
      seen[p] = 1;
      int q = mate[p];
      while (glue[q] != -1) {
        seen[q] = 1;
        int g = glue[q];
        seen[g] = 1;
        q = mate[g];
      }
      if (id[q] < 0) throw ValidationError("assembly left a dangling port");
      seen[q] = 1;
      out[id[p]] = id[q];
      out[id[q]] = id[p];
    }
    int loops = free_loops;
    for (int p = 0; p < n; ++p) {
      if (seen[p]) continue;
      if (glue[p] == -1) throw ValidationError("assembly dropped a port");
      ++loops;
      int q = p;
      do {
        seen[q] = 1;
        int g = glue[q];
        seen[g] = 1;
        q = mate[g];
      } while (q != p);
    }
    return TangleDiagram::from_mates(static_cast<int>(outer.size()), hole_points,
                                     static_cast<int>(crossings.size()), out, loops);
  }
};

std::vector<int> range(int from, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

// Renames ports: new_index[old] gives the new flat index; crossing count is unchanged.
TangleDiagram relabel(const TangleDiagram& d, int outer_points, std::vector<int> hole_points,
                      const std::vector<int>& new_index) {
  std::vector<int> mates(d.port_count(), -1);
  for (int i = 0; i < d.port_count(); ++i) mates[new_index[i]] = new_index[d.mate(i)];
  return TangleDiagram::from_mates(outer_points, std::move(hole_points), d.crossings(), mates,
                                   d.free_loops());
}

void require_four_point(const TangleDiagram& d, const char* what) {
  if (!d.four_point())
    throw ValidationError(std::string(what) + " needs 4-point outer boundary and 4-point holes");
}

// Boundary slot maps on a 4-point circle (1-based in, 1-based out).
int rotate_slot(int k) { return k == 1 ? 4 : k - 1; }
int hreflect_slot(int k) { return k == 1 ? 2 : k == 2 ? 1 : k == 3 ? 4 : 3; }
int vreflect_slot(int k) { return 5 - k; }

// Crossing slot maps (old slot -> new slot).
int mirror_cslot(int s) { return (s + 3) % 4; }
int flip_cslot(int s) { return s ^ 1; }

enum class Part { Outer, Holes, Both };

TangleDiagram map_slots(const TangleDiagram& d, int (*boundary)(int), Part part, int (*cross)(int)) {
  std::vector<int> idx(d.port_count());
  for (int i = 0; i < d.port_count(); ++i) {
    Port p = d.port(i);
    if (p.kind == PortKind::Outer && boundary && part != Part::Holes) p.slot = boundary(p.slot);
    if (p.kind == PortKind::Hole && boundary && part != Part::Outer) p.slot = boundary(p.slot);
    if (p.kind == PortKind::Crossing && cross) p.slot = cross(p.slot);
    idx[i] = d.index(p);
  }
  return relabel(d, d.outer_points(), d.hole_points(), idx);
}

TangleDiagram swap_sides(const TangleDiagram& d) {
  std::vector<int> idx(d.port_count());
  for (int i = 0; i < d.port_count(); ++i) {
    Port p = d.port(i);
    if (p.kind == PortKind::Outer)
      p = Port::hole(1, p.slot);
    else if (p.kind == PortKind::Hole)
      p = Port::outer(p.slot);
    else
      p.slot = flip_cslot(p.slot);
    idx[i] = d.index(p);
  }
  return relabel(d, d.outer_points(), d.hole_points(), idx);
}

TangleDiagram sum_frame() {
  return TangleDiagram(4, {4, 4}, 0,
                       {{Port::outer(NW), Port::hole(1, NW)},
                        {Port::outer(SW), Port::hole(1, SW)},
                        {Port::hole(1, NE), Port::hole(2, NW)},
                        {Port::hole(1, SE), Port::hole(2, SW)},
                        {Port::hole(2, NE), Port::outer(NE)},
                        {Port::hole(2, SE), Port::outer(SE)}});
}

TangleDiagram single_crossing(bool positive) {
  // Strands NW-SE (under) and NE-SW (over); the A-smoothing is vertical.
  TangleDiagram d(4, {}, 1,
                  {{Port::crossing(0, 0), Port::outer(NW)},
                   {Port::crossing(0, 1), Port::outer(SW)},
                   {Port::crossing(0, 2), Port::outer(SE)},
                   {Port::crossing(0, 3), Port::outer(NE)}});
  return positive ? d : elementary(d, Elementary::Mirror);
}

TangleDiagram hsum(const TangleDiagram& a, const TangleDiagram& b) { return fill(sum_frame(), {a, b}); }

TangleDiagram rot(const TangleDiagram& d, int times) {
  TangleDiagram r = d;
  for (int i = 0; i < times; ++i) r = elementary(r, Elementary::Rot);
  return r;
}

TangleDiagram vsum(const TangleDiagram& a, const TangleDiagram& b) {
  return rot(hsum(rot(a, 1), rot(b, 1)), 3);
}

}  // namespace

// ---------------------------------------------------------------- constructors

TangleDiagram identity_sphere() { return passthrough(4); }

TangleDiagram passthrough(int points) {
  std::vector<std::pair<Port, Port>> arcs;
  for (int k = 1; k <= points; ++k) arcs.emplace_back(Port::hole(1, k), Port::outer(k));
  return TangleDiagram(points, {points}, 0, arcs);
}

TangleDiagram zero_tangle() {
  return TangleDiagram(4, {}, 0, {{Port::outer(NW), Port::outer(NE)}, {Port::outer(SW), Port::outer(SE)}});
}

TangleDiagram inf_tangle() {
  return TangleDiagram(4, {}, 0, {{Port::outer(NW), Port::outer(SW)}, {Port::outer(NE), Port::outer(SE)}});
}

TangleDiagram htwist(long p) {
  if (p == 0) return zero_tangle();
  TangleDiagram x = single_crossing(p > 0);
  TangleDiagram r = x;
  for (long i = 1; i < std::labs(p); ++i) r = hsum(r, x);
  return r;
}

TangleDiagram vtwist(long q) {
  if (q == 0) return inf_tangle();
  TangleDiagram x = single_crossing(q > 0);
  TangleDiagram r = x;
  for (long i = 1; i < std::labs(q); ++i) r = vsum(r, x);
  return r;
}

TangleDiagram free_circle() { return TangleDiagram(0, {}, 0, {}, 1); }

TangleDiagram make_primitive(const Primitive& p) {
  switch (p.kind) {
    case PrimitiveKind::Identity: return identity_sphere();
    case PrimitiveKind::Zero: return zero_tangle();
    case PrimitiveKind::Inf: return inf_tangle();
    case PrimitiveKind::HTwist: return htwist(p.twists);
    case PrimitiveKind::VTwist: return vtwist(p.twists);
    case PrimitiveKind::Circle: return free_circle();
  }
  throw ValidationError("unknown primitive");
}

// ---------------------------------------------------------------- operations

TangleDiagram fill(const TangleDiagram& head, const std::vector<TangleDiagram>& args) {
  if (static_cast<int>(args.size()) != head.hole_count())
    throw ValidationError("fill: head has " + std::to_string(head.hole_count()) + " holes but " +
                          std::to_string(args.size()) + " arguments were given");
  Assembly as;
  int hb = as.add(head);
  as.outer = range(hb, head.outer_points());
  as.keep_crossings(head, hb);
  for (int i = 0; i < head.hole_count(); ++i) {
    const TangleDiagram& a = args[i];
    const int points = head.hole_points()[i];
    if (a.outer_points() != points)
      throw ValidationError("fill: hole " + std::to_string(i + 1) + " has " + std::to_string(points) +
                            " points but its argument has " + std::to_string(a.outer_points()));
    int ab = as.add(a);
    for (int k = 0; k < points; ++k) as.join(hb + head.hole_offset(i + 1) + k, ab + k);
    for (int h = 1; h <= a.hole_count(); ++h) as.holes.push_back(range(ab + a.hole_offset(h), a.hole_points()[h - 1]));
    as.keep_crossings(a, ab);
  }
  return as.build();
}

TangleDiagram close(const TangleDiagram& d, Closure kind) {
  if (d.outer_points() != 4 || d.hole_count() != 0)
    throw ValidationError("close: needs a 0-hole diagram with 4 outer points");
  TangleDiagram cap = kind == Closure::Numerator
                          ? TangleDiagram(0, {4}, 0, {{Port::hole(1, NW), Port::hole(1, NE)}, {Port::hole(1, SW), Port::hole(1, SE)}})
                          : TangleDiagram(0, {4}, 0, {{Port::hole(1, NW), Port::hole(1, SW)}, {Port::hole(1, NE), Port::hole(1, SE)}});
  return fill(cap, {d});
}

TangleDiagram elementary(const TangleDiagram& d, Elementary op) {
  switch (op) {
    case Elementary::Mirror:
      return map_slots(d, nullptr, Part::Both, mirror_cslot);
    case Elementary::Rot:
      require_four_point(d, "rot");
      return map_slots(d, rotate_slot, Part::Both, nullptr);
    case Elementary::HFlip:
      require_four_point(d, "hflip");
      return map_slots(d, hreflect_slot, Part::Both, flip_cslot);
    case Elementary::VFlip:
      require_four_point(d, "vflip");
      return map_slots(d, vreflect_slot, Part::Both, flip_cslot);
    case Elementary::R1:
    case Elementary::R2:
    case Elementary::Swap:
      if (d.hole_count() != 1) throw ValidationError("swap/r1/r2 need exactly one hole");
      require_four_point(d, "swap/r1/r2");
      if (op == Elementary::R1) return map_slots(d, rotate_slot, Part::Holes, nullptr);
      if (op == Elementary::R2) return map_slots(d, rotate_slot, Part::Outer, nullptr);
      return swap_sides(d);
  }
  throw ValidationError("unknown elementary operation");
}

TangleDiagram connect_sum(const TangleDiagram& a0, const TangleDiagram& b0, SumKind kind, SumOrder order) {
  const TangleDiagram& a = order == SumOrder::Normal ? a0 : b0;
  const TangleDiagram& b = order == SumOrder::Normal ? b0 : a0;
  require_four_point(a, "connect sum");
  require_four_point(b, "connect sum");
  if (kind == SumKind::HSum) return hsum(a, b);
  if (kind == SumKind::VSum) return vsum(a, b);

  const bool horizontal = kind == SumKind::IHSum;
  const Elementary flip = horizontal ? Elementary::HFlip : Elementary::VFlip;
  auto outer_sum = [&](const TangleDiagram& x, const TangleDiagram& y) {
    return horizontal ? hsum(x, y) : vsum(x, y);
  };
  if (a.hole_count() == 0 && b.hole_count() == 1)
    return elementary(outer_sum(elementary(b, Elementary::Swap), elementary(a, flip)), Elementary::Swap);
  if (a.hole_count() == 1 && b.hole_count() == 0)
    return elementary(outer_sum(elementary(b, flip), elementary(a, Elementary::Swap)), Elementary::Swap);
  throw ValidationError("inner connect sum needs one ball operand and one spherical operand");
}

TangleDiagram smooth(const TangleDiagram& d, int crossing, Smoothing s) {
  if (crossing < 0 || crossing >= d.crossings()) throw ValidationError("smooth: no such crossing");
  Assembly as;
  as.add(d);
  as.outer = range(0, d.outer_points());
  for (int h = 1; h <= d.hole_count(); ++h) as.holes.push_back(range(d.hole_offset(h), d.hole_points()[h - 1]));
  for (int j = 0; j < d.crossings(); ++j) {
    int c = d.crossing_offset() + 4 * j;
    if (j != crossing) {
      as.crossings.push_back({c, c + 1, c + 2, c + 3});
    } else if (s == Smoothing::A) {
      as.join(c, c + 1);
      as.join(c + 2, c + 3);
    } else {
      as.join(c, c + 3);
      as.join(c + 1, c + 2);
    }
  }
  return as.build();
}

// ---------------------------------------------------------------- delta move

TangleDiagram delta_gadget(int variant) {
  // Boundary points 1..6 clockwise; strands a: 1-4, b: 2-5, c: 3-6 pairwise crossing once,
  // with a over b, b over c, c over a. Crossings: x0 = a/b, x1 = a/c, x2 = b/c.
  // Slots (ccw from an under half-edge):
  //   x0: 0 b toward 2, 1 a toward 1, 2 b toward 5, 3 a toward 4
  //   x1: 0 a toward 1, 1 c toward 6, 2 a toward 4, 3 c toward 3
  //   x2: 0 c toward 3, 1 b toward 2, 2 c toward 6, 3 b toward 5
  // Variant 0 has the triangle on the 1-2 side of strand c, variant 1 the opposite side.
  auto X = [](int j, int s) { return Port::crossing(j, s); };
  auto O = [](int k) { return Port::outer(k); };
  if (variant == 0)
    return TangleDiagram(6, {}, 3,
                         {{X(1, 0), O(1)}, {X(1, 2), X(0, 1)}, {X(0, 3), O(4)},
                          {X(2, 1), O(2)}, {X(2, 3), X(0, 0)}, {X(0, 2), O(5)},
                          {X(1, 1), O(6)}, {X(1, 3), X(2, 2)}, {X(2, 0), O(3)}});
  if (variant == 1)
    return TangleDiagram(6, {}, 3,
                         {{X(0, 1), O(1)}, {X(0, 3), X(1, 0)}, {X(1, 2), O(4)},
                          {X(0, 0), O(2)}, {X(0, 2), X(2, 1)}, {X(2, 3), O(5)},
                          {X(2, 2), O(6)}, {X(2, 0), X(1, 1)}, {X(1, 3), O(3)}});
  throw ValidationError("delta gadget variant must be 0 or 1");
}

std::pair<TangleDiagram, TangleDiagram> delta_pair(const TangleDiagram& tmpl) {
  int six = -1;
  for (int h = 0; h < tmpl.hole_count(); ++h) {
    if (tmpl.hole_points()[h] == 6) {
      if (six != -1) throw ValidationError("delta_pair: template has more than one 6-point hole");
      six = h;
    }
  }
  if (six == -1) throw ValidationError("delta_pair: template has no 6-point hole");
  std::vector<TangleDiagram> args;
  for (int h = 0; h < tmpl.hole_count(); ++h) args.push_back(passthrough(tmpl.hole_points()[h]));
  args[six] = delta_gadget(0);
  TangleDiagram first = fill(tmpl, args);
  args[six] = delta_gadget(1);
  return {first, fill(tmpl, args)};
}

}  // namespace ptangle
