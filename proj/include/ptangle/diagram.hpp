#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace ptangle {

enum class PortKind { Outer, Hole, Crossing };

// Boundary slots are 1-based (1=NW, 2=NE, 3=SE, 4=SW on a 4-point circle, clockwise).
// Holes are numbered from 1, crossings from 0. Crossing slots 0..3 run counterclockwise
// from the incoming under-strand, so the over-strand sits at slots 1 and 3.
struct Port {
  PortKind kind = PortKind::Outer;
  int owner = 0;
  int slot = 1;

  static Port outer(int slot) { return {PortKind::Outer, 0, slot}; }
  static Port hole(int h, int slot) { return {PortKind::Hole, h, slot}; }
  static Port crossing(int j, int slot) { return {PortKind::Crossing, j, slot}; }
  friend bool operator==(const Port&, const Port&) = default;
};

std::string port_name(const Port& p);

enum Slot4 { NW = 1, NE = 2, SE = 3, SW = 4 };

class TangleDiagram {
 public:
  TangleDiagram() = default;
  // Throws ValidationError unless the arcs form a perfect matching on all ports.
  TangleDiagram(int outer_points, std::vector<int> hole_points, int crossings,
                const std::vector<std::pair<Port, Port>>& arcs, int free_loops = 0);

  int outer_points() const { return outer_; }
  int hole_count() const { return static_cast<int>(holes_.size()); }
  const std::vector<int>& hole_points() const { return holes_; }
  int crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  bool is_closed() const { return outer_ == 0 && holes_.empty(); }
  // True when the outer boundary and every hole carry 4 points.
  bool four_point() const;

  std::vector<std::pair<Port, Port>> arcs() const;

  // Flat port numbering: outer slots, then each hole's slots, then 4 per crossing.
  int port_count() const { return static_cast<int>(mate_.size()); }
  int index(const Port& p) const;
  Port port(int idx) const;
  int mate(int idx) const { return mate_[idx]; }
  int hole_offset(int h) const { return hole_offset_[h - 1]; }
  int crossing_offset() const { return crossing_base_; }

  // Builds from a flat mate array laid out as above.
  static TangleDiagram from_mates(int outer_points, std::vector<int> hole_points, int crossings,
                                  std::vector<int> mates, int free_loops);

 private:
  void layout();
  void validate() const;

  int outer_ = 0;
  std::vector<int> holes_;
  std::vector<int> hole_offset_;
  int crossing_base_ = 0;
  int crossings_ = 0;
  std::vector<int> mate_;
  int free_loops_ = 0;
};

enum class PrimitiveKind { Identity, Zero, Inf, HTwist, VTwist, Circle };
struct Primitive {
  PrimitiveKind kind;
  long twists = 0;
};

TangleDiagram make_primitive(const Primitive& p);
TangleDiagram identity_sphere();
TangleDiagram zero_tangle();
TangleDiagram inf_tangle();
TangleDiagram htwist(long p);
TangleDiagram vtwist(long q);
TangleDiagram free_circle();
// One hole with the given point count, wired straight through to the outer boundary.
TangleDiagram passthrough(int points);

// Hole i is glued slotwise to the outer boundary of args[i]; the args' holes become the
// result's holes, in argument order.
TangleDiagram fill(const TangleDiagram& head, const std::vector<TangleDiagram>& args);

enum class Closure { Numerator, Denominator };
TangleDiagram close(const TangleDiagram& d, Closure kind);

enum class Elementary { Mirror, Swap, R1, R2, Rot, HFlip, VFlip };
TangleDiagram elementary(const TangleDiagram& d, Elementary op);

enum class SumKind { HSum, VSum, IHSum, IVSum };
enum class SumOrder { Normal, Op };
// Inner sums take one 0-hole operand and one 1-hole operand, in either position.
TangleDiagram connect_sum(const TangleDiagram& a, const TangleDiagram& b, SumKind kind,
                          SumOrder order = SumOrder::Normal);

enum class Smoothing { A, B };
// Removes crossing j, joining slots (0,1),(2,3) for A or (0,3),(1,2) for B.
TangleDiagram smooth(const TangleDiagram& d, int crossing, Smoothing s);

// The two 6-point triangle gadgets of a delta move. Strands join opposite boundary points.
TangleDiagram delta_gadget(int variant);
// Fills the template's unique 6-point hole with each gadget; other holes are kept.
std::pair<TangleDiagram, TangleDiagram> delta_pair(const TangleDiagram& tmpl);

}  // namespace ptangle
