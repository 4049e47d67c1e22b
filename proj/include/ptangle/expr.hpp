#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ptangle/diagram.hpp"

namespace ptangle {

enum class ExprKind {
  Identity, Zero, Inf, Circle, HTwist, VTwist,
  Fill, Compose, HSum, VSum, IHSum, IVSum,
  Mirror, Swap, R1, R2, Rot, HFlip, VFlip,
  Num, Den,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  long twists = 0;             // HTwist / VTwist only
  std::vector<ExprPtr> args;   // Fill: head then fillers; Compose: outer then inner
};

namespace ex {
ExprPtr identity();
ExprPtr zero();
ExprPtr inf();
ExprPtr circle();
ExprPtr htwist(long p);
ExprPtr vtwist(long q);
ExprPtr fill(ExprPtr head, std::vector<ExprPtr> parts);
ExprPtr compose(ExprPtr outer, ExprPtr inner);
ExprPtr binary(ExprKind kind, ExprPtr a, ExprPtr b);
ExprPtr unary(ExprKind kind, ExprPtr a);
}  // namespace ex

// Grammar (whitespace-insensitive):
//   expr := I | zero | inf | circle | htwist(int) | vtwist(int)
//         | fill(expr {, expr}) | compose(expr, expr)
//         | hsum|vsum|ihsum|ivsum (expr, expr)
//         | mirror|swap|r1|r2|rot|hflip|vflip (expr)
//         | num(expr) | den(expr)        numerator / denominator closure
ExprPtr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

TangleDiagram elaborate(const Expr& e);
// Hole count of the elaborated diagram (-1 for closed links), checked without building it.
int expr_holes(const Expr& e);
// Crossing count of the elaborated diagram, without building it.
long expr_crossings(const Expr& e);

}  // namespace ptangle
