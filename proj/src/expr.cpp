#include "ptangle/expr.hpp"

#include <cctype>
#include <cstdlib>

#include "ptangle/errors.hpp"

namespace ptangle {

namespace {

struct Name {
  const char* text;
  ExprKind kind;
  int arity;  // -1: fill (one or more)
};

const Name kNames[] = {
    {"I", ExprKind::Identity, 0},  {"zero", ExprKind::Zero, 0},     {"inf", ExprKind::Inf, 0},
    {"circle", ExprKind::Circle, 0}, {"htwist", ExprKind::HTwist, 0}, {"vtwist", ExprKind::VTwist, 0},
    {"fill", ExprKind::Fill, -1},  {"compose", ExprKind::Compose, 2}, {"hsum", ExprKind::HSum, 2},
    {"vsum", ExprKind::VSum, 2},   {"ihsum", ExprKind::IHSum, 2},    {"ivsum", ExprKind::IVSum, 2},
    {"mirror", ExprKind::Mirror, 1}, {"swap", ExprKind::Swap, 1},    {"r1", ExprKind::R1, 1},
    {"r2", ExprKind::R2, 1},       {"rot", ExprKind::Rot, 1},        {"hflip", ExprKind::HFlip, 1},
    {"vflip", ExprKind::VFlip, 1}, {"num", ExprKind::Num, 1},        {"den", ExprKind::Den, 1},
};

const Name& name_of(ExprKind k) {
  for (const auto& n : kNames)
    if (n.kind == k) return n;
  throw ValidationError("unknown expression kind");
}

ExprPtr node(ExprKind k, std::vector<ExprPtr> args = {}, long twists = 0) {
  return std::make_shared<const Expr>(Expr{k, twists, std::move(args)});
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected an integer", start);
    if (pos_ - digits > 9) throw ParseError("integer too large", start);
    return std::strtol(std::string(s_.substr(start, pos_ - start)).c_str(), nullptr, 10);
  }
  ExprPtr expr() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view word = s_.substr(start, pos_ - start);
    if (word.empty()) throw ParseError("expected an expression", start);
    const Name* found = nullptr;
    for (const auto& n : kNames)
      if (word == n.text) found = &n;
    if (!found) throw ParseError("unknown name '" + std::string(word) + "'", start);

    if (found->kind == ExprKind::HTwist || found->kind == ExprKind::VTwist) {
      expect('(');
      long v = integer();
      expect(')');
      return node(found->kind, {}, v);
    }
    if (found->arity == 0) return node(found->kind);

    expect('(');
    std::vector<ExprPtr> args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    if (found->arity > 0 && static_cast<int>(args.size()) != found->arity)
      throw ParseError(std::string(found->text) + " takes " + std::to_string(found->arity) + " argument(s)", start);
    return node(found->kind, std::move(args));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

SumKind sum_kind(ExprKind k) {
  switch (k) {
    case ExprKind::HSum: return SumKind::HSum;
    case ExprKind::VSum: return SumKind::VSum;
    case ExprKind::IHSum: return SumKind::IHSum;
    default: return SumKind::IVSum;
  }
}

Elementary elementary_kind(ExprKind k) {
  switch (k) {
    case ExprKind::Mirror: return Elementary::Mirror;
    case ExprKind::Swap: return Elementary::Swap;
    case ExprKind::R1: return Elementary::R1;
    case ExprKind::R2: return Elementary::R2;
    case ExprKind::Rot: return Elementary::Rot;
    case ExprKind::HFlip: return Elementary::HFlip;
    default: return Elementary::VFlip;
  }
}

}  // namespace

namespace ex {
ExprPtr identity() { return node(ExprKind::Identity); }
ExprPtr zero() { return node(ExprKind::Zero); }
ExprPtr inf() { return node(ExprKind::Inf); }
ExprPtr circle() { return node(ExprKind::Circle); }
ExprPtr htwist(long p) { return node(ExprKind::HTwist, {}, p); }
ExprPtr vtwist(long q) { return node(ExprKind::VTwist, {}, q); }
ExprPtr fill(ExprPtr head, std::vector<ExprPtr> parts) {
  parts.insert(parts.begin(), std::move(head));
  return node(ExprKind::Fill, std::move(parts));
}
ExprPtr compose(ExprPtr outer, ExprPtr inner) { return node(ExprKind::Compose, {std::move(outer), std::move(inner)}); }
ExprPtr binary(ExprKind kind, ExprPtr a, ExprPtr b) { return node(kind, {std::move(a), std::move(b)}); }
ExprPtr unary(ExprKind kind, ExprPtr a) { return node(kind, {std::move(a)}); }
}  // namespace ex

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  const Name& n = name_of(e.kind);
  if (e.kind == ExprKind::HTwist || e.kind == ExprKind::VTwist)
    return std::string(n.text) + "(" + std::to_string(e.twists) + ")";
  if (e.args.empty()) return n.text;
  std::string out = std::string(n.text) + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ", ";
    out += print_expr(*e.args[i]);
  }
  return out + ")";
}

int expr_holes(const Expr& e) {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
  };
  switch (e.kind) {
    case ExprKind::Identity: return 1;
    case ExprKind::Zero:
    case ExprKind::Inf:
    case ExprKind::HTwist:
    case ExprKind::VTwist: return 0;
    case ExprKind::Circle: return -1;
    case ExprKind::Fill: {
      int head = expr_holes(*e.args[0]);
      need(head == static_cast<int>(e.args.size()) - 1,
           "fill: head has " + std::to_string(head) + " holes but " + std::to_string(e.args.size() - 1) + " fillers");
      int total = 0;
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        int h = expr_holes(*e.args[i]);
        need(h >= 0, "fill: filler must be a tangle, not a closed link");
        total += h;
      }
      return total;
    }
    case ExprKind::Compose:
      need(expr_holes(*e.args[0]) == 1 && expr_holes(*e.args[1]) == 1, "compose needs two spherical operands");
      return 1;
    case ExprKind::HSum:
    case ExprKind::VSum: {
      int a = expr_holes(*e.args[0]), b = expr_holes(*e.args[1]);
      need(a >= 0 && b >= 0, "connect sum of a closed link");
      return a + b;
    }
    case ExprKind::IHSum:
    case ExprKind::IVSum: {
      int a = expr_holes(*e.args[0]), b = expr_holes(*e.args[1]);
      need((a == 0 && b == 1) || (a == 1 && b == 0), "inner sum needs one ball and one spherical operand");
      return 1;
    }
    case ExprKind::Swap:
    case ExprKind::R1:
    case ExprKind::R2:
      need(expr_holes(*e.args[0]) == 1, std::string(name_of(e.kind).text) + " needs a spherical operand");
      return 1;
    case ExprKind::Mirror: return expr_holes(*e.args[0]);
    case ExprKind::Rot:
    case ExprKind::HFlip:
    case ExprKind::VFlip: {
      int h = expr_holes(*e.args[0]);
      need(h >= 0, std::string(name_of(e.kind).text) + " of a closed link");
      return h;
    }
    case ExprKind::Num:
    case ExprKind::Den:
      need(expr_holes(*e.args[0]) == 0, "closure needs a ball tangle");
      return -1;
  }
  throw ValidationError("unknown expression kind");
}

long expr_crossings(const Expr& e) {
  if (e.kind == ExprKind::HTwist || e.kind == ExprKind::VTwist) return std::labs(e.twists);
  long total = 0;
  for (const auto& a : e.args) total += expr_crossings(*a);
  return total;
}

TangleDiagram elaborate(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Identity: return identity_sphere();
    case ExprKind::Zero: return zero_tangle();
    case ExprKind::Inf: return inf_tangle();
    case ExprKind::Circle: return free_circle();
    case ExprKind::HTwist:
    case ExprKind::VTwist:
      if (std::labs(e.twists) > 1000) throw GuardExceeded("twist count above 1000");
      return e.kind == ExprKind::HTwist ? htwist(e.twists) : vtwist(e.twists);
    case ExprKind::Fill: {
      std::vector<TangleDiagram> parts;
      for (std::size_t i = 1; i < e.args.size(); ++i) parts.push_back(elaborate(*e.args[i]));
      return fill(elaborate(*e.args[0]), parts);
    }
    case ExprKind::Compose: {
      TangleDiagram outer = elaborate(*e.args[0]), inner = elaborate(*e.args[1]);
      if (outer.hole_count() != 1 || inner.hole_count() != 1)
        throw ValidationError("compose needs two spherical operands");
      return fill(outer, {inner});
    }
    case ExprKind::HSum:
    case ExprKind::VSum:
    case ExprKind::IHSum:
    case ExprKind::IVSum:
      return connect_sum(elaborate(*e.args[0]), elaborate(*e.args[1]), sum_kind(e.kind));
    case ExprKind::Mirror:
    case ExprKind::Swap:
    case ExprKind::R1:
    case ExprKind::R2:
    case ExprKind::Rot:
    case ExprKind::HFlip:
    case ExprKind::VFlip:
      return elementary(elaborate(*e.args[0]), elementary_kind(e.kind));
    case ExprKind::Num: return close(elaborate(*e.args[0]), Closure::Numerator);
    case ExprKind::Den: return close(elaborate(*e.args[0]), Closure::Denominator);
  }
  throw ValidationError("unknown expression kind");
}

}  // namespace ptangle
