#include "ptangle/coxeter.hpp"

#include <deque>

#include "ptangle/algebra.hpp"
#include "ptangle/errors.hpp"

namespace ptangle {

namespace {

const GroupElement kX{0, 1, 0};
const GroupElement kY{3, 1, 0};  // y = x * (xy)
const GroupElement kZ{0, 0, 1};

const GroupElement& generator(char c) {
  switch (c) {
    case 'x': return kX;
    case 'y': return kY;
    case 'z': return kZ;
  }
  throw ValidationError(std::string("group words use only x, y, z; got '") + c + "'");
}

}  // namespace

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  // x r^k = r^-k x
  int turns = a.reflect ? a.turns - b.turns : a.turns + b.turns;
  return {((turns % 4) + 4) % 4, a.reflect ^ b.reflect, a.zbit ^ b.zbit};
}

GroupElement reduce(std::string_view word) {
  GroupElement g;
  for (char c : word) g = multiply(g, generator(c));
  return g;
}

std::string word_of(const GroupElement& g) {
  static const std::string candidates[] = {"", "x", "y", "xy", "yx", "xyx", "yxy", "xyxy"};
  for (const auto& w : candidates) {
    GroupElement d = reduce(w);
    if (d.turns == g.turns && d.reflect == g.reflect) {
      std::string out = w + (g.zbit ? "z" : "");
      return out.empty() ? "1" : out;
    }
  }
  throw ValidationError("group element out of range");
}

int element_index(const GroupElement& g) { return g.zbit * 8 + g.reflect * 4 + g.turns; }

PMatrix act(const GroupElement& g, const PMatrix& m) {
  std::string w = word_of(g);
  return w == "1" ? m : act_word(w, m);
}

PMatrix act_word(std::string_view word, const PMatrix& m) {
  PMatrix out = m;
  for (char c : word) {
    switch (c) {
      case 'x': out = elementary_op(out, MatrixOp::Minus); break;
      case 'y': out = elementary_op(out, MatrixOp::R1); break;
      case 'z': out = elementary_op(out, MatrixOp::Star); break;
      default: generator(c);
    }
  }
  return out;
}

GroupTable enumerate_group() {
  GroupTable t;
  std::vector<int> slot(16, -1);
  std::deque<GroupElement> queue{GroupElement{}};
  slot[element_index(GroupElement{})] = 0;
  t.elements.push_back(GroupElement{});
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    for (char c : {'x', 'y', 'z'}) {
      GroupElement h = multiply(g, generator(c));
      if (slot[element_index(h)] == -1) {
        slot[element_index(h)] = static_cast<int>(t.elements.size());
        t.elements.push_back(h);
        queue.push_back(h);
      }
    }
  }
  const std::size_t n = t.elements.size();
  t.product.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.product[i][j] = slot[element_index(multiply(t.elements[i], t.elements[j]))];
  return t;
}

}  // namespace ptangle
