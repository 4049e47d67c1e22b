#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ptangle/invariant.hpp"

namespace ptangle {

// The group generated by x = swap (inside/outside), y = r1 (inner rotation) and z = mirror on
// spherical matrices: <x,y,z | x^2 = y^2 = z^2 = 1, xyxy = yxyx, xz = zx, yz = zy>, order 16.
//
// Words act in opposite-composition order: "xy" applies x first, then y.

// Normal form r^turns * x^reflect * z^zbit with r = xy; turns in 0..3.
struct GroupElement {
  int turns = 0;
  int reflect = 0;
  int zbit = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Word over {x, y, z}; throws ValidationError on other letters.
GroupElement reduce(std::string_view word);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
// Shortest alternating x/y word for the dihedral part, followed by "z" when zbit is set.
// The identity prints as "1".
std::string word_of(const GroupElement& g);
int element_index(const GroupElement& g);  // 0..15

PMatrix act(const GroupElement& g, const PMatrix& m);
PMatrix act_word(std::string_view word, const PMatrix& m);

struct GroupTable {
  std::vector<GroupElement> elements;
  std::vector<std::vector<int>> product;  // product[i][j] = index of elements[i] * elements[j]
};
// Closure of the generators from the identity, with its multiplication table.
GroupTable enumerate_group();

}  // namespace ptangle
