#pragma once

#include <cstdint>

#include "ptangle/expr.hpp"

namespace ptangle {

inline constexpr std::int64_t kSynthesisLimit = 10000;

// A ball-tangle expression over {inf, zero, htwist, vtwist, hsum, rot, mirror} whose
// invariant is [p;q] up to sign, built by the Euclidean algorithm.
ExprPtr synthesize(std::int64_t p, std::int64_t q);

// Elaborates the recipe and compares its state-sum invariant with [p;q].
bool verify_recipe(const Expr& recipe, std::int64_t p, std::int64_t q);

}  // namespace ptangle
