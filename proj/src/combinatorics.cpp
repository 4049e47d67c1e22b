#include "ptangle/combinatorics.hpp"

namespace ptangle {

long tuple_count(const Bounds& bounds) {
  long total = 1;
  for (long b : bounds) {
    if (b < 1) throw ValidationError("bounds must be positive");
    total = checked_mul(total, b);
  }
  return total;
}

IndexTuple unrank(long i, const Bounds& bounds) {
  const long total = tuple_count(bounds);
  if (i < 1 || i > total)
    throw ValidationError("unrank: index " + std::to_string(i) + " outside 1.." + std::to_string(total));
  IndexTuple t(bounds.size());
  long r = i - 1;
  for (std::size_t j = bounds.size(); j-- > 0;) {
    t[j] = r % bounds[j] + 1;
    r /= bounds[j];
  }
  return t;
}

long rank(const IndexTuple& t, const Bounds& bounds) {
  if (t.size() != bounds.size()) throw ValidationError("rank: tuple length differs from bounds");
  long r = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] < 1 || t[j] > bounds[j]) throw ValidationError("rank: entry out of bounds");
    r = r * bounds[j] + (t[j] - 1);
  }
  return r + 1;
}

std::vector<int> t_sequence(int n) {
  if (n < 0) throw ValidationError("t_sequence: n must be nonnegative");
  if (n > 30) throw GuardExceeded("t_sequence: n too large");
  std::vector<int> a{0};
  for (int k = 1; k <= n; ++k) {
    const std::size_t half = a.size();
    for (std::size_t j = 0; j < half; ++j) a.push_back(a[j] + 1);
  }
  return a;
}

}  // namespace ptangle
