#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>

namespace ptangle {

// c0 + c1*A + c2*A^2 + c3*A^3 with A^4 = -1, i.e. an element of Z[zeta_8].
struct CycInt {
  std::array<std::int64_t, 4> c{0, 0, 0, 0};

  CycInt() = default;
  explicit CycInt(std::int64_t c0, std::int64_t c1 = 0, std::int64_t c2 = 0, std::int64_t c3 = 0)
      : c{c0, c1, c2, c3} {}

  // The monomial A^e, any integer e.
  static CycInt power(long e);

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  friend bool operator==(const CycInt&, const CycInt&) = default;
};

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_sub(const CycInt& a, const CycInt& b);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_scale(const CycInt& a, std::int64_t k);
// a * A^e
CycInt cyc_mul_power(const CycInt& a, long e);

inline CycInt operator+(const CycInt& a, const CycInt& b) { return cyc_add(a, b); }
inline CycInt operator-(const CycInt& a, const CycInt& b) { return cyc_sub(a, b); }
inline CycInt operator*(const CycInt& a, const CycInt& b) { return cyc_mul(a, b); }

std::ostream& operator<<(std::ostream& os, const CycInt& a);

// p * A^k with k in 0..3; zero is (0, 0).
struct ZPhi {
  std::int64_t magnitude = 0;
  int phase = 0;

  ZPhi() = default;
  ZPhi(std::int64_t p, long k);  // normalizes

  std::int64_t abs() const;
  CycInt to_cyc() const;
  friend bool operator==(const ZPhi&, const ZPhi&) = default;
};

std::optional<ZPhi> to_zphi(const CycInt& a);
ZPhi zphi_mul_power(const ZPhi& z, long e);
ZPhi zphi_mul(const ZPhi& a, const ZPhi& b);

std::ostream& operator<<(std::ostream& os, const ZPhi& z);

}  // namespace ptangle
