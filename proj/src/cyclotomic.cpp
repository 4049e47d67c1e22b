#include "ptangle/cyclotomic.hpp"

#include "ptangle/checked.hpp"

namespace ptangle {

namespace {

long mod8(long e) { return ((e % 8) + 8) % 8; }

}  // namespace

CycInt CycInt::power(long e) {
  long r = mod8(e);
  CycInt out;
  if (r < 4)
    out.c[r] = 1;
  else
    out.c[r - 4] = -1;
  return out;
}

CycInt cyc_add(const CycInt& a, const CycInt& b) {
  CycInt r;
  for (int i = 0; i < 4; ++i) r.c[i] = checked_add(a.c[i], b.c[i]);
  return r;
}

CycInt cyc_sub(const CycInt& a, const CycInt& b) {
  CycInt r;
  for (int i = 0; i < 4; ++i) r.c[i] = checked_sub(a.c[i], b.c[i]);
  return r;
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) {
  CycInt r;
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      std::int64_t t = checked_mul(a.c[i], b.c[j]);
      int d = i + j;
      if (d < 4)
        r.c[d] = checked_add(r.c[d], t);
      else
        r.c[d - 4] = checked_sub(r.c[d - 4], t);
    }
  }
  return r;
}

CycInt cyc_scale(const CycInt& a, std::int64_t k) {
  CycInt r;
  for (int i = 0; i < 4; ++i) r.c[i] = checked_mul(a.c[i], k);
  return r;
}

CycInt cyc_mul_power(const CycInt& a, long e) {
  long s = mod8(e);
  CycInt r;
  for (int i = 0; i < 4; ++i) {
    long d = i + s;
    bool neg = false;
    while (d >= 4) {
      d -= 4;
      neg = !neg;
    }
    r.c[d] = neg ? checked_neg(a.c[i]) : a.c[i];
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const CycInt& a) {
  static const char* names[4] = {"", "A", "A^2", "A^3"};
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    std::int64_t v = a.c[i];
    if (v == 0) continue;
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    std::int64_t m = v < 0 ? -v : v;
    if (i == 0)
      os << m;
    else {
      if (m != 1) os << m << "*";
      os << names[i];
    }
    first = false;
  }
  if (first) os << "0";
  return os;
}

ZPhi::ZPhi(std::int64_t p, long k) {
  long r = mod8(k);
  if (r >= 4) {
    p = checked_neg(p);
    r -= 4;
  }
  magnitude = p;
  phase = p == 0 ? 0 : static_cast<int>(r);
}

std::int64_t ZPhi::abs() const { return magnitude < 0 ? checked_neg(magnitude) : magnitude; }

CycInt ZPhi::to_cyc() const {
  CycInt r;
  r.c[phase] = magnitude;
  return r;
}

std::optional<ZPhi> to_zphi(const CycInt& a) {
  int nonzero = 0;
  int at = 0;
  for (int i = 0; i < 4; ++i)
    if (a.c[i] != 0) {
      ++nonzero;
      at = i;
    }
  if (nonzero == 0) return ZPhi{};
  if (nonzero > 1) return std::nullopt;
  return ZPhi(a.c[at], at);
}

ZPhi zphi_mul_power(const ZPhi& z, long e) { return ZPhi(z.magnitude, z.phase + mod8(e)); }

ZPhi zphi_mul(const ZPhi& a, const ZPhi& b) {
  return ZPhi(checked_mul(a.magnitude, b.magnitude), a.phase + b.phase);
}

std::ostream& operator<<(std::ostream& os, const ZPhi& z) {
  return os << z.magnitude << "*A^" << z.phase;
}

}  // namespace ptangle
