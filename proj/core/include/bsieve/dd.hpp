#pragma once

#include <cmath>
#include <cstdint>

// Compensated (double-double) arithmetic, used where long products of
// binomial-type factors must stay accurate to ~1 ulp: a plain running
// product over 2e4 factors drifts by ~n ulps, which is visible in the
// 1e-12 row-sum checks.

namespace bsieve {

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline DD dd_from(double a) { return {a, 0.0}; }

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  DD r = two_sum(s.hi, s.lo);
  return r;
}

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  DD r = two_sum(p.hi, p.lo);
  return r;
}

inline DD dd_mul_d(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  DD r = two_sum(p.hi, p.lo);
  return r;
}

inline DD dd_div(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = dd_add(a, dd_mul_d(b, -q1));
  double q2 = r.hi / b.hi;
  r = dd_add(r, dd_mul_d(b, -q2));
  double q3 = r.hi / b.hi;
  DD q = two_sum(q1, q2);
  q.lo += q3;
  return two_sum(q.hi, q.lo);
}

inline DD dd_div_d(DD a, double b) { return dd_div(a, dd_from(b)); }

// Double-double value with a separate power-of-two exponent, so that
// products like C(n,m) x^m (1-x)^{n-m} can be marched across a full row
// without overflow or underflow of the intermediates.
struct ScaledDD {
  DD v{1.0, 0.0};
  std::int64_t e2 = 0;  // value = v * 2^e2

  void normalize() {
    double a = std::fabs(v.hi);
    if (a == 0.0) {
      e2 = 0;
      return;
    }
    if (a > 0x1p+500 || a < 0x1p-500) {
      int e = 0;
      std::frexp(v.hi, &e);
      v.hi = std::ldexp(v.hi, -e);
      v.lo = std::ldexp(v.lo, -e);
      e2 += e;
    }
  }

  void mul(DD f) {
    v = dd_mul(v, f);
    normalize();
  }
  void mul_d(double f) {
    v = dd_mul_d(v, f);
    normalize();
  }
  void div(DD f) {
    v = dd_div(v, f);
    normalize();
  }
  void div_d(double f) {
    v = dd_div(v, dd_from(f));
    normalize();
  }

  double to_double() const {
    if (e2 == 0) return v.hi + v.lo;
    if (e2 > 1100) return v.hi * HUGE_VAL;
    if (e2 < -1140) return 0.0;
    int e = static_cast<int>(e2);
    return std::ldexp(v.hi, e) + std::ldexp(v.lo, e);
  }
};

// Kahan-Neumaier compensated accumulator.
struct KahanSum {
  double sum = 0.0;
  double c = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      c += (sum - t) + x;
    else
      c += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + c; }
};

}  // namespace bsieve
