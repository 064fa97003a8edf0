#pragma once

#include <cmath>

namespace zenolab {

// Double-double value: hi + lo with |lo| <= ulp(hi)/2. Roughly 32 significant
// digits. Used where an algebraic identity cancels catastrophically in plain
// double (the linear survival coefficient).
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

namespace detail {
inline dd two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    double e = (a - (s - v)) + (b - v);
    return {s, e};
}
inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
    double s = a + b;
    double e = b - (s - a);
    return {s, e};
}
inline dd two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}
}  // namespace detail

inline dd operator+(const dd& a, const dd& b) {
    dd s = detail::two_sum(a.hi, b.hi);
    double e = s.lo + a.lo + b.lo;
    return detail::quick_two_sum(s.hi, e);
}

inline dd operator-(const dd& a, const dd& b) { return a + dd(-b.hi, -b.lo); }

inline dd operator*(const dd& a, const dd& b) {
    dd p = detail::two_prod(a.hi, b.hi);
    double e = p.lo + a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, e);
}

inline dd operator/(const dd& a, const dd& b) {
    double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}

}  // namespace zenolab
