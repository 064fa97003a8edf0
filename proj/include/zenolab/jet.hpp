#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace zenolab {

// Truncated Taylor series (jet) of order 4: five coefficients c[k] = f^(k)(x0)/k!.
// Propagating these through elementary operations yields exact derivatives up to
// rounding, with no step-size tuning.
struct Jet {
    static constexpr std::size_t order = 4;
    std::array<double, order + 1> c{};

    static Jet constant(double value) {
        Jet j;
        j.c[0] = value;
        return j;
    }
    // The expansion variable itself: value + (x - x0).
    static Jet variable(double value) {
        Jet j;
        j.c[0] = value;
        j.c[1] = 1.0;
        return j;
    }
    double value() const { return c[0]; }
};

inline Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= Jet::order; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= Jet::order; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

inline Jet operator-(const Jet& a) {
    Jet r;
    for (std::size_t k = 0; k <= Jet::order; ++k) r.c[k] = -a.c[k];
    return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= Jet::order; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i <= k; ++i) sum += a.c[i] * b.c[k - i];
        r.c[k] = sum;
    }
    return r;
}

inline Jet operator*(double s, const Jet& a) {
    Jet r;
    for (std::size_t k = 0; k <= Jet::order; ++k) r.c[k] = s * a.c[k];
    return r;
}

inline Jet operator*(const Jet& a, double s) { return s * a; }

inline Jet operator+(const Jet& a, double s) {
    Jet r = a;
    r.c[0] += s;
    return r;
}

inline Jet operator+(double s, const Jet& a) { return a + s; }

inline Jet operator-(const Jet& a, double s) { return a + (-s); }

inline Jet operator-(double s, const Jet& a) { return (-a) + s; }

inline Jet operator/(const Jet& a, const Jet& b) {
    Jet q;
    for (std::size_t k = 0; k <= Jet::order; ++k) {
        double sum = a.c[k];
        for (std::size_t i = 0; i < k; ++i) sum -= q.c[i] * b.c[k - i];
        q.c[k] = sum / b.c[0];
    }
    return q;
}

inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

inline Jet operator/(double s, const Jet& a) { return Jet::constant(s) / a; }

inline Jet sqrt(const Jet& a) {
    Jet s;
    s.c[0] = std::sqrt(a.c[0]);
    for (std::size_t k = 1; k <= Jet::order; ++k) {
        double sum = a.c[k];
        for (std::size_t i = 1; i < k; ++i) sum -= s.c[i] * s.c[k - i];
        s.c[k] = sum / (2.0 * s.c[0]);
    }
    return s;
}

inline Jet exp(const Jet& a) {
    Jet e;
    e.c[0] = std::exp(a.c[0]);
    for (std::size_t k = 1; k <= Jet::order; ++k) {
        double sum = 0.0;
        for (std::size_t j = 1; j <= k; ++j) sum += double(j) * a.c[j] * e.c[k - j];
        e.c[k] = sum / double(k);
    }
    return e;
}

// sin and cos share the recurrence; computing both costs one pass.
inline void sincos(const Jet& a, Jet& s, Jet& c) {
    s.c[0] = std::sin(a.c[0]);
    c.c[0] = std::cos(a.c[0]);
    for (std::size_t k = 1; k <= Jet::order; ++k) {
        double ssum = 0.0, csum = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            ssum += double(j) * a.c[j] * c.c[k - j];
            csum += double(j) * a.c[j] * s.c[k - j];
        }
        s.c[k] = ssum / double(k);
        c.c[k] = -csum / double(k);
    }
}

inline Jet sin(const Jet& a) {
    Jet s, c;
    sincos(a, s, c);
    return s;
}

inline Jet cos(const Jet& a) {
    Jet s, c;
    sincos(a, s, c);
    return c;
}

// Horner evaluation of the truncated polynomial at offset d = x - x0.
inline double eval(const Jet& a, double d) {
    double acc = a.c[Jet::order];
    for (std::size_t k = Jet::order; k-- > 0;) acc = acc * d + a.c[k];
    return acc;
}

}  // namespace zenolab
