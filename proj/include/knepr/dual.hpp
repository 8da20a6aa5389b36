#pragma once

#include <cmath>

namespace knepr {

// First-order forward-mode dual number: val carries the function value,
// der the derivative along one seeded direction. Arithmetic below is the
// usual truncated-Taylor algebra, enough for the metric and tetrad
// component functions (rational expressions, sqrt, sin, cos).
struct Dual {
    double val = 0.0;
    double der = 0.0;

    Dual() = default;
    Dual(double v) : val(v) {}
    Dual(double v, double d) : val(v), der(d) {}

    // seed: d/dx x = 1
    static Dual variable(double v) { return Dual(v, 1.0); }
};

inline Dual operator+(Dual a, Dual b) { return {a.val + b.val, a.der + b.der}; }
inline Dual operator-(Dual a, Dual b) { return {a.val - b.val, a.der - b.der}; }
inline Dual operator-(Dual a) { return {-a.val, -a.der}; }
inline Dual operator+(Dual a) { return a; }

inline Dual operator*(Dual a, Dual b) {
    return {a.val * b.val, a.der * b.val + a.val * b.der};
}

inline Dual operator/(Dual a, Dual b) {
    const double inv = 1.0 / b.val;
    return {a.val * inv, (a.der - a.val * b.der * inv) * inv};
}

inline Dual sqrt(Dual a) {
    const double s = std::sqrt(a.val);
    return {s, a.der / (2.0 * s)};
}

inline Dual sin(Dual a) { return {std::sin(a.val), a.der * std::cos(a.val)}; }
inline Dual cos(Dual a) { return {std::cos(a.val), -a.der * std::sin(a.val)}; }

inline double value(double x) { return x; }
inline double value(Dual x) { return x.val; }

inline double derivative(Dual x) { return x.der; }

}  // namespace knepr
