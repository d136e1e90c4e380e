#ifndef RACELINE_DUAL_HPP
#define RACELINE_DUAL_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

namespace raceline {

// Forward-mode AD scalar carrying a value and N directional derivatives.
// Nest as Dual<Dual<double, N>, N> for second derivatives.
template <class T, int N>
struct Dual {
    T v{};
    std::array<T, N> d{};

    Dual() = default;
    Dual(double c) : v(c) {}  // passive constant
    Dual(const T& c) requires(!std::is_same_v<T, double>) : v(c) {}

    Dual& operator+=(const Dual& o) {
        v += o.v;
        for (int i = 0; i < N; ++i) d[i] += o.d[i];
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        v -= o.v;
        for (int i = 0; i < N; ++i) d[i] -= o.d[i];
        return *this;
    }
    Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
    Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

    friend Dual operator-(const Dual& a) {
        Dual r;
        r.v = -a.v;
        for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
        return r;
    }
    friend Dual operator+(const Dual& a, const Dual& b) {
        Dual r;
        r.v = a.v + b.v;
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
        return r;
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        Dual r;
        r.v = a.v - b.v;
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
        return r;
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        Dual r;
        r.v = a.v * b.v;
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
        return r;
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        Dual r;
        const T inv = T(1.0) / b.v;
        r.v = a.v * inv;
        for (int i = 0; i < N; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) * inv;
        return r;
    }

    // double mixing, avoids promoting constants to full duals
    friend Dual operator+(const Dual& a, double b) { Dual r(a); r.v += b; return r; }
    friend Dual operator+(double a, const Dual& b) { Dual r(b); r.v += a; return r; }
    friend Dual operator-(const Dual& a, double b) { Dual r(a); r.v -= b; return r; }
    friend Dual operator-(double a, const Dual& b) { Dual r = -b; r.v += a; return r; }
    friend Dual operator*(const Dual& a, double b) {
        Dual r;
        r.v = a.v * b;
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b;
        return r;
    }
    friend Dual operator*(double a, const Dual& b) { return b * a; }
    friend Dual operator/(const Dual& a, double b) { return a * (1.0 / b); }
    friend Dual operator/(double a, const Dual& b) { return Dual(a) / b; }

    friend bool operator<(const Dual& a, const Dual& b) { return passive(a.v) < passive(b.v); }
    friend bool operator>(const Dual& a, const Dual& b) { return passive(a.v) > passive(b.v); }
    friend bool operator<(const Dual& a, double b) { return passive(a.v) < b; }
    friend bool operator>(const Dual& a, double b) { return passive(a.v) > b; }

    static double passive(double x) { return x; }
    template <class U, int M>
    static double passive(const Dual<U, M>& x) { return Dual<U, M>::passive(x.v); }
};

// Extract the plain value through any nesting depth.
inline double value(double x) { return x; }
template <class T, int N>
double value(const Dual<T, N>& x) { return value(x.v); }

using std::asin;
using std::atan;
using std::atan2;
using std::cos;
using std::exp;
using std::fabs;
using std::log;
using std::sin;
using std::sqrt;
using std::tan;

template <class T, int N>
Dual<T, N> sin(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = sin(a.v);
    const T c = cos(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = c * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> cos(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = cos(a.v);
    const T s = -1.0 * sin(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = s * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> tan(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = tan(a.v);
    const T w = T(1.0) + r.v * r.v;
    for (int i = 0; i < N; ++i) r.d[i] = w * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> atan(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = atan(a.v);
    const T w = T(1.0) / (T(1.0) + a.v * a.v);
    for (int i = 0; i < N; ++i) r.d[i] = w * a.d[i];
    return r;
}

// atan2 with a zero-at-origin convention: both value and derivative are zero
// when x = y = 0, which keeps standstill slip evaluations finite.
template <class T, int N>
Dual<T, N> atan2(const Dual<T, N>& y, const Dual<T, N>& x) {
    Dual<T, N> r;
    r.v = atan2(y.v, x.v);
    const T den = x.v * x.v + y.v * y.v;
    if (value(den) > 0.0) {
        const T inv = T(1.0) / den;
        for (int i = 0; i < N; ++i) r.d[i] = (x.v * y.d[i] - y.v * x.d[i]) * inv;
    }
    return r;
}

template <class T, int N>
Dual<T, N> asin(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = asin(a.v);
    const T w = T(1.0) / sqrt(T(1.0) - a.v * a.v);
    for (int i = 0; i < N; ++i) r.d[i] = w * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = sqrt(a.v);
    const T w = T(0.5) / r.v;
    for (int i = 0; i < N; ++i) r.d[i] = w * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> exp(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = exp(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = r.v * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> log(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = log(a.v);
    const T w = T(1.0) / a.v;
    for (int i = 0; i < N; ++i) r.d[i] = w * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> fabs(const Dual<T, N>& a) {
    return value(a.v) >= 0.0 ? a : -a;
}

// First-order jet: value + gradient in N directions.
template <int N>
using Jet1 = Dual<double, N>;

// Second-order jet: value + gradient + dense Hessian.
template <int N>
using Jet2 = Dual<Dual<double, N>, N>;

template <int N>
Jet1<N> seed1(double x, int slot) {
    Jet1<N> r(x);
    if (slot >= 0) r.d[slot] = 1.0;
    return r;
}

template <int N>
Jet2<N> seed2(double x, int slot) {
    Jet2<N> r;
    r.v.v = x;
    if (slot >= 0) {
        r.v.d[slot] = 1.0;
        r.d[slot].v = 1.0;
    }
    return r;
}

template <int N>
double grad(const Jet1<N>& q, int i) { return q.d[i]; }
template <int N>
double grad(const Jet2<N>& q, int i) { return q.v.d[i]; }
template <int N>
double hess(const Jet2<N>& q, int i, int j) { return q.d[i].d[j]; }

}  // namespace raceline

#endif  // RACELINE_DUAL_HPP
