#ifndef RACELINE_SMALL_MATRIX_HPP
#define RACELINE_SMALL_MATRIX_HPP

#include <array>

#include "raceline/dual.hpp"
#include "raceline/errors.hpp"

namespace raceline {

template <class T>
struct Vec2 {
    T x{}, y{};

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    template <class S>
    friend Vec2 operator*(const S& s, const Vec2& a) { return {s * a.x, s * a.y}; }
};

template <class T>
struct Vec3 {
    T x{}, y{}, z{};

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
    template <class S>
    friend Vec3 operator*(const S& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
};

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class T>
T norm(const Vec3<T>& a) { return sqrt(dot(a, a)); }

// 2x2 matrix in row-major order.
template <class T>
struct Mat2 {
    T a{}, b{}, c{}, d{};  // [[a, b], [c, d]]

    friend Mat2 operator+(const Mat2& p, const Mat2& q) { return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d}; }
    friend Mat2 operator-(const Mat2& p, const Mat2& q) { return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d}; }
    template <class S>
    friend Mat2 operator*(const S& s, const Mat2& p) { return {s * p.a, s * p.b, s * p.c, s * p.d}; }
    friend Mat2 operator*(const Mat2& p, const Mat2& q) {
        return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
                p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
    }
    friend Vec2<T> operator*(const Mat2& p, const Vec2<T>& v) {
        return {p.a * v.x + p.b * v.y, p.c * v.x + p.d * v.y};
    }

    T det() const { return a * d - b * c; }

    static Mat2 identity() { return {T(1.0), T(0.0), T(0.0), T(1.0)}; }
};

// Closed-form inverse with a determinant guard; these 2x2 solves sit on the
// optimizer's hot path and must stay transparent to the AD scalar.
template <class T>
Mat2<T> inverse(const Mat2<T>& m, const char* what) {
    const T det = m.det();
    if (fabs(value(det)) < 1e-12) throw SingularityError(what);
    const T inv = T(1.0) / det;
    return {inv * m.d, -1.0 * (inv * m.b), -1.0 * (inv * m.c), inv * m.a};
}

template <class T>
Vec2<T> solve2(const Mat2<T>& m, const Vec2<T>& r, const char* what) {
    return inverse(m, what) * r;
}

// 3x3 matrix stored as three column vectors.
template <class T>
struct Mat3 {
    Vec3<T> c0{}, c1{}, c2{};

    friend Vec3<T> operator*(const Mat3& m, const Vec3<T>& v) {
        return {m.c0.x * v.x + m.c1.x * v.y + m.c2.x * v.z,
                m.c0.y * v.x + m.c1.y * v.y + m.c2.y * v.z,
                m.c0.z * v.x + m.c1.z * v.y + m.c2.z * v.z};
    }
    friend Mat3 operator*(const Mat3& p, const Mat3& q) {
        return {p * q.c0, p * q.c1, p * q.c2};
    }
    friend Mat3 operator+(const Mat3& p, const Mat3& q) {
        return {p.c0 + q.c0, p.c1 + q.c1, p.c2 + q.c2};
    }
    template <class S>
    friend Mat3 operator*(const S& s, const Mat3& p) { return {s * p.c0, s * p.c1, s * p.c2}; }

    static Mat3 identity() {
        return {{T(1.0), T(0.0), T(0.0)}, {T(0.0), T(1.0), T(0.0)}, {T(0.0), T(0.0), T(1.0)}};
    }
};

}  // namespace raceline

#endif  // RACELINE_SMALL_MATRIX_HPP
