#ifndef RACELINE_CUBIC_SPLINE_HPP
#define RACELINE_CUBIC_SPLINE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "raceline/dual.hpp"
#include "raceline/errors.hpp"

namespace raceline {

// C2 cubic spline on a uniform grid, stored in Hermite form (values + knot
// slopes). Construction solves the tridiagonal smoothness system; evaluation
// is a plain polynomial and therefore transparent to AD scalars.
class CubicSpline {
public:
    CubicSpline() = default;

    // Clamped: endpoint slopes are prescribed.
    static CubicSpline clamped(double x0, double h, std::vector<double> y,
                               double slope_begin, double slope_end);

    // Periodic: y.front() and y.back() describe the same knot.
    static CubicSpline periodic(double x0, double h, std::vector<double> y);

    template <class T>
    T eval(const T& x) const { return piece<T, 0>(x); }
    template <class T>
    T deriv(const T& x) const { return piece<T, 1>(x); }
    template <class T>
    T deriv2(const T& x) const { return piece<T, 2>(x); }

    double x_begin() const { return x0_; }
    double x_end() const { return x0_ + h_ * static_cast<double>(cells()); }
    std::size_t cells() const { return y_.empty() ? 0 : y_.size() - 1; }

private:
    template <class T, int Order>
    T piece(const T& x) const {
        const double u = (value(x) - x0_) / h_;
        long cell = static_cast<long>(std::floor(u));
        const long last = static_cast<long>(cells()) - 1;
        if (cell < 0) cell = 0;
        if (cell > last) cell = last;
        const T t = (x - (x0_ + h_ * static_cast<double>(cell))) * (1.0 / h_);
        const double ya = y_[cell], yb = y_[cell + 1];
        const double ma = h_ * m_[cell], mb = h_ * m_[cell + 1];
        if constexpr (Order == 0) {
            // Hermite basis: h00 ya + h10 ma + h01 yb + h11 mb
            const T t2 = t * t, t3 = t2 * t;
            return (2.0 * t3 - 3.0 * t2 + 1.0) * ya + (t3 - 2.0 * t2 + t) * ma +
                   (-2.0 * t3 + 3.0 * t2) * yb + (t3 - t2) * mb;
        } else if constexpr (Order == 1) {
            const T t2 = t * t;
            return ((6.0 * t2 - 6.0 * t) * ya + (3.0 * t2 - 4.0 * t + 1.0) * ma +
                    (-6.0 * t2 + 6.0 * t) * yb + (3.0 * t2 - 2.0 * t) * mb) * (1.0 / h_);
        } else {
            return ((12.0 * t - 6.0) * ya + (6.0 * t - 4.0) * ma +
                    (-12.0 * t + 6.0) * yb + (6.0 * t - 2.0) * mb) * (1.0 / (h_ * h_));
        }
    }

    double x0_ = 0.0;
    double h_ = 1.0;
    std::vector<double> y_;
    std::vector<double> m_;  // knot slopes
};

namespace detail {

// Thomas algorithm; diagonals (a: sub, b: main, c: super) are overwritten.
inline std::vector<double> solve_tridiagonal(std::vector<double> a, std::vector<double> b,
                                             std::vector<double> c, std::vector<double> r) {
    const std::size_t n = b.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        r[i] -= w * r[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = r[n - 1] / b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (r[i] - c[i] * x[i + 1]) / b[i];
    return x;
}

}  // namespace detail

inline CubicSpline CubicSpline::clamped(double x0, double h, std::vector<double> y,
                                        double slope_begin, double slope_end) {
    if (y.size() < 2) throw ConfigError("cubic spline needs at least two knots");
    const std::size_t n = y.size() - 1;
    CubicSpline s;
    s.x0_ = x0;
    s.h_ = h;
    s.m_.assign(n + 1, 0.0);
    s.m_[0] = slope_begin;
    s.m_[n] = slope_end;
    if (n >= 2) {
        const std::size_t k = n - 1;  // interior unknowns
        std::vector<double> a(k, 1.0), b(k, 4.0), c(k, 1.0), r(k);
        for (std::size_t i = 1; i < n; ++i) r[i - 1] = 3.0 * (y[i + 1] - y[i - 1]) / h;
        r[0] -= slope_begin;
        r[k - 1] -= slope_end;
        auto m = detail::solve_tridiagonal(a, b, c, r);
        for (std::size_t i = 0; i < k; ++i) s.m_[i + 1] = m[i];
    }
    s.y_ = std::move(y);
    return s;
}

inline CubicSpline CubicSpline::periodic(double x0, double h, std::vector<double> y) {
    if (y.size() < 4) throw ConfigError("periodic cubic spline needs at least four knots");
    const std::size_t n = y.size() - 1;
    // Cyclic tridiagonal (Sherman-Morrison) for slopes m_0..m_{n-1}.
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = (i == 0) ? y[n - 1] : y[i - 1];
        const double next = y[i + 1];
        r[i] = 3.0 * (next - prev) / h;
    }
    const double alpha = 1.0, beta = 1.0, gamma = -4.0;
    std::vector<double> a(n, 1.0), b(n, 4.0), c(n, 1.0);
    b[0] -= gamma;
    b[n - 1] -= alpha * beta / gamma;
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = alpha;
    auto xs = detail::solve_tridiagonal(a, b, c, r);
    auto zs = detail::solve_tridiagonal(a, b, c, u);
    const double fact = (xs[0] + beta * xs[n - 1] / gamma) /
                        (1.0 + zs[0] + beta * zs[n - 1] / gamma);
    CubicSpline s;
    s.x0_ = x0;
    s.h_ = h;
    s.m_.assign(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) s.m_[i] = xs[i] - fact * zs[i];
    s.m_[n] = s.m_[0];
    s.y_ = std::move(y);
    return s;
}

}  // namespace raceline

#endif  // RACELINE_CUBIC_SPLINE_HPP
