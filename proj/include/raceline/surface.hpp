#ifndef RACELINE_SURFACE_HPP
#define RACELINE_SURFACE_HPP

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "raceline/angle_profile.hpp"
#include "raceline/cubic_spline.hpp"
#include "raceline/dual.hpp"
#include "raceline/errors.hpp"
#include "raceline/small_matrix.hpp"

namespace raceline {

// Road description: a centerline frame given by three Tait-Bryan angle
// profiles, swept laterally with an optional circular-arc cross section.
struct SurfaceConfig {
    std::string name = "unnamed";
    AngleProfile yaw;    // about global z
    AngleProfile pitch;  // positive pitches the tangent uphill
    AngleProfile roll;   // positive banks the left edge up
    double cross_curvature = 0.0;  // 1/m, 0 means flat cross section
    double half_width = 1.0;
    double length = 1.0;
    bool closed = false;
    double arclength_grid = 0.5;

    void validate() const;
};

// Position, first and second partials, and unit normal at one (s, y).
template <class T>
struct SurfaceJet {
    Vec3<T> x_p, x_s, x_y, x_ss, x_sy, x_yy, e_n;
};

template <class T>
struct FundamentalForms {
    Mat2<T> first;
    Mat2<T> second;
};

template <class T>
struct ParamJacobian {
    Mat2<T> J;
    T theta_p;
};

namespace detail {

// Value plus first and second derivative with respect to path length; the
// product rule gives frame derivatives without symbolic expansion.
template <class T>
struct SJet {
    T v{}, d1{}, d2{};

    friend SJet operator+(const SJet& a, const SJet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
    friend SJet operator-(const SJet& a, const SJet& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
    friend SJet operator-(const SJet& a) { return {-a.v, -a.d1, -a.d2}; }
    friend SJet operator*(const SJet& a, const SJet& b) {
        return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * (a.d1 * b.d1) + a.v * b.d2};
    }
};

template <class T>
SJet<T> sin_jet(const SJet<T>& a) {
    const T s = sin(a.v), c = cos(a.v);
    return {s, c * a.d1, c * a.d2 - s * a.d1 * a.d1};
}

template <class T>
SJet<T> cos_jet(const SJet<T>& a) {
    const T s = sin(a.v), c = cos(a.v);
    return {c, -1.0 * (s * a.d1), -1.0 * (s * a.d2) - c * a.d1 * a.d1};
}

// Centerline frame vectors e_s, e_y, e_n and their s-derivatives.
template <class T>
struct FrameJet {
    std::array<SJet<T>, 3> es, ey, en;
};

template <class T>
FrameJet<T> frame_from_angles(const SJet<T>& a, const SJet<T>& b, const SJet<T>& c) {
    const SJet<T> sa = sin_jet(a), ca = cos_jet(a);
    const SJet<T> sb = sin_jet(b), cb = cos_jet(b);
    const SJet<T> sc = sin_jet(c), cc = cos_jet(c);
    FrameJet<T> f;
    // Rz(yaw) Ry(-pitch) Rx(roll) applied to the unit axes.
    f.es = {ca * cb, sa * cb, sb};
    f.ey = {-(ca * sb * sc) - sa * cc, -(sa * sb * sc) + ca * cc, cb * sc};
    f.en = {-(ca * sb * cc) + sa * sc, -(sa * sb * cc) - ca * sc, cb * cc};
    return f;
}

}  // namespace detail

// Immutable after construction; jet evaluation is pure and safe to call from
// many threads at once.
class Surface {
public:
    explicit Surface(SurfaceConfig config);

    const SurfaceConfig& config() const { return cfg_; }
    double length() const { return cfg_.length; }
    double half_width() const { return cfg_.half_width; }
    bool closed() const { return cfg_.closed; }

    // Centerline position (diagnostics, plotting).
    Vec3<double> centerline(double s) const {
        return {center_[0].eval(s), center_[1].eval(s), center_[2].eval(s)};
    }

    template <class T>
    SurfaceJet<T> jet(const T& s_in, const T& y) const {
        T s = s_in;
        const double sv0 = value(s_in);
        if (cfg_.closed) {
            s = s_in - cfg_.length * std::floor(sv0 / cfg_.length);
        } else if (sv0 < -kDomainTol || sv0 > cfg_.length + kDomainTol) {
            throw DomainError("s = " + std::to_string(sv0) + " outside [0, " +
                              std::to_string(cfg_.length) + "]");
        }
        const double yv = value(y);
        if (yv < -cfg_.half_width - kDomainTol || yv > cfg_.half_width + kDomainTol)
            throw DomainError("y = " + std::to_string(yv) + " outside [-" +
                              std::to_string(cfg_.half_width) + ", " +
                              std::to_string(cfg_.half_width) + "]");

        using detail::SJet;
        const SJet<T> a{cfg_.yaw.eval(s), cfg_.yaw.deriv(s), cfg_.yaw.deriv2(s)};
        const SJet<T> b{cfg_.pitch.eval(s), cfg_.pitch.deriv(s), cfg_.pitch.deriv2(s)};
        const SJet<T> c{cfg_.roll.eval(s), cfg_.roll.deriv(s), cfg_.roll.deriv2(s)};
        const auto frame = detail::frame_from_angles(a, b, c);

        // Circular-arc cross section offset w(y) along the frame normal.
        const double kappa = cfg_.cross_curvature;
        T w, w1, w2;
        if (std::fabs(kappa) < 1e-8) {
            // removable singularity: series limit
            w = 0.5 * kappa * y * y;
            w1 = kappa * y;
            w2 = T(kappa);
        } else {
            const T q = 1.0 - (kappa * kappa) * (y * y);
            if (value(q) <= 0.0)
                throw DomainError("|y * cross_curvature| >= 1 at y = " + std::to_string(yv));
            const T rq = sqrt(q);
            w = (1.0 - rq) * (1.0 / kappa);
            w1 = kappa * y / rq;
            w2 = T(kappa) / (q * rq);
        }

        SurfaceJet<T> out;
        for (int i = 0; i < 3; ++i) {
            const T xc = center_[i].eval(s);
            const T xc1 = center_[i].deriv(s);
            const T xc2 = center_[i].deriv2(s);
            const auto& ey = frame.ey[i];
            const auto& en = frame.en[i];
            comp(out.x_p, i) = xc + y * ey.v + w * en.v;
            comp(out.x_s, i) = xc1 + y * ey.d1 + w * en.d1;
            comp(out.x_y, i) = ey.v + w1 * en.v;
            comp(out.x_ss, i) = xc2 + y * ey.d2 + w * en.d2;
            comp(out.x_sy, i) = ey.d1 + w1 * en.d1;
            comp(out.x_yy, i) = w2 * en.v;
        }
        const Vec3<T> n = cross(out.x_s, out.x_y);
        const T nn = norm(n);
        if (value(nn) <= 1e-9) throw SingularityError("degenerate surface tangents");
        out.e_n = (T(1.0) / nn) * n;
        return out;
    }

private:
    template <class T>
    static T& comp(Vec3<T>& v, int i) { return i == 0 ? v.x : (i == 1 ? v.y : v.z); }

    static constexpr double kDomainTol = 1e-9;

    SurfaceConfig cfg_;
    std::array<CubicSpline, 3> center_;
};

inline Surface build_tait_bryan_surface(SurfaceConfig config) { return Surface(std::move(config)); }

// Projection onto a flat plane: keep centerline arclength and yaw curvature,
// drop slope, bank and the cross section.
SurfaceConfig flatten(SurfaceConfig config);

template <class T>
FundamentalForms<T> fundamental_forms(const SurfaceJet<T>& jet) {
    FundamentalForms<T> f;
    f.first = {dot(jet.x_s, jet.x_s), dot(jet.x_s, jet.x_y),
               dot(jet.x_s, jet.x_y), dot(jet.x_y, jet.x_y)};
    const T off = dot(jet.x_sy, jet.e_n);
    f.second = {dot(jet.x_ss, jet.e_n), off, off, dot(jet.x_yy, jet.e_n)};
    return f;
}

template <class T>
ParamJacobian<T> parameterization_jacobian(const SurfaceJet<T>& jet, const T& theta_s) {
    const T ns = norm(jet.x_s);
    const T ny = norm(jet.x_y);
    ParamJacobian<T> r;
    r.theta_p = -asin(dot(jet.x_s, jet.x_y) / (ns * ny));
    const T rel = theta_s - r.theta_p;
    r.J = {cos(theta_s) * ns, -sin(theta_s) * ns, sin(rel) * ny, cos(rel) * ny};
    return r;
}

// Full 3D body pose from the single heading variable: the tangent-plane axes
// come from solving e_i = alpha x_s + beta x_y against the first fundamental
// form, which makes the columns of J the right-hand sides.
template <class T>
Mat3<T> orientation_from_theta_s(const SurfaceJet<T>& jet, const T& theta_s) {
    const auto forms = fundamental_forms(jet);
    const auto pj = parameterization_jacobian(jet, theta_s);
    const Mat2<T> coeff = inverse(forms.first, "first fundamental form") * pj.J;
    Mat3<T> r;
    r.c0 = coeff.a * jet.x_s + coeff.c * jet.x_y;
    r.c1 = coeff.b * jet.x_s + coeff.d * jet.x_y;
    r.c2 = jet.e_n;
    return r;
}

}  // namespace raceline

#endif  // RACELINE_SURFACE_HPP
