#ifndef RACELINE_TIRE_MODEL_HPP
#define RACELINE_TIRE_MODEL_HPP

#include <cmath>

#include "raceline/dual.hpp"
#include "raceline/errors.hpp"
#include "raceline/small_matrix.hpp"

namespace raceline {

// Combined-slip magic formula coefficients, linear in normal force.
struct TireParams {
    double B_x = 16.0;
    double C_x = 1.58;
    double E_x = 0.1;
    double B_y = 13.0;
    double C_y = 1.45;
    double E_y = -0.8;
    double E_xa = -0.5;
    double C_xa = 1.0;
    double r_Bx1 = 13.0;
    double r_Bx2 = 9.7;
    double E_ys = 0.3;
    double C_ys = 1.0;
    double r_By1 = 10.62;
    double r_By2 = 7.82;
    double mu = 0.75;
    double r = 0.3;    // rolling radius
    double r_e = 0.3;  // effective radius
};

template <class T>
struct TireForce {
    T Fx, Fy;
};

namespace detail {

template <class T>
T magic_sin(const T& x, double B, double C, double E) {
    const T bx = B * x;
    return sin(C * atan(bx - E * (bx - atan(bx))));
}

// Weighting function; B depends on the opposing slip quantity.
template <class T>
T magic_cos(const T& x, const T& B, double C, double E) {
    const T bx = B * x;
    return cos(C * atan(bx - E * (bx - atan(bx))));
}

}  // namespace detail

// Longitudinal and lateral tire force from slip ratio, slip angle and normal
// force. Output scales exactly linearly in N.
template <class T>
TireForce<T> magic_formula(const T& sigma, const T& alpha, const T& N, const TireParams& p) {
    const T Fx0 = p.mu * N * detail::magic_sin(sigma, p.B_x, p.C_x, p.E_x);
    const T Bxa = p.r_Bx1 * cos(atan(p.r_Bx2 * sigma));
    const T Gxa = detail::magic_cos(alpha, Bxa, p.C_xa, p.E_xa);

    const T Fy0 = p.mu * N * detail::magic_sin(alpha, p.B_y, p.C_y, p.E_y);
    const T Bys = p.r_By1 * cos(atan(p.r_By2 * alpha));
    const T Gys = detail::magic_cos(sigma, Bys, p.C_ys, p.E_ys);

    return {Fx0 * Gxa, Fy0 * Gys};
}

struct WheelGeometry {
    enum class Id { fr, fl, rr, rl };
    Id id = Id::fr;
    Vec3<double> offset{};  // contact patch relative to the COM, body frame
    bool steered = false;
};

struct BodyVelocity {
    double v1 = 0.0, v2 = 0.0, v3 = 0.0;
    double omega1 = 0.0, omega2 = 0.0, omega3 = 0.0;
};

// Slip angle from tire-frame contact velocities. atan2 keeps the standstill
// weight-distribution solve finite: zero velocity gives alpha = 0.
template <class T>
T slip_angle(const T& v_cx, const T& v_cy) {
    return atan2(-v_cy, v_cx);
}

// Contact-point velocity in the steered tire frame.
template <class T>
void contact_velocity(const T& v1, const T& v2, const T& omega1, const T& omega2,
                      const T& omega3, const Vec3<double>& offset, const T& gamma_wheel,
                      T& v_cx, T& v_cy) {
    const T cx = v1 + omega2 * offset.z - omega3 * offset.y;
    const T cy = v2 + omega3 * offset.x - omega1 * offset.z;
    const T cg = cos(gamma_wheel), sg = sin(gamma_wheel);
    v_cx = cg * cx + sg * cy;
    v_cy = cg * cy - sg * cx;
}

// Slip angle at a wheel, guarded against the low-speed range where the
// formula stops being meaningful.
inline double contact_slip_angle(const BodyVelocity& body, const WheelGeometry& wheel,
                                 double gamma_wheel) {
    double v_cx, v_cy;
    contact_velocity(body.v1, body.v2, body.omega1, body.omega2, body.omega3, wheel.offset,
                     gamma_wheel, v_cx, v_cy);
    if (v_cx <= 0.1)
        throw LowSpeedError("contact velocity " + std::to_string(v_cx) +
                            " m/s below 0.1 m/s guard");
    return slip_angle(v_cx, v_cy);
}

// Front steering angles sharing a turn center on the rear axle line.
template <class T>
void ackermann_angles(const T& gamma, double l_f, double l_r, double t_f, T& gamma_fr,
                      T& gamma_fl) {
    const double L = l_f + l_r;
    const T tg = tan(gamma);
    gamma_fr = atan(L * tg / (L + t_f * tg));
    gamma_fl = atan(L * tg / (L - t_f * tg));
}

}  // namespace raceline

#endif  // RACELINE_TIRE_MODEL_HPP
