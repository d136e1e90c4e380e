#ifndef RACELINE_BODY_KINEMATICS_HPP
#define RACELINE_BODY_KINEMATICS_HPP

#include "raceline/small_matrix.hpp"
#include "raceline/surface.hpp"

namespace raceline {

// Tangent contact with fixed normal offset: v3 = 0 and ndot = 0 are enforced
// structurally, they are never integrated and corrected.

template <class T>
struct ParametricRates {
    T s_dot, y_dot, theta_s_dot;
};

template <class T>
struct SurfaceCurvatureMaps {
    Mat2<T> vel_to_param;   // (I - n II)^-1 J
    Mat2<T> vel_to_omega;   // J^-1 II (I - n II)^-1 J
};

template <class T>
SurfaceCurvatureMaps<T> surface_curvature_maps(const SurfaceJet<T>& jet, const T& theta_s,
                                               const T& n) {
    const auto forms = fundamental_forms(jet);
    const auto pj = parameterization_jacobian(jet, theta_s);
    const Mat2<T> lensing = forms.first - n * forms.second;
    const Mat2<T> lens_inv = inverse(lensing, "vehicle at focal distance of surface");
    SurfaceCurvatureMaps<T> maps;
    maps.vel_to_param = lens_inv * pj.J;
    maps.vel_to_omega = inverse(pj.J, "degenerate parameterization") *
                        (forms.second * maps.vel_to_param);
    return maps;
}

// Body velocity to parametric pose rates.
template <class T>
ParametricRates<T> parametric_rates(const SurfaceJet<T>& jet, const T& theta_s, const T& n,
                                    const T& v1, const T& v2, const T& omega3) {
    const auto forms = fundamental_forms(jet);
    const auto pj = parameterization_jacobian(jet, theta_s);
    const Mat2<T> lensing = forms.first - n * forms.second;
    const Vec2<T> sy = solve2(lensing, pj.J * Vec2<T>{v1, v2},
                              "vehicle at focal distance of surface");
    const T inv_ss = T(1.0) / dot(jet.x_s, jet.x_s);
    const T cs = dot(cross(jet.x_ss, jet.x_s), jet.e_n) * inv_ss;
    const T cy = dot(cross(jet.x_sy, jet.x_s), jet.e_n) * inv_ss;
    return {sy.x, sy.y, omega3 + cs * sy.x + cy * sy.y};
}

// Angular velocity needed to stay tangent to the curving surface.
template <class T>
void surface_angular_velocity(const SurfaceJet<T>& jet, const T& theta_s, const T& n,
                              const T& v1, const T& v2, T& omega1, T& omega2) {
    const auto maps = surface_curvature_maps(jet, theta_s, n);
    const Vec2<T> q = maps.vel_to_omega * Vec2<T>{v1, v2};
    omega2 = -q.x;
    omega1 = q.y;
}

// Same map applied to accelerations; terms from the changing curvature are
// omitted (the surface is assumed to curve gradually).
template <class T>
void surface_angular_acceleration(const SurfaceJet<T>& jet, const T& theta_s, const T& n,
                                  const T& v1_dot, const T& v2_dot, T& omega1_dot,
                                  T& omega2_dot) {
    surface_angular_velocity(jet, theta_s, n, v1_dot, v2_dot, omega1_dot, omega2_dot);
}

}  // namespace raceline

#endif  // RACELINE_BODY_KINEMATICS_HPP
