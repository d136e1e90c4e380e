#ifndef RACELINE_TWO_TRACK_MODEL_HPP
#define RACELINE_TWO_TRACK_MODEL_HPP

#include <array>
#include <string>

#include "raceline/body_kinematics.hpp"
#include "raceline/surface.hpp"
#include "raceline/tire_model.hpp"
#include "raceline/vehicle_params.hpp"

namespace raceline {

// Gravity expressed in the body frame from the orientation matrix.
template <class T>
Vec3<T> gravity_body(const Mat3<T>& R, const VehicleParams& p) {
    const double w = -p.m * p.g;
    return {w * R.c0.z, w * R.c1.z, w * R.c2.z};
}

// Split of the algebraic state into the four tire normal forces. The axle
// compatibility relation holds identically under this map.
template <class T>
std::array<T, 4> per_tire_normals(const T& N_f, const T& N_r, const T& Delta,
                                  const VehicleParams& p) {
    return {0.5 * N_f - p.t_f * Delta, 0.5 * N_f + p.t_f * Delta,
            0.5 * N_r - p.t_r * Delta, 0.5 * N_r + p.t_r * Delta};
}

// Net normal force keeping the body in tangent contact: the centripetal
// demand of the curving surface minus gravity and drag components.
template <class T>
T net_normal_force(const SurfaceJet<T>& jet, const T& theta_s, const T& v1, const T& v2,
                   const VehicleParams& p) {
    T omega1, omega2;
    surface_angular_velocity(jet, theta_s, T(p.h), v1, v2, omega1, omega2);
    const auto R = orientation_from_theta_s(jet, theta_s);
    const T Fg3 = -p.m * p.g * R.c2.z;
    return p.m * (v2 * omega1 - v1 * omega2) - Fg3;
}

// Two-track model with tire forces and dynamic weight distribution, as a
// semi-explicit DAE: zdot = f(Z, U, G), 0 = g_c(Z, U, G).
//   Z = [s, y, theta_s, v1, v2, omega3]
//   U = [sigma_fr, sigma_fl, sigma_rr, sigma_rl, gamma]
//   G = [N_f, N_r, Delta]
class TwoTrackModel {
public:
    static constexpr int NZ = 6;
    static constexpr int NU = 5;
    static constexpr int NG = 3;
    static constexpr int NPATH = 4;  // per-tire normal forces

    TwoTrackModel(const Surface& surface, VehicleParams params)
        : surf_(&surface), p_(std::move(params)) {
        p_.validate();
    }

    const VehicleParams& params() const { return p_; }
    const Surface& surface() const { return *surf_; }
    static std::string name() { return "two_track"; }

    // One pass for dynamics, weight-distribution residual and per-tire
    // normals; any output may be null.
    template <class T>
    void point_eval(const T* Z, const T* U, const T* G, T* zdot, T* gc, T* path) const {
        if (path != nullptr) {
            const auto N = per_tire_normals(G[0], G[1], G[2], p_);
            for (int i = 0; i < 4; ++i) path[i] = N[i];
        }
        if (zdot == nullptr && gc == nullptr) return;
        const T& s = Z[0];
        const T& y = Z[1];
        const T& theta = Z[2];
        const T& v1 = Z[3];
        const T& v2 = Z[4];
        const T& w3 = Z[5];
        const T n(p_.h);

        const auto jet = surf_->jet(s, y);
        const auto maps = surface_curvature_maps(jet, theta, n);
        const Vec2<T> sy_dot = maps.vel_to_param * Vec2<T>{v1, v2};
        const Vec2<T> q = maps.vel_to_omega * Vec2<T>{v1, v2};
        const T w2 = -q.x;
        const T w1 = q.y;

        const T inv_ss = T(1.0) / dot(jet.x_s, jet.x_s);
        const T cs = dot(cross(jet.x_ss, jet.x_s), jet.e_n) * inv_ss;
        const T cy = dot(cross(jet.x_sy, jet.x_s), jet.e_n) * inv_ss;

        const auto R = orientation_from_theta_s(jet, theta);
        const Vec3<T> Fg = gravity_body(R, p_);

        T gamma_fr, gamma_fl;
        ackermann_angles(U[4], p_.l_f, p_.l_r, p_.t_f, gamma_fr, gamma_fl);
        const std::array<T, 4> steer{gamma_fr, gamma_fl, T(0.0), T(0.0)};
        const std::array<Vec3<double>, 4> offset{
            Vec3<double>{p_.l_f, -p_.t_f, -p_.h}, {p_.l_f, p_.t_f, -p_.h},
            {-p_.l_r, -p_.t_r, -p_.h}, {-p_.l_r, p_.t_r, -p_.h}};
        const std::array<T, 4> N = per_tire_normals(G[0], G[1], G[2], p_);

        T Ft1(0.0), Ft2(0.0), Kt3(0.0);
        for (int i = 0; i < 4; ++i) {
            T vcx, vcy;
            contact_velocity(v1, v2, w1, w2, w3, offset[i], steer[i], vcx, vcy);
            const T alpha = slip_angle(vcx, vcy);
            const auto F = magic_formula(U[i], alpha, N[i], p_.tires);
            const T cg = cos(steer[i]), sg = sin(steer[i]);
            const T F1 = cg * F.Fx - sg * F.Fy;
            const T F2 = sg * F.Fx + cg * F.Fy;
            Ft1 += F1;
            Ft2 += F2;
            Kt3 += offset[i].x * F2 - offset[i].y * F1;
        }

        const T Fd1 = -(p_.drag_lin + p_.drag_quad * v1) * v1;
        const T F1 = Fd1 + Fg.x + Ft1;
        const T F2 = Fg.y + Ft2;

        const T v1_dot = F1 * (1.0 / p_.m) + v2 * w3;
        const T v2_dot = F2 * (1.0 / p_.m) - v1 * w3;
        const T w3_dot = (Kt3 - (p_.I2 - p_.I1) * w1 * w2) * (1.0 / p_.I3);

        if (zdot != nullptr) {
            zdot[0] = sy_dot.x;
            zdot[1] = sy_dot.y;
            zdot[2] = w3 + cs * sy_dot.x + cy * sy_dot.y;
            zdot[3] = v1_dot;
            zdot[4] = v2_dot;
            zdot[5] = w3_dot;
        }

        if (gc != nullptr) {
            // Accelerations the tangent-contact constraint must supply, with
            // gravity, drag and in-plane tire moments stripped so only the
            // normal-force contributions remain.
            const Vec2<T> qd = maps.vel_to_omega * Vec2<T>{v1_dot, v2_dot};
            const T w2_dot = -qd.x;
            const T w1_dot = qd.y;

            const T F3_req = p_.m * (v2 * w1 - v1 * w2);
            const T K1_req = p_.I1 * w1_dot + (p_.I3 - p_.I2) * w2 * w3;
            const T K2_req = p_.I2 * w2_dot + (p_.I1 - p_.I3) * w3 * w1;

            const T F3N = F3_req - Fg.z;
            const T K1N = K1_req - p_.h * Ft2;
            const T K2N = K2_req + p_.h * Ft1;

            const double L = p_.wheelbase();
            const T Nf_req = (p_.l_r / L) * F3N - K2N * (1.0 / L);
            const T Nr_req = (p_.l_f / L) * F3N + K2N * (1.0 / L);
            const T Delta_req = K1N * (1.0 / (2.0 * p_.t_f * p_.t_f + 2.0 * p_.t_r * p_.t_r));

            gc[0] = Nf_req - G[0];
            gc[1] = Nr_req - G[1];
            gc[2] = Delta_req - G[2];
        }
    }

    template <class T>
    std::array<T, NZ> f(const std::array<T, NZ>& Z, const std::array<T, NU>& U,
                        const std::array<T, NG>& G) const {
        std::array<T, NZ> zdot;
        point_eval(Z.data(), U.data(), G.data(), zdot.data(), static_cast<T*>(nullptr),
                   static_cast<T*>(nullptr));
        return zdot;
    }

    // Weight-distribution residual in newtons; affine in G for fixed state.
    template <class T>
    std::array<T, NG> g_c(const std::array<T, NZ>& Z, const std::array<T, NU>& U,
                          const std::array<T, NG>& G) const {
        std::array<T, NZ> zdot;
        std::array<T, NG> gc;
        point_eval(Z.data(), U.data(), G.data(), zdot.data(), gc.data(),
                   static_cast<T*>(nullptr));
        return gc;
    }

    // Per-tire normal forces, constrained to [0, N_max / 2] along racelines.
    std::array<double, NPATH> path_lower() const { return {0.0, 0.0, 0.0, 0.0}; }
    std::array<double, NPATH> path_upper() const {
        const double cap = 0.5 * p_.N_max;
        return {cap, cap, cap, cap};
    }
    std::array<double, NPATH> path_scale() const {
        const double s = 1.0 / p_.weight();
        return {s, s, s, s};
    }

    std::array<double, NU> input_lower() const {
        return {-p_.sigma_max, -p_.sigma_max, -p_.sigma_max, -p_.sigma_max, -p_.gamma_max};
    }
    std::array<double, NU> input_upper() const {
        return {p_.sigma_max, p_.sigma_max, p_.sigma_max, p_.sigma_max, p_.gamma_max};
    }
    std::array<double, NZ> state_lower(double v_min, double v_max) const {
        (void)v_max;
        return {-1e20, -surf_->half_width(), -1.5, v_min, -30.0, -10.0};
    }
    std::array<double, NZ> state_upper(double v_min, double v_max) const {
        (void)v_min;
        return {1e20, surf_->half_width(), 1.5, v_max, 30.0, 10.0};
    }

    std::array<double, NZ> cruise_state(double v0) const {
        return {0.0, 0.0, 0.0, v0, 0.0, 0.0};
    }
    std::array<double, NU> cruise_input() const { return {0.0, 0.0, 0.0, 0.0, 0.0}; }

    std::array<double, 3> body_velocity(const std::array<double, NZ>& Z,
                                        const std::array<double, NU>&) const {
        return {Z[3], Z[4], Z[5]};
    }
    static double steering_of(const std::array<double, NU>& U) { return U[4]; }

private:
    const Surface* surf_;
    VehicleParams p_;
};

}  // namespace raceline

#endif  // RACELINE_TWO_TRACK_MODEL_HPP
