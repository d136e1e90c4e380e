#ifndef RACELINE_BICYCLE_MODELS_HPP
#define RACELINE_BICYCLE_MODELS_HPP

#include <array>
#include <string>

#include "raceline/body_kinematics.hpp"
#include "raceline/surface.hpp"
#include "raceline/tire_model.hpp"
#include "raceline/two_track_model.hpp"
#include "raceline/vehicle_params.hpp"

namespace raceline {

// Kinematic bicycle on a surface with a friction-cone constraint standing in
// for tire limits.
//   Z = [s, y, theta_s, v]
//   U = [a, gamma]
// The same class covers the planar comparison model when constructed with a
// flattened surface.
class KinematicBicycleModel {
public:
    static constexpr int NZ = 4;
    static constexpr int NU = 2;
    static constexpr int NG = 0;
    static constexpr int NPATH = 2;  // friction cone, net normal force

    KinematicBicycleModel(const Surface& surface, VehicleParams params,
                          std::string name = "kinematic")
        : surf_(&surface), p_(std::move(params)), name_(std::move(name)) {
        p_.validate();
    }

    const VehicleParams& params() const { return p_; }
    const Surface& surface() const { return *surf_; }
    const std::string& name() const { return name_; }

    // One pass for dynamics and path quantities; any output may be null.
    template <class T>
    void point_eval(const T* Z, const T* U, const T* /*G*/, T* zdot, T* /*gc*/, T* path) const {
        const T& theta = Z[2];
        const T& v = Z[3];
        const T& a = U[0];
        const T& gamma = U[1];
        const double L = p_.wheelbase();

        const T beta = atan(p_.l_r * tan(gamma) * (1.0 / L));
        const T cb = cos(beta), sb = sin(beta);
        const T v1 = v * cb;
        const T v2 = v * sb;
        const T w3 = v * sb * (1.0 / p_.l_r);

        const auto jet = surf_->jet(Z[0], Z[1]);
        const auto maps = surface_curvature_maps(jet, theta, T(p_.h));
        const auto R = orientation_from_theta_s(jet, theta);

        if (zdot != nullptr) {
            const Vec2<T> sy_dot = maps.vel_to_param * Vec2<T>{v1, v2};
            const T inv_ss = T(1.0) / dot(jet.x_s, jet.x_s);
            const T cs = dot(cross(jet.x_ss, jet.x_s), jet.e_n) * inv_ss;
            const T cy = dot(cross(jet.x_sy, jet.x_s), jet.e_n) * inv_ss;
            // speed rate picks up the along-motion gravity component
            const T g_long = -p_.g * (R.c0.z * cb + R.c1.z * sb);
            zdot[0] = sy_dot.x;
            zdot[1] = sy_dot.y;
            zdot[2] = w3 + cs * sy_dot.x + cy * sy_dot.y;
            zdot[3] = a + g_long;
        }

        if (path != nullptr) {
            const Vec2<T> q = maps.vel_to_omega * Vec2<T>{v1, v2};
            const T N = p_.m * (v2 * q.y + v1 * q.x) + p_.m * p_.g * R.c2.z;
            const T a_gt = -p_.g * (R.c0.z * sb - R.c1.z * cb);
            const T lat = a_gt + v * v * gamma * (1.0 / L);
            const T cap = p_.m / (p_.tires.mu * N);
            path[0] = cap * cap * (a * a + lat * lat);
            path[1] = N;
        }
    }

    template <class T>
    std::array<T, NZ> f(const std::array<T, NZ>& Z, const std::array<T, NU>& U) const {
        std::array<T, NZ> zdot;
        point_eval(Z.data(), U.data(), static_cast<const T*>(nullptr), zdot.data(),
                   static_cast<T*>(nullptr), static_cast<T*>(nullptr));
        return zdot;
    }

    // Tire acceleration demand over available grip, squared; feasible iff <= 1.
    template <class T>
    T friction_cone_residual(const std::array<T, NZ>& Z, const std::array<T, NU>& U) const {
        std::array<T, NPATH> path;
        point_eval(Z.data(), U.data(), static_cast<const T*>(nullptr),
                   static_cast<T*>(nullptr), static_cast<T*>(nullptr), path.data());
        return path[0];
    }

    template <class T>
    T net_normal(const std::array<T, NZ>& Z, const std::array<T, NU>& U) const {
        std::array<T, NPATH> path;
        point_eval(Z.data(), U.data(), static_cast<const T*>(nullptr),
                   static_cast<T*>(nullptr), static_cast<T*>(nullptr), path.data());
        return path[1];
    }

    std::array<double, NPATH> path_lower() const { return {-1e20, 0.0}; }
    std::array<double, NPATH> path_upper() const { return {1.0, p_.N_max}; }
    std::array<double, NPATH> path_scale() const { return {1.0, 1.0 / p_.weight()}; }

    std::array<double, NU> input_lower() const { return {-50.0, -p_.gamma_max}; }
    std::array<double, NU> input_upper() const { return {50.0, p_.gamma_max}; }
    std::array<double, NZ> state_lower(double v_min, double v_max) const {
        (void)v_max;
        return {-1e20, -surf_->half_width(), -1.5, v_min};
    }
    std::array<double, NZ> state_upper(double v_min, double v_max) const {
        (void)v_min;
        return {1e20, surf_->half_width(), 1.5, v_max};
    }

    std::array<double, NZ> cruise_state(double v0) const { return {0.0, 0.0, 0.0, v0}; }
    std::array<double, NU> cruise_input() const { return {0.0, 0.0}; }

    std::array<double, 3> body_velocity(const std::array<double, NZ>& Z,
                                        const std::array<double, NU>& U) const {
        const double beta = std::atan(p_.l_r * std::tan(U[1]) / p_.wheelbase());
        return {Z[3] * std::cos(beta), Z[3] * std::sin(beta),
                Z[3] * std::sin(beta) / p_.l_r};
    }
    static double steering_of(const std::array<double, NU>& U) { return U[1]; }

private:
    const Surface* surf_;
    VehicleParams p_;
    std::string name_;
};

// Dynamic bicycle: lateral magic-formula forces at each axle with the
// quasi-static front/rear weight split of a parked vehicle, longitudinal
// acceleration as a bounded input.
//   Z = [s, y, theta_s, v1, v2, omega3]
//   U = [a, gamma]
class DynamicBicycleModel {
public:
    static constexpr int NZ = 6;
    static constexpr int NU = 2;
    static constexpr int NG = 0;
    static constexpr int NPATH = 3;  // N, a - mu N / m, a + mu N / m

    DynamicBicycleModel(const Surface& surface, VehicleParams params)
        : surf_(&surface), p_(std::move(params)) {
        p_.validate();
    }

    const VehicleParams& params() const { return p_; }
    const Surface& surface() const { return *surf_; }
    static std::string name() { return "dynamic_bicycle"; }

    template <class T>
    void point_eval(const T* Z, const T* U, const T* /*G*/, T* zdot, T* /*gc*/, T* path) const {
        const T& theta = Z[2];
        const T& v1 = Z[3];
        const T& v2 = Z[4];
        const T& w3 = Z[5];
        const T& a = U[0];
        const T& gamma = U[1];
        const double L = p_.wheelbase();

        const auto jet = surf_->jet(Z[0], Z[1]);
        const auto maps = surface_curvature_maps(jet, theta, T(p_.h));
        const Vec2<T> q = maps.vel_to_omega * Vec2<T>{v1, v2};
        const T w2 = -q.x;
        const T w1 = q.y;
        const auto R = orientation_from_theta_s(jet, theta);
        const Vec3<T> Fg = gravity_body(R, p_);
        const T N = p_.m * (v2 * w1 - v1 * w2) - Fg.z;

        if (zdot != nullptr) {
            const Vec2<T> sy_dot = maps.vel_to_param * Vec2<T>{v1, v2};
            const T inv_ss = T(1.0) / dot(jet.x_s, jet.x_s);
            const T cs = dot(cross(jet.x_ss, jet.x_s), jet.e_n) * inv_ss;
            const T cy = dot(cross(jet.x_sy, jet.x_s), jet.e_n) * inv_ss;

            const T N_front = N * (p_.l_r / L);
            const T N_rear = N * (p_.l_f / L);
            T vfx, vfy, vrx, vry;
            contact_velocity(v1, v2, w1, w2, w3, {p_.l_f, 0.0, -p_.h}, gamma, vfx, vfy);
            contact_velocity(v1, v2, w1, w2, w3, {-p_.l_r, 0.0, -p_.h}, T(0.0), vrx, vry);
            const T Fyf = magic_formula(T(0.0), slip_angle(vfx, vfy), N_front, p_.tires).Fy;
            const T Fyr = magic_formula(T(0.0), slip_angle(vrx, vry), N_rear, p_.tires).Fy;

            const T cg = cos(gamma), sg = sin(gamma);
            const T Fd1 = -(p_.drag_lin + p_.drag_quad * v1) * v1;
            const T F1 = p_.m * a + Fg.x + Fd1 - sg * Fyf;
            const T F2 = Fg.y + cg * Fyf + Fyr;
            const T K3 = p_.l_f * (cg * Fyf) - p_.l_r * Fyr;

            zdot[0] = sy_dot.x;
            zdot[1] = sy_dot.y;
            zdot[2] = w3 + cs * sy_dot.x + cy * sy_dot.y;
            zdot[3] = F1 * (1.0 / p_.m) + v2 * w3;
            zdot[4] = F2 * (1.0 / p_.m) - v1 * w3;
            zdot[5] = (K3 - (p_.I2 - p_.I1) * w1 * w2) * (1.0 / p_.I3);
        }

        if (path != nullptr) {
            const T cap = p_.tires.mu * N * (1.0 / p_.m);
            path[0] = N;
            path[1] = a - cap;
            path[2] = a + cap;
        }
    }

    template <class T>
    std::array<T, NZ> f(const std::array<T, NZ>& Z, const std::array<T, NU>& U) const {
        std::array<T, NZ> zdot;
        point_eval(Z.data(), U.data(), static_cast<const T*>(nullptr), zdot.data(),
                   static_cast<T*>(nullptr), static_cast<T*>(nullptr));
        return zdot;
    }

    template <class T>
    T net_normal(const std::array<T, NZ>& Z, const std::array<T, NU>& U) const {
        std::array<T, NPATH> path;
        point_eval(Z.data(), U.data(), static_cast<const T*>(nullptr),
                   static_cast<T*>(nullptr), static_cast<T*>(nullptr), path.data());
        return path[0];
    }

    // Simulation-side guard; the optimizer enforces the same bound as rows.
    void validate_input(const std::array<double, NZ>& Z, const std::array<double, NU>& U) const {
        const double N = net_normal(Z, std::array<double, NU>{0.0, U[1]});
        const double cap = p_.tires.mu * N / p_.m;
        if (std::fabs(U[0]) > cap)
            throw DomainError("acceleration input " + std::to_string(U[0]) +
                              " outside +-" + std::to_string(cap));
    }

    std::array<double, NPATH> path_lower() const { return {0.0, -1e20, 0.0}; }
    std::array<double, NPATH> path_upper() const { return {p_.N_max, 0.0, 1e20}; }
    std::array<double, NPATH> path_scale() const {
        return {1.0 / p_.weight(), 1.0 / p_.g, 1.0 / p_.g};
    }

    std::array<double, NU> input_lower() const { return {-50.0, -p_.gamma_max}; }
    std::array<double, NU> input_upper() const { return {50.0, p_.gamma_max}; }
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
    std::array<double, NU> cruise_input() const { return {0.0, 0.0}; }

    std::array<double, 3> body_velocity(const std::array<double, NZ>& Z,
                                        const std::array<double, NU>&) const {
        return {Z[3], Z[4], Z[5]};
    }
    static double steering_of(const std::array<double, NU>& U) { return U[1]; }

private:
    const Surface* surf_;
    VehicleParams p_;
};

}  // namespace raceline

#endif  // RACELINE_BICYCLE_MODELS_HPP
