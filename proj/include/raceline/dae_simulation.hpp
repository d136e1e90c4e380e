#ifndef RACELINE_DAE_SIMULATION_HPP
#define RACELINE_DAE_SIMULATION_HPP

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "raceline/dual.hpp"
#include "raceline/errors.hpp"
#include "raceline/trajectory.hpp"
#include "raceline/two_track_model.hpp"

namespace raceline {

inline constexpr double kAlgebraicTol = 1e-8;  // newtons

// Newton solve of the weight-distribution residual for the algebraic state.
// The residual is affine in G at fixed accelerations, so this converges in a
// single step from any guess and the remaining iterations only verify.
template <class Model>
std::array<double, Model::NG> solve_algebraic(const Model& model,
                                              const std::array<double, Model::NZ>& Z,
                                              const std::array<double, Model::NU>& U,
                                              std::array<double, Model::NG> G) {
    static_assert(Model::NG > 0, "model has no algebraic state");
    constexpr int NG = Model::NG;
    using J = Jet1<NG>;

    std::array<J, Model::NZ> Zj;
    std::array<J, Model::NU> Uj;
    for (int i = 0; i < Model::NZ; ++i) Zj[i] = J(Z[i]);
    for (int i = 0; i < Model::NU; ++i) Uj[i] = J(U[i]);

    double res_norm = 0.0;
    for (int iter = 0; iter < 20; ++iter) {
        std::array<J, NG> Gj;
        for (int i = 0; i < NG; ++i) Gj[i] = seed1<NG>(G[i], i);
        const auto r = model.g_c(Zj, Uj, Gj);
        res_norm = 0.0;
        for (int i = 0; i < NG; ++i) res_norm = std::max(res_norm, std::fabs(value(r[i])));
        if (res_norm < kAlgebraicTol) return G;

        // dense Newton step with partial pivoting
        double A[NG][NG + 1];
        for (int i = 0; i < NG; ++i) {
            for (int j = 0; j < NG; ++j) A[i][j] = grad(r[i], j);
            A[i][NG] = -value(r[i]);
        }
        for (int col = 0; col < NG; ++col) {
            int piv = col;
            for (int i = col + 1; i < NG; ++i)
                if (std::fabs(A[i][col]) > std::fabs(A[piv][col])) piv = i;
            if (std::fabs(A[piv][col]) < 1e-14)
                throw AlgebraicSolveError("singular weight-distribution jacobian");
            if (piv != col)
                for (int j = col; j <= NG; ++j) std::swap(A[piv][j], A[col][j]);
            for (int i = col + 1; i < NG; ++i) {
                const double w = A[i][col] / A[col][col];
                for (int j = col; j <= NG; ++j) A[i][j] -= w * A[col][j];
            }
        }
        double dg[NG];
        for (int i = NG - 1; i >= 0; --i) {
            double acc = A[i][NG];
            for (int j = i + 1; j < NG; ++j) acc -= A[i][j] * dg[j];
            dg[i] = acc / A[i][i];
        }
        for (int i = 0; i < NG; ++i) G[i] += dg[i];
    }
    throw AlgebraicSolveError("weight distribution did not converge, last residual " +
                              std::to_string(res_norm) + " N");
}

namespace detail {

template <class Model>
std::array<double, Model::NZ> stage_rate(const Model& model,
                                         const std::array<double, Model::NZ>& Z,
                                         const std::array<double, Model::NU>& U,
                                         std::array<double, Model::NG>& G_warm) {
    if constexpr (Model::NG > 0) {
        G_warm = solve_algebraic(model, Z, U, G_warm);
        return model.f(Z, U, G_warm);
    } else {
        (void)G_warm;
        return model.f(Z, U);
    }
}

}  // namespace detail

// One classical 4-stage explicit step; the algebraic state is re-solved at
// every stage, warm-started stage to stage.
template <class Model>
void step(const Model& model, std::array<double, Model::NZ>& Z,
          const std::array<double, Model::NU>& U, double dt,
          std::array<double, Model::NG>& G) {
    if (!(dt > 0.0 && dt <= 0.02)) throw DomainError("dt must lie in (0, 0.02] s");
    constexpr int NZ = Model::NZ;
    const auto k1 = detail::stage_rate(model, Z, U, G);
    std::array<double, NZ> Zs;
    for (int i = 0; i < NZ; ++i) Zs[i] = Z[i] + 0.5 * dt * k1[i];
    const auto k2 = detail::stage_rate(model, Zs, U, G);
    for (int i = 0; i < NZ; ++i) Zs[i] = Z[i] + 0.5 * dt * k2[i];
    const auto k3 = detail::stage_rate(model, Zs, U, G);
    for (int i = 0; i < NZ; ++i) Zs[i] = Z[i] + dt * k3[i];
    const auto k4 = detail::stage_rate(model, Zs, U, G);
    for (int i = 0; i < NZ; ++i)
        Z[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if constexpr (Model::NG > 0) G = solve_algebraic(model, Z, U, G);
}

namespace detail {

template <class Model>
TrajectorySample make_sample(const Model& model, double t,
                             const std::array<double, Model::NZ>& Z,
                             const std::array<double, Model::NU>& U,
                             const std::array<double, Model::NG>& G) {
    TrajectorySample smp;
    smp.t = t;
    smp.Z.assign(Z.begin(), Z.end());
    smp.U.assign(U.begin(), U.end());
    smp.G.assign(G.begin(), G.end());
    smp.s = Z[0];
    smp.y = Z[1];
    smp.theta_s = Z[2];
    smp.n = model.params().h;
    const auto v = model.body_velocity(Z, U);
    smp.v1 = v[0];
    smp.v2 = v[1];
    smp.omega3 = v[2];
    smp.gamma = Model::steering_of(U);
    if constexpr (Model::NG > 0) {
        smp.has_tires = true;
        const auto N = per_tire_normals(G[0], G[1], G[2], model.params());
        for (int i = 0; i < 4; ++i) smp.tire_N[i] = N[i];
        for (int i = 0; i < 4; ++i) smp.sigma[i] = U[i];
    }
    const auto jet = model.surface().jet(Z[0], Z[1]);
    smp.x_g = jet.x_p + smp.n * jet.e_n;
    smp.R = orientation_from_theta_s(jet, Z[2]);
    return smp;
}

template <class Model>
bool contact_lost(const Model& model, const TrajectorySample& smp,
                  const std::array<double, Model::NZ>& Z,
                  const std::array<double, Model::NU>& U) {
    if constexpr (Model::NG > 0) {
        (void)model;
        (void)Z;
        (void)U;
        for (double N : smp.tire_N)
            if (N < 0.0) return true;
        return false;
    } else {
        return model.net_normal(Z, U) < 0.0;
    }
}

}  // namespace detail

// Integrate under a control law u(t, Z) over [0, T].
template <class Model, class Controller>
Trajectory rollout(const Model& model, std::array<double, Model::NZ> Z,
                   const Controller& control, double T, double dt = 1e-3,
                   int store_stride = 1) {
    Trajectory traj;
    traj.model = model.name();
    std::array<double, Model::NG> G{};
    std::array<double, Model::NU> U = control(0.0, Z);
    if constexpr (Model::NG > 0) G = solve_algebraic(model, Z, U, G);

    const long steps = std::lround(std::ceil(T / dt - 1e-12));
    for (long k = 0; k <= steps; ++k) {
        const double t = std::min(dt * static_cast<double>(k), T);
        U = control(t, Z);
        if (k % store_stride == 0 || k == steps) {
            auto smp = detail::make_sample(model, t, Z, U, G);
            const bool lost = detail::contact_lost(model, smp, Z, U);
            traj.samples.push_back(std::move(smp));
            if (lost) {
                traj.contact_loss = true;
                break;
            }
        }
        if (k < steps) {
            const double h = std::min(dt, T - t);
            step(model, Z, U, h, G);
        }
    }
    return traj;
}

// Sampled open-loop input schedule.
struct InputSchedule {
    std::vector<double> times;
    std::vector<std::vector<double>> values;
    bool linear = true;

    std::vector<double> at(double t, std::size_t nu) const {
        if (times.empty()) return std::vector<double>(nu, 0.0);
        if (t <= times.front()) return values.front();
        if (t >= times.back()) return values.back();
        std::size_t hi = 1;
        while (times[hi] < t) ++hi;
        if (!linear) return values[hi - 1];
        const double w = (t - times[hi - 1]) / (times[hi] - times[hi - 1]);
        std::vector<double> u(nu);
        for (std::size_t i = 0; i < nu; ++i)
            u[i] = (1.0 - w) * values[hi - 1][i] + w * values[hi][i];
        return u;
    }
};

}  // namespace raceline

#endif  // RACELINE_DAE_SIMULATION_HPP
