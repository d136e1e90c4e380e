#ifndef RACELINE_TRAJECTORY_HPP
#define RACELINE_TRAJECTORY_HPP

#include <array>
#include <string>
#include <vector>

#include "raceline/small_matrix.hpp"

namespace raceline {

// One sample of a simulated or optimized motion. Z/U/G keep the model's own
// layout; the named fields are the canonical quantities every consumer needs.
struct TrajectorySample {
    double t = 0.0;
    std::vector<double> Z, U, G;
    double s = 0.0, y = 0.0, n = 0.0, theta_s = 0.0;
    double v1 = 0.0, v2 = 0.0, omega3 = 0.0;
    bool has_tires = false;
    std::array<double, 4> tire_N{};  // fr, fl, rr, rl
    double gamma = 0.0;
    std::array<double, 4> sigma{};
    Vec3<double> x_g{};
    Mat3<double> R{};
};

struct Trajectory {
    std::string model;
    std::vector<TrajectorySample> samples;
    bool contact_loss = false;
};

// Minimum-time result: lap time plus a densely sampled trajectory.
struct Raceline {
    std::string model;
    double lap_time = 0.0;
    Trajectory trajectory;
    int intervals = 0;
    int degree = 0;
};

}  // namespace raceline

#endif  // RACELINE_TRAJECTORY_HPP
