#ifndef RACELINE_VEHICLE_PARAMS_HPP
#define RACELINE_VEHICLE_PARAMS_HPP

#include "raceline/errors.hpp"
#include "raceline/tire_model.hpp"

namespace raceline {

// Full-size sedan parameters, MKS. Defaults match the shipped vehicle file.
struct VehicleParams {
    double m = 2303.0;
    double g = 9.81;
    double I1 = 956.0;   // roll inertia
    double I2 = 5000.0;  // pitch inertia
    double I3 = 5520.0;  // yaw inertia
    double l_f = 1.52;
    double l_r = 1.50;
    double t_f = 0.625;
    double t_r = 0.625;
    double h = 0.592;  // COM height above the contact patches
    double N_max = 40000.0;
    double gamma_max = 0.5;
    double sigma_max = 0.15;
    double drag_lin = 0.0;   // N per (m/s), longitudinal
    double drag_quad = 0.0;  // N per (m/s)^2
    TireParams tires;

    double wheelbase() const { return l_f + l_r; }
    double weight() const { return m * g; }

    void validate() const {
        if (!(m > 0.0 && g > 0.0)) throw ConfigError("m and g must be > 0");
        if (!(I1 > 0.0 && I2 > 0.0 && I3 > 0.0)) throw ConfigError("inertias must be > 0");
        if (!(l_f > 0.0 && l_r > 0.0 && t_f > 0.0 && t_r > 0.0 && h > 0.0))
            throw ConfigError("geometry lengths must be > 0");
        if (!(N_max > 0.0)) throw ConfigError("N_max must be > 0");
        if (!(tires.mu > 0.0 && tires.C_x > 0.0 && tires.C_y > 0.0))
            throw ConfigError("tire mu, C_x, C_y must be > 0");
        if (!(tires.r > 0.0 && tires.r_e > 0.0)) throw ConfigError("tire radii must be > 0");
    }
};

}  // namespace raceline

#endif  // RACELINE_VEHICLE_PARAMS_HPP
