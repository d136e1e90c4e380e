#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "raceline/tire_model.hpp"
#include "raceline/vehicle_params.hpp"

using namespace raceline;
using test::ChainOracle;

TEST_CASE("magic formula matches the scalar chain oracle") {
    const TireParams p;
    const ChainOracle oracle{p};
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> uslip(-0.3, 0.3), uN(500.0, 9000.0);
    for (int k = 0; k < 200; ++k) {
        const double sigma = uslip(rng), alpha = uslip(rng), N = uN(rng);
        const auto F = magic_formula(sigma, alpha, N, p);
        CHECK(F.Fx == doctest::Approx(oracle.Fx(sigma, alpha, N)).epsilon(1e-12));
        CHECK(F.Fy == doctest::Approx(oracle.Fy(sigma, alpha, N)).epsilon(1e-12));
    }
}

TEST_CASE("pure-slip spot value near 3260 N") {
    const TireParams p;
    const ChainOracle oracle{p};
    const double want = oracle.Fx(0.05, 0.0, 5000.0);
    CHECK(want == doctest::Approx(3260.0).epsilon(1e-2));
    const auto F = magic_formula(0.05, 0.0, 5000.0, p);
    CHECK(std::fabs(F.Fx - want) < 1.0);
    CHECK(F.Fy == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("zero slip gives zero force") {
    const auto F = magic_formula(0.0, 0.0, 5000.0, TireParams{});
    CHECK(F.Fx == 0.0);
    CHECK(F.Fy == 0.0);
}

TEST_CASE("forces are exactly linear in normal force") {
    const TireParams p;
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> uslip(-0.3, 0.3);
    for (int k = 0; k < 100; ++k) {
        const double sigma = uslip(rng), alpha = uslip(rng);
        const auto F1 = magic_formula(sigma, alpha, 4000.0, p);
        const auto F2 = magic_formula(sigma, alpha, 8000.0, p);
        CHECK(F2.Fx == doctest::Approx(2.0 * F1.Fx).epsilon(1e-14));
        CHECK(F2.Fy == doctest::Approx(2.0 * F1.Fy).epsilon(1e-14));
    }
}

TEST_CASE("odd symmetry in each slip quantity") {
    const TireParams p;
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> uslip(-0.3, 0.3);
    for (int k = 0; k < 100; ++k) {
        const double sigma = uslip(rng), alpha = uslip(rng);
        const auto F = magic_formula(sigma, alpha, 5000.0, p);
        const auto Fs = magic_formula(-sigma, alpha, 5000.0, p);
        const auto Fa = magic_formula(sigma, -alpha, 5000.0, p);
        CHECK(Fs.Fx == doctest::Approx(-F.Fx).epsilon(1e-13));
        CHECK(Fa.Fy == doctest::Approx(-F.Fy).epsilon(1e-13));
    }
}

TEST_CASE("weighting functions stay in (0, 1] on the slip box") {
    const TireParams p;
    for (int i = -15; i <= 15; ++i)
        for (int j = -15; j <= 15; ++j) {
            const double sigma = 0.02 * i, alpha = 0.02 * j;
            const double N = 5000.0;
            const ChainOracle oracle{p};
            const double Fx0 = oracle.Fx(sigma, 0.0, N);
            const double Fy0 = oracle.Fy(0.0, alpha, N);
            const auto F = magic_formula(sigma, alpha, N, p);
            if (std::fabs(Fx0) > 1e-9) {
                const double Gxa = F.Fx / Fx0;
                CHECK(Gxa > 0.0);
                CHECK(Gxa <= 1.0 + 1e-12);
            }
            if (std::fabs(Fy0) > 1e-9) {
                const double Gys = F.Fy / Fy0;
                CHECK(Gys > 0.0);
                CHECK(Gys <= 1.0 + 1e-12);
            }
            if (i == 0 && std::fabs(Fy0) > 1e-9) CHECK(F.Fy == doctest::Approx(Fy0));
            if (j == 0 && std::fabs(Fx0) > 1e-9) CHECK(F.Fx == doctest::Approx(Fx0));
        }
}

TEST_CASE("combined force stays within the friction circle on the slip box") {
    const TireParams p;
    const double N = 5000.0;
    for (int i = -15; i <= 15; ++i)
        for (int j = -15; j <= 15; ++j) {
            const auto F = magic_formula(0.02 * i, 0.02 * j, N, p);
            CHECK(std::hypot(F.Fx, F.Fy) <= p.mu * N * (1.0 + 1e-9));
        }
}

TEST_CASE("ackermann geometry") {
    const VehicleParams vp;
    double fr, fl;
    ackermann_angles(0.0, vp.l_f, vp.l_r, vp.t_f, fr, fl);
    CHECK(fr == 0.0);
    CHECK(fl == 0.0);

    // small angle: both wheels approach the input
    ackermann_angles(1e-4, vp.l_f, vp.l_r, vp.t_f, fr, fl);
    CHECK(fr == doctest::Approx(1e-4).epsilon(1e-3));
    CHECK(fl == doctest::Approx(1e-4).epsilon(1e-3));

    // left turn: the left (inner) wheel steers more
    ackermann_angles(0.3, vp.l_f, vp.l_r, vp.t_f, fr, fl);
    CHECK(fl > 0.3);
    CHECK(fr < 0.3);
    CHECK(fr > 0.0);

    // mirror symmetry
    double fr2, fl2;
    ackermann_angles(-0.3, vp.l_f, vp.l_r, vp.t_f, fr2, fl2);
    CHECK(fr2 == doctest::Approx(-fl).epsilon(1e-14));
    CHECK(fl2 == doctest::Approx(-fr).epsilon(1e-14));
}

TEST_CASE("contact slip angles") {
    const VehicleParams vp;
    WheelGeometry wheel;
    wheel.offset = {vp.l_f, vp.t_f, -vp.h};  // front left

    BodyVelocity fwd;
    fwd.v1 = 10.0;
    CHECK(contact_slip_angle(fwd, wheel, 0.0) == doctest::Approx(0.0));

    BodyVelocity drift;
    drift.v1 = 10.0;
    drift.v2 = 1.0;
    CHECK(contact_slip_angle(drift, wheel, 0.0) ==
          doctest::Approx(std::atan(-0.1)).epsilon(1e-12));

    // yaw-lever term distinguishes front from rear on the same side
    BodyVelocity yawing;
    yawing.v1 = 10.0;
    yawing.omega3 = 0.5;
    WheelGeometry rear = wheel;
    rear.offset = {-vp.l_r, vp.t_r, -vp.h};
    const double a_front = contact_slip_angle(yawing, wheel, 0.0);
    const double a_rear = contact_slip_angle(yawing, rear, 0.0);
    // oracle: rigid-body contact velocity, then the slip definition
    auto oracle = [&](const Vec3<double>& p) {
        const double vx = yawing.v1 - yawing.omega3 * p.y;
        const double vy = yawing.v2 + yawing.omega3 * p.x;
        return std::atan2(-vy, vx);
    };
    CHECK(a_front == doctest::Approx(oracle(wheel.offset)).epsilon(1e-12));
    CHECK(a_rear == doctest::Approx(oracle(rear.offset)).epsilon(1e-12));
    CHECK(a_front != a_rear);

    // low-speed guard
    BodyVelocity slow;
    slow.v1 = 0.05;
    CHECK_THROWS_AS(contact_slip_angle(slow, wheel, 0.0), LowSpeedError);
}
