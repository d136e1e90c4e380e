#include <cmath>
#include <random>

#include "doctest.h"
#include "raceline/surface.hpp"
#include "test_tracks.hpp"

using namespace raceline;

namespace {

double max_abs_diff(const Vec3<double>& a, const Vec3<double>& b) {
    return std::max({std::fabs(a.x - b.x), std::fabs(a.y - b.y), std::fabs(a.z - b.z)});
}

// Relative error with an absolute floor, used for FD comparisons.
double rel_err(double a, double b) {
    return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

void check_partials_against_fd(const Surface& surf, double s, double y) {
    const double h = 1e-5;
    const auto jet = surf.jet(s, y);
    const auto sp = surf.jet(s + h, y), sm = surf.jet(s - h, y);
    const auto yp = surf.jet(s, y + h), ym = surf.jet(s, y - h);
    auto fd = [&](const Vec3<double>& p, const Vec3<double>& m) {
        return (1.0 / (2.0 * h)) * (p - m);
    };
    const Vec3<double> xs_fd = fd(sp.x_p, sm.x_p);
    const Vec3<double> xy_fd = fd(yp.x_p, ym.x_p);
    const Vec3<double> xss_fd = fd(sp.x_s, sm.x_s);
    const Vec3<double> xsy_fd = fd(yp.x_s, ym.x_s);
    const Vec3<double> xyy_fd = fd(yp.x_y, ym.x_y);
    for (auto [ad, num] : {std::pair{jet.x_s, xs_fd},
                           {jet.x_y, xy_fd},
                           {jet.x_ss, xss_fd},
                           {jet.x_sy, xsy_fd},
                           {jet.x_yy, xyy_fd}}) {
        CHECK(rel_err(ad.x, num.x) < 1e-5);
        CHECK(rel_err(ad.y, num.y) < 1e-5);
        CHECK(rel_err(ad.z, num.z) < 1e-5);
    }
}

}  // namespace

TEST_CASE("flat straight surface is the plane (s, y, 0)") {
    const Surface surf(test::flat_straight());
    for (auto [s, y] : {std::pair{0.0, 0.0}, {12.3, 2.1}, {99.0, -4.9}}) {
        const auto jet = surf.jet(s, y);
        CHECK(jet.x_p.x == doctest::Approx(s).epsilon(1e-12));
        CHECK(jet.x_p.y == doctest::Approx(y).epsilon(1e-12));
        CHECK(jet.x_p.z == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(max_abs_diff(jet.e_n, {0.0, 0.0, 1.0}) < 1e-12);
        CHECK(norm(jet.x_ss) < 1e-10);
        CHECK(norm(jet.x_sy) < 1e-10);
        CHECK(norm(jet.x_yy) < 1e-10);
    }
}

TEST_CASE("arc cross-section normal offset") {
    const double kappa = 0.2;
    const Surface surf(test::cylinder_section(kappa));
    // oracle: scalar evaluation of the offset expression
    auto offset = [&](double y) { return (1.0 - std::sqrt(1.0 - y * y * kappa * kappa)) / kappa; };
    CHECK(offset(1.0) == doctest::Approx(0.10102).epsilon(1e-4));

    const auto at0 = surf.jet(10.0, 0.0);
    CHECK(at0.x_p.z == doctest::Approx(0.0).epsilon(1e-12));
    const auto at1 = surf.jet(10.0, 1.0);
    CHECK(at1.x_p.z == doctest::Approx(offset(1.0)).epsilon(1e-12));

    // 1-m/5 curvature shows up as the normal-projected second derivative
    CHECK(dot(at0.x_yy, at0.e_n) == doctest::Approx(kappa).epsilon(1e-12));
}

TEST_CASE("fundamental forms on flat and curved sections") {
    const Surface flat(test::flat_straight());
    const auto f = fundamental_forms(flat.jet(5.0, 1.0));
    CHECK(f.first.a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.first.d == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(f.first.b) < 1e-12);
    for (double v : {f.second.a, f.second.b, f.second.c, f.second.d}) CHECK(std::fabs(v) < 1e-10);

    const Surface cyl(test::cylinder_section(0.2));
    const auto g = fundamental_forms(cyl.jet(5.0, 0.0));
    CHECK(std::fabs(g.second.a) < 1e-10);
    CHECK(std::fabs(g.second.b) < 1e-10);
    CHECK(g.second.d == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(g.second.b == doctest::Approx(g.second.c).epsilon(1e-12));
}

TEST_CASE("parameterization jacobian on the flat plane") {
    const Surface surf(test::flat_straight());
    const auto jet = surf.jet(3.0, 0.5);

    const auto pj0 = parameterization_jacobian(jet, 0.0);
    CHECK(pj0.theta_p == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pj0.J.a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pj0.J.d == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(pj0.J.b) < 1e-12);
    CHECK(std::fabs(pj0.J.c) < 1e-12);

    const auto pj90 = parameterization_jacobian(jet, M_PI / 2.0);
    CHECK(std::fabs(pj90.J.a) < 1e-12);
    CHECK(pj90.J.b == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(pj90.J.c == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(pj90.J.d) < 1e-12);
}

TEST_CASE("parameterization stays orthogonal on flat cross sections") {
    const Surface surf(test::flat_l_track());
    for (double s : {10.0, 60.0, 80.0, 120.0})
        for (double y : {-4.0, 0.0, 3.0}) {
            const auto pj = parameterization_jacobian(surf.jet(s, y), 0.3);
            CHECK(std::fabs(pj.theta_p) < 1e-9);
        }
}

TEST_CASE("orientation from heading") {
    const Surface flat(test::flat_straight());
    const auto jet = flat.jet(1.0, 0.0);

    const auto R0 = orientation_from_theta_s(jet, 0.0);
    CHECK(max_abs_diff(R0.c0, {1.0, 0.0, 0.0}) < 1e-12);
    CHECK(max_abs_diff(R0.c1, {0.0, 1.0, 0.0}) < 1e-12);
    CHECK(max_abs_diff(R0.c2, {0.0, 0.0, 1.0}) < 1e-12);

    const double th = 0.77;
    const auto R = orientation_from_theta_s(jet, th);
    CHECK(max_abs_diff(R.c0, {std::cos(th), std::sin(th), 0.0}) < 1e-12);
    CHECK(max_abs_diff(R.c1, {-std::sin(th), std::cos(th), 0.0}) < 1e-12);

    const Surface banked(test::banked_straight(M_PI / 4.0));
    const auto Rb = orientation_from_theta_s(banked.jet(50.0, 0.0), 0.0);
    CHECK(Rb.c1.z == doctest::Approx(std::sin(M_PI / 4.0)).epsilon(1e-9));
}

TEST_CASE("orientation is orthonormal with the normal as third column") {
    std::mt19937 rng(3);
    const Surface surf(test::tube_turn());
    std::uniform_real_distribution<double> us(1.0, 219.0), uy(-5.9, 5.9), ut(-1.2, 1.2);
    for (int k = 0; k < 200; ++k) {
        const auto jet = surf.jet(us(rng), uy(rng));
        const auto R = orientation_from_theta_s(jet, ut(rng));
        const Vec3<double> cols[3] = {R.c0, R.c1, R.c2};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double want = i == j ? 1.0 : 0.0;
                CHECK(std::fabs(dot(cols[i], cols[j]) - want) < 1e-9);
            }
        CHECK(max_abs_diff(R.c2, jet.e_n) == 0.0);
        // right-handedness
        CHECK(dot(cross(R.c0, R.c1), R.c2) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("normal is aligned with the tangent cross product") {
    const Surface surf(test::tube_turn());
    for (auto [s, y] : {std::pair{5.0, 1.0}, {100.0, -4.0}, {200.0, 3.3}}) {
        const auto jet = surf.jet(s, y);
        const auto c = cross(jet.x_s, jet.x_y);
        CHECK(max_abs_diff(norm(c) * jet.e_n, c) < 1e-12);
        CHECK(std::fabs(norm(jet.e_n) - 1.0) < 1e-12);
        CHECK(std::fabs(dot(jet.e_n, jet.x_s)) < 1e-9);
        CHECK(std::fabs(dot(jet.e_n, jet.x_y)) < 1e-9);
    }
}

TEST_CASE("analytic partials match finite differences") {
    std::mt19937 rng(5);
    for (const auto& cfg : {test::flat_l_track(), test::tube_turn()}) {
        const Surface surf(cfg);
        std::uniform_real_distribution<double> us(0.5, cfg.length - 0.5);
        std::uniform_real_distribution<double> uy(-cfg.half_width + 0.1, cfg.half_width - 0.1);
        for (int k = 0; k < 40; ++k) check_partials_against_fd(surf, us(rng), uy(rng));
    }
}

TEST_CASE("closed circle track closes") {
    const auto cfg = test::flat_circle();
    const Surface surf(cfg);
    const auto a = surf.jet(cfg.length - 1e-9, 1.0);
    const auto b = surf.jet(1e-9, 1.0);
    CHECK(max_abs_diff(a.x_p, b.x_p) < 1e-6);
    CHECK(max_abs_diff(a.x_s, b.x_s) < 1e-6);
    CHECK(max_abs_diff(a.e_n, b.e_n) < 1e-6);
    // wrap maps s = length onto s = 0 exactly
    const auto c = surf.jet(cfg.length, 1.0);
    CHECK(max_abs_diff(c.x_p, b.x_p) < 1e-9);
    // the circle has the expected radius
    const double R = cfg.length / (2.0 * M_PI);
    const auto center = surf.centerline(0.0);
    const auto quarter = surf.centerline(cfg.length / 4.0);
    const double chord = std::hypot(quarter.x - center.x, quarter.y - center.y);
    CHECK(chord == doctest::Approx(R * std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("non-closing track is rejected") {
    auto cfg = test::flat_circle();
    cfg.yaw.rate *= 0.98;  // lap no longer returns to the start
    CHECK_THROWS_AS(Surface{cfg}, ConfigError);
}

TEST_CASE("domain violations raise errors naming the coordinate") {
    const Surface surf(test::flat_straight(100.0, 5.0));
    CHECK_THROWS_AS(surf.jet(-1.0, 0.0), DomainError);
    CHECK_THROWS_AS(surf.jet(101.0, 0.0), DomainError);
    CHECK_THROWS_AS(surf.jet(50.0, 5.5), DomainError);
    try {
        surf.jet(50.0, 5.5);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("y = ") != std::string::npos);
    }
}

TEST_CASE("config invariants are enforced") {
    auto cfg = test::flat_straight();
    cfg.length = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = test::cylinder_section(0.3, 100.0, 4.0);
    cfg.half_width = 4.0;  // 1/kappa = 3.33 < 4
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
