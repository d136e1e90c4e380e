#include <cmath>
#include <random>

#include "doctest.h"
#include "raceline/dual.hpp"

using namespace raceline;

namespace {

template <class T>
T sample_fn(const T& x, const T& y) {
    return sin(x * y) + sqrt(x + 2.0) * atan(y / x) - cos(x) * tan(y) + exp(-0.1 * x) +
           atan2(y, x) + log(x + 3.0);
}

}  // namespace

TEST_CASE("first-order duals match finite differences") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.4, 2.0);
    const double h = 1e-7;
    for (int k = 0; k < 50; ++k) {
        const double x = dist(rng), y = dist(rng);
        const auto q = sample_fn(seed1<2>(x, 0), seed1<2>(y, 1));
        const double fx = (sample_fn(x + h, y) - sample_fn(x - h, y)) / (2.0 * h);
        const double fy = (sample_fn(x, y + h) - sample_fn(x, y - h)) / (2.0 * h);
        CHECK(value(q) == doctest::Approx(sample_fn(x, y)).epsilon(1e-14));
        CHECK(grad(q, 0) == doctest::Approx(fx).epsilon(1e-6));
        CHECK(grad(q, 1) == doctest::Approx(fy).epsilon(1e-6));
    }
}

TEST_CASE("second-order duals produce symmetric Hessians that match FD of gradients") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(0.5, 1.8);
    const double h = 1e-6;
    for (int k = 0; k < 20; ++k) {
        const double x = dist(rng), y = dist(rng);
        const auto q = sample_fn(seed2<2>(x, 0), seed2<2>(y, 1));
        CHECK(hess(q, 0, 1) == doctest::Approx(hess(q, 1, 0)).epsilon(1e-12));
        // FD of first-order AD gradients
        for (int i = 0; i < 2; ++i) {
            const double xa = i == 0 ? x + h : x, ya = i == 1 ? y + h : y;
            const double xb = i == 0 ? x - h : x, yb = i == 1 ? y - h : y;
            const auto ga = sample_fn(seed1<2>(xa, 0), seed1<2>(ya, 1));
            const auto gb = sample_fn(seed1<2>(xb, 0), seed1<2>(yb, 1));
            for (int j = 0; j < 2; ++j) {
                const double fd = (grad(ga, j) - grad(gb, j)) / (2.0 * h);
                CHECK(hess(q, i, j) == doctest::Approx(fd).epsilon(5e-5));
            }
        }
    }
}

TEST_CASE("atan2 derivative guard keeps zero-velocity inputs finite") {
    Jet1<3> x(0.0), y(0.0);  // passive zeros: derivative slots untouched
    const auto a = atan2(-1.0 * y, x);
    CHECK(value(a) == 0.0);
    for (int i = 0; i < 3; ++i) CHECK(std::isfinite(grad(a, i)));
}

TEST_CASE("dual quadrant behavior of atan2 matches std") {
    for (double yy : {-2.0, -0.3, 0.4, 1.7}) {
        for (double xx : {-1.5, -0.2, 0.3, 2.2}) {
            const auto q = atan2(seed1<2>(yy, 0), seed1<2>(xx, 1));
            CHECK(value(q) == doctest::Approx(std::atan2(yy, xx)).epsilon(1e-15));
        }
    }
}
