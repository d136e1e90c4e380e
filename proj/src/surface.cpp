#include "raceline/surface.hpp"

#include <cmath>

namespace raceline {

void SurfaceConfig::validate() const {
    if (!(length > 0.0)) throw ConfigError("length must be > 0");
    if (!(half_width > 0.0)) throw ConfigError("half_width must be > 0");
    if (!(arclength_grid > 0.0)) throw ConfigError("arclength_grid must be > 0");
    if (cross_curvature != 0.0 && !(half_width < 1.0 / std::fabs(cross_curvature)))
        throw ConfigError("half_width must be < 1/|cross_curvature|");
    yaw.validate(length);
    pitch.validate(length);
    roll.validate(length);
}

namespace {

Vec3<double> tangent_at(const SurfaceConfig& cfg, double s) {
    using detail::SJet;
    const SJet<double> a{cfg.yaw.eval(s), 0.0, 0.0};
    const SJet<double> b{cfg.pitch.eval(s), 0.0, 0.0};
    const SJet<double> c{cfg.roll.eval(s), 0.0, 0.0};
    const auto f = detail::frame_from_angles(a, b, c);
    return {f.es[0].v, f.es[1].v, f.es[2].v};
}

struct FrameVectors {
    Vec3<double> es, ey, en;
};

FrameVectors frame_at(const SurfaceConfig& cfg, double s) {
    using detail::SJet;
    const SJet<double> a{cfg.yaw.eval(s), 0.0, 0.0};
    const SJet<double> b{cfg.pitch.eval(s), 0.0, 0.0};
    const SJet<double> c{cfg.roll.eval(s), 0.0, 0.0};
    const auto f = detail::frame_from_angles(a, b, c);
    return {{f.es[0].v, f.es[1].v, f.es[2].v},
            {f.ey[0].v, f.ey[1].v, f.ey[2].v},
            {f.en[0].v, f.en[1].v, f.en[2].v}};
}

}  // namespace

Surface::Surface(SurfaceConfig config) : cfg_(std::move(config)) {
    cfg_.validate();

    const std::size_t n = std::max<std::size_t>(
        4, static_cast<std::size_t>(std::ceil(cfg_.length / cfg_.arclength_grid)));
    const double h = cfg_.length / static_cast<double>(n);

    // Fixed-step RK4 on dx/ds = e_s(s); the tangent depends on s alone.
    std::array<std::vector<double>, 3> knots;
    for (auto& k : knots) k.reserve(n + 1);
    Vec3<double> x{0.0, 0.0, 0.0};
    auto push = [&](const Vec3<double>& p) {
        knots[0].push_back(p.x);
        knots[1].push_back(p.y);
        knots[2].push_back(p.z);
    };
    push(x);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = h * static_cast<double>(i);
        const Vec3<double> k1 = tangent_at(cfg_, s);
        const Vec3<double> k2 = tangent_at(cfg_, s + 0.5 * h);
        const Vec3<double> k4 = tangent_at(cfg_, s + h);
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k2 + k4);
        push(x);
    }

    if (cfg_.closed) {
        const auto f0 = frame_at(cfg_, 0.0);
        const auto f1 = frame_at(cfg_, cfg_.length);
        const Vec3<double> dpos{knots[0].back() - knots[0].front(),
                                knots[1].back() - knots[1].front(),
                                knots[2].back() - knots[2].front()};
        double err = 0.0;
        for (double v : {dpos.x, dpos.y, dpos.z}) err = std::max(err, std::fabs(v));
        for (const auto& [a, b] : {std::pair{f0.es, f1.es}, {f0.ey, f1.ey}, {f0.en, f1.en}}) {
            err = std::max(err, std::fabs(a.x - b.x));
            err = std::max(err, std::fabs(a.y - b.y));
            err = std::max(err, std::fabs(a.z - b.z));
        }
        if (err > 1e-6)
            throw ConfigError("closed track does not close: mismatch " + std::to_string(err));
        // force exact closure so the periodic spline sees one knot
        for (auto& k : knots) k.back() = k.front();
        for (int i = 0; i < 3; ++i) center_[i] = CubicSpline::periodic(0.0, h, std::move(knots[i]));
    } else {
        const Vec3<double> m0 = tangent_at(cfg_, 0.0);
        const Vec3<double> m1 = tangent_at(cfg_, cfg_.length);
        const std::array<std::pair<double, double>, 3> slopes{
            std::pair{m0.x, m1.x}, {m0.y, m1.y}, {m0.z, m1.z}};
        for (int i = 0; i < 3; ++i)
            center_[i] = CubicSpline::clamped(0.0, h, std::move(knots[i]), slopes[i].first,
                                              slopes[i].second);
    }
}

SurfaceConfig flatten(SurfaceConfig config) {
    config.pitch = AngleProfile{};
    config.roll = AngleProfile{};
    config.cross_curvature = 0.0;
    config.name += "_planar";
    return config;
}

}  // namespace raceline
