#ifndef RACELINE_ANGLE_PROFILE_HPP
#define RACELINE_ANGLE_PROFILE_HPP

#include <vector>

#include "raceline/dual.hpp"
#include "raceline/errors.hpp"

namespace raceline {

// One Tait-Bryan angle as a function of path length: a constant base, an
// optional linear ramp, and smooth step transitions. Each step is a quintic
// polynomial with vanishing first and second derivatives at both ends, so the
// profile is C2 everywhere (piecewise polynomial).
struct AngleProfile {
    struct Step {
        double start = 0.0;
        double end = 0.0;
        double delta = 0.0;
    };

    double base = 0.0;
    double rate = 0.0;  // rad per meter
    std::vector<Step> steps;

    void validate(double length) const {
        for (const auto& st : steps) {
            if (!(st.end > st.start))
                throw ConfigError("angle profile step needs end > start");
            if (st.start < 0.0 || st.end > length)
                throw ConfigError("angle profile step outside [0, length]");
        }
    }

    template <class T>
    T eval(const T& s) const {
        T a = T(base) + rate * s;
        for (const auto& st : steps) a += st.delta * smooth<T, 0>(s, st);
        return a;
    }

    template <class T>
    T deriv(const T& s) const {
        T a = T(rate);
        for (const auto& st : steps) a += st.delta * smooth<T, 1>(s, st);
        return a;
    }

    template <class T>
    T deriv2(const T& s) const {
        T a = T(0.0);
        for (const auto& st : steps) a += st.delta * smooth<T, 2>(s, st);
        return a;
    }

private:
    template <class T, int Order>
    static T smooth(const T& s, const Step& st) {
        const double w = st.end - st.start;
        const double u = (value(s) - st.start) / w;
        if (u <= 0.0) return T(0.0);
        if (u >= 1.0) return Order == 0 ? T(1.0) : T(0.0);
        const T t = (s - st.start) * (1.0 / w);
        const T t2 = t * t;
        if constexpr (Order == 0) {
            return ((6.0 * t - 15.0) * t + 10.0) * t2 * t;
        } else if constexpr (Order == 1) {
            return ((30.0 * t - 60.0) * t + 30.0) * t2 * (1.0 / w);
        } else {
            return ((120.0 * t - 180.0) * t + 60.0) * t * (1.0 / (w * w));
        }
    }
};

}  // namespace raceline

#endif  // RACELINE_ANGLE_PROFILE_HPP
