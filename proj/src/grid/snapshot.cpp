#include "subsim/grid/snapshot.hpp"

#include "subsim/core/errors.hpp"

#include <cmath>

namespace subsim::grid {

double normalize_angle(double rad) {
    const double two_pi = 2.0 * M_PI;
    double a = std::fmod(rad, two_pi);
    if (a <= -M_PI) a += two_pi;
    else if (a > M_PI) a -= two_pi;
    return a;
}

void SystemSnapshot::validate() const {
    for (int b = 0; b < bus_count(); ++b) {
        for (int p = 0; p < 3; ++p) {
            if (magnitude(p, b) < 0.0)
                throw ModelError("negative voltage magnitude at bus index " +
                                 std::to_string(b));
            double a = angle(p, b);
            if (a <= -M_PI - 1e-12 || a > M_PI + 1e-12)
                throw ModelError("angle outside (-pi, pi] at bus index " +
                                 std::to_string(b));
            double f = frequency(p, b);
            if (f < 55.0 || f > 65.0)
                throw ModelError("frequency outside [55, 65] Hz at bus index " +
                                 std::to_string(b));
        }
    }
}

SystemSnapshot apply_measurement_noise(const SystemSnapshot& clean,
                                       const NoiseParams& params,
                                       std::mt19937_64& rng) {
    std::normal_distribution<double> mag(0.0, params.magnitude_sigma);
    std::normal_distribution<double> ang(0.0, params.angle_sigma);
    std::normal_distribution<double> freq(0.0, params.frequency_sigma);
    SystemSnapshot out = clean;
    for (int b = 0; b < out.bus_count(); ++b) {
        for (int p = 0; p < 3; ++p) {
            out.magnitude(p, b) = std::max(0.0, out.magnitude(p, b) + mag(rng));
            out.angle(p, b) = normalize_angle(out.angle(p, b) + ang(rng));
            out.frequency(p, b) += freq(rng);
        }
    }
    return out;
}

} // namespace subsim::grid
