#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>

namespace subsim::grid {

/// Per-bus three-phase phasor measurements at one instant: magnitudes in
/// per-unit, angles in radians (normalized to (-pi, pi]), frequency in Hz.
/// Rows are phases (a, b, c); columns are buses in model order.
struct SystemSnapshot {
    Eigen::Matrix3Xd magnitude;
    Eigen::Matrix3Xd angle;
    Eigen::Matrix3Xd frequency;
    double timestamp = 0.0; // seconds of simulation time

    int bus_count() const { return static_cast<int>(magnitude.cols()); }

    std::complex<double> phasor(int phase, int bus) const {
        return std::polar(magnitude(phase, bus), angle(phase, bus));
    }

    /// Throws ModelError if magnitudes are negative, angles outside
    /// (-pi, pi], or frequencies outside [55, 65] Hz.
    void validate() const;
};

double normalize_angle(double rad); // into (-pi, pi]

struct NoiseParams {
    double magnitude_sigma = 0.001; // pu
    double angle_sigma = 0.0005;    // rad
    double frequency_sigma = 0.002; // Hz
};

/// Measurement noise applied at snapshot time; the underlying solution stays
/// exact so datasets remain reproducible from the seed alone.
SystemSnapshot apply_measurement_noise(const SystemSnapshot& clean,
                                       const NoiseParams& params,
                                       std::mt19937_64& rng);

} // namespace subsim::grid
