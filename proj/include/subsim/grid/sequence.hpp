#pragma once

#include <Eigen/Dense>

#include <complex>

namespace subsim::grid {

// Fortescue transform between phase (a,b,c) and sequence (zero, positive,
// negative) frames. Free functions over Eigen vectors, templated on the
// scalar so they compose with expressions at any precision.

template <typename Real>
std::complex<Real> rotator() {
    // 1 /_ 120 degrees
    return std::polar<Real>(Real(1), Real(2.0943951023931953));
}

/// 3x3 synthesis matrix A: phase = A * sequence, columns (zero, pos, neg).
template <typename Real>
Eigen::Matrix<std::complex<Real>, 3, 3> fortescue_matrix() {
    using C = std::complex<Real>;
    const C a = rotator<Real>();
    const C a2 = a * a;
    Eigen::Matrix<C, 3, 3> A;
    A << C(1), C(1), C(1),
         C(1), a2, a,
         C(1), a, a2;
    return A;
}

template <typename Real>
Eigen::Matrix<std::complex<Real>, 3, 1>
phase_to_sequence(const Eigen::Matrix<std::complex<Real>, 3, 1>& abc) {
    using C = std::complex<Real>;
    const C a = rotator<Real>();
    const C a2 = a * a;
    const Real third = Real(1) / Real(3);
    Eigen::Matrix<C, 3, 1> seq;
    seq(0) = (abc(0) + abc(1) + abc(2)) * third;
    seq(1) = (abc(0) + a * abc(1) + a2 * abc(2)) * third;
    seq(2) = (abc(0) + a2 * abc(1) + a * abc(2)) * third;
    return seq;
}

template <typename Real>
Eigen::Matrix<std::complex<Real>, 3, 1>
sequence_to_phase(const Eigen::Matrix<std::complex<Real>, 3, 1>& seq) {
    using C = std::complex<Real>;
    const C a = rotator<Real>();
    const C a2 = a * a;
    Eigen::Matrix<C, 3, 1> abc;
    abc(0) = seq(0) + seq(1) + seq(2);
    abc(1) = seq(0) + a2 * seq(1) + a * seq(2);
    abc(2) = seq(0) + a * seq(1) + a2 * seq(2);
    return abc;
}

/// Expand a diagonal of per-sequence admittances into the equivalent 3x3
/// phase-frame block, A * diag(y0,y1,y2) * A^-1.
template <typename Real>
Eigen::Matrix<std::complex<Real>, 3, 3>
sequence_diag_to_phase(const std::complex<Real>& y0,
                       const std::complex<Real>& y1,
                       const std::complex<Real>& y2) {
    using C = std::complex<Real>;
    Eigen::Matrix<C, 3, 3> D = Eigen::Matrix<C, 3, 3>::Zero();
    D(0, 0) = y0;
    D(1, 1) = y1;
    D(2, 2) = y2;
    const auto A = fortescue_matrix<Real>();
    const Eigen::Matrix<C, 3, 3> Ainv = A.inverse();
    return A * D * Ainv;
}

} // namespace subsim::grid
