#pragma once

#include <span>

#include "gafz/kernels.hpp"

namespace gafz {

/// Permanent by Ryser's inclusion-exclusion with Gray-code updates,
/// O(2^n n); n is capped at 12.
Complex permanent(const Matrix& M);

/// A = K(z_k, z_j), B = d_z K(z_k, z_j), C = d_z d_wbar K(z_k, z_j).
struct IntensityMatrices {
    Matrix A, B, C;
};

IntensityMatrices build_intensity_matrices(const KernelEval& K, std::span<const Complex> points);

/// perm(C - B A^{-1} B^*) / (pi^n det A).
double joint_intensity_numeric(const KernelEval& K, std::span<const Complex> points);

/// det(1 / (pi (1 - z_k conj(z_j))^2)).
double bergman_determinant(std::span<const Complex> points);

/// One-point zero intensity for direct-G tridiagonal coefficients.
double counterexample_intensity(double q, Complex z);

/// Expected zero count of the Bergman process in |z| <= r: r^2 / (1 - r^2).
double expected_count_disc(double r);

/// Expected zero count in |z| <= r under the counterexample intensity
/// (radial-angular Gauss/trapezoid quadrature).
double counterexample_expected_count(double q, double r);

}  // namespace gafz
