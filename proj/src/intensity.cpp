#include "gafz/intensity.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gafz {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Complex permanent(const Matrix& M) {
    const int n = static_cast<int>(M.rows());
    if (M.cols() != n) throw std::domain_error("permanent requires a square matrix");
    if (n == 0) return 1.0;
    if (n > 12) throw std::domain_error("permanent capped at n = 12");
    // Gray-code Ryser: maintain row sums over the current column subset.
    Vector rowsum = Vector::Zero(n);
    Complex total = 0.0;
    uint32_t gray = 0;
    const uint32_t limit = 1u << n;
    for (uint32_t k = 1; k < limit; ++k) {
        const uint32_t next = k ^ (k >> 1);
        const uint32_t changed = next ^ gray;
        const int col = std::countr_zero(changed);
        const double sign_col = (next & changed) ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) rowsum(i) += sign_col * M(i, col);
        gray = next;
        Complex prod = 1.0;
        for (int i = 0; i < n; ++i) prod *= rowsum(i);
        const int bits = std::popcount(next);
        total += ((n - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
    }
    return total;
}

IntensityMatrices build_intensity_matrices(const KernelEval& K, std::span<const Complex> points) {
    const int n = static_cast<int>(points.size());
    IntensityMatrices m{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            m.A(k, j) = K.value(points[k], points[j]);
            m.B(k, j) = K.dz(points[k], points[j]);
            m.C(k, j) = K.dzdwbar(points[k], points[j]);
        }
    return m;
}

double joint_intensity_numeric(const KernelEval& K, std::span<const Complex> points) {
    const int n = static_cast<int>(points.size());
    if (n < 1) throw std::domain_error("need at least one point");
    if (n > 12) throw std::domain_error("joint intensity capped at n = 12");
    const IntensityMatrices m = build_intensity_matrices(K, points);
    const Complex detA = m.A.determinant();
    double scale = 0.0;
    for (int k = 0; k < n; ++k) scale = std::max(scale, std::abs(m.A(k, k)));
    if (std::abs(detA) < 1e-12 * std::pow(scale, n)) {
        std::ostringstream os;
        os << "ill-conditioned point configuration (|det A| = " << std::abs(detA)
           << "); separate the points";
        throw std::runtime_error(os.str());
    }
    const Matrix schur = m.C - m.B * m.A.inverse() * m.B.adjoint();
    const Complex p = permanent(schur) / (std::pow(kPi, n) * detA);
    if (std::abs(p.imag()) > 1e-10 * std::max(1.0, std::abs(p.real())))
        throw std::runtime_error("joint intensity has a non-negligible imaginary part");
    return p.real();
}

double bergman_determinant(std::span<const Complex> points) {
    const int n = static_cast<int>(points.size());
    Matrix M(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) M(k, j) = bergman(points[k], points[j]);
    return M.determinant().real();
}

double counterexample_intensity(double q, Complex z) {
    if (!(std::abs(q) < 0.5)) throw std::domain_error("requires |q| < 1/2");
    const double one_minus = 1.0 - std::norm(z);
    const double lin = 1.0 + 2.0 * q * z.real();
    return 1.0 / (kPi * one_minus * one_minus) *
           (1.0 - q * q * one_minus * one_minus / (lin * lin));
}

double expected_count_disc(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("requires 0 <= r < 1");
    return r * r / (1.0 - r * r);
}

double counterexample_expected_count(double q, double r) {
    // Gauss-Legendre in radius, trapezoid in angle; both are spectrally
    // accurate here because the integrand is analytic (and periodic in
    // the angle), so the result is exact to roundoff at these counts.
    const int nrad = 64, nang = 256;
    // Legendre nodes/weights on (-1, 1) by Newton iteration.
    std::vector<double> node(nrad), weight(nrad);
    for (int i = 0; i < nrad; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (nrad + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= nrad; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = nrad * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        node[i] = x;
        weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    double total = 0.0;
    for (int i = 0; i < nrad; ++i) {
        const double s = 0.5 * r * (node[i] + 1.0);
        const double ws = 0.5 * r * weight[i];
        double ang_acc = 0.0;
        for (int j = 0; j < nang; ++j) {
            const double th = 2.0 * kPi * j / nang;
            ang_acc += counterexample_intensity(q, s * Complex(std::cos(th), std::sin(th)));
        }
        total += ws * s * (2.0 * kPi / nang) * ang_acc;
    }
    return total;
}

}  // namespace gafz
