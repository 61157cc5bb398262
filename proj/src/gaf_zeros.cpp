#include "gafz/gaf_zeros.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gafz/toeplitz.hpp"

namespace gafz {

namespace {

constexpr double kPi = std::numbers::pi;

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex horner_prime(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc = 0.0;
    for (size_t i = coeffs.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * coeffs[i];
    return acc;
}

// Drop trailing coefficients that are negligible against the largest one.
std::vector<Complex> effective_coeffs(const std::vector<Complex>& coeffs) {
    double top = 0.0;
    for (const Complex& c : coeffs) top = std::max(top, std::abs(c));
    if (top == 0.0) throw std::domain_error("zero polynomial has no well-defined zero set");
    size_t deg = coeffs.size() - 1;
    while (deg > 0 && std::abs(coeffs[deg]) < 1e-14 * top) --deg;
    return {coeffs.begin(), coeffs.begin() + static_cast<long>(deg) + 1};
}

}  // namespace

Complex eval_f(const TruncatedGAF& f, Complex z) { return horner(f.coeffs, z); }

Complex eval_f_prime(const TruncatedGAF& f, Complex z) { return horner_prime(f.coeffs, z); }

int truncation_order(double entry_bound, double r, double eps) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("truncation_order requires 0 < r < 1");
    if (!(eps > 0.0) || !(entry_bound > 0.0))
        throw std::domain_error("truncation_order requires eps > 0 and a positive entry bound");
    const double num = std::log(eps) + 2.0 * std::log(1.0 - r) - std::log(entry_bound);
    int n = static_cast<int>(std::ceil(num / (2.0 * std::log(r))));
    n = std::max(n, 2);
    // Guard against boundary rounding in the logs.
    while (entry_bound * std::pow(std::pow(r, n) / (1.0 - r), 2.0) > eps) ++n;
    return n;
}

int truncation_order(const ModelSpec& spec, double r, double eps, CovMode mode) {
    int block = 64;
    for (;;) {
        const FiniteToeplitz T = build_finite(spec, block);
        const Matrix M = mode == CovMode::InverseOfG ? invert_finite(T) : T.dense();
        const double bound = M.cwiseAbs().maxCoeff();
        const int n = truncation_order(bound, r, eps);
        if (n <= block || block >= 4096) return n;
        block *= 2;
    }
}

std::vector<Complex> all_roots_aberth(const std::vector<Complex>& coeffs_in,
                                      const RootFindOptions& opts) {
    const std::vector<Complex> coeffs = effective_coeffs(coeffs_in);
    const size_t deg = coeffs.size() - 1;
    std::vector<Complex> roots(deg);
    if (deg == 0) return {};
    if (deg == 1) {
        roots[0] = -coeffs[0] / coeffs[1];
        return roots;
    }
    // Initial guesses on a circle sized by the geometric-mean root radius,
    // kept inside the Cauchy bound.
    double cauchy = 0.0;
    for (size_t i = 0; i < deg; ++i) cauchy = std::max(cauchy, std::abs(coeffs[i] / coeffs[deg]));
    cauchy += 1.0;
    double r0 = std::pow(std::abs(coeffs[0] / coeffs[deg]), 1.0 / static_cast<double>(deg));
    if (!(r0 > 0.0) || !std::isfinite(r0)) r0 = 0.5;
    r0 = std::min(std::max(r0, 0.3), 0.9 * cauchy);
    for (size_t i = 0; i < deg; ++i) {
        const double ang = 2.0 * kPi * (static_cast<double>(i) + 0.35) / static_cast<double>(deg);
        roots[i] = r0 * Complex(std::cos(ang), std::sin(ang));
    }

    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        double worst = 0.0;
        for (size_t i = 0; i < deg; ++i) {
            const Complex p = horner(coeffs, roots[i]);
            const Complex dp = horner_prime(coeffs, roots[i]);
            Complex ratio;
            if (dp == Complex(0.0)) {
                ratio = 1e-12;  // nudge off the critical point
            } else {
                ratio = p / dp;
            }
            Complex rep = 0.0;
            for (size_t j = 0; j < deg; ++j)
                if (j != i) rep += 1.0 / (roots[i] - roots[j]);
            const Complex denom = 1.0 - ratio * rep;
            const Complex step = denom == Complex(0.0) ? ratio : ratio / denom;
            roots[i] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(roots[i])));
        }
        if (worst < opts.convergence_tol) break;
    }
    if (iter >= opts.max_iterations) {
        std::ostringstream os;
        os << "Aberth iteration did not converge within " << opts.max_iterations
           << " sweeps (degree " << deg << ")";
        throw std::runtime_error(os.str());
    }
    // Newton polishing.
    for (auto& z : roots) {
        for (int it = 0; it < 5; ++it) {
            const Complex dp = horner_prime(coeffs, z);
            if (dp == Complex(0.0)) break;
            const Complex step = horner(coeffs, z) / dp;
            z -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
        }
    }
    return roots;
}

std::vector<Complex> all_roots_companion(const std::vector<Complex>& coeffs_in) {
    const std::vector<Complex> coeffs = effective_coeffs(coeffs_in);
    const long deg = static_cast<long>(coeffs.size()) - 1;
    if (deg == 0) return {};
    Matrix C = Matrix::Zero(deg, deg);
    for (long i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
    for (long i = 0; i < deg; ++i) C(i, deg - 1) = -coeffs[static_cast<size_t>(i)] / coeffs.back();
    Eigen::ComplexEigenSolver<Matrix> es(C, false);
    std::vector<Complex> roots(static_cast<size_t>(deg));
    for (long i = 0; i < deg; ++i) roots[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return roots;
}

Complex argument_principle_integral(const TruncatedGAF& f, double r, int nodes) {
    Complex acc = 0.0;
    for (int m = 0; m < nodes; ++m) {
        const double ang = 2.0 * kPi * m / nodes;
        const Complex z = r * Complex(std::cos(ang), std::sin(ang));
        acc += eval_f_prime(f, z) / eval_f(f, z) * z;
    }
    return acc / static_cast<double>(nodes);
}

ZeroSet find_zeros(const TruncatedGAF& f, double r, const RootFindOptions& opts) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("find_zeros requires 0 < r < 1");
    std::vector<Complex> roots = all_roots_aberth(f.coeffs, opts);

    // Scale for residual acceptance: max_k |xi_k| r^{k-1}.
    double scale = 0.0;
    double rp = 1.0;
    for (const Complex& c : f.coeffs) {
        scale = std::max(scale, std::abs(c) * rp);
        rp *= r;
    }

    ZeroSet zs;
    zs.working_radius = r;
    zs.truncation = static_cast<int>(f.coeffs.size());
    std::vector<Complex> inside;
    for (const Complex& z : roots)
        if (std::abs(z) <= r) inside.push_back(z);
    std::sort(inside.begin(), inside.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    // Merge clusters within the clustering tolerance.
    for (const Complex& z : inside) {
        if (!zs.zeros.empty() && std::abs(z - zs.zeros.back()) < opts.cluster_tol) {
            ++zs.multiplicities.back();
            continue;
        }
        zs.zeros.push_back(z);
        zs.residuals.push_back(std::abs(eval_f(f, z)));
        zs.multiplicities.push_back(1);
    }

    int listed = 0;
    for (int m : zs.multiplicities) listed += m;

    // Argument-principle integrity check. The trapezoid rule converges
    // like exp(-nodes * d / r) where d is the distance from the contour
    // to the nearest zero, so a zero grazing |z| = r slows convergence
    // without changing the winding number; double the node count until
    // two consecutive levels settle on the same integer. Only a zero
    // essentially on the contour (winding ill-defined) skips the check.
    double clearance = 1e9;
    for (const Complex& z : roots) clearance = std::min(clearance, std::abs(std::abs(z) - r));
    if (clearance > opts.contour_clearance) {
        zs.count_checked = true;
        long prev_count = -1;
        bool prev_settled = false;
        for (int nodes = opts.contour_nodes; nodes <= opts.max_contour_nodes; nodes *= 2) {
            const Complex integral = argument_principle_integral(f, r, nodes);
            const long count = std::lround(integral.real());
            const bool settled =
                std::abs(integral.real() - static_cast<double>(count)) < 1e-3 &&
                std::abs(integral.imag()) < 1e-3;
            if (settled && prev_settled && count == prev_count) {
                zs.count_ok = count == listed;
                break;
            }
            prev_settled = settled;
            prev_count = count;
        }
    }
    return zs;
}

std::vector<int> count_in_annuli(const ZeroSet& zs, const std::vector<double>& edges) {
    if (edges.size() < 2) throw std::domain_error("need at least two annulus edges");
    for (size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i] > edges[i - 1])) throw std::domain_error("annulus edges must increase");
    std::vector<int> counts(edges.size() - 1, 0);
    for (size_t i = 0; i < zs.zeros.size(); ++i) {
        const double a = std::abs(zs.zeros[i]);
        for (size_t b = 0; b + 1 < edges.size(); ++b)
            if (a >= edges[b] && a < edges[b + 1]) {
                counts[b] += zs.multiplicities[i];
                break;
            }
    }
    return counts;
}

}  // namespace gafz
