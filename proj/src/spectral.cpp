#include "gafz/spectral.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gafz {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2j}/(2j)! for j = 1..4.
constexpr std::array<double, 4> kBernoulliOverFactorial = {
    1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};

}  // namespace

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0)) {
        std::ostringstream os;
        os << "hurwitz_zeta requires s > 1, got s = " << s;
        throw std::domain_error(os.str());
    }
    if (!(a > 0.0)) {
        std::ostringstream os;
        os << "hurwitz_zeta requires a > 0, got a = " << a;
        throw std::domain_error(os.str());
    }
    const int cutoff = 40;
    double sum = 0.0;
    for (int n = 0; n < cutoff; ++n) sum += std::pow(n + a, -s);
    const double m = cutoff + a;
    sum += std::pow(m, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(m, -s);
    // Euler-Maclaurin correction terms with rising factorials of s.
    double rising = s;
    double power = std::pow(m, -s - 1.0);
    for (size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
        sum += kBernoulliOverFactorial[j] * rising * power;
        rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        power /= m * m;
    }
    return sum;
}

double normalizing_C(double h) {
    if (!(h > 0.0 && h < 1.0)) {
        std::ostringstream os;
        os << "normalizing_C requires 0 < h < 1, got h = " << h;
        throw std::domain_error(os.str());
    }
    const double zeta_s = hurwitz_zeta(1.0 + 2.0 * h, 1.0);
    // zeta(-2h) = -2 (2 pi)^{-2h-1} sin(pi h) Gamma(1+2h) zeta(1+2h)
    const double zeta_neg =
        -2.0 * std::pow(2.0 * kPi, -2.0 * h - 1.0) * std::sin(kPi * h) * std::tgamma(1.0 + 2.0 * h) * zeta_s;
    return -zeta_neg / (2.0 * zeta_s);
}

namespace {

double fgn_density(double h, double theta) {
    // theta in (0,1); symmetric about 1/2.
    const double s = 2.0 * h + 1.0;
    const double sn = std::sin(kPi * theta);
    return 4.0 * normalizing_C(h) * sn * sn * (hurwitz_zeta(s, theta) + hurwitz_zeta(s, 1.0 - theta));
}

}  // namespace

double density(const ModelSpec& spec, double theta) {
    spec.validate();
    if (theta < 0.0 || theta > 1.0) throw std::domain_error("density requires theta in [0, 1]");
    const double c = std::cos(2.0 * kPi * theta);
    switch (spec.family) {
        case Family::Identity:
            return 1.0;
        case Family::Tridiagonal:
            return 1.0 + 2.0 * spec.q * c;
        case Family::Kms:
            return (1.0 - spec.q * spec.q) / (1.0 - 2.0 * spec.q * c + spec.q * spec.q);
        case Family::Fgn0:
            return 1.0 - c;
        case Family::Fgn:
            if (theta == 0.0 || theta == 1.0) {
                if (spec.h > 0.5) return std::numeric_limits<double>::infinity();
                return spec.h < 0.5 ? 0.0 : 1.0;
            }
            return fgn_density(spec.h, theta);
    }
    return 0.0;
}

namespace {

// 20-point Gauss-Legendre nodes/weights on [-1, 1], computed once by
// Newton iteration on the Legendre recurrence.
struct GaussRule {
    std::array<double, 20> x{}, w{};
    GaussRule() {
        const int n = 20;
        for (int i = 0; i < n; ++i) {
            double xi = std::cos(kPi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = xi;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                const double step = p1 / dp;
                xi -= step;
                if (std::abs(step) < 1e-16) break;
            }
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            x[static_cast<size_t>(i)] = xi;
            w[static_cast<size_t>(i)] = 2.0 / ((1.0 - xi * xi) * dp * dp);
        }
    }
};

const GaussRule& gauss20() {
    static const GaussRule rule;
    return rule;
}

// Integrate f over (0, 1/2] with panels graded geometrically toward 0.
// phi is symmetric about 1/2 for every family here (real gamma), so
// full-circle integrals reduce to this half plus its mirror.
template <typename F>
double graded_half_integral(F&& f) {
    const GaussRule& g = gauss20();
    double total = 0.0;
    double hi = 0.5;
    while (hi > 1e-16) {
        const double lo = hi > 2e-16 ? hi / 2.0 : 0.0;
        const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
        for (size_t i = 0; i < g.x.size(); ++i) total += half * g.w[i] * f(mid + half * g.x[i]);
        if (lo == 0.0) break;
        hi = lo;
    }
    return total;
}

}  // namespace

Complex density_fourier_coefficient(const ModelSpec& spec, long k) {
    // phi symmetric: int e^{2 pi i k t} phi = 2 int_0^{1/2} cos(2 pi k t) phi(t) dt.
    const double v = graded_half_integral([&](double t) {
        return std::cos(2.0 * kPi * static_cast<double>(k) * t) * density(spec, t);
    });
    return 2.0 * v;
}

double density_integral(const ModelSpec& spec) {
    return 2.0 * graded_half_integral([&](double t) { return density(spec, t); });
}

Complex inv_density_fourier(const ModelSpec& spec, long k, int quadrature_nodes) {
    spec.validate();
    if (spec.family == Family::Fgn0)
        throw std::domain_error("1/phi is not integrable for the fgn0 family");
    if (quadrature_nodes < 2) throw std::domain_error("need at least 2 quadrature nodes");
    double sum = 0.0;
    for (int i = 0; i < quadrature_nodes; ++i) {
        const double t = (i + 0.5) / quadrature_nodes;
        sum += std::cos(2.0 * kPi * static_cast<double>(k) * t) / density(spec, t);
    }
    return sum / quadrature_nodes;
}

}  // namespace gafz
