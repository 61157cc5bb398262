#include "gafz/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gafz {

namespace {

constexpr double kPi = std::numbers::pi;

Complex szego_dz(Complex z, Complex w) {
    const Complex d = 1.0 - z * std::conj(w);
    return std::conj(w) / (d * d);
}

Complex szego_dwbar(Complex z, Complex w) {
    const Complex d = 1.0 - z * std::conj(w);
    return z / (d * d);
}

Complex szego_dzdwbar(Complex z, Complex w) {
    const Complex d = 1.0 - z * std::conj(w);
    return (1.0 + z * std::conj(w)) / (d * d * d);
}

struct TridiagPsi {
    double scale, a, b;
    explicit TridiagPsi(double q) {
        if (!(std::abs(q) > 0.0 && std::abs(q) < 0.5))
            throw std::domain_error("psi_tridiag requires 0 < |q| < 1/2");
        const double aq = std::abs(q);
        a = std::sqrt(1.0 / aq + std::sqrt(1.0 / (q * q) - 4.0));
        b = (2.0 / a) * (q > 0 ? 1.0 : -1.0);
        scale = std::sqrt(2.0 / aq);
    }
    Complex operator()(Complex z) const { return scale / (a + b * z); }
    Complex deriv(Complex z) const {
        const Complex d = a + b * z;
        return -b * scale / (d * d);
    }
};

}  // namespace

Complex szego(Complex z, Complex w) { return 1.0 / (1.0 - z * std::conj(w)); }

Complex bergman(Complex z, Complex w) {
    const Complex d = 1.0 - z * std::conj(w);
    return 1.0 / (kPi * d * d);
}

Complex psi_tridiag(double q, Complex z) { return TridiagPsi(q)(z); }

Complex kg_closed_tridiag(double q, Complex z, Complex w) {
    const TridiagPsi psi(q);
    return psi(z) * std::conj(psi(w)) * szego(z, w);
}

Complex psi_kms(double q, Complex z) {
    if (!(std::abs(q) < 1.0)) throw std::domain_error("psi_kms requires |q| < 1");
    return (1.0 - q * z) / std::sqrt(1.0 - q * q);
}

Complex kg_closed_kms(double q, Complex z, Complex w) {
    return psi_kms(q, z) * std::conj(psi_kms(q, w)) * szego(z, w);
}

Complex kg_fgn0(Complex z, Complex w) {
    return 2.0 / ((1.0 - z) * (1.0 - std::conj(w)) * (1.0 - z * std::conj(w)));
}

Complex kg_direct_tridiag(double q, Complex z, Complex w) {
    if (!(std::abs(q) < 0.5)) throw std::domain_error("requires |q| < 1/2");
    return (1.0 + q * z + q * std::conj(w)) * szego(z, w);
}

Complex mobius(Complex w, Complex z) { return (z - w) / (1.0 - z * std::conj(w)); }

double mobius_derivative_at_fixed_point(Complex z) { return 1.0 / (1.0 - std::norm(z)); }

Complex mobius_product(std::span<const Complex> ws, Complex z) {
    Complex p = 1.0;
    for (const Complex& w : ws) p *= mobius(w, z);
    return p;
}

double series_tail_bound(double entry_bound, double r, int N) {
    const double g = std::pow(r, N) / (1.0 - r);
    return entry_bound * g * g;
}

SeriesValue kg_series(const ModelSpec& spec, Complex z, Complex w, int N, CovMode mode) {
    SeriesKernel k(spec, mode, N);
    const double r = std::max(std::abs(z), std::abs(w));
    return {k.value(z, w), series_tail_bound(k.entry_bound(), r, N)};
}

Complex conditioned_kernel(const KernelEval& K, Complex w, Complex z, Complex y) {
    const Complex kww = K.value(w, w);
    if (!(kww.real() > 1e-14))
        throw std::runtime_error("degenerate conditioning: K(w, w) is not positive");
    return K.value(z, y) - K.value(z, w) * K.value(w, y) / kww;
}

Complex mobius_conjugated_kernel(const KernelEval& K, Complex w, Complex z, Complex y) {
    return mobius(w, z) * K.value(z, y) * std::conj(mobius(w, y));
}

SeriesKernel::SeriesKernel(const ModelSpec& spec, CovMode mode, int N) {
    if (N < 1) throw std::domain_error("series kernel requires N >= 1");
    const FiniteToeplitz T = build_finite(spec, N);
    block_ = mode == CovMode::InverseOfG ? invert_finite(T) : T.dense();
    entry_bound_ = block_.cwiseAbs().maxCoeff();
}

Complex SeriesKernel::value(Complex z, Complex w) const {
    const int N = static_cast<int>(block_.rows());
    Vector zv(N), wv(N);
    Complex zp = 1.0, wp = 1.0;
    const Complex wb = std::conj(w);
    for (int i = 0; i < N; ++i) {
        zv(i) = zp;
        wv(i) = wp;
        zp *= z;
        wp *= wb;
    }
    return zv.transpose() * block_ * wv;
}

Complex SeriesKernel::dz(Complex z, Complex w) const {
    const int N = static_cast<int>(block_.rows());
    Vector zv = Vector::Zero(N), wv(N);
    Complex zp = 1.0, wp = 1.0;
    const Complex wb = std::conj(w);
    for (int i = 0; i < N; ++i) {
        wv(i) = wp;
        wp *= wb;
        if (i >= 1) {
            zv(i) = static_cast<double>(i) * zp;
            zp *= z;
        }
    }
    return zv.transpose() * block_ * wv;
}

Complex SeriesKernel::dzdwbar(Complex z, Complex w) const {
    const int N = static_cast<int>(block_.rows());
    Vector zv = Vector::Zero(N), wv = Vector::Zero(N);
    Complex zp = 1.0, wp = 1.0;
    const Complex wb = std::conj(w);
    for (int i = 1; i < N; ++i) {
        zv(i) = static_cast<double>(i) * zp;
        wv(i) = static_cast<double>(i) * wp;
        zp *= z;
        wp *= wb;
    }
    return zv.transpose() * block_ * wv;
}

namespace {

class SzegoKernel final : public KernelEval {
public:
    Complex value(Complex z, Complex w) const override { return szego(z, w); }
    Complex dz(Complex z, Complex w) const override { return szego_dz(z, w); }
    Complex dzdwbar(Complex z, Complex w) const override { return szego_dzdwbar(z, w); }
};

// psi(z) K(z, w) conj(psi(w)) with the Szego kernel K.
template <typename Psi>
class PsiProductKernel final : public KernelEval {
public:
    explicit PsiProductKernel(Psi psi) : psi_(std::move(psi)) {}
    Complex value(Complex z, Complex w) const override {
        return psi_(z) * std::conj(psi_(w)) * szego(z, w);
    }
    Complex dz(Complex z, Complex w) const override {
        const Complex pw = std::conj(psi_(w));
        return pw * (psi_.deriv(z) * szego(z, w) + psi_(z) * szego_dz(z, w));
    }
    Complex dzdwbar(Complex z, Complex w) const override {
        const Complex p = psi_(z), dp = psi_.deriv(z);
        const Complex qb = std::conj(psi_(w)), dqb = std::conj(psi_.deriv(w));
        return dp * dqb * szego(z, w) + dp * qb * szego_dwbar(z, w) +
               p * dqb * szego_dz(z, w) + p * qb * szego_dzdwbar(z, w);
    }

private:
    Psi psi_;
};

struct KmsPsi {
    double q, scale;
    explicit KmsPsi(double q_) : q(q_), scale(1.0 / std::sqrt(1.0 - q_ * q_)) {
        if (!(std::abs(q_) < 1.0)) throw std::domain_error("KMS kernel requires |q| < 1");
    }
    Complex operator()(Complex z) const { return (1.0 - q * z) * scale; }
    Complex deriv(Complex) const { return -q * scale; }
};

class Fgn0Kernel final : public KernelEval {
public:
    Complex value(Complex z, Complex w) const override { return kg_fgn0(z, w); }
    Complex dz(Complex z, Complex w) const override {
        return value(z, w) * (1.0 / (1.0 - z) + std::conj(w) / (1.0 - z * std::conj(w)));
    }
    Complex dzdwbar(Complex z, Complex w) const override {
        const Complex wb = std::conj(w), d = 1.0 - z * wb;
        const Complex u = 1.0 / (1.0 - z) + wb / d;
        const Complex v = 1.0 / (1.0 - wb) + z / d;
        return value(z, w) * (u * v + 1.0 / (d * d));
    }
};

class TridiagDirectKernel final : public KernelEval {
public:
    explicit TridiagDirectKernel(double q) : q_(q) {
        if (!(std::abs(q) < 0.5)) throw std::domain_error("requires |q| < 1/2");
    }
    Complex value(Complex z, Complex w) const override {
        return (1.0 + q_ * z + q_ * std::conj(w)) * szego(z, w);
    }
    Complex dz(Complex z, Complex w) const override {
        return q_ * szego(z, w) + (1.0 + q_ * z + q_ * std::conj(w)) * szego_dz(z, w);
    }
    Complex dzdwbar(Complex z, Complex w) const override {
        return q_ * szego_dz(z, w) + q_ * szego_dwbar(z, w) +
               (1.0 + q_ * z + q_ * std::conj(w)) * szego_dzdwbar(z, w);
    }

private:
    double q_;
};

}  // namespace

std::unique_ptr<KernelEval> make_kernel(const ModelSpec& spec, CovMode mode, int series_order) {
    spec.validate();
    if (mode == CovMode::InverseOfG) {
        switch (spec.family) {
            case Family::Identity:
                return std::make_unique<SzegoKernel>();
            case Family::Tridiagonal:
                if (spec.q == 0.0) return std::make_unique<SzegoKernel>();
                return std::make_unique<PsiProductKernel<TridiagPsi>>(TridiagPsi(spec.q));
            case Family::Kms:
                if (spec.q == 0.0) return std::make_unique<SzegoKernel>();
                return std::make_unique<PsiProductKernel<KmsPsi>>(KmsPsi(spec.q));
            case Family::Fgn0:
                return std::make_unique<Fgn0Kernel>();
            case Family::Fgn:
                if (std::abs(spec.h - 0.5) < 1e-15) return std::make_unique<SzegoKernel>();
                if (series_order < 1)
                    throw std::domain_error(
                        "fGn inverse kernel has no closed form; a series order is required");
                return std::make_unique<SeriesKernel>(spec, mode, series_order);
        }
    } else {
        switch (spec.family) {
            case Family::Identity:
                return std::make_unique<SzegoKernel>();
            case Family::Tridiagonal:
                return std::make_unique<TridiagDirectKernel>(spec.q);
            default:
                if (series_order < 1)
                    throw std::domain_error("direct-G kernel for this family needs a series order");
                return std::make_unique<SeriesKernel>(spec, mode, series_order);
        }
    }
    throw std::domain_error("unsupported kernel configuration");
}

}  // namespace gafz
