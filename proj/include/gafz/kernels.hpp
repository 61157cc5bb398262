#pragma once

#include <memory>
#include <span>

#include "gafz/toeplitz.hpp"

namespace gafz {

/// Covariance kernel evaluator with its holomorphic z-derivative and the
/// mixed z / conj(w) derivative. Immutable and safe to share once built.
class KernelEval {
public:
    virtual ~KernelEval() = default;
    virtual Complex value(Complex z, Complex w) const = 0;
    virtual Complex dz(Complex z, Complex w) const = 0;
    virtual Complex dzdwbar(Complex z, Complex w) const = 0;
};

Complex szego(Complex z, Complex w);    // 1 / (1 - z conj(w))
Complex bergman(Complex z, Complex w);  // 1 / (pi (1 - z conj(w))^2)

Complex psi_tridiag(double q, Complex z);
Complex kg_closed_tridiag(double q, Complex z, Complex w);
Complex psi_kms(double q, Complex z);
Complex kg_closed_kms(double q, Complex z, Complex w);
Complex kg_fgn0(Complex z, Complex w);

/// Direct-G tridiagonal kernel (1 + q z + q conj(w)) / (1 - z conj(w)).
Complex kg_direct_tridiag(double q, Complex z, Complex w);

Complex mobius(Complex w, Complex z);  // T_w(z) = (z - w)/(1 - z conj(w))
double mobius_derivative_at_fixed_point(Complex z);
Complex mobius_product(std::span<const Complex> ws, Complex z);

/// Truncated double series sum_{k,j<=N} M_{kj} z^{k-1} conj(w)^{j-1} with
/// M the inverse (or direct) covariance block. Also reports the geometric
/// tail bound B (r^N / (1-r))^2.
struct SeriesValue {
    Complex value;
    double tail_bound;
};
SeriesValue kg_series(const ModelSpec& spec, Complex z, Complex w, int N,
                      CovMode mode = CovMode::InverseOfG);
double series_tail_bound(double entry_bound, double r, int N);

/// One-point-conditioned kernel K1(z, y) = K(z,y) - K(z,w) K(w,y) / K(w,w).
Complex conditioned_kernel(const KernelEval& K, Complex w, Complex z, Complex y);

/// K2(z, y) = T_w(z) K(z, y) conj(T_w(y)).
Complex mobius_conjugated_kernel(const KernelEval& K, Complex w, Complex z, Complex y);

/// Series-backed evaluator; precomputes the covariance block at construction.
class SeriesKernel final : public KernelEval {
public:
    SeriesKernel(const ModelSpec& spec, CovMode mode, int N);
    Complex value(Complex z, Complex w) const override;
    Complex dz(Complex z, Complex w) const override;
    Complex dzdwbar(Complex z, Complex w) const override;
    double entry_bound() const { return entry_bound_; }
    const Matrix& block() const { return block_; }

private:
    Matrix block_;
    double entry_bound_ = 0.0;
};

/// Closed-form evaluator where one exists, SeriesKernel otherwise
/// (series_order must then be positive).
std::unique_ptr<KernelEval> make_kernel(const ModelSpec& spec, CovMode mode,
                                        int series_order = 0);

}  // namespace gafz
