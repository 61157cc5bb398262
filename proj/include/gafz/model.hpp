#pragma once

#include <complex>
#include <string>

namespace gafz {

using Complex = std::complex<double>;

/// Toeplitz autocovariance family of the coefficient process.
enum class Family {
    Identity,     // gamma(k) = delta_{k0}, i.i.d. coefficients
    Tridiagonal,  // gamma(0)=1, gamma(+-1)=q, |q| < 1/2
    Kms,          // Kac-Murdock-Szego, gamma(k) = q^|k|, |q| < 1
    Fgn,          // fractional Gaussian noise, Hurst index 0 < h < 1
    Fgn0          // fGn h=0 limit: gamma(0)=1, gamma(+-1)=-1/2
};

/// Which matrix plays the role of the coefficient covariance.
enum class CovMode {
    InverseOfG,  // Cov(xi) = G^{-1}  (determinantal zero set)
    DirectG      // Cov(xi) = G      (counterexample coefficients)
};

struct ModelSpec {
    Family family = Family::Identity;
    double q = 0.0;  // tridiagonal / KMS parameter
    double h = 0.5;  // fGn Hurst index

    static ModelSpec identity() { return {Family::Identity, 0.0, 0.5}; }
    static ModelSpec tridiagonal(double q) { return {Family::Tridiagonal, q, 0.5}; }
    static ModelSpec kms(double q) { return {Family::Kms, q, 0.5}; }
    static ModelSpec fgn(double h) { return {Family::Fgn, 0.0, h}; }
    static ModelSpec fgn0() { return {Family::Fgn0, 0.0, 0.0}; }

    /// Throws std::domain_error naming the violated bound.
    void validate() const;

    std::string name() const;
};

const char* family_name(Family f);
const char* cov_mode_name(CovMode m);

}  // namespace gafz
