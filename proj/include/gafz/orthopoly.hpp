#pragma once

#include "gafz/toeplitz.hpp"

namespace gafz {

/// Orthonormal polynomials of the gamma-weighted inner product
/// <z^a, z^b> = gamma(a-b). Row k-1 of coeffs holds the monomial
/// coefficients of P_k; coeffs is the inverse of the Cholesky factor
/// of G_m, so coeffs * G_m * coeffs^* = I.
struct OrthoBasis {
    ModelSpec spec;
    int m = 0;
    Matrix coeffs;  // lower triangular
};

OrthoBasis gram_basis(const ModelSpec& spec, int m);

/// P_k(z) for 1 <= k <= basis.m (Horner on the stored row).
Complex eval_P(const OrthoBasis& basis, int k, Complex z);

/// sum_{k<=m} P_k(z) conj(P_k(w)).
Complex kernel_partial_sum(const OrthoBasis& basis, int m, Complex z, Complex w);

/// Explicit fgn0 family: P_n(z) = sqrt(2/(n(n+1))) (1 + 2z + ... + n z^{n-1}).
Complex fgn0_P(int n, Complex z);

}  // namespace gafz
