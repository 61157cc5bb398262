#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gafz/model.hpp"

namespace gafz {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Autocovariance gamma(k) of the chosen family; gamma(-k) = conj(gamma(k)).
Complex gamma_of(const ModelSpec& spec, long k);

/// n x n hermitian Toeplitz truncation G_n, entry (k,j) = gamma(k-j).
struct FiniteToeplitz {
    ModelSpec spec;
    int n = 0;
    std::vector<Complex> first_column;  // gamma(0 .. n-1)

    Complex entry(int k, int j) const {  // 0-based
        return k >= j ? first_column[static_cast<size_t>(k - j)]
                      : std::conj(first_column[static_cast<size_t>(j - k)]);
    }
    Matrix dense() const;
};

FiniteToeplitz build_finite(const ModelSpec& spec, int n);

/// Lower-triangular L with G = L L^*, strictly positive real diagonal.
struct LowerFactor {
    int n = 0;
    Matrix L;
};

LowerFactor cholesky(const FiniteToeplitz& T);

/// Hermitian inverse of G_n. Levinson/Trench O(n^2) path when the
/// reflection recursion stays well conditioned, dense Cholesky otherwise.
Matrix invert_finite(const FiniteToeplitz& T);

/// The two routes individually (each is the other's cross-check).
Matrix trench_inverse(const FiniteToeplitz& T);
Matrix cholesky_inverse(const FiniteToeplitz& T);

/// Chebyshev polynomial of the second kind, U_k(x).
double chebyshev_U(int k, double x);

/// Closed-form entry of G_n^{-1} for the tridiagonal family (1-based k, j).
double tridiag_inverse_entry(double q, int n, int k, int j);

/// n -> infinity limit of the above (1-based k, j).
double tridiag_infinite_inverse_entry(double q, int k, int j);

/// Infinite-matrix inverse entry for the KMS family (1-based k, j).
Complex kms_inverse_entry(Complex q, int k, int j);

}  // namespace gafz
