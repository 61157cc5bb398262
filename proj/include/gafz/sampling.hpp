#pragma once

#include <vector>

#include "gafz/rng.hpp"
#include "gafz/toeplitz.hpp"

namespace gafz {

/// One sampled coefficient vector with its seed lineage.
struct CoefficientDraw {
    ModelSpec spec;
    CovMode mode = CovMode::InverseOfG;
    int n = 0;
    std::vector<Complex> values;
    uint64_t master_seed = 0;
    uint64_t replicate_id = 0;
};

/// n i.i.d. standard complex Gaussians: E xi conj(xi) = 1, E xi xi = 0.
std::vector<Complex> sample_std_complex(StreamRng& rng, int n);

/// Reusable sampler: factorizes G_n once, then one triangular solve
/// (inverse mode, Cov = G_n^{-1}) or one multiply (direct mode, Cov = G_n)
/// per draw. Immutable after construction.
class CoefficientSampler {
public:
    CoefficientSampler(const ModelSpec& spec, CovMode mode, int n);
    std::vector<Complex> draw(StreamRng& rng) const;
    int order() const { return n_; }

private:
    ModelSpec spec_;
    CovMode mode_;
    int n_;
    Matrix L_;
};

CoefficientDraw sample_inverse_cov(const ModelSpec& spec, int n, StreamRng& rng);
CoefficientDraw sample_direct_cov(const ModelSpec& spec, int n, StreamRng& rng);

/// Conditional covariance of (xi_{k+1},...,xi_n) given xi_1=...=xi_k=0
/// when Cov(xi) = G_n^{-1}: the Schur complement of the leading k x k
/// block of G_n^{-1}. Equals inv(G_{n-k}) exactly in exact arithmetic.
Matrix schur_conditional_cov(const ModelSpec& spec, int n, int k);

}  // namespace gafz
