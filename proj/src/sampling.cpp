#include "gafz/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gafz {

std::vector<Complex> sample_std_complex(StreamRng& rng, int n) {
    std::vector<Complex> out(static_cast<size_t>(n));
    for (auto& v : out) {
        const double radius = std::sqrt(-std::log(rng.next_unit()));
        const double angle = 2.0 * std::numbers::pi * rng.next_unit();
        v = Complex(radius * std::cos(angle), radius * std::sin(angle));
    }
    return out;
}

CoefficientSampler::CoefficientSampler(const ModelSpec& spec, CovMode mode, int n)
    : spec_(spec), mode_(mode), n_(n) {
    L_ = cholesky(build_finite(spec, n)).L;
}

std::vector<Complex> CoefficientSampler::draw(StreamRng& rng) const {
    std::vector<Complex> chi = sample_std_complex(rng, n_);
    Vector v = Eigen::Map<Vector>(chi.data(), n_);
    if (mode_ == CovMode::InverseOfG) {
        // xi = L^{-*} chi, so Cov(xi) = (L L^*)^{-1} = G^{-1}.
        v = L_.adjoint().triangularView<Eigen::Upper>().solve(v);
    } else {
        v = L_ * v;
    }
    std::vector<Complex> out(static_cast<size_t>(n_));
    Eigen::Map<Vector>(out.data(), n_) = v;
    return out;
}

namespace {

CoefficientDraw make_draw(const ModelSpec& spec, CovMode mode, int n, StreamRng& rng) {
    CoefficientDraw d;
    d.spec = spec;
    d.mode = mode;
    d.n = n;
    d.values = CoefficientSampler(spec, mode, n).draw(rng);
    return d;
}

}  // namespace

CoefficientDraw sample_inverse_cov(const ModelSpec& spec, int n, StreamRng& rng) {
    return make_draw(spec, CovMode::InverseOfG, n, rng);
}

CoefficientDraw sample_direct_cov(const ModelSpec& spec, int n, StreamRng& rng) {
    return make_draw(spec, CovMode::DirectG, n, rng);
}

Matrix schur_conditional_cov(const ModelSpec& spec, int n, int k) {
    if (k < 1 || k >= n) throw std::domain_error("schur_conditional_cov requires 1 <= k < n");
    const Matrix sigma = invert_finite(build_finite(spec, n));
    const int m = n - k;
    const Matrix s11 = sigma.topLeftCorner(k, k);
    const Matrix s12 = sigma.topRightCorner(k, m);
    const Matrix s21 = sigma.bottomLeftCorner(m, k);
    const Matrix s22 = sigma.bottomRightCorner(m, m);
    return s22 - s21 * s11.llt().solve(s12);
}

}  // namespace gafz
