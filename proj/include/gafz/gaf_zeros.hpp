#pragma once

#include <vector>

#include "gafz/model.hpp"

namespace gafz {

/// Truncated Gaussian power series sum_{n<=N} xi_n z^{n-1}.
struct TruncatedGAF {
    std::vector<Complex> coeffs;  // xi_1 .. xi_N
};

Complex eval_f(const TruncatedGAF& f, Complex z);
Complex eval_f_prime(const TruncatedGAF& f, Complex z);

/// Smallest N with tail bound B (r^N / (1-r))^2 <= eps.
int truncation_order(double entry_bound, double r, double eps);
/// Same, with B measured from the computed inverse (or direct) block of
/// the spec; the block is grown until it covers the returned order.
int truncation_order(const ModelSpec& spec, double r, double eps,
                     CovMode mode = CovMode::InverseOfG);

struct ZeroSet {
    std::vector<Complex> zeros;
    std::vector<double> residuals;       // |f(z)| at each reported zero
    std::vector<int> multiplicities;     // > 1 only for merged clusters
    double working_radius = 0.0;
    int truncation = 0;
    bool count_checked = false;  // argument-principle check performed
    bool count_ok = false;       // and agreed with the list length
};

struct RootFindOptions {
    int max_iterations = 500;
    double convergence_tol = 1e-14;
    double cluster_tol = 1e-8;
    double contour_clearance = 1e-8;
    int contour_nodes = 2048;
    int max_contour_nodes = 1 << 19;
};

/// All roots of the polynomial (Aberth-Ehrlich plus Newton polishing).
std::vector<Complex> all_roots_aberth(const std::vector<Complex>& coeffs,
                                      const RootFindOptions& opts = {});
/// Companion-matrix route (cross-check oracle for moderate degrees).
std::vector<Complex> all_roots_companion(const std::vector<Complex>& coeffs);

/// Zeros of the truncated GAF with |z| <= r, argument-principle checked.
ZeroSet find_zeros(const TruncatedGAF& f, double r, const RootFindOptions& opts = {});

/// Winding number of f around |z| = r (trapezoidal contour integral).
Complex argument_principle_integral(const TruncatedGAF& f, double r, int nodes);

/// Zero counts per annulus; edges strictly increasing.
std::vector<int> count_in_annuli(const ZeroSet& zs, const std::vector<double>& edges);

}  // namespace gafz
