#pragma once

#include "gafz/model.hpp"

namespace gafz {

/// Hurwitz zeta, sum_{n>=0} (n+a)^{-s}, for s > 1, a > 0.
/// Direct summation plus Euler-Maclaurin tail; absolute error < 1e-12.
double hurwitz_zeta(double s, double a);

/// The fGn spectral normalization -zeta(-2h) / (2 zeta(1+2h)), with
/// zeta(-2h) reduced through the functional equation so only s > 1
/// evaluations are needed.
double normalizing_C(double h);

/// Spectral density phi of the family at theta in [0, 1]. fGn endpoints
/// are handled by their one-sided limits (+inf for h > 1/2, 0 for h < 1/2).
double density(const ModelSpec& spec, double theta);

/// int_0^1 e^{2 pi i k theta} phi(theta) dtheta, graded Gauss-Legendre
/// quadrature (endpoint-refined, handles the fGn singularities).
Complex density_fourier_coefficient(const ModelSpec& spec, long k);

/// int_0^1 phi(theta) dtheta by the same quadrature.
double density_integral(const ModelSpec& spec);

/// Fourier coefficient of 1/phi at frequency k: the asymptotic (interior)
/// entry of G^{-1} on diagonal offset k. Midpoint rule with the given
/// node count. Throws for fgn0, where 1/phi is not integrable.
Complex inv_density_fourier(const ModelSpec& spec, long k, int quadrature_nodes);

}  // namespace gafz
