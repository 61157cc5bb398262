#pragma once

#include <string>
#include <vector>

namespace gafz {

/// One named property check: the measured worst-case discrepancy
/// against its tolerance.
struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

/// Kernel property suite: Lemma-4 identity grids, series vs closed
/// forms, hermitian symmetry, Gram positive semi-definiteness.
/// psi_perturbation != 0 multiplies the tridiagonal psi by
/// (1 + psi_perturbation); the identity checks must then fail
/// (fault-injection fixture).
std::vector<CheckResult> verify_kernels(double psi_perturbation = 0.0);

/// Schur-complement conditioning identity across families and (n, k).
std::vector<CheckResult> verify_schur();

/// Orthonormality and kernel partial-sum convergence of the Gram bases.
std::vector<CheckResult> verify_orthopoly();

/// Joint-intensity equality with the Bergman determinant and the
/// counterexample separation.
std::vector<CheckResult> verify_intensity();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace gafz
