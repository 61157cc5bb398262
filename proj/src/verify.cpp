#include "gafz/verify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <memory>

#include "gafz/intensity.hpp"
#include "gafz/kernels.hpp"
#include "gafz/orthopoly.hpp"
#include "gafz/rng.hpp"
#include "gafz/sampling.hpp"

namespace gafz {

namespace {

// Shared evaluation grid inside radius 0.8 (125 (z, y, w) triples).
const std::vector<Complex> kGrid = {
    Complex(0.0, 0.0), Complex(0.4, 0.0), Complex(-0.4, 0.0),
    Complex(0.3, 0.55), Complex(-0.5, -0.3)};

CheckResult make(const std::string& name, double measured, double tol) {
    return {name, measured <= tol, measured, tol};
}

double lemma4_gap(const KernelEval& K) {
    double worst = 0.0;
    for (Complex z : kGrid)
        for (Complex y : kGrid)
            for (Complex w : kGrid) {
                const Complex k1 = conditioned_kernel(K, w, z, y);
                const Complex k2 = mobius_conjugated_kernel(K, w, z, y);
                worst = std::max(worst, std::abs(k1 - k2));
            }
    return worst;
}

double hermitian_gap(const KernelEval& K) {
    double worst = 0.0;
    for (Complex z : kGrid)
        for (Complex w : kGrid)
            worst = std::max(worst, std::abs(K.value(z, w) - std::conj(K.value(w, z))));
    return worst;
}

double gram_min_eigenvalue(const KernelEval& K) {
    const int n = static_cast<int>(kGrid.size());
    Matrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = K.value(kGrid[static_cast<size_t>(i)],
                                                      kGrid[static_cast<size_t>(j)]);
    Eigen::SelfAdjointEigenSolver<Matrix> es((G + G.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff();
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CheckResult> verify_kernels(double psi_perturbation) {
    std::vector<CheckResult> out;

    struct Entry {
        std::string name;
        std::unique_ptr<KernelEval> kernel;
        double tol;
    };
    std::vector<Entry> kernels;
    kernels.push_back({"identity", make_kernel(ModelSpec::identity(), CovMode::InverseOfG), 1e-10});
    kernels.push_back({"tridiag(q=-1/3)",
                       make_kernel(ModelSpec::tridiagonal(-1.0 / 3.0), CovMode::InverseOfG),
                       1e-10});
    kernels.push_back({"kms(q=0.5)", make_kernel(ModelSpec::kms(0.5), CovMode::InverseOfG), 1e-10});
    kernels.push_back(
        {"fgn(h=0.75) series N=300",
         make_kernel(ModelSpec::fgn(0.75), CovMode::InverseOfG, 300), 1e-6});

    for (const Entry& e : kernels) {
        out.push_back(make("lemma4 identity K1=K2 [" + e.name + "]", lemma4_gap(*e.kernel), e.tol));
        out.push_back(make("hermitian symmetry [" + e.name + "]", hermitian_gap(*e.kernel), 1e-12));
        const double min_ev = gram_min_eigenvalue(*e.kernel);
        out.push_back({"gram PSD [" + e.name + "]", min_ev >= -1e-9, min_ev, -1e-9});
    }

    // Series vs closed forms at a spread of points. psi_perturbation
    // rescales the tridiagonal psi here, which must break this check
    // (the fault-injection fixture for the CLI).
    const double bump = 1.0 + psi_perturbation;
    double worst_tri = 0.0, worst_kms = 0.0;
    for (Complex z : kGrid)
        for (Complex w : kGrid) {
            worst_tri = std::max(
                worst_tri,
                std::abs(kg_series(ModelSpec::tridiagonal(-1.0 / 3.0), z, w, 200).value -
                         bump * kg_closed_tridiag(-1.0 / 3.0, z, w)));
            worst_kms = std::max(
                worst_kms, std::abs(kg_series(ModelSpec::kms(0.5), z, w, 300).value -
                                    kg_closed_kms(0.5, z, w)));
        }
    out.push_back(make("series vs closed [tridiag q=-1/3, N=200]", worst_tri, 1e-8));
    out.push_back(make("series vs closed [kms q=0.5, N=300]", worst_kms, 1e-8));
    return out;
}

std::vector<CheckResult> verify_schur() {
    std::vector<CheckResult> out;
    const std::vector<ModelSpec> specs = {
        ModelSpec::identity(), ModelSpec::tridiagonal(-1.0 / 3.0), ModelSpec::kms(0.5),
        ModelSpec::fgn(0.75), ModelSpec::fgn(0.25)};
    for (const ModelSpec& spec : specs) {
        double worst = 0.0;
        for (int n : {4, 8, 16, 32})
            for (int k = 1; k < n; ++k) {
                const Matrix cond = schur_conditional_cov(spec, n, k);
                const Matrix target = invert_finite(build_finite(spec, n - k));
                worst = std::max(worst, (cond - target).cwiseAbs().maxCoeff());
            }
        out.push_back(make("schur conditioning = inv(G_{n-k}) [" + spec.name() + "]", worst, 1e-10));
    }
    return out;
}

std::vector<CheckResult> verify_orthopoly() {
    std::vector<CheckResult> out;
    const std::vector<ModelSpec> specs = {
        ModelSpec::identity(), ModelSpec::tridiagonal(-1.0 / 3.0), ModelSpec::kms(0.5),
        ModelSpec::fgn0()};
    const int m = 200;
    for (const ModelSpec& spec : specs) {
        const OrthoBasis basis = gram_basis(spec, m);
        const Matrix G = build_finite(spec, m).dense();
        const double gap =
            (basis.coeffs * G * basis.coeffs.adjoint() - Matrix::Identity(m, m))
                .cwiseAbs()
                .maxCoeff();
        out.push_back(make("orthonormality coeffs G coeffs* = I [" + spec.name() + "]", gap, 1e-8));
    }

    // Partial sums against the closed kernels inside radius 0.7.
    const std::vector<Complex> pts = {Complex(0.0, 0.0), Complex(0.3, 0.0), Complex(-0.55, 0.2),
                                      Complex(0.1, -0.65)};
    const OrthoBasis tri = gram_basis(ModelSpec::tridiagonal(-1.0 / 3.0), m);
    const OrthoBasis kms = gram_basis(ModelSpec::kms(0.5), m);
    double worst_tri = 0.0, worst_kms = 0.0;
    for (Complex z : pts)
        for (Complex w : pts) {
            worst_tri = std::max(worst_tri, std::abs(kernel_partial_sum(tri, m, z, w) -
                                                     kg_closed_tridiag(-1.0 / 3.0, z, w)));
            worst_kms = std::max(worst_kms, std::abs(kernel_partial_sum(kms, m, z, w) -
                                                     kg_closed_kms(0.5, z, w)));
        }
    out.push_back(make("partial sums -> closed kernel [tridiag, m=200]", worst_tri, 1e-6));
    out.push_back(make("partial sums -> closed kernel [kms, m=200]", worst_kms, 1e-6));

    // Gram basis reproduces the explicit fgn0 family.
    const OrthoBasis f0 = gram_basis(ModelSpec::fgn0(), 12);
    double worst_f0 = 0.0;
    for (int k = 1; k <= 10; ++k)
        for (Complex z : pts)
            worst_f0 = std::max(worst_f0, std::abs(eval_P(f0, k, z) - fgn0_P(k, z)));
    out.push_back(make("gram basis = explicit fgn0 polynomials (k<=10)", worst_f0, 1e-10));
    return out;
}

std::vector<CheckResult> verify_intensity() {
    std::vector<CheckResult> out;

    struct Entry {
        std::string name;
        ModelSpec spec;
        int series;
        double tol;
    };
    const std::vector<Entry> entries = {
        {"identity", ModelSpec::identity(), 0, 1e-6},
        {"tridiag(q=-1/3)", ModelSpec::tridiagonal(-1.0 / 3.0), 0, 1e-6},
        {"kms(q=0.5)", ModelSpec::kms(0.5), 0, 1e-6},
        {"fgn(h=0.75) series N=300", ModelSpec::fgn(0.75), 300, 1e-4}};
    StreamRng rng(20240811, 0);
    for (const Entry& e : entries) {
        const auto kernel = make_kernel(e.spec, CovMode::InverseOfG, e.series);
        double worst = 0.0;
        for (int n = 1; n <= 3; ++n) {
            for (int rep = 0; rep < 5; ++rep) {
                std::vector<Complex> pts;
                while (static_cast<int>(pts.size()) < n) {
                    const double rad = 0.7 * std::sqrt(rng.next_unit());
                    const double ang = 2.0 * 3.14159265358979324 * rng.next_unit();
                    const Complex z(rad * std::cos(ang), rad * std::sin(ang));
                    bool ok = true;
                    for (Complex p : pts) ok = ok && std::abs(p - z) >= 0.1;
                    if (ok) pts.push_back(z);
                }
                const double lhs = joint_intensity_numeric(*kernel, pts);
                const double rhs = bergman_determinant(pts);
                worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
            }
        }
        out.push_back(make("theorem-1 equality n<=3 [" + e.name + "]", worst, e.tol));
    }

    // Counterexample: direct-G tridiagonal 1-point intensity and its
    // ratio to Bergman at the origin.
    const double q = -1.0 / 3.0;
    const auto direct = make_kernel(ModelSpec::tridiagonal(q), CovMode::DirectG);
    double worst_formula = 0.0;
    for (Complex z : kGrid) {
        const std::vector<Complex> pt = {0.7 * z};
        worst_formula = std::max(
            worst_formula,
            std::abs(joint_intensity_numeric(*direct, pt) - counterexample_intensity(q, 0.7 * z)));
    }
    out.push_back(make("counterexample intensity formula [tridiag direct-G]", worst_formula, 1e-8));
    const std::vector<Complex> origin = {Complex(0.0, 0.0)};
    const double ratio = joint_intensity_numeric(*direct, origin) / bergman_determinant(origin);
    out.push_back(
        make("counterexample ratio at 0 = 1 - q^2", std::abs(ratio - (1.0 - q * q)), 1e-8));
    return out;
}

}  // namespace gafz
