// Acceptance gate: one criterion per invocation (argv[1] = 1..10),
// printing one PASS/FAIL line per criterion plus sub-check detail.
// argv[2] (optional) = path to the CLI binary, needed by criterion 10.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gafz/experiments.hpp"
#include "gafz/gaf_zeros.hpp"
#include "gafz/intensity.hpp"
#include "gafz/kernels.hpp"
#include "gafz/orthopoly.hpp"
#include "gafz/sampling.hpp"
#include "gafz/spectral.hpp"

using namespace gafz;

namespace {

constexpr double kPi = std::numbers::pi;
const double kQ = -1.0 / 3.0;

struct SubCheck {
    std::string name;
    bool pass;
    double measured;
    double tol;
};

std::vector<SubCheck> g_subs;

void sub(const std::string& name, double measured, double tol) {
    g_subs.push_back({name, measured <= tol, measured, tol});
}

void sub_flag(const std::string& name, bool pass, double measured, double tol) {
    g_subs.push_back({name, pass, measured, tol});
}

std::vector<Complex> random_tuple(StreamRng& rng, int n) {
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < n) {
        const double rad = 0.7 * std::sqrt(rng.next_unit());
        const double ang = 2.0 * kPi * rng.next_unit();
        const Complex z(rad * std::cos(ang), rad * std::sin(ang));
        bool ok = true;
        for (Complex p : pts) ok = ok && std::abs(p - z) >= 0.1;
        if (ok) pts.push_back(z);
    }
    return pts;
}

// ---- criterion 1: Theorem-1 exact equality, no Monte Carlo ----
void criterion1() {
    struct Entry {
        std::string name;
        ModelSpec spec;
        int series;
        double tol;
    };
    const std::vector<Entry> entries = {{"identity", ModelSpec::identity(), 0, 1e-6},
                                        {"tridiag(q=-1/3)", ModelSpec::tridiagonal(kQ), 0, 1e-6},
                                        {"kms(q=0.5)", ModelSpec::kms(0.5), 0, 1e-6},
                                        {"fgn(h=0.75,N=300)", ModelSpec::fgn(0.75), 300, 1e-4}};
    for (const Entry& e : entries) {
        const auto kernel = make_kernel(e.spec, CovMode::InverseOfG, e.series);
        double worst = 0.0;
        StreamRng rng(101, 0);
        for (int n = 1; n <= 3; ++n)
            for (int rep = 0; rep < 20; ++rep) {
                const std::vector<Complex> pts = random_tuple(rng, n);
                const double lhs = joint_intensity_numeric(*kernel, pts);
                const double rhs = bergman_determinant(pts);
                worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
            }
        sub("joint intensity = Bergman det, 20 tuples x n=1..3 [" + e.name + "]", worst, e.tol);
    }
}

// ---- criterion 2: counterexample separation ----
void criterion2() {
    const auto direct = make_kernel(ModelSpec::tridiagonal(kQ), CovMode::DirectG);
    double worst = 0.0;
    StreamRng rng(202, 0);
    for (int i = 0; i < 50; ++i) {
        const double rad = 0.8 * std::sqrt(rng.next_unit());
        const double ang = 2.0 * kPi * rng.next_unit();
        const Complex z(rad * std::cos(ang), rad * std::sin(ang));
        const std::vector<Complex> pt = {z};
        worst = std::max(worst, std::abs(joint_intensity_numeric(*direct, pt) -
                                         counterexample_intensity(kQ, z)));
    }
    sub("direct-G intensity matches the closed formula at 50 points", worst, 1e-8);
    const std::vector<Complex> origin = {Complex(0.0)};
    const double ratio = joint_intensity_numeric(*direct, origin) / bergman_determinant(origin);
    sub("ratio to Bergman at 0 equals 1 - q^2 = 8/9", std::abs(ratio - 8.0 / 9.0), 1e-8);
}

// ---- criterion 3: Lemma-4 kernel identity ----
void criterion3() {
    const std::vector<Complex> grid = {Complex(0.0, 0.0), Complex(0.4, 0.0), Complex(-0.4, 0.0),
                                       Complex(0.3, 0.55), Complex(-0.5, -0.3)};
    struct Entry {
        std::string name;
        ModelSpec spec;
        int series;
        double tol;
    };
    const std::vector<Entry> entries = {{"identity", ModelSpec::identity(), 0, 1e-10},
                                        {"tridiag(q=-1/3)", ModelSpec::tridiagonal(kQ), 0, 1e-10},
                                        {"kms(q=0.5)", ModelSpec::kms(0.5), 0, 1e-10},
                                        {"fgn0", ModelSpec::fgn0(), 0, 1e-10},
                                        {"fgn(h=0.75,N=300)", ModelSpec::fgn(0.75), 300, 1e-6}};
    for (const Entry& e : entries) {
        const auto K = make_kernel(e.spec, CovMode::InverseOfG, e.series);
        double worst = 0.0;
        for (Complex z : grid)
            for (Complex y : grid)
                for (Complex w : grid)
                    worst = std::max(worst, std::abs(conditioned_kernel(*K, w, z, y) -
                                                     mobius_conjugated_kernel(*K, w, z, y)));
        sub("|K1 - K2| on the 125-point grid [" + e.name + "]", worst, e.tol);
    }
}

// ---- criterion 4: closed-form inverse validation ----
void criterion4() {
    double worst = 0.0;
    for (double q : {0.1, -0.1, 0.3, -0.3, kQ})
        for (int n : {2, 5, 20, 100}) {
            const Matrix numeric = invert_finite(build_finite(ModelSpec::tridiagonal(q), n));
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j <= n; ++j)
                    worst = std::max(worst, std::abs(numeric(k - 1, j - 1) -
                                                     tridiag_inverse_entry(q, n, k, j)));
        }
    sub("tridiagonal Chebyshev inverse vs numeric, all (q, n)", worst, 1e-8);

    const int n = 200;
    const Matrix inv = invert_finite(build_finite(ModelSpec::kms(0.5), n));
    double worst_kms = 0.0;
    for (int k = 10; k <= n - 10; ++k)
        for (int j = 10; j <= n - 10; ++j)
            worst_kms =
                std::max(worst_kms, std::abs(inv(k - 1, j - 1) - kms_inverse_entry(0.5, k, j)));
    sub("KMS infinite-inverse vs interior numeric entries (n=200)", worst_kms, 1e-6);
}

// ---- criterion 5: Schur / Lemma-1 finite analogue ----
void criterion5() {
    const std::vector<ModelSpec> specs = {ModelSpec::identity(), ModelSpec::tridiagonal(kQ),
                                          ModelSpec::kms(0.5),   ModelSpec::fgn(0.75),
                                          ModelSpec::fgn(0.25),  ModelSpec::fgn0()};
    for (const ModelSpec& spec : specs) {
        double worst = 0.0;
        for (int n = 2; n <= 32; ++n)
            for (int k = 1; k < n; ++k) {
                const Matrix cond = schur_conditional_cov(spec, n, k);
                const Matrix target = invert_finite(build_finite(spec, n - k));
                worst = std::max(worst, (cond - target).cwiseAbs().maxCoeff());
            }
        sub("conditional covariance = inv(G_{n-k}), n<=32 [" + spec.name() + "]", worst, 1e-10);
    }
}

// ---- criterion 6: RKHS basis (Theorem 2) ----
void criterion6() {
    const int m = 200;
    const std::vector<ModelSpec> specs = {ModelSpec::identity(), ModelSpec::tridiagonal(kQ),
                                          ModelSpec::kms(0.5), ModelSpec::fgn0()};
    for (const ModelSpec& spec : specs) {
        const OrthoBasis basis = gram_basis(spec, m);
        const Matrix G = build_finite(spec, m).dense();
        const double gap = (basis.coeffs * G * basis.coeffs.adjoint() - Matrix::Identity(m, m))
                               .cwiseAbs()
                               .maxCoeff();
        sub("coeffs G coeffs* = I at m=200 [" + spec.name() + "]", gap, 1e-8);
    }

    const std::vector<Complex> pts = {Complex(0.0), Complex(0.35, 0.0), Complex(-0.5, 0.2),
                                      Complex(0.1, -0.65), Complex(0.7, 0.0), Complex(0.0, 0.7)};
    const OrthoBasis tri = gram_basis(ModelSpec::tridiagonal(kQ), m);
    const OrthoBasis kms = gram_basis(ModelSpec::kms(0.5), m);
    double worst_tri = 0.0, worst_kms = 0.0;
    for (Complex z : pts)
        for (Complex w : pts) {
            worst_tri = std::max(worst_tri, std::abs(kernel_partial_sum(tri, m, z, w) -
                                                     kg_closed_tridiag(kQ, z, w)));
            worst_kms = std::max(worst_kms, std::abs(kernel_partial_sum(kms, m, z, w) -
                                                     kg_closed_kms(0.5, z, w)));
        }
    sub("partial sums vs closed kernel, |z|<=0.7, m=200 [tridiag]", worst_tri, 1e-6);
    sub("partial sums vs closed kernel, |z|<=0.7, m=200 [kms]", worst_kms, 1e-6);

    // fgn0 partial sums against the closed kernel at the stated 1e-4:
    // the tail is Theta(1/m) (|P_n|^2 ~ 2 n^{-2} (1-|z|)^{-4}), so the
    // gap at m=200 is ~0.16 at z=w=0.5. Implemented as stated; fails.
    const OrthoBasis f0 = gram_basis(ModelSpec::fgn0(), m);
    double worst_f0 = 0.0;
    for (Complex z : pts)
        for (Complex w : pts)
            worst_f0 =
                std::max(worst_f0, std::abs(kernel_partial_sum(f0, m, z, w) - kg_fgn0(z, w)));
    sub("partial sums vs closed fgn0 kernel at m=200 (tail is Theta(1/m))", worst_f0, 1e-4);

    // tridiagonal q = -0.499 vs the fgn0 kernel at the stated 1e-3: the
    // kernel gap as q -> -1/2 is O(sqrt(1-4q^2)) ~ 0.06 at q = -0.499,
    // so the gap measures ~0.6 on this grid. Implemented as stated.
    double worst_lim = 0.0;
    for (Complex z : pts)
        for (Complex w : pts)
            worst_lim =
                std::max(worst_lim, std::abs(kg_closed_tridiag(-0.499, z, w) - kg_fgn0(z, w)));
    sub("tridiagonal q=-0.499 kernel vs fgn0 kernel (gap is O(sqrt(1-4q^2)))", worst_lim, 1e-3);

    // informational: at q = -0.5 + 1e-10 the relative kernel gap is the
    // first-order remainder ~ sqrt(1-4q^2)(1+|z|)/(1-|z|) ~ 1e-4 on this
    // grid, confirming the q -> -1/2 limit law and the implementation
    // (the kernel itself reaches ~44 at z = w = 0.7, so the comparison
    // is relative).
    double worst_near = 0.0;
    for (Complex z : pts)
        for (Complex w : pts) {
            const Complex k0 = kg_fgn0(z, w);
            worst_near =
                std::max(worst_near, std::abs(kg_closed_tridiag(-0.5 + 1e-10, z, w) - k0) /
                                         std::max(1.0, std::abs(k0)));
        }
    sub("limit law witness: q=-0.5+1e-10 kernel vs fgn0 kernel (relative)", worst_near, 1e-3);
}

// ---- criterion 7: spectral ----
void criterion7() {
    double worst_half = 0.0;
    for (int i = 1; i < 1000; ++i)
        worst_half =
            std::max(worst_half, std::abs(density(ModelSpec::fgn(0.5), i / 1000.0) - 1.0));
    sub("phi at h=1/2 is identically 1 on 1000 grid points", worst_half, 1e-8);

    const std::vector<ModelSpec> specs = {ModelSpec::identity(), ModelSpec::tridiagonal(kQ),
                                          ModelSpec::kms(0.5),   ModelSpec::fgn(0.75),
                                          ModelSpec::fgn(0.25),  ModelSpec::fgn0()};
    for (const ModelSpec& spec : specs) {
        double worst = 0.0;
        for (long k = -10; k <= 10; ++k)
            worst = std::max(worst,
                             std::abs(density_fourier_coefficient(spec, k) - gamma_of(spec, k)));
        sub("Bochner round trip |k|<=10 [" + spec.name() + "]", worst, 1e-7);
    }
    sub("C(1/2) = 1/(4 pi^2)", std::abs(normalizing_C(0.5) - 1.0 / (4.0 * kPi * kPi)), 1e-10);
}

// ---- criterion 8: Monte Carlo zero counts ----
void criterion8() {
    struct Entry {
        std::string name;
        ModelSpec spec;
        CovMode mode;
    };
    const std::vector<Entry> entries = {
        {"identity", ModelSpec::identity(), CovMode::InverseOfG},
        {"tridiag inverse", ModelSpec::tridiagonal(kQ), CovMode::InverseOfG},
        {"kms inverse", ModelSpec::kms(0.5), CovMode::InverseOfG},
        {"fgn(h=0.75) inverse", ModelSpec::fgn(0.75), CovMode::InverseOfG},
        {"tridiag direct (counterexample)", ModelSpec::tridiagonal(kQ), CovMode::DirectG}};
    for (const Entry& e : entries) {
        ExperimentConfig cfg;
        cfg.spec = e.spec;
        cfg.mode = e.mode;
        cfg.r = 0.6;
        cfg.eps = 1e-12;
        cfg.replicates = 2000;
        cfg.seed = 808;
        const ExperimentReport report = run_zero_count(cfg);
        std::ostringstream detail;
        detail << "mean count within 3 SE of " << format_double(report.total.analytic) << " ["
               << e.name << "] (mean=" << format_double(report.total.emp_mean)
               << ", se=" << format_double(report.total.emp_se)
               << ", excluded=" << report.excluded << ")";
        sub(detail.str(), std::abs(report.total.zscore), 3.0);
    }
}

// ---- criterion 9: root-finder integrity ----
void criterion9() {
    ExperimentConfig cfg;
    cfg.spec = ModelSpec::tridiagonal(kQ);
    cfg.r = 0.6;
    cfg.replicates = 2000;
    cfg.seed = 909;
    const ExperimentReport report = run_zero_count(cfg);
    const double flag_rate =
        static_cast<double>(report.count_check_flags) / cfg.replicates;
    sub("argument-principle count agrees on >= 99% of replicates", flag_rate, 0.01);

    const ModelSpec spec = ModelSpec::kms(0.5);
    const int N = truncation_order(spec, 0.6, 1e-12);
    const CoefficientSampler s1(spec, CovMode::InverseOfG, N);
    const CoefficientSampler s2(spec, CovMode::InverseOfG, 2 * N);
    double worst = 0.0;
    int mismatches = 0;
    for (int seed = 0; seed < 100; ++seed) {
        StreamRng rng1(4242, static_cast<uint64_t>(seed));
        StreamRng rng2(4243, static_cast<uint64_t>(seed));
        std::vector<Complex> coeffs = s1.draw(rng1);
        std::vector<Complex> coeffs2 = s2.draw(rng2);
        std::copy(coeffs.begin(), coeffs.end(), coeffs2.begin());
        const ZeroSet za = find_zeros(TruncatedGAF{coeffs}, 0.6);
        const ZeroSet zb = find_zeros(TruncatedGAF{coeffs2}, 0.6);
        // one-sided match inside radius 0.55 to keep boundary-crossing
        // zeros out of the comparison
        for (const Complex& z : za.zeros) {
            if (std::abs(z) > 0.55) continue;
            double best = 1e300;
            for (const Complex& y : zb.zeros) best = std::min(best, std::abs(z - y));
            worst = std::max(worst, best);
            if (best > 1e-6) ++mismatches;
        }
    }
    sub_flag("zero sets stable under truncation doubling, 100 seeds (worst " +
                 format_double(worst) + ")",
             mismatches == 0, worst, 1e-6);
}

// ---- criterion 10: byte-identical reproducibility across thread counts ----
void criterion10(const std::string& cli) {
    ExperimentConfig cfg;
    cfg.spec = ModelSpec::kms(0.5);
    cfg.replicates = 200;
    cfg.seed = 31337;
    setenv("GAFZEROS_THREADS", "1", 1);
    const std::string a = report_csv(run_zero_count(cfg));
    setenv("GAFZEROS_THREADS", "8", 1);
    const std::string b = report_csv(run_zero_count(cfg));
    unsetenv("GAFZEROS_THREADS");
    sub_flag("in-process report bytes identical for 1 vs 8 threads", a == b,
             a == b ? 0.0 : 1.0, 0.0);

    if (cli.empty()) {
        sub_flag("CLI reproducibility (no CLI path given)", false, 1.0, 0.0);
        return;
    }
    auto run = [&](const std::string& threads, const std::string& out) {
        const std::string cmd = "GAFZEROS_THREADS=" + threads + " " + cli +
                                " experiment --model tridiag --q -0.3333333 --mode inverse"
                                " --r 0.6 --replicates 150 --seed 7 --out " +
                                out;
        return std::system(cmd.c_str());
    };
    const std::string o1 = "acceptance_run_t1.csv", o2 = "acceptance_run_t6.csv";
    const int rc1 = run("1", o1);
    const int rc2 = run("6", o2);
    std::ifstream f1(o1, std::ios::binary), f2(o2, std::ios::binary);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    const bool same = rc1 == 0 && rc2 == 0 && s1.str() == s2.str() && !s1.str().empty();
    sub_flag("CLI experiment CSV bytes identical for 1 vs 6 threads", same, same ? 0.0 : 1.0,
             0.0);
    std::remove(o1.c_str());
    std::remove(o2.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <criterion 1..10> [cli-path]\n";
        return 2;
    }
    const int criterion = std::atoi(argv[1]);
    const std::string cli = argc > 2 ? argv[2] : "";
    switch (criterion) {
        case 1: criterion1(); break;
        case 2: criterion2(); break;
        case 3: criterion3(); break;
        case 4: criterion4(); break;
        case 5: criterion5(); break;
        case 6: criterion6(); break;
        case 7: criterion7(); break;
        case 8: criterion8(); break;
        case 9: criterion9(); break;
        case 10: criterion10(cli); break;
        default:
            std::cerr << "unknown criterion " << criterion << '\n';
            return 2;
    }
    bool all = true;
    for (const SubCheck& s : g_subs) {
        std::printf("%s  criterion %d: %s (measured %.6g, tolerance %.6g)\n",
                    s.pass ? "PASS" : "FAIL", criterion, s.name.c_str(), s.measured, s.tol);
        all = all && s.pass;
    }
    std::printf("%s  criterion %d overall\n", all ? "PASS" : "FAIL", criterion);
    return all ? 0 : 1;
}
