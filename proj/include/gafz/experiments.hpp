#pragma once

#include <string>
#include <vector>

#include "gafz/gaf_zeros.hpp"
#include "gafz/model.hpp"

namespace gafz {

/// Monte Carlo run description. Annulus edges live in [0, r] and increase.
struct ExperimentConfig {
    ModelSpec spec;
    CovMode mode = CovMode::InverseOfG;
    double r = 0.6;
    double eps = 1e-12;  // truncation tail tolerance
    int replicates = 2000;
    uint64_t seed = 1;
    std::vector<double> edges;  // default: 4 equal-width annuli up to r
    std::string out_csv;
    std::string out_svg;
    std::string out_manifest;

    void validate() const;  // throws std::domain_error
};

struct AnnulusRow {
    double lo = 0.0, hi = 0.0;
    double emp_mean = 0.0, emp_se = 0.0;
    double analytic = 0.0, zscore = 0.0;
};

struct ExperimentReport {
    ExperimentConfig config;
    int truncation = 0;
    std::vector<AnnulusRow> rows;
    AnnulusRow total;  // lo = 0, hi = r
    int excluded = 0;          // replicates with root-finder failures
    int count_check_flags = 0; // argument-principle check skipped or failed
    double runtime_seconds = 0.0;
    std::vector<Complex> scatter;  // zeros pooled from leading replicates
};

/// Radial intensity comparison derived from a report row: empirical
/// count per unit area vs the analytic intensity averaged over the
/// annulus. infinite_se marks annuli with no usable statistics.
struct RadialIntensityRow {
    double lo = 0.0, hi = 0.0;
    double empirical = 0.0;
    double analytic = 0.0;
    double ratio = 0.0;
    bool infinite_se = false;
};

/// Worker cap: GAFZEROS_THREADS when set and positive, else the
/// hardware concurrency (at least 1).
int thread_count();

/// Replicate-parallel zero-count experiment. Deterministic for a fixed
/// config regardless of thread count. Throws std::runtime_error when
/// more than 1% of replicates fail root finding.
ExperimentReport run_zero_count(const ExperimentConfig& config);

std::vector<RadialIntensityRow> empirical_radial_intensity(const ExperimentReport& report);

/// Analytic expected count in the annulus [lo, hi] for the config's law
/// (Bergman radial integral, or the direct-G tridiagonal quadrature).
double analytic_annulus_count(const ExperimentConfig& config, double lo, double hi);

/// 17-significant-digit decimal rendering used by every CSV writer.
std::string format_double(double v);

std::string report_csv(const ExperimentReport& report);
std::string report_manifest(const ExperimentReport& report);
std::string scatter_svg(const std::vector<Complex>& zeros, double r);

}  // namespace gafz
