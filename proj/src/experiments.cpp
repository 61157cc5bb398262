#include "gafz/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gafz/intensity.hpp"
#include "gafz/sampling.hpp"
#include "gafz/version.hpp"

namespace gafz {

namespace {

constexpr int kScatterReplicates = 50;  // replicates pooled into the SVG

std::vector<double> default_edges(double r) {
    return {0.0, 0.25 * r, 0.5 * r, 0.75 * r, r};
}

struct ReplicateResult {
    bool failed = false;
    bool count_flag = false;
    std::vector<int> counts;
    std::vector<Complex> zeros;  // kept only for the scatter subset
};

}  // namespace

void ExperimentConfig::validate() const {
    spec.validate();
    if (!(r > 0.0 && r <= 0.9)) throw std::domain_error("working radius must satisfy 0 < r <= 0.9");
    if (!(eps > 0.0)) throw std::domain_error("truncation tolerance must be positive");
    if (replicates < 100) throw std::domain_error("need at least 100 replicates");
    if (!edges.empty()) {
        if (edges.size() < 2) throw std::domain_error("need at least two annulus edges");
        if (edges.front() < 0.0 || edges.back() > r + 1e-12)
            throw std::domain_error("annulus edges must lie within [0, r]");
        for (size_t i = 1; i < edges.size(); ++i)
            if (!(edges[i] > edges[i - 1])) throw std::domain_error("annulus edges must increase");
    }
    if (mode == CovMode::DirectG && spec.family != Family::Tridiagonal &&
        spec.family != Family::Identity)
        throw std::domain_error("direct-G experiments support the tridiagonal family only");
}

int thread_count() {
    if (const char* env = std::getenv("GAFZEROS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

double analytic_annulus_count(const ExperimentConfig& config, double lo, double hi) {
    if (config.mode == CovMode::DirectG && config.spec.family == Family::Tridiagonal)
        return counterexample_expected_count(config.spec.q, hi) -
               counterexample_expected_count(config.spec.q, lo);
    return expected_count_disc(hi) - expected_count_disc(lo);
}

ExperimentReport run_zero_count(const ExperimentConfig& config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.config = config;
    if (report.config.edges.empty()) report.config.edges = default_edges(config.r);
    const std::vector<double>& edges = report.config.edges;
    const size_t bins = edges.size() - 1;

    report.truncation = truncation_order(config.spec, config.r, config.eps, config.mode);
    const CoefficientSampler sampler(config.spec, config.mode, report.truncation);

    const int M = config.replicates;
    std::vector<ReplicateResult> results(static_cast<size_t>(M));
    std::atomic<int> next{0};
    const int workers = std::min(thread_count(), M);
    auto worker = [&] {
        for (;;) {
            const int rep = next.fetch_add(1);
            if (rep >= M) return;
            ReplicateResult& out = results[static_cast<size_t>(rep)];
            StreamRng rng(config.seed, static_cast<uint64_t>(rep));
            try {
                TruncatedGAF f{sampler.draw(rng)};
                const ZeroSet zs = find_zeros(f, config.r);
                out.counts = count_in_annuli(zs, edges);
                if (!zs.count_checked || !zs.count_ok) out.count_flag = true;
                if (rep < kScatterReplicates) {
                    for (size_t i = 0; i < zs.zeros.size(); ++i)
                        out.zeros.insert(out.zeros.end(), zs.multiplicities[i], zs.zeros[i]);
                }
            } catch (const std::exception&) {
                out.failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // Ordered reduction over replicates: sums are independent of the
    // thread count, so reports are byte-reproducible.
    std::vector<double> sum(bins, 0.0), sumsq(bins, 0.0);
    double tot_sum = 0.0, tot_sumsq = 0.0;
    int used = 0;
    for (const ReplicateResult& res : results) {
        if (res.failed) {
            ++report.excluded;
            continue;
        }
        if (res.count_flag) ++report.count_check_flags;
        ++used;
        int total = 0;
        for (size_t b = 0; b < bins; ++b) {
            sum[b] += res.counts[b];
            sumsq[b] += static_cast<double>(res.counts[b]) * res.counts[b];
            total += res.counts[b];
        }
        tot_sum += total;
        tot_sumsq += static_cast<double>(total) * total;
        for (const Complex& z : res.zeros) report.scatter.push_back(z);
    }
    if (report.excluded > M / 100) {
        std::ostringstream os;
        os << report.excluded << " of " << M
           << " replicates failed root finding (more than 1%)";
        throw std::runtime_error(os.str());
    }
    if (used < 2) throw std::runtime_error("too few usable replicates");

    auto make_row = [&](double lo, double hi, double s, double sq) {
        AnnulusRow row;
        row.lo = lo;
        row.hi = hi;
        row.emp_mean = s / used;
        const double var = std::max(0.0, (sq - s * s / used) / (used - 1));
        row.emp_se = std::sqrt(var / used);
        row.analytic = analytic_annulus_count(report.config, lo, hi);
        if (row.emp_se > 0.0)
            row.zscore = (row.emp_mean - row.analytic) / row.emp_se;
        else
            row.zscore = row.emp_mean == row.analytic
                             ? 0.0
                             : std::numeric_limits<double>::infinity();
        return row;
    };
    for (size_t b = 0; b < bins; ++b)
        report.rows.push_back(make_row(edges[b], edges[b + 1], sum[b], sumsq[b]));
    report.total = make_row(0.0, config.r, tot_sum, tot_sumsq);

    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::vector<RadialIntensityRow> empirical_radial_intensity(const ExperimentReport& report) {
    std::vector<RadialIntensityRow> table;
    for (const AnnulusRow& row : report.rows) {
        RadialIntensityRow out;
        out.lo = row.lo;
        out.hi = row.hi;
        const double area = std::numbers::pi * (row.hi * row.hi - row.lo * row.lo);
        out.empirical = row.emp_mean / area;
        out.analytic = row.analytic / area;
        if (row.emp_se <= 0.0 && row.emp_mean == 0.0) {
            out.infinite_se = true;
            out.ratio = 0.0;
        } else {
            out.ratio = out.analytic != 0.0 ? out.empirical / out.analytic : 0.0;
        }
        table.push_back(out);
    }
    return table;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string config_echo(const ExperimentConfig& c, int truncation) {
    std::ostringstream os;
    os << kToolName << ' ' << kToolVersion << " model=" << c.spec.name()
       << " mode=" << cov_mode_name(c.mode) << " r=" << format_double(c.r)
       << " eps=" << format_double(c.eps) << " replicates=" << c.replicates
       << " seed=" << c.seed << " N=" << truncation << " edges=";
    for (size_t i = 0; i < c.edges.size(); ++i) {
        if (i) os << ';';
        os << format_double(c.edges[i]);
    }
    return os.str();
}

}  // namespace

std::string report_csv(const ExperimentReport& report) {
    std::ostringstream os;
    os << "# " << config_echo(report.config, report.truncation) << '\n';
    os << "annulus_lo,annulus_hi,emp_mean,emp_se,analytic,zscore\n";
    auto line = [&](const AnnulusRow& r) {
        os << format_double(r.lo) << ',' << format_double(r.hi) << ','
           << format_double(r.emp_mean) << ',' << format_double(r.emp_se) << ','
           << format_double(r.analytic) << ',' << format_double(r.zscore) << '\n';
    };
    for (const AnnulusRow& r : report.rows) line(r);
    line(report.total);
    return os.str();
}

std::string report_manifest(const ExperimentReport& report) {
    const ExperimentConfig& c = report.config;
    std::ostringstream os;
    os << "tool = " << kToolName << ' ' << kToolVersion << '\n'
       << "model = " << c.spec.name() << '\n'
       << "mode = " << cov_mode_name(c.mode) << '\n'
       << "r = " << format_double(c.r) << '\n'
       << "eps = " << format_double(c.eps) << '\n'
       << "replicates = " << c.replicates << '\n'
       << "seed = " << c.seed << '\n'
       << "truncation = " << report.truncation << '\n'
       << "excluded = " << report.excluded << '\n'
       << "count_check_flags = " << report.count_check_flags << '\n'
       << "total_emp_mean = " << format_double(report.total.emp_mean) << '\n'
       << "total_analytic = " << format_double(report.total.analytic) << '\n'
       << "total_zscore = " << format_double(report.total.zscore) << '\n';
    os << "edges =";
    for (double e : c.edges) os << ' ' << format_double(e);
    os << '\n';
    return os.str();
}

std::string scatter_svg(const std::vector<Complex>& zeros, double r) {
    const int size = 500;
    const double half = size / 2.0;
    const double scale = half - 10.0;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "  <circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << scale
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "  <circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << scale * r
       << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    for (const Complex& z : zeros) {
        const double x = half + scale * z.real();
        const double y = half - scale * z.imag();
        os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2\" fill=\"crimson\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace gafz
