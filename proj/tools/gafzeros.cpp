#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gafz/experiments.hpp"
#include "gafz/gaf_zeros.hpp"
#include "gafz/intensity.hpp"
#include "gafz/kernels.hpp"
#include "gafz/sampling.hpp"
#include "gafz/verify.hpp"
#include "gafz/version.hpp"

namespace {

using gafz::Complex;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Options shared by every subcommand; config-file values are applied
// first, then explicit flags override them.
struct CommonOpts {
    std::string model = "iid";
    double q = 0.0;
    double h = 0.5;
    std::string mode = "inverse";
    int n = 0;  // coefficient count / series order (0 = auto)
    double r = 0.6;
    double eps = 1e-12;
    uint64_t seed = 1;
    int replicates = 2000;
    std::string out;
    std::string svg;
    std::string manifest;
    std::string edges;   // semicolon/space separated radii
    std::string points;  // whitespace-separated re,im pairs
    std::string config;
};

gafz::ModelSpec parse_model(const CommonOpts& o) {
    gafz::ModelSpec spec;
    if (o.model == "iid") {
        spec = gafz::ModelSpec::identity();
    } else if (o.model == "tridiag") {
        spec = gafz::ModelSpec::tridiagonal(o.q);
    } else if (o.model == "kms") {
        spec = gafz::ModelSpec::kms(o.q);
    } else if (o.model == "fgn") {
        spec = gafz::ModelSpec::fgn(o.h);
    } else if (o.model == "fgn0") {
        spec = gafz::ModelSpec::fgn0();
    } else {
        throw UsageError("unknown model '" + o.model + "' (expected iid|tridiag|kms|fgn|fgn0)");
    }
    spec.validate();
    return spec;
}

gafz::CovMode parse_mode(const CommonOpts& o) {
    if (o.mode == "inverse") return gafz::CovMode::InverseOfG;
    if (o.mode == "direct") return gafz::CovMode::DirectG;
    throw UsageError("unknown mode '" + o.mode + "' (expected inverse|direct)");
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == ';') {
            if (!token.empty()) out.push_back(token);
            token.clear();
        } else {
            token += c;
        }
    }
    if (!token.empty()) out.push_back(token);
    return out;
}

std::vector<Complex> parse_points(const std::string& text) {
    std::vector<Complex> pts;
    for (const std::string& tok : split_tokens(text)) {
        const size_t comma = tok.find(',');
        if (comma == std::string::npos)
            throw UsageError("point '" + tok + "' is not a re,im pair");
        try {
            pts.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
        } catch (const std::exception&) {
            throw UsageError("point '" + tok + "' is not a re,im pair");
        }
    }
    if (pts.empty()) throw UsageError("no points given (use --points \"re,im re,im ...\")");
    return pts;
}

std::vector<double> parse_edges(const std::string& text) {
    std::vector<double> edges;
    for (const std::string& tok : split_tokens(text)) {
        try {
            edges.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw UsageError("annulus edge '" + tok + "' is not a number");
        }
    }
    return edges;
}

// Flat `key = value` config files, UTF-8, '#' comments.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) + " has no '='");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

void apply_config(CommonOpts& o, const std::string& path) {
    static const std::map<std::string, int> known = {
        {"model", 0}, {"q", 1},     {"h", 1},        {"mode", 0},  {"n", 2},
        {"r", 1},     {"eps", 1},   {"seed", 3},     {"replicates", 2},
        {"out", 0},   {"svg", 0},   {"manifest", 0}, {"edges", 0}, {"points", 0}};
    for (const auto& [key, value] : read_config(path)) {
        const auto it = known.find(key);
        if (it == known.end()) throw UsageError("unknown config key '" + key + "'");
        try {
            if (key == "model") o.model = value;
            else if (key == "q") o.q = std::stod(value);
            else if (key == "h") o.h = std::stod(value);
            else if (key == "mode") o.mode = value;
            else if (key == "n") o.n = std::stoi(value);
            else if (key == "r") o.r = std::stod(value);
            else if (key == "eps") o.eps = std::stod(value);
            else if (key == "seed") o.seed = std::stoull(value);
            else if (key == "replicates") o.replicates = std::stoi(value);
            else if (key == "out") o.out = value;
            else if (key == "svg") o.svg = value;
            else if (key == "manifest") o.manifest = value;
            else if (key == "edges") o.edges = value;
            else if (key == "points") o.points = value;
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("config key '" + key + "' has a malformed value '" + value + "'");
        }
    }
}

std::string header_echo(const CommonOpts& o, const gafz::ModelSpec& spec, gafz::CovMode mode,
                        int n) {
    std::ostringstream os;
    os << "# " << gafz::kToolName << ' ' << gafz::kToolVersion << " model=" << spec.name()
       << " mode=" << gafz::cov_mode_name(mode) << " n=" << n << " r=" << gafz::format_double(o.r)
       << " eps=" << gafz::format_double(o.eps) << " seed=" << o.seed
       << " replicates=" << o.replicates << '\n';
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file '" + path + "'");
    out << text;
}

int series_order_for(const CommonOpts& o, const gafz::ModelSpec& spec) {
    if (o.n > 0) return o.n;
    if (spec.family == gafz::Family::Fgn) return 300;
    return 0;
}

int cmd_sample(const CommonOpts& o) {
    const gafz::ModelSpec spec = parse_model(o);
    const gafz::CovMode mode = parse_mode(o);
    const int n = o.n > 0 ? o.n : 16;
    const gafz::CoefficientSampler sampler(spec, mode, n);
    std::ostringstream os;
    os << header_echo(o, spec, mode, n);
    os << "replicate,index,re,im\n";
    for (int rep = 0; rep < o.replicates; ++rep) {
        gafz::StreamRng rng(o.seed, static_cast<uint64_t>(rep));
        const std::vector<Complex> xi = sampler.draw(rng);
        for (int i = 0; i < n; ++i)
            os << rep << ',' << i + 1 << ',' << gafz::format_double(xi[static_cast<size_t>(i)].real())
               << ',' << gafz::format_double(xi[static_cast<size_t>(i)].imag()) << '\n';
    }
    write_text(o.out, os.str());
    return kExitOk;
}

int cmd_zeros(const CommonOpts& o) {
    const gafz::ModelSpec spec = parse_model(o);
    const gafz::CovMode mode = parse_mode(o);
    const int n = o.n > 0 ? o.n : gafz::truncation_order(spec, o.r, o.eps, mode);
    const gafz::CoefficientSampler sampler(spec, mode, n);
    gafz::StreamRng rng(o.seed, 0);
    const gafz::TruncatedGAF f{sampler.draw(rng)};
    const gafz::ZeroSet zs = gafz::find_zeros(f, o.r);
    std::ostringstream os;
    os << header_echo(o, spec, mode, n);
    os << "re,im,residual\n";
    for (size_t i = 0; i < zs.zeros.size(); ++i)
        os << gafz::format_double(zs.zeros[i].real()) << ','
           << gafz::format_double(zs.zeros[i].imag()) << ','
           << gafz::format_double(zs.residuals[i]) << '\n';
    write_text(o.out, os.str());
    if (!o.svg.empty()) {
        std::vector<Complex> pts;
        for (size_t i = 0; i < zs.zeros.size(); ++i)
            pts.insert(pts.end(), zs.multiplicities[i], zs.zeros[i]);
        write_text(o.svg, gafz::scatter_svg(pts, o.r));
    }
    return kExitOk;
}

int cmd_intensity(const CommonOpts& o) {
    const gafz::ModelSpec spec = parse_model(o);
    const gafz::CovMode mode = parse_mode(o);
    const std::vector<Complex> pts = parse_points(o.points);
    const auto kernel = gafz::make_kernel(spec, mode, series_order_for(o, spec));
    std::ostringstream os;
    os << header_echo(o, spec, mode, static_cast<int>(pts.size()));
    os << "points,numeric_p,bergman_p,rel_error\n";
    for (size_t k = 1; k <= pts.size(); ++k) {
        const std::vector<Complex> tuple(pts.begin(), pts.begin() + static_cast<long>(k));
        const double numeric = gafz::joint_intensity_numeric(*kernel, tuple);
        const double target = gafz::bergman_determinant(tuple);
        std::ostringstream label;
        for (size_t i = 0; i < tuple.size(); ++i) {
            if (i) label << ';';
            label << gafz::format_double(tuple[i].real()) << '+'
                  << gafz::format_double(tuple[i].imag()) << 'i';
        }
        os << '"' << label.str() << "\"," << gafz::format_double(numeric) << ','
           << gafz::format_double(target) << ','
           << gafz::format_double(std::abs(numeric - target) / std::abs(target)) << '\n';
    }
    write_text(o.out, os.str());
    return kExitOk;
}

int cmd_verify(const std::string& suite, double perturb_psi) {
    std::vector<std::pair<std::string, std::vector<gafz::CheckResult>>> groups;
    if (suite == "kernels" || suite == "all")
        groups.emplace_back("kernels", gafz::verify_kernels(perturb_psi));
    if (suite == "schur" || suite == "all") groups.emplace_back("schur", gafz::verify_schur());
    if (suite == "orthopoly" || suite == "all")
        groups.emplace_back("orthopoly", gafz::verify_orthopoly());
    if (suite == "intensity" || suite == "all")
        groups.emplace_back("intensity", gafz::verify_intensity());
    if (groups.empty())
        throw UsageError("unknown suite '" + suite +
                         "' (expected kernels|schur|orthopoly|intensity|all)");
    bool ok = true;
    for (const auto& [name, results] : groups) {
        for (const gafz::CheckResult& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << name << "] " << r.name
                      << "  measured=" << gafz::format_double(r.measured)
                      << " tol=" << gafz::format_double(r.tolerance) << '\n';
            ok = ok && r.pass;
        }
    }
    return ok ? kExitOk : kExitNumerical;
}

int cmd_experiment(const CommonOpts& o) {
    gafz::ExperimentConfig cfg;
    cfg.spec = parse_model(o);
    cfg.mode = parse_mode(o);
    cfg.r = o.r;
    cfg.eps = o.eps;
    cfg.replicates = o.replicates;
    cfg.seed = o.seed;
    if (!o.edges.empty()) cfg.edges = parse_edges(o.edges);
    try {
        cfg.validate();
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    const gafz::ExperimentReport report = gafz::run_zero_count(cfg);
    write_text(o.out, gafz::report_csv(report));
    if (!o.manifest.empty()) write_text(o.manifest, gafz::report_manifest(report));
    if (!o.svg.empty()) write_text(o.svg, gafz::scatter_svg(report.scatter, cfg.r));
    if (std::abs(report.total.zscore) > 3.0) {
        std::cerr << "statistical failure: total zero count z-score "
                  << gafz::format_double(report.total.zscore) << " exceeds 3\n";
        return kExitNumerical;
    }
    return kExitOk;
}

void add_common(CLI::App* sub, CommonOpts& o) {
    // the Hurst flag --h needs the single-letter name, so help is --help only
    sub->set_help_flag("--help", "print this help message and exit");
    sub->add_option("--model", o.model, "family: iid|tridiag|kms|fgn|fgn0");
    sub->add_option("--q", o.q, "tridiagonal / KMS parameter");
    sub->add_option("--h", o.h, "fGn Hurst index");
    sub->add_option("--mode", o.mode, "covariance mode: inverse|direct");
    sub->add_option("--n,--N", o.n, "coefficient count / series order (0 = automatic)");
    sub->add_option("--r", o.r, "working radius");
    sub->add_option("--eps", o.eps, "truncation tail tolerance");
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--replicates", o.replicates, "replicate count");
    sub->add_option("--out", o.out, "output CSV path (default stdout)");
    sub->add_option("--svg", o.svg, "SVG scatter output path");
    sub->add_option("--manifest", o.manifest, "run-manifest output path");
    sub->add_option("--edges", o.edges, "annulus edges, e.g. \"0 0.2 0.4 0.6\"");
    sub->add_option("--points", o.points, "points as \"re,im re,im ...\"");
    sub->add_option("--config", o.config, "flat key=value config file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian analytic function zero sets on the unit disc"};
    app.require_subcommand(1);

    CommonOpts sample_o, zeros_o, intensity_o, experiment_o;
    CLI::App* sample = app.add_subcommand("sample", "draw coefficient vectors as CSV");
    add_common(sample, sample_o);
    CLI::App* zeros = app.add_subcommand("zeros", "compute one zero set as CSV (+SVG)");
    add_common(zeros, zeros_o);
    CLI::App* intensity = app.add_subcommand("intensity", "joint-intensity comparison table");
    add_common(intensity, intensity_o);
    CLI::App* experiment = app.add_subcommand("experiment", "Monte Carlo zero-count run");
    add_common(experiment, experiment_o);

    std::string suite = "all";
    double perturb_psi = 0.0;
    CLI::App* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", suite, "kernels|schur|orthopoly|intensity|all");
    verify->add_option("--perturb-psi", perturb_psi, "fault-injection scale (testing aid)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        // Config handling: config values fill anything not given as an
        // explicit flag (flags override config).
        auto with_config = [&](CLI::App* sub, CommonOpts& o) {
            if (o.config.empty()) return;
            CommonOpts merged = CommonOpts{};
            apply_config(merged, o.config);
            auto keep = [&](const std::string& flag) { return sub->count(flag) > 0; };
            if (!keep("--model")) o.model = merged.model;
            if (!keep("--q")) o.q = merged.q;
            if (!keep("--h")) o.h = merged.h;
            if (!keep("--mode")) o.mode = merged.mode;
            if (!keep("--n")) o.n = merged.n;
            if (!keep("--r")) o.r = merged.r;
            if (!keep("--eps")) o.eps = merged.eps;
            if (!keep("--seed")) o.seed = merged.seed;
            if (!keep("--replicates")) o.replicates = merged.replicates;
            if (!keep("--out")) o.out = merged.out;
            if (!keep("--svg")) o.svg = merged.svg;
            if (!keep("--manifest")) o.manifest = merged.manifest;
            if (!keep("--edges")) o.edges = merged.edges;
            if (!keep("--points")) o.points = merged.points;
        };
        if (sample->parsed()) {
            with_config(sample, sample_o);
            return cmd_sample(sample_o);
        }
        if (zeros->parsed()) {
            with_config(zeros, zeros_o);
            return cmd_zeros(zeros_o);
        }
        if (intensity->parsed()) {
            with_config(intensity, intensity_o);
            return cmd_intensity(intensity_o);
        }
        if (experiment->parsed()) {
            with_config(experiment, experiment_o);
            return cmd_experiment(experiment_o);
        }
        if (verify->parsed()) return cmd_verify(suite, perturb_psi);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}
