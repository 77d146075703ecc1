#include "wavefunc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "wavefunc/errors.hpp"
#include "wavefunc/fit.hpp"
#include "wavefunc/model.hpp"
#include "wavefunc/quadrature.hpp"
#include "wavefunc/reference.hpp"
#include "wavefunc/sampler.hpp"
#include "wavefunc/sphere.hpp"

namespace wavefunc::cli {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WaveModel load_model(const std::string& path) { return deserialize(read_text_file(path)); }

// Writes to the named file, or to stdout when path is "-".
void write_text(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path);
    out << content;
}

struct FitArgs {
    std::string input;
    std::string output = "-";
    int degree = 10;
    int max_iterations = 500;
    double gradient_tolerance = 1e-8;
};

int cmd_fit(const FitArgs& a) {
    const std::vector<double> data = read_sample_file(a.input);
    FitOptions opts;
    opts.degree = a.degree;
    opts.max_iterations = a.max_iterations;
    opts.gradient_tolerance = a.gradient_tolerance;
    const auto [model, report] = fit_mle(data, opts);
    write_text(a.output, serialize(model));
    std::cout << "converged: " << (report.converged ? "true" : "false") << "\n"
              << "iterations: " << report.iterations << "\n"
              << "log_likelihood: " << fmt17(report.final_log_likelihood) << "\n"
              << "gradient_norm: " << fmt17(report.gradient_norm) << "\n";
    return report.converged ? exit_ok : exit_no_convergence;
}

struct EvalArgs {
    std::string model_file;
    std::string output = "-";
    std::string reference;
    double grid_min = -4.0;
    double grid_max = 4.0;
    int grid_count = 101;
};

int cmd_eval(const EvalArgs& a) {
    if (a.grid_count < 2 || !(a.grid_min < a.grid_max)) {
        std::cerr << "eval: invalid grid (need grid-min < grid-max and grid-count >= 2)\n";
        return exit_usage;
    }
    const WaveModel model = load_model(a.model_file);
    std::unique_ptr<ReferenceDensity> ref;
    if (!a.reference.empty()) {
        ref = std::make_unique<ReferenceDensity>(make_reference(a.reference));
    }
    std::ostringstream out;
    out << "# x";
    if (ref) out << "\ttrue_density";
    out << "\tfitted_density";
    if (ref) out << "\ttrue_amplitude";
    out << "\tfitted_amplitude\n";
    for (int i = 0; i < a.grid_count; ++i) {
        const double x =
            a.grid_min + (a.grid_max - a.grid_min) * i / static_cast<double>(a.grid_count - 1);
        const double z = (x - model.location()) / model.scale();
        out << fmt17(x);
        if (ref) out << '\t' << fmt17(ref->density(x));
        out << '\t' << fmt17(model.density(x));
        if (ref) out << '\t' << fmt17(ref->sqrt_density(x));
        out << '\t' << fmt17(model.amplitude(z)) << '\n';
    }
    write_text(a.output, out.str());
    return exit_ok;
}

int cmd_moments(const std::string& model_file, int max_p) {
    if (max_p < 0) {
        std::cerr << "moments: --max-p must be >= 0\n";
        return exit_usage;
    }
    const WaveModel model = load_model(model_file);
    for (int p = 0; p <= max_p; ++p) {
        std::cout << p << '\t' << fmt17(moment(model, p)) << '\n';
    }
    return exit_ok;
}

int cmd_entropy(const std::string& model_file) {
    const WaveModel model = load_model(model_file);
    std::cout << fmt17(entropy(model)) << '\n';
    return exit_ok;
}

struct SampleArgs {
    std::string model_file;
    std::string output = "-";
    std::uint64_t seed = 0;
    std::size_t n = 1000;
    int burn_in = 100;
    int thinning = 1;
};

int cmd_sample(const SampleArgs& a) {
    const WaveModel model = load_model(a.model_file);
    const std::vector<double> draws = sample_n(model, a.n, a.seed, a.burn_in, a.thinning);
    std::ostringstream out;
    out << "# wavefunc sample\n"
        << "# model: " << a.model_file << "\n"
        << "# n: " << a.n << "\n"
        << "# seed: " << a.seed << "\n"
        << "# rng: " << SliceSampler::generator_name() << "\n"
        << "# burn_in: " << a.burn_in << ", thinning: " << a.thinning << "\n";
    for (double x : draws) out << fmt17(x) << '\n';
    write_text(a.output, out.str());
    return exit_ok;
}

struct ProjectArgs {
    std::string reference;
    std::string output = "-";
    int degree = 10;
    double tol = 1e-10;
};

int cmd_project(const ProjectArgs& a) {
    const ReferenceDensity ref = make_reference(a.reference);
    const ProjectionResult pr = project_density(
        [&ref](double z) { return ref.standardized_sqrt_density(z); }, a.degree, a.tol);

    // Renormalize for the emitted model; report the raw truncation mass.
    std::vector<double> w = pr.coefficients;
    const double norm = std::sqrt(pr.partial_mass);
    if (!(norm > 0.0)) throw DataError("project: projected coefficients are all zero");
    for (double& v : w) v /= norm;
    const WaveModel model(std::move(w), ref.standardized_location(), ref.standardized_scale());
    write_text(a.output, serialize(model));
    std::cout << "reference: " << ref.name << "\n"
              << "degree: " << a.degree << "\n"
              << "partial_mass: " << fmt17(pr.partial_mass) << "\n";
    return exit_ok;
}

}  // namespace

std::vector<double> read_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read file: " + path);
    std::vector<double> data;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#') continue;
        const char* start = line.c_str() + begin;
        char* end = nullptr;
        const double value = std::strtod(start, &end);
        // Anything but trailing whitespace after the number is malformed.
        while (end && *end != '\0' && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
        if (end == start || *end != '\0' || !std::isfinite(value)) {
            throw DataError(path + ": row " + std::to_string(row) + ": cannot parse \"" + line +
                            "\" as a number");
        }
        data.push_back(value);
    }
    return data;
}

int run(int argc, const char* const* argv) {
    CLI::App app{
        "wavefunc: density estimation via Hermite expansion of the square-root density.\n"
        "Exit codes: 0 success, 1 usage/argument error, 2 data error,\n"
        "3 fit did not converge (model still written)."};
    app.require_subcommand(1);

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "Fit a model to a sample file by maximum likelihood");
    fit->add_option("input", fit_args.input, "Sample file, one number per line")->required();
    fit->add_option("--degree", fit_args.degree, "Basis degree K")->capture_default_str();
    fit->add_option("--output", fit_args.output, "Model document file ('-' for stdout)")
        ->capture_default_str();
    fit->add_option("--max-iterations", fit_args.max_iterations, "Optimizer iteration cap")
        ->capture_default_str();
    fit->add_option("--gradient-tolerance", fit_args.gradient_tolerance,
                    "Gradient infinity-norm termination tolerance")
        ->capture_default_str();

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Tabulate fitted density and amplitude on a grid");
    eval->add_option("model", eval_args.model_file, "Model document file")->required();
    eval->add_option("--grid-min", eval_args.grid_min, "Grid lower end")->capture_default_str();
    eval->add_option("--grid-max", eval_args.grid_max, "Grid upper end")->capture_default_str();
    eval->add_option("--grid-count", eval_args.grid_count, "Number of grid points (>= 2)")
        ->capture_default_str();
    eval->add_option("--reference", eval_args.reference,
                     "Also tabulate this reference density's true curves");
    eval->add_option("--output", eval_args.output, "Output table file ('-' for stdout)")
        ->capture_default_str();

    std::string moments_model;
    int max_p = 4;
    auto* moments = app.add_subcommand("moments", "Exact raw moments of a fitted model");
    moments->add_option("model", moments_model, "Model document file")->required();
    moments->add_option("--max-p", max_p, "Highest moment order")->capture_default_str();

    std::string entropy_model;
    auto* entr = app.add_subcommand("entropy", "Differential entropy of a fitted model");
    entr->add_option("model", entropy_model, "Model document file")->required();

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "Draw samples from a fitted model");
    sample->add_option("model", sample_args.model_file, "Model document file")->required();
    sample->add_option("--n", sample_args.n, "Number of draws")->capture_default_str();
    sample->add_option("--seed", sample_args.seed, "RNG seed")->required();
    sample->add_option("--burn-in", sample_args.burn_in, "Discarded initial transitions")
        ->capture_default_str();
    sample->add_option("--thinning", sample_args.thinning, "Keep every k-th draw")
        ->capture_default_str();
    sample->add_option("--output", sample_args.output, "Sample file ('-' for stdout)")
        ->capture_default_str();

    ProjectArgs project_args;
    auto* project =
        app.add_subcommand("project", "Project a known reference density onto the basis");
    project->add_option("reference", project_args.reference, "Reference density name")
        ->required();
    project->add_option("--degree", project_args.degree, "Basis degree K")
        ->capture_default_str();
    project->add_option("--tolerance", project_args.tol, "Adaptive Simpson tolerance")
        ->capture_default_str();
    project->add_option("--output", project_args.output, "Model document file ('-' for stdout)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (fit->parsed()) return cmd_fit(fit_args);
        if (eval->parsed()) return cmd_eval(eval_args);
        if (moments->parsed()) return cmd_moments(moments_model, max_p);
        if (entr->parsed()) return cmd_entropy(entropy_model);
        if (sample->parsed()) return cmd_sample(sample_args);
        if (project->parsed()) return cmd_project(project_args);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.emplace_back("wavefunc");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace wavefunc::cli
