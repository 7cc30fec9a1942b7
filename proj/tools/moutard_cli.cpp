// Command-line front end: example reproduction, transforms, verification,
// positivity certificates, sampling, sweeps and the 1D chain.
//
// Exit status: 0 success/true, 1 verified-false/refuted/failed invariant,
// 2 usage or input error, 3 inconclusive.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "moutard/darboux1d.hpp"
#include "moutard/error.hpp"
#include "moutard/serialize.hpp"

namespace {

using namespace moutard;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

struct Config {
    int example_id = 0;
    std::string seeds_file, u_file, psi_file, w_file, function_file, out_file;
    std::string c_value = "1";
    std::string h_value = "1/100";
    std::string bounds = "-5,5,-5,5";
    unsigned grid = 0;
    unsigned resolution = 101;
    unsigned degree = 3, trials = 20, coefficient_bound = 10, chain_length = 5;
    std::uint64_t seed = 0;
    std::optional<unsigned> max_depth;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    try {
        return parse_json_text(read_file(path));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.detail());
    }
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

PositivityOptions positivity_options(const Config& cfg) {
    PositivityOptions opts;
    if (const char* env = std::getenv("MOUTARD_MAX_DEPTH")) {
        try {
            opts.max_depth = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "MOUTARD_MAX_DEPTH must be a nonnegative integer");
        }
    }
    if (cfg.max_depth) opts.max_depth = *cfg.max_depth;
    return opts;
}

std::vector<BigRational> parse_bounds(const std::string& text) {
    std::vector<BigRational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.size() != 4 || out[0] >= out[1] || out[2] >= out[3])
        throw Error(ErrorKind::InvalidArgument, "--bounds expects xmin,xmax,ymin,ymax with min < max");
    return out;
}

int cmd_example(const Config& cfg) {
    SearchOptions opts;
    opts.positivity = positivity_options(cfg);
    ExampleReport rep = run_example(cfg.example_id, opts);
    Output out(cfg.out_file);
    out.stream() << to_json(rep).dump() << "\n";
    return kOk;
}

int cmd_transform(const Config& cfg) {
    SeedPair seeds = seed_pair_from_json(read_json(cfg.seeds_file));
    BigRational c = parse_rational(cfg.c_value);
    DoubleMoutardResult r = double_transform(seeds, c);
    bool verified = verify_lemma(seeds, c);
    Output out(cfg.out_file);
    out.stream() << to_json(r, verified).dump() << "\n";
    return verified ? kOk : kFalse;
}

int cmd_verify(const Config& cfg) {
    RationalFn u = rational_fn_from_json(read_json(cfg.u_file));
    RationalFn psi = rational_fn_from_json(read_json(cfg.psi_file));
    bool ok = verify_solution(u, psi);
    Json j;
    j["verified"] = ok;
    if (cfg.grid > 0) {
        auto b = parse_bounds(cfg.bounds);
        if (b[0] != b[2] || b[1] != b[3]) throw Error(ErrorKind::InvalidArgument, "residual grid needs square bounds");
        auto grid = uniform_grid(b[0], b[1], cfg.grid);
        j["numeric_residual"] = numeric_residual(u, psi, grid, parse_rational(cfg.h_value));
    }
    Output out(cfg.out_file);
    out.stream() << j.dump() << "\n";
    return ok ? kOk : kFalse;
}

int cmd_positivity(const Config& cfg) {
    BivariatePoly w = poly_from_json(read_json(cfg.w_file));
    PositivityOutcome o = global_positivity(w, positivity_options(cfg));
    Output out(cfg.out_file);
    out.stream() << to_json(o).dump() << "\n";
    switch (o.status) {
        case PositivityStatus::Certified: return kOk;
        case PositivityStatus::Inconclusive: return kInconclusive;
        default: return kFalse;
    }
}

int cmd_sample(const Config& cfg) {
    if (cfg.resolution < 2) throw Error(ErrorKind::InvalidArgument, "--resolution must be at least 2");
    RationalFn f = rational_fn_from_json(read_json(cfg.function_file));
    auto b = parse_bounds(cfg.bounds);
    Output out(cfg.out_file);
    auto& os = out.stream();
    const unsigned n = cfg.resolution;
    const BigRational dx = (b[1] - b[0]) / (n - 1), dy = (b[3] - b[2]) / (n - 1);
    std::size_t poles = 0;
    for (unsigned a = 0; a < n; ++a) {
        const BigRational x = b[0] + dx * a;
        for (unsigned c = 0; c < n; ++c) {
            const BigRational y = b[2] + dy * c;
            BigRational den = evaluate(f.den, x, y);
            os << to_decimal(x) << "," << to_decimal(y) << ",";
            if (den == 0) {
                os << "nan\n";
                ++poles;
            } else {
                os << to_decimal(evaluate(f.num, x, y) / den) << "\n";
            }
        }
    }
    if (poles > 0) std::cerr << "warning: " << poles << " grid point(s) hit a pole\n";
    return kOk;
}

int cmd_search(const Config& cfg) {
    SearchOptions opts;
    opts.coefficient_bound = cfg.coefficient_bound;
    opts.positivity = positivity_options(cfg);
    auto records = sweep(cfg.degree, cfg.seed, cfg.trials, opts);
    Output out(cfg.out_file);
    for (const auto& r : records) out.stream() << to_json(r).dump() << "\n";
    return kOk;
}

int cmd_darboux1d(const Config& cfg) {
    auto chain = rational_chain(cfg.chain_length);
    Json j = Json::array();
    for (const auto& u : chain) j.push_back(to_json(u));
    Output out(cfg.out_file);
    out.stream() << j.dump() << "\n";
    return kOk;
}

void require_writable(const std::string& path) {
    if (path.empty()) return;
    auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent))
        throw Error(ErrorKind::InvalidArgument, "output directory does not exist: " + parent.string());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact double Moutard construction of 2D Schrodinger operators with L2 zero modes"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Config cfg;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_file, "Write output to this file"); };
    auto add_depth = [&](CLI::App* sub) {
        sub->add_option("--max-depth", cfg.max_depth, "Branch-and-bound depth limit (default 40, env MOUTARD_MAX_DEPTH)");
    };

    auto* example = app.add_subcommand("example", "Reproduce a reference example (1 or 2)");
    example->add_option("id", cfg.example_id, "Example number")->required()->check(CLI::Range(1, 2));
    add_out(example);
    add_depth(example);

    auto* transform = app.add_subcommand("transform", "Double Moutard transform of a seed pair");
    transform->add_option("--seeds", cfg.seeds_file, "JSON {u0?, omega1, omega2}")->required()->check(CLI::ExistingFile);
    transform->add_option("--C", cfg.c_value, "Free constant (rational)");
    add_out(transform);

    auto* verify = app.add_subcommand("verify", "Check (-Δ + u)ψ = 0 exactly, optionally with a finite-difference residual");
    verify->add_option("--u", cfg.u_file, "Potential JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--psi", cfg.psi_file, "Solution JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--grid", cfg.grid, "Points per side of the residual grid (0 = skip)");
    verify->add_option("--h", cfg.h_value, "Stencil step (rational)");
    verify->add_option("--bounds", cfg.bounds, "Grid bounds xmin,xmax,ymin,ymax");
    add_out(verify);

    auto* positivity = app.add_subcommand("positivity", "Certify W > 0 on the plane");
    positivity->add_option("--W", cfg.w_file, "Polynomial JSON")->required()->check(CLI::ExistingFile);
    add_depth(positivity);
    add_out(positivity);

    auto* sample = app.add_subcommand("sample", "Sample a rational function on a grid as CSV");
    sample->add_option("--function", cfg.function_file, "Rational function JSON")->required()->check(CLI::ExistingFile);
    sample->add_option("--bounds", cfg.bounds, "xmin,xmax,ymin,ymax");
    sample->add_option("--resolution", cfg.resolution, "Points per side");
    add_out(sample);

    auto* search = app.add_subcommand("search", "Random sweep over harmonic seed pairs");
    search->add_option("--degree", cfg.degree, "Seed degree (>= 2)")->check(CLI::Range(2u, 12u));
    search->add_option("--trials", cfg.trials, "Number of trials");
    search->add_option("--seed", cfg.seed, "RNG seed");
    search->add_option("--bound", cfg.coefficient_bound, "Coefficient bound")->check(CLI::Range(1u, 1000000u));
    add_depth(search);
    add_out(search);

    auto* darboux = app.add_subcommand("darboux1d", "Chain of 1D rational potentials n(n+1)/x^2");
    darboux->add_option("--n", cfg.chain_length, "Chain length")->check(CLI::Range(1u, 1000u));
    add_out(darboux);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        require_writable(cfg.out_file);
        if (*example) return cmd_example(cfg);
        if (*transform) return cmd_transform(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*positivity) return cmd_positivity(cfg);
        if (*sample) return cmd_sample(cfg);
        if (*search) return cmd_search(cfg);
        if (*darboux) return cmd_darboux1d(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Inconclusive: return kInconclusive;
            case ErrorKind::AssertionFailed: return kFalse;
            default: return kUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
