#include "a1deg/cli.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

struct CommonOpts {
    std::string field = "Q";
    bool json = false;
    std::string out;
    std::uint64_t seed = a1deg::cli::kDefaultSeed;
};

void add_common(CLI::App* cmd, CommonOpts& opts)
{
    cmd->add_option("--field", opts.field, "Base field: Q or Fp:<prime>")
        ->capture_default_str();
    cmd->add_flag("--json", opts.json, "Emit the result document as JSON");
    cmd->add_option("--out", opts.out, "Also write the JSON document to a file");
    cmd->add_option("--seed", opts.seed, "Seed for randomized suites")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Unstable degrees of pointed rational maps: Bezoutians, "
                 "local Newton matrices, duplicants, and naive sums"};
    app.require_subcommand(1);

    CommonOpts opts;
    a1deg::cli::Request req;

    auto* degree = app.add_subcommand(
        "degree", "Bezoutian and unstable degree of a map f/g");
    degree->add_option("expression", req.inputs, "Pointed map, e.g. \"(x^2-1)/x\"")
        ->required();
    add_common(degree, opts);

    auto* local = app.add_subcommand(
        "local", "Local degree at a rational root of the numerator");
    local->add_option("expression", req.inputs)->required();
    local->add_option("--at", req.at, "Root to localize at")->required();
    add_common(local, opts);

    auto* duplicant = app.add_subcommand(
        "duplicant", "Coefficient matrix and duplicant of a split polynomial");
    duplicant
        ->add_option("--roots", req.roots, "Distinct roots \"r:e,r:e,...\"")
        ->required();
    duplicant->add_option("--lc", req.lc, "Leading coefficient")
        ->capture_default_str();
    add_common(duplicant, opts);

    auto* dsum = app.add_subcommand(
        "dsum", "Algebraic D-sum of degrees attached at distinct points");
    dsum->add_option("entries", req.inputs, "Entries \"point=expression\"")
        ->required();
    add_common(dsum, opts);

    auto* nsum = app.add_subcommand("nsum", "Naive sum of two or more maps");
    nsum->add_option("expressions", req.inputs)->required()->expected(2, -1);
    add_common(nsum, opts);

    auto* verify = app.add_subcommand(
        "verify-ltg",
        "Check the local-to-global identity on one map or a random suite");
    verify->add_option("expression", req.inputs);
    verify->add_option("--random", req.random_count,
                       "Number of random split maps to verify");
    add_common(verify, opts);

    auto* selftest = app.add_subcommand(
        "selftest", "Built-in worked examples (optional topic: duplicant)");
    selftest->add_option("topic", req.inputs);
    add_common(selftest, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (degree->parsed())
        req.command = a1deg::cli::Command::degree;
    else if (local->parsed())
        req.command = a1deg::cli::Command::local;
    else if (duplicant->parsed())
        req.command = a1deg::cli::Command::duplicant;
    else if (dsum->parsed())
        req.command = a1deg::cli::Command::dsum;
    else if (nsum->parsed())
        req.command = a1deg::cli::Command::nsum;
    else if (verify->parsed())
        req.command = a1deg::cli::Command::verify_ltg;
    else
        req.command = a1deg::cli::Command::selftest;

    req.seed = opts.seed;
    try {
        req.field = a1deg::cli::parse_field_spec(opts.field);
    } catch (const a1deg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const a1deg::cli::RunResult res = a1deg::cli::run(req);
    const double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();

    if (opts.json)
        std::cout << res.document.dump(2) << "\n";
    else if (res.exit_code == 2)
        std::cerr << res.text;
    else
        std::cout << res.text;

    if (!opts.out.empty()) {
        std::ofstream f(opts.out);
        if (!f) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return 2;
        }
        f << res.document.dump(2) << "\n";
    }

    // Timing stays on stderr so documents for a fixed (command, seed) pair
    // are byte-identical.
    std::cerr << "elapsed: " << ms << " ms\n";
    return res.exit_code;
}
