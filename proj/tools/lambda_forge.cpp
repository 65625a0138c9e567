#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lambdaforge/jobs.hpp"

int main(int argc, char** argv) {
    CLI::App app{"constructs, certifies, and undoes symmetry-preserving perturbations "
                 "of L-functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", lforge::kToolVersion);

    std::string config_path;
    std::string out_dir;
    int threads = 0;
    std::uint64_t seed = 0;
    bool strict = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "job description file")->required();
        sub->add_option("--out", out_dir, "directory receiving report.txt and data files");
        sub->add_option("--threads", threads,
                        "worker threads; 0 reads LAMBDA_FORGE_THREADS, else 1");
        sub->add_option("--seed", seed, "override the seed of randomized checks");
        sub->add_flag("--strict", strict, "insist on a nonempty off-axis planted set");
    };
    add_common(app.add_subcommand(
        "verify", "check functional equation and reflection symmetry on a grid"));
    add_common(app.add_subcommand(
        "perturb", "plant off-axis zeros through a certified multiplier"));
    add_common(app.add_subcommand(
        "restore", "remove the planted zeros and certify the repaired function"));
    add_common(app.add_subcommand(
        "decompose", "factor the perturbed function into symmetric and repaired parts"));
    add_common(app.add_subcommand(
        "path", "track planted zeros along the homotopy between base and perturbed"));
    add_common(app.add_subcommand(
        "scan", "locate critical-axis zeros by sign changes of the rotated completion"));
    add_common(app.add_subcommand(
        "weil", "check functional symmetry and root moduli of curve numerators"));
    add_common(app.add_subcommand(
        "fit", "approximate a target by a Dirichlet polynomial on admissible rectangles"));
    add_common(app.add_subcommand(
        "grid", "emit modulus and argument of a function over a rectangle as CSV"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        lforge::Config cfg = lforge::load_config(config_path);
        lforge::JobOptions options;
        options.out_dir = out_dir;
        options.threads = threads;
        options.strict = strict;
        if (sub->count("--seed") > 0) options.seed = seed;
        lforge::JobResult result = lforge::run_job(sub->get_name(), cfg, options);
        return result.pass ? 0 : 1;
    } catch (const lforge::error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == lforge::errc::config ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
