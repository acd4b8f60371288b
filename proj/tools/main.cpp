#include <CLI11.hpp>

#include "qsp/cli.hpp"

namespace {

void add_common_options(CLI::App* cmd, qsp::cli::RunManifest& manifest) {
    cmd->add_option("--input", manifest.input_path, "Input matrix file")->required();
    cmd->add_option("--format", manifest.input_format, "Input format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--mode", manifest.mode, "Simulation mode: exact or fixed")
        ->check(CLI::IsMember({"exact", "fixed"}));
    cmd->add_option("--int-bits", manifest.int_bits, "Fixed-point integer bits");
    cmd->add_option("--frac-bits", manifest.frac_bits, "Fixed-point fractional bits");
    cmd->add_option("--out", manifest.out_path, "Amplitudes output path (JSON)");
    cmd->add_option("--cost-out", manifest.cost_out_path, "Cost report output path (JSON)");
    cmd->add_flag("--verify", manifest.verify, "Check output against direct normalization");
    cmd->add_option("--tol", manifest.tol, "Verification tolerance");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Amplitude-encoding simulator backed by a bucket-brigade quantum memory"};
    app.require_subcommand(1);

    qsp::cli::RunManifest manifest;

    CLI::App* prepare = app.add_subcommand("prepare", "Encode a matrix and write the amplitudes");
    add_common_options(prepare, manifest);

    CLI::App* trace = app.add_subcommand("trace", "Encode a matrix with per-level state dumps");
    add_common_options(trace, manifest);

    CLI::App* suite = app.add_subcommand("suite", "Run the seeded self-check battery");
    suite->add_option("--seed", manifest.seed, "Random seed")->required();
    suite->add_option("--sizes", manifest.sizes, "Matrix sizes K (powers of two)")
        ->delimiter(',');
    suite->add_option("--out", manifest.out_path, "Summary output path (JSON)");

    CLI11_PARSE(app, argc, argv);

    if (prepare->parsed()) manifest.command = "prepare";
    if (trace->parsed()) manifest.command = "trace";
    if (suite->parsed()) manifest.command = "suite";
    return qsp::cli::run_manifest(manifest);
}
