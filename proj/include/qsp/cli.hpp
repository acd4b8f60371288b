#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsp::cli {

/// Everything one run needs; filled from the command line by the tool and
/// directly by tests. Identical manifests produce byte-identical outputs.
struct RunManifest {
    std::string command;  // prepare | trace | suite
    std::string input_path;
    std::string input_format = "csv";  // csv | json
    std::string mode = "exact";        // exact | fixed
    unsigned int_bits = 16;
    unsigned frac_bits = 16;
    std::string out_path;
    std::string cost_out_path;
    bool verify = false;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::vector<std::size_t> sizes;  // suite: matrix sizes K (powers of two)
};

/// Exit codes: 0 success, 1 parse/configuration/overflow error,
/// 2 verification or suite-criterion failure.
int run_prepare(const RunManifest& manifest);

/// As run_prepare, additionally writing per-level dumps to
/// "<out>.trace.json" (or "trace.json" when no --out is given).
int run_trace(const RunManifest& manifest);

/// Seeded self-check battery: exact-mode correctness against direct
/// normalization, cost-model regression over the requested sizes, and a
/// fixed-point precision sweep. Writes a summary JSON when --out is given.
int run_suite(const RunManifest& manifest);

int run_manifest(const RunManifest& manifest);

}  // namespace qsp::cli
