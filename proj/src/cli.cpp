#include "qsp/cli.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qsp/io.hpp"
#include "qsp/prepare.hpp"

namespace qsp::cli {

namespace {

RawMatrix load_input(const RunManifest& manifest) {
    if (manifest.input_format == "csv") return load_matrix_csv(manifest.input_path);
    if (manifest.input_format == "json") return load_matrix_json(manifest.input_path);
    throw ParseError("unknown input format: " + manifest.input_format);
}

PrepConfig config_for(const RunManifest& manifest) {
    if (manifest.mode == "exact") return PrepConfig::exact();
    if (manifest.mode == "fixed")
        return PrepConfig::fixed(FixedFormat{manifest.int_bits, manifest.frac_bits});
    throw ParseError("unknown mode: " + manifest.mode);
}

int run_encode(const RunManifest& manifest, bool with_trace) {
    const RawMatrix raw = load_input(manifest);
    const Matrix m = pad_matrix(raw.data, raw.rows, raw.cols);

    PrepConfig cfg = config_for(manifest);
    cfg.trace = with_trace;
    const PrepResult result = prepare_state(m, cfg);

    if (!manifest.out_path.empty()) write_amplitudes_json(manifest.out_path, result);
    if (!manifest.cost_out_path.empty())
        write_cost_json(manifest.cost_out_path, cost_report(result));
    if (with_trace) {
        const std::string trace_path =
            manifest.out_path.empty() ? "trace.json" : manifest.out_path + ".trace.json";
        write_trace_json(trace_path, result);
    }

    if (manifest.verify) {
        const VerificationReport rep = verify_state(result, m, manifest.tol);
        if (!rep.passed) {
            std::cerr << "verification failed: max error " << format_double(rep.max_abs_error)
                      << " at (" << rep.worst_i << "," << rep.worst_j << "), "
                      << rep.sign_mismatches << " sign mismatches, tol "
                      << format_double(manifest.tol) << "\n";
            return 2;
        }
    }
    return 0;
}

std::vector<double> random_entries(std::mt19937_64& rng, std::size_t count) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> data(count);
    bool nonzero = false;
    while (!nonzero) {
        for (double& v : data) {
            v = dist(rng);
            if (v != 0.0) nonzero = true;
        }
    }
    return data;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t K) {
    const std::size_t k = log2_exact(K);
    const std::size_t rows = std::size_t{1} << (k / 2);
    const std::size_t cols = K / rows;
    return pad_matrix(random_entries(rng, K), rows, cols);
}

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Least-squares fit of y = a*x^2 + b*x + c via the 3x3 normal equations.
std::array<double, 3> quadratic_fit(const std::vector<double>& xs,
                                    const std::vector<double>& ys) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, t0 = 0, t1 = 0, t2 = 0;
    for (std::size_t n = 0; n < xs.size(); ++n) {
        const double x = xs[n], y = ys[n];
        const double x2 = x * x;
        s0 += 1;
        s1 += x;
        s2 += x2;
        s3 += x2 * x;
        s4 += x2 * x2;
        t0 += y;
        t1 += x * y;
        t2 += x2 * y;
    }
    double aug[3][4] = {{s4, s3, s2, t2}, {s3, s2, s1, t1}, {s2, s1, s0, t0}};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(aug[row][col]) > std::abs(aug[pivot][col])) pivot = row;
        std::swap(aug[col], aug[pivot]);
        for (int row = 0; row < 3; ++row) {
            if (row == col) continue;
            const double f = aug[row][col] / aug[col][col];
            for (int c = col; c < 4; ++c) aug[row][c] -= f * aug[col][c];
        }
    }
    return {aug[0][3] / aug[0][0], aug[1][3] / aug[1][1], aug[2][3] / aug[2][2]};
}

Criterion suite_correctness(std::uint64_t seed, const std::vector<std::size_t>& sizes) {
    Criterion c;
    c.name = "exact_mode_matches_direct_normalization";
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (std::size_t K : sizes) {
        for (int rep = 0; rep < 5; ++rep) {
            const Matrix m = random_matrix(rng, K);
            const PrepResult result = prepare_state(m, PrepConfig::exact());
            const VerificationReport v = verify_state(result, m, 1e-9);
            worst = std::max(worst, v.max_abs_error);
            if (!v.passed) {
                c.detail = "K=" + std::to_string(K) + " max error " +
                           format_double(v.max_abs_error);
                return c;
            }
        }
    }
    c.pass = true;
    c.detail = "max error " + format_double(worst);
    return c;
}

Criterion suite_cost_model(std::uint64_t seed, const std::vector<std::size_t>& sizes) {
    Criterion c;
    c.name = "cost_matches_closed_form_and_quadratic_fit";
    std::mt19937_64 rng(seed + 1);
    std::vector<double> ks, totals;
    for (std::size_t K : sizes) {
        const Matrix m = random_matrix(rng, K);
        const CostReport rep = cost_report(prepare_state(m, PrepConfig::exact()));
        if (!rep.matches_formula) {
            c.detail = "closed-form mismatch at K=" + std::to_string(K);
            return c;
        }
        ks.push_back(static_cast<double>(rep.depth));
        totals.push_back(static_cast<double>(rep.total_units));
    }
    const auto [a, b, c0] = quadratic_fit(ks, totals);
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n < ks.size(); ++n) {
        const double fit = a * ks[n] * ks[n] + b * ks[n] + c0;
        num += (fit - totals[n]) * (fit - totals[n]);
        den += totals[n] * totals[n];
    }
    const double residual = std::sqrt(num / den);
    c.pass = residual < 0.01 && a > 0.0;
    c.detail = "fit a=" + format_double(a) + " residual=" + format_double(residual);
    return c;
}

Criterion suite_precision_sweep(std::uint64_t seed) {
    Criterion c;
    c.name = "fixed_point_error_decreases_with_precision";
    std::mt19937_64 rng(seed + 2);
    std::vector<Matrix> matrices;
    for (int rep = 0; rep < 5; ++rep) matrices.push_back(random_matrix(rng, 64));

    std::vector<PrepResult> exact;
    for (const Matrix& m : matrices) exact.push_back(prepare_state(m, PrepConfig::exact()));

    const std::array<unsigned, 3> fracs = {8, 16, 24};
    std::array<double, 3> devs{};
    for (std::size_t f = 0; f < fracs.size(); ++f) {
        double dev = 0.0;
        for (std::size_t n = 0; n < matrices.size(); ++n) {
            const PrepResult fixed =
                prepare_state(matrices[n], PrepConfig::fixed(FixedFormat{16, fracs[f]}));
            for (std::size_t z = 0; z < fixed.amplitudes.size(); ++z)
                dev = std::max(dev, std::abs(fixed.amplitudes[z] - exact[n].amplitudes[z]));
        }
        devs[f] = dev;
    }
    c.pass = devs[0] > devs[1] && devs[1] > devs[2] && devs[2] <= 1e-5;
    c.detail = "max deviations " + format_double(devs[0]) + " > " + format_double(devs[1]) +
               " > " + format_double(devs[2]);
    return c;
}

void write_suite_summary(const std::string& path, std::uint64_t seed,
                         const std::vector<Criterion>& criteria) {
    std::ostringstream out;
    out << "{\n  \"seed\": " << seed << ",\n  \"criteria\": [\n";
    bool all = true;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        const Criterion& c = criteria[n];
        all = all && c.pass;
        out << "    {\"name\": \"" << c.name << "\", \"pass\": " << (c.pass ? "true" : "false")
            << ", \"detail\": \"" << c.detail << "\"}" << (n + 1 < criteria.size() ? "," : "")
            << "\n";
    }
    out << "  ],\n  \"pass\": " << (all ? "true" : "false") << "\n}\n";
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ParseError("cannot write " + path);
    f << out.str();
}

}  // namespace

int run_prepare(const RunManifest& manifest) {
    try {
        return run_encode(manifest, false);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_trace(const RunManifest& manifest) {
    try {
        return run_encode(manifest, true);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_suite(const RunManifest& manifest) {
    try {
        std::vector<std::size_t> sizes = manifest.sizes;
        if (sizes.empty()) sizes = {4, 8, 16, 32, 64, 128, 256, 512, 1024};
        if (sizes.size() < 3)
            throw std::invalid_argument("suite: need at least 3 sizes for the cost regression");
        for (std::size_t K : sizes)
            if (!is_pow2(K) || K < 2)
                throw std::invalid_argument("suite: sizes must be powers of two >= 2");

        std::vector<Criterion> criteria;
        criteria.push_back(suite_correctness(manifest.seed, sizes));
        criteria.push_back(suite_cost_model(manifest.seed, sizes));
        criteria.push_back(suite_precision_sweep(manifest.seed));

        bool all = true;
        for (const Criterion& c : criteria) {
            all = all && c.pass;
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        }
        if (!manifest.out_path.empty())
            write_suite_summary(manifest.out_path, manifest.seed, criteria);
        return all ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_manifest(const RunManifest& manifest) {
    if (manifest.command == "prepare") return run_prepare(manifest);
    if (manifest.command == "trace") return run_trace(manifest);
    if (manifest.command == "suite") return run_suite(manifest);
    std::cerr << "error: unknown command: " << manifest.command << "\n";
    return 1;
}

}  // namespace qsp::cli
