#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsp/matrix.hpp"
#include "qsp/prepare.hpp"

namespace qsp {

/// Matrix data as read from disk, before padding.
struct RawMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // row-major
};

/// CSV: one matrix row per line, comma-separated decimal literals, no
/// header. Every row must have the same number of fields.
RawMatrix load_matrix_csv(const std::string& path);

/// JSON: {"rows": M, "cols": N, "data": [[...], ...]}.
RawMatrix load_matrix_json(const std::string& path);

/// Format a double with 17 significant digits (round-trip safe).
std::string format_double(double x);

/// {"frobenius": f, "k": k, "amplitudes": [{"i":..,"j":..,"value":..}, ...]}
/// with amplitude records sorted by (i, j).
void write_amplitudes_json(const std::string& path, const PrepResult& result);

/// Step counters of the preparation loop and the initialization phase,
/// plus the closed-form expectation and the measured deviation.
void write_cost_json(const std::string& path, const CostReport& report);

/// Per-level intermediate dumps plus the final amplitudes.
void write_trace_json(const std::string& path, const PrepResult& result);

}  // namespace qsp
