#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsp/matrix.hpp"
#include "qsp/ops.hpp"
#include "qsp/qram.hpp"
#include "qsp/segment_tree.hpp"

namespace qsp {

struct PrepConfig {
    ValueCodec codec = ValueCodec::exact();
    /// Components with |amplitude| strictly below this are dropped after
    /// every branch split (exact zeros are always dropped).
    double prune_threshold = 0.0;
    bool trace = false;

    static PrepConfig exact();
    /// Fixed-point configuration; the default prune threshold is
    /// 2^-(frac_bits + 8).
    static PrepConfig fixed(FixedFormat fmt);
};

/// One component of a traced intermediate state, with the value registers
/// decoded back to reals.
struct StateRecord {
    std::uint8_t s = 0;
    double l_decoded = 0.0;
    double r_decoded = 0.0;
    std::uint8_t v = 0;
    std::uint64_t a = 0;
    double amp_real = 0.0;
    double amp_imag = 0.0;
};

/// State snapshot taken right after the branch split of one loop level,
/// while the value registers are still loaded. Records are address-sorted.
struct IterationDump {
    std::size_t h = 0;
    std::vector<StateRecord> records;
};

/// Non-memory gate applications, one unit each: the initial address flip,
/// one branch split and one circular shift per level, the sign phase gate
/// and the final branch-qubit flip. Totals 2k + 3 for a depth-k run.
struct GateCounters {
    std::uint64_t address_init = 0;
    std::uint64_t splits = 0;
    std::uint64_t shifts = 0;
    std::uint64_t phase = 0;
    std::uint64_t branch_clear = 0;

    std::uint64_t total_units() const {
        return address_init + splits + shifts + phase + branch_clear;
    }
};

struct PrepResult {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t depth = 0;  // k = log2(rows * cols)
    /// sqrt of the tree root, the norm the pipeline itself produced.
    double frobenius = 0.0;
    /// Signed real output amplitudes, row-major over the padded dims.
    std::vector<double> amplitudes;
    /// Memory-query accounting of the preparation loop only.
    StepCounters prep_counters;
    /// Cell-initialization accounting (writes), reported separately.
    StepCounters init_counters;
    GateCounters gates;
    std::vector<IterationDump> trace;

    double amplitude(std::size_t i, std::size_t j) const { return amplitudes[i * cols + j]; }
};

/// Run the full preparation pipeline on a padded matrix: build the tree,
/// write all cells, then walk the levels retrieving sibling pairs, splitting
/// the branch qubit and folding it into the address, and finish with the
/// sign-phase pass. Requires at least 2 entries. Throws DisentanglementError
/// if the working registers are not uniform at the end, OverflowError if a
/// tree value does not fit the fixed-point format.
PrepResult prepare_state(const Matrix& m, const PrepConfig& cfg);

struct VerificationReport {
    double max_abs_error = 0.0;
    double norm_deviation = 0.0;
    std::size_t sign_mismatches = 0;
    std::size_t worst_i = 0;
    std::size_t worst_j = 0;
    bool passed = false;
};

/// Compare result amplitudes against direct normalization of the matrix
/// (entry / sqrt of the summed squares, computed independently of the
/// pipeline). Passes when the max error is within tol and no signs differ.
VerificationReport verify_state(const PrepResult& result, const Matrix& m, double tol);

/// Cost accounting against the closed-form expectation. With depth k and
/// K cells, the preparation loop performs 2k + 2 queries (k sibling
/// retrievals, k value-register clears, one sign retrieval, one sign
/// clear) of 4k + 2 units each, plus 2k + 3 gate units, for a total of
/// (2k + 2)(4k + 2) + 2k + 3 = 8k^2 + 14k + 7 units. Initialization adds
/// K writes of 4k + 1 units each, reported separately.
struct CostReport {
    std::size_t depth = 0;
    std::size_t cells = 0;
    StepCounters prep;
    std::uint64_t qram_units = 0;
    std::uint64_t gate_units = 0;
    std::uint64_t total_units = 0;
    std::uint64_t expected_queries = 0;
    std::uint64_t expected_qram_units = 0;
    std::uint64_t expected_gate_units = 0;
    std::uint64_t expected_total_units = 0;
    std::uint64_t init_writes = 0;
    std::uint64_t init_units = 0;
    std::uint64_t expected_init_units = 0;
    bool matches_formula = false;
};

CostReport cost_report(const PrepResult& result);

}  // namespace qsp
