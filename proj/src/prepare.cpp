#include "qsp/prepare.hpp"

#include <cmath>
#include <string>

#include "qsp/layout.hpp"

namespace qsp {

namespace {

StepCounters counters_delta(const StepCounters& after, const StepCounters& before) {
    StepCounters d;
    d.routing_steps = after.routing_steps - before.routing_steps;
    d.bus_steps = after.bus_steps - before.bus_steps;
    d.copy_ops = after.copy_ops - before.copy_ops;
    d.uncompute_steps = after.uncompute_steps - before.uncompute_steps;
    d.queries = after.queries - before.queries;
    d.writes = after.writes - before.writes;
    return d;
}

IterationDump dump_state(const SparseState& state, const ValueCodec& codec, std::size_t h) {
    IterationDump dump;
    dump.h = h;
    for (const auto& [label, amp] : state) {
        StateRecord rec;
        rec.s = label.s;
        rec.l_decoded = codec.decode(label.l);
        rec.r_decoded = codec.decode(label.r);
        rec.v = label.v;
        rec.a = label.a;
        rec.amp_real = amp.real();
        rec.amp_imag = amp.imag();
        dump.records.push_back(rec);
    }
    return dump;
}

}  // namespace

PrepConfig PrepConfig::exact() { return PrepConfig{ValueCodec::exact(), 0.0, false}; }

PrepConfig PrepConfig::fixed(FixedFormat fmt) {
    PrepConfig cfg;
    cfg.codec = ValueCodec::fixed(fmt);
    cfg.prune_threshold = std::ldexp(1.0, -static_cast<int>(fmt.frac_bits) - 8);
    return cfg;
}

PrepResult prepare_state(const Matrix& m, const PrepConfig& cfg) {
    if (m.size() < 2)
        throw std::invalid_argument("prepare_state: need at least 2 entries (one address qubit)");

    const SegmentTree tree(m);
    const std::size_t k = tree.depth();
    const std::size_t K = tree.leaf_count();

    QramTree qram(k);
    const auto cells = pack_cells(tree, cfg.codec);
    for (std::size_t z = 0; z < K; ++z) qram.write_cell(z, cells[z]);
    const StepCounters init_snapshot = qram.counters();

    PrepResult res;
    res.rows = m.rows();
    res.cols = m.cols();
    res.depth = k;
    res.frobenius = std::sqrt(tree.root());
    res.init_counters = init_snapshot;

    SparseState state = SparseState::ground(cfg.codec.word_bits(), k);
    state = flip_address_bit(std::move(state), 0);
    ++res.gates.address_init;

    for (std::size_t h = 1; h <= k; ++h) {
        state = retrieve_siblings(std::move(state), qram, h);
        state = apply_branch_split(std::move(state), cfg.codec, cfg.prune_threshold);
        ++res.gates.splits;
        if (cfg.trace) res.trace.push_back(dump_state(state, cfg.codec, h));
        state = clear_value_registers(std::move(state), qram, h);
        state = circular_shift_left(std::move(state));
        ++res.gates.shifts;
    }

    state = retrieve_signs(std::move(state), qram);
    state = apply_sign_phase(std::move(state));
    ++res.gates.phase;
    state = clear_sign_register(std::move(state), qram);

    for (const auto& [label, amp] : state) {
        if (label.s != 0 || label.l != 0 || label.r != 0 || label.v != 1)
            throw DisentanglementError(
                "prepare_state: working registers not uniform at address " +
                std::to_string(label.a));
    }
    state = flip_branch_bit(std::move(state));
    ++res.gates.branch_clear;

    res.amplitudes.assign(K, 0.0);
    for (const auto& [label, amp] : state) res.amplitudes[label.a] = amp.real();

    res.prep_counters = counters_delta(qram.counters(), init_snapshot);
    return res;
}

VerificationReport verify_state(const PrepResult& result, const Matrix& m, double tol) {
    if (result.rows != m.rows() || result.cols != m.cols())
        throw DimMismatchError("verify_state: result is " + std::to_string(result.rows) + "x" +
                               std::to_string(result.cols) + ", matrix is " +
                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()));

    const double norm = std::sqrt(m.sum_of_squares());
    VerificationReport rep;
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double entry = m(i, j);
            const double actual = result.amplitude(i, j);
            const double expected = entry / norm;
            norm_sq += actual * actual;
            const double err = std::abs(actual - expected);
            if (err > rep.max_abs_error) {
                rep.max_abs_error = err;
                rep.worst_i = i;
                rep.worst_j = j;
            }
            if ((entry > 0.0 && actual < 0.0) || (entry < 0.0 && actual > 0.0))
                ++rep.sign_mismatches;
        }
    }
    rep.norm_deviation = std::abs(norm_sq - 1.0);
    rep.passed = rep.max_abs_error <= tol && rep.sign_mismatches == 0;
    return rep;
}

CostReport cost_report(const PrepResult& result) {
    const std::uint64_t k = result.depth;
    const std::uint64_t K = std::uint64_t{1} << k;

    CostReport rep;
    rep.depth = result.depth;
    rep.cells = K;
    rep.prep = result.prep_counters;
    rep.qram_units = result.prep_counters.total_units();
    rep.gate_units = result.gates.total_units();
    rep.total_units = rep.qram_units + rep.gate_units;

    rep.expected_queries = 2 * k + 2;
    rep.expected_qram_units = (2 * k + 2) * (4 * k + 2);
    rep.expected_gate_units = 2 * k + 3;
    rep.expected_total_units = rep.expected_qram_units + rep.expected_gate_units;

    rep.init_writes = result.init_counters.writes;
    rep.init_units = result.init_counters.total_units();
    rep.expected_init_units = K * (4 * k + 1);

    rep.matches_formula = rep.prep.queries == rep.expected_queries &&
                          rep.qram_units == rep.expected_qram_units &&
                          rep.gate_units == rep.expected_gate_units &&
                          rep.init_units == rep.expected_init_units &&
                          rep.init_writes == K;
    return rep;
}

}  // namespace qsp
