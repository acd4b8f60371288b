#include <doctest.h>

#include <cmath>
#include <complex>

#include "test_common.hpp"

#include "qsp/ops.hpp"
#include "qsp/segment_tree.hpp"

using namespace qsp;

namespace {

struct Fixture {
    SegmentTree tree;
    ValueCodec codec;
    QramTree qram;

    explicit Fixture(const ValueCodec& c)
        : tree(qsp::testing::sample_matrix()), codec(c), qram(tree.depth()) {
        const auto cells = pack_cells(tree, codec);
        for (std::size_t z = 0; z < cells.size(); ++z) qram.write_cell(z, cells[z]);
    }
};

SparseState state_with(unsigned value_bits, std::size_t k,
                       std::initializer_list<std::pair<BasisLabel, std::complex<double>>> comps) {
    SparseState st(value_bits, k);
    for (const auto& [label, amp] : comps) st.add(label, amp);
    return st;
}

}  // namespace

TEST_CASE("root retrieval copies the root word into l") {
    Fixture f(ValueCodec::exact());
    SparseState st = SparseState::ground(64, 3);

    st = retrieve_root(std::move(st), f.qram);
    REQUIRE(st.support_size() == 1);
    const BasisLabel& label = st.begin()->first;
    CHECK(f.codec.decode(label.l) == f.tree.root());
    CHECK(label.r == 0);
    CHECK(label.s == 0);
    CHECK(label.v == 0);
    CHECK(label.a == 0);
    CHECK(f.qram.counters().queries == 1);
    CHECK(f.qram.all_switches_wait());

    // XOR copy: the second application clears the register
    st = retrieve_root(std::move(st), f.qram);
    CHECK(st.begin()->first.l == 0);
}

TEST_CASE("root retrieval ignores the filler word") {
    Fixture f(ValueCodec::exact());
    SparseState a = retrieve_root(SparseState::ground(64, 3), f.qram);

    MemoryCell cell0 = f.qram.cell(0);
    cell0.word_right = 0x123456789ABCDEF0ull;
    f.qram.write_cell(0, cell0);
    SparseState b = retrieve_root(SparseState::ground(64, 3), f.qram);

    CHECK(a.begin()->first == b.begin()->first);
}

TEST_CASE("root retrieval preconditions") {
    Fixture f(ValueCodec::exact());

    SparseState wrong_addr = state_with(64, 3, {{BasisLabel{0, 0, 0, 0, 1}, 1.0}});
    CHECK_THROWS_AS(retrieve_root(std::move(wrong_addr), f.qram), PreconditionError);

    SparseState multi = state_with(
        64, 3, {{BasisLabel{0, 0, 0, 0, 0}, M_SQRT1_2}, {BasisLabel{0, 0, 0, 0, 1}, M_SQRT1_2}});
    CHECK_THROWS_AS(retrieve_root(std::move(multi), f.qram), PreconditionError);

    SparseState garbage = state_with(64, 3, {{BasisLabel{0, 12345, 0, 0, 0}, 1.0}});
    CHECK_THROWS_AS(retrieve_root(std::move(garbage), f.qram), PreconditionError);
}

TEST_CASE("sibling retrieval loads both words at level 1") {
    Fixture f(ValueCodec::exact());
    SparseState st = state_with(64, 3, {{BasisLabel{0, 0, 0, 0, 1}, 1.0}});
    st = retrieve_siblings(std::move(st), f.qram, 1);
    const BasisLabel& label = st.begin()->first;
    CHECK(f.codec.decode(label.l) == f.tree.node(1, 0));
    CHECK(f.codec.decode(label.r) == f.tree.node(1, 1));
    CHECK(st.begin()->second == std::complex<double>{1.0});
    CHECK(f.qram.all_switches_wait());
}

TEST_CASE("superposed sibling retrieval at level 2") {
    Fixture f(ValueCodec::exact());
    const std::complex<double> a2 = std::sqrt(24.89 / 32.48);
    const std::complex<double> a3 = std::sqrt(7.59 / 32.48);
    SparseState st = state_with(
        64, 3, {{BasisLabel{0, 0, 0, 0, 2}, a2}, {BasisLabel{0, 0, 0, 0, 3}, a3}});
    st = retrieve_siblings(std::move(st), f.qram, 2);

    for (const auto& [label, amp] : st) {
        if (label.a == 2) {
            CHECK(f.codec.decode(label.l) == f.tree.node(2, 0));
            CHECK(f.codec.decode(label.r) == f.tree.node(2, 1));
            CHECK(amp == a2);
        } else {
            REQUIRE(label.a == 3);
            CHECK(f.codec.decode(label.l) == f.tree.node(2, 2));
            CHECK(f.codec.decode(label.r) == f.tree.node(2, 3));
            CHECK(amp == a3);
        }
    }
}

TEST_CASE("level-k retrieval returns the leaf pairs of a random tree") {
    std::mt19937_64 rng(31);
    const Matrix m = qsp::testing::random_matrix(rng, 2, 4);
    const SegmentTree tree(m);
    const ValueCodec codec = ValueCodec::exact();
    QramTree qram(tree.depth());
    const auto cells = pack_cells(tree, codec);
    for (std::size_t z = 0; z < cells.size(); ++z) qram.write_cell(z, cells[z]);

    SparseState st(64, 3);
    for (std::uint64_t z = 4; z < 8; ++z) st.add(BasisLabel{0, 0, 0, 0, z}, 0.5);
    st = retrieve_siblings(std::move(st), qram, 3);

    for (const auto& [label, amp] : st) {
        const std::size_t d = cell_offset(label.a);
        CHECK(codec.decode(label.l) == tree.leaf(2 * d));
        CHECK(codec.decode(label.r) == tree.leaf(2 * d + 1));
    }
}

TEST_CASE("sibling retrieval rejects addresses outside the level") {
    Fixture f(ValueCodec::exact());
    SparseState st = state_with(64, 3, {{BasisLabel{0, 0, 0, 0, 1}, 1.0}});
    CHECK_THROWS_AS(retrieve_siblings(std::move(st), f.qram, 2), PreconditionError);

    SparseState st2 = state_with(64, 3, {{BasisLabel{0, 0, 0, 0, 2}, 1.0}});
    CHECK_THROWS_AS(retrieve_siblings(std::move(st2), f.qram, 4), PreconditionError);
}

TEST_CASE("sign retrieval marks exactly the negative entries") {
    Fixture f(ValueCodec::exact());
    SparseState st(64, 3);
    for (std::uint64_t z = 0; z < 8; ++z) st.add(BasisLabel{0, 0, 0, 1, z}, std::sqrt(0.125));

    st = retrieve_signs(std::move(st), f.qram);
    for (const auto& [label, amp] : st)
        CHECK(label.s == ((label.a == 2 || label.a == 7) ? 1 : 0));

    // self-inverse
    st = retrieve_signs(std::move(st), f.qram);
    for (const auto& [label, amp] : st) CHECK(label.s == 0);
}

TEST_CASE("all-positive matrices retrieve zero signs") {
    const Matrix m = pad_matrix({1.0, 2.0, 3.0, 4.0}, 2, 2);
    const SegmentTree tree(m);
    QramTree qram(tree.depth());
    const auto cells = pack_cells(tree, ValueCodec::exact());
    for (std::size_t z = 0; z < cells.size(); ++z) qram.write_cell(z, cells[z]);

    SparseState st(64, 2);
    for (std::uint64_t z = 0; z < 4; ++z) st.add(BasisLabel{0, 0, 0, 1, z}, 0.5);
    st = retrieve_signs(std::move(st), qram);
    for (const auto& [label, amp] : st) CHECK(label.s == 0);
}

TEST_CASE("exact branch split reproduces the level-1 weights") {
    const ValueCodec codec = ValueCodec::exact();
    SparseState st =
        state_with(64, 3, {{BasisLabel{0, codec.encode(24.89), codec.encode(7.59), 0, 1}, 1.0}});
    st = apply_branch_split(std::move(st), codec);

    REQUIRE(st.support_size() == 2);
    const double w0 = std::sqrt(24.89 / 32.48);
    const double w1 = std::sqrt(7.59 / 32.48);
    for (const auto& [label, amp] : st) {
        const double expect = label.v == 0 ? w0 : w1;
        CHECK(amp.real() == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("branch split corner cases") {
    const ValueCodec codec = ValueCodec::exact();

    SparseState both_zero = state_with(64, 3, {{BasisLabel{0, 0, 0, 0, 1}, 1.0}});
    both_zero = apply_branch_split(std::move(both_zero), codec);
    REQUIRE(both_zero.support_size() == 2);
    for (const auto& [label, amp] : both_zero)
        CHECK(amp.real() == doctest::Approx(M_SQRT1_2).epsilon(1e-15));

    SparseState left_only =
        state_with(64, 3, {{BasisLabel{0, codec.encode(5.0), 0, 0, 1}, 1.0}});
    left_only = apply_branch_split(std::move(left_only), codec);
    REQUIRE(left_only.support_size() == 1);  // zero-weight branch pruned
    CHECK(left_only.begin()->first.v == 0);
    CHECK(left_only.begin()->second.real() == 1.0);

    SparseState used = state_with(64, 3, {{BasisLabel{0, 0, 0, 1, 1}, 1.0}});
    CHECK_THROWS_AS(apply_branch_split(std::move(used), codec), PreconditionError);
}

TEST_CASE("fixed-mode split takes the equal-split path on zero words") {
    const ValueCodec codec = ValueCodec::fixed(FixedFormat{8, 16});
    SparseState st = state_with(24, 3, {{BasisLabel{0, 0, 0, 0, 1}, 1.0}});
    st = apply_branch_split(std::move(st), codec);
    REQUIRE(st.support_size() == 2);
    for (const auto& [label, amp] : st)
        CHECK(amp.real() == doctest::Approx(M_SQRT1_2).epsilon(1e-15));
}

TEST_CASE("split weights are unit-norm in both modes") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> vals(0.0, 100.0);
    const FixedFormat fmt{8, 16};
    for (int rep = 0; rep < 1000; ++rep) {
        const double a = vals(rng);
        const double b = vals(rng);
        const auto [e0, e1] = branch_weights_exact(a, b);
        CHECK(std::abs(e0 * e0 + e1 * e1 - 1.0) < 1e-12);

        const std::uint64_t aw = fp_encode(a, fmt);
        const std::uint64_t bw = fp_encode(b, fmt);
        if (aw == 0 && bw == 0) continue;
        const PipelineResult res = branch_angle_pipeline(aw, bw, fmt);
        CHECK(std::abs(res.w0 * res.w0 + res.w1 * res.w1 - 1.0) < 1e-12);
    }
}

TEST_CASE("an equal split pins the angle to a right angle") {
    const FixedFormat fmt{8, 16};
    const PipelineResult res =
        branch_angle_pipeline(fp_encode(3.0, fmt), fp_encode(3.0, fmt), fmt);
    CHECK(fp_decode(res.theta_word, fmt) == doctest::Approx(M_PI / 2).epsilon(1e-4));
    const double bound = std::ldexp(1.0, -16 + 2);
    CHECK(std::abs(res.w0 - M_SQRT1_2) <= bound);
    CHECK(std::abs(res.w1 - M_SQRT1_2) <= bound);
}

TEST_CASE("cascade weights equal the direct rotation on the quantized angle") {
    const FixedFormat fmt{4, 28};
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> angles(1e-6, 2.0 * M_PI);
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const std::uint64_t word = fp_encode(angles(rng), fmt);
        if (word == 0) continue;
        const auto [c0, c1] = cascade_rotation_weights(word, fmt);
        // oracle: single rotation by the decoded angle
        const double theta = fp_decode(word, fmt);
        worst = std::max(worst, std::abs(c0 - std::cos(theta / 2)));
        worst = std::max(worst, std::abs(c1 - std::sin(theta / 2)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("cascade of a near-pi angle rotates almost fully") {
    const FixedFormat fmt{8, 16};
    const std::uint64_t word = fp_encode(M_PI, fmt);
    const auto [w0, w1] = cascade_rotation_weights(word, fmt);
    CHECK(std::abs(w0) < 1e-4);
    CHECK(w1 == doctest::Approx(1.0).epsilon(1e-8));

    CHECK_THROWS_AS(cascade_rotation_weights(0, fmt), ZeroAngleError);
}

TEST_CASE("fixed-mode split tracks the exact weights") {
    const FixedFormat fmt{8, 16};
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> vals(0.0, 100.0);
    const double bound = std::ldexp(1.0, -13);
    double worst = 0.0;
    for (int rep = 0; rep < 500; ++rep) {
        const double a = vals(rng);
        const double b = vals(rng);
        const std::uint64_t aw = fp_encode(a, fmt);
        const std::uint64_t bw = fp_encode(b, fmt);
        if (aw == 0 && bw == 0) continue;
        const PipelineResult res = branch_angle_pipeline(aw, bw, fmt);
        const auto [e0, e1] = branch_weights_exact(a, b);
        worst = std::max({worst, std::abs(res.w0 - e0), std::abs(res.w1 - e1)});
    }
    CHECK(worst < bound);
}

TEST_CASE("pipeline overflow when the sum leaves the format") {
    const FixedFormat fmt{8, 8};
    const std::uint64_t big = fp_encode(200.0, fmt);
    CHECK_THROWS_AS(branch_angle_pipeline(big, big, fmt), OverflowError);
}

TEST_CASE("circular shift moves the branch bit into the address") {
    // v=1, a=001 -> v=0, a=011
    SparseState st = state_with(64, 3, {{BasisLabel{0, 0, 0, 1, 1}, 1.0}});
    st = circular_shift_left(std::move(st));
    CHECK(st.begin()->first.v == 0);
    CHECK(st.begin()->first.a == 3);

    // final level: v=x, a=1zz -> v=1, a=zzx
    SparseState last = state_with(64, 3, {{BasisLabel{0, 0, 0, 0, 0b110}, 1.0}});
    last = circular_shift_left(std::move(last));
    CHECK(last.begin()->first.v == 1);
    CHECK(last.begin()->first.a == 0b100);
}

TEST_CASE("shift chains undo and preserve amplitudes") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> amps(-1.0, 1.0);
    const std::size_t k = 4;
    SparseState st(64, k);
    for (std::uint64_t z = 0; z < 16; ++z)
        st.add(BasisLabel{0, 0, 0, static_cast<std::uint8_t>(z & 1), z}, amps(rng));
    const double norm_before = st.norm_sq();
    SparseState original = st;

    for (std::size_t n = 0; n < k; ++n) st = circular_shift_left(std::move(st));
    CHECK(st.norm_sq() == doctest::Approx(norm_before).epsilon(1e-15));
    for (std::size_t n = 0; n < k; ++n) st = circular_shift_right(std::move(st));

    CHECK(st.support_size() == original.support_size());
    for (const auto& [label, amp] : original) CHECK(st.amplitude(label) == amp);
}

TEST_CASE("sign phase negates exactly the s=1, v=1 components") {
    SparseState st = state_with(64, 3,
                                {{BasisLabel{1, 0, 0, 1, 2}, 0.5},
                                 {BasisLabel{1, 0, 0, 0, 3}, 0.5},
                                 {BasisLabel{0, 0, 0, 1, 4}, 0.5},
                                 {BasisLabel{0, 0, 0, 0, 5}, 0.5}});
    SparseState once = apply_sign_phase(st);
    CHECK(once.amplitude(BasisLabel{1, 0, 0, 1, 2}) == std::complex<double>{-0.5});
    CHECK(once.amplitude(BasisLabel{1, 0, 0, 0, 3}) == std::complex<double>{0.5});
    CHECK(once.amplitude(BasisLabel{0, 0, 0, 1, 4}) == std::complex<double>{0.5});
    CHECK(once.amplitude(BasisLabel{0, 0, 0, 0, 5}) == std::complex<double>{0.5});

    SparseState twice = apply_sign_phase(once);
    for (const auto& [label, amp] : st) CHECK(twice.amplitude(label) == amp);
}

TEST_CASE("register clears undo their paired retrieval") {
    Fixture f(ValueCodec::exact());
    SparseState st = state_with(64, 3, {{BasisLabel{0, 0, 0, 0, 1}, 1.0}});
    st = retrieve_siblings(std::move(st), f.qram, 1);
    st = clear_value_registers(std::move(st), f.qram, 1);
    CHECK(st.begin()->first.l == 0);
    CHECK(st.begin()->first.r == 0);
    CHECK(st.begin()->second == std::complex<double>{1.0});

    SparseState sg(64, 3);
    for (std::uint64_t z = 0; z < 8; ++z) sg.add(BasisLabel{0, 0, 0, 1, z}, std::sqrt(0.125));
    sg = retrieve_signs(std::move(sg), f.qram);
    sg = clear_sign_register(std::move(sg), f.qram);
    for (const auto& [label, amp] : sg) CHECK(label.s == 0);
}

TEST_CASE("a shift between retrieval and clear is detected as stale") {
    Fixture f(ValueCodec::exact());
    SparseState st = state_with(64, 3, {{BasisLabel{0, 0, 0, 0, 1}, 1.0}});
    st = retrieve_siblings(std::move(st), f.qram, 1);
    st = circular_shift_left(std::move(st));
    CHECK_THROWS_AS(clear_value_registers(std::move(st), f.qram, 1), StaleAddressError);

    SparseState sg(64, 3);
    for (std::uint64_t z = 0; z < 8; ++z) sg.add(BasisLabel{0, 0, 0, 0, z}, std::sqrt(0.125));
    sg = retrieve_signs(std::move(sg), f.qram);
    sg = flip_address_bit(std::move(sg), 0);  // address change invalidates the pairing
    CHECK_THROWS_AS(clear_sign_register(std::move(sg), f.qram), StaleAddressError);
}

TEST_CASE("retrievals commute with a global phase") {
    Fixture f(ValueCodec::exact());
    const std::complex<double> phase = std::polar(1.0, 0.7);

    SparseState plain(64, 3);
    SparseState phased(64, 3);
    for (std::uint64_t z = 2; z < 4; ++z) {
        plain.add(BasisLabel{0, 0, 0, 0, z}, M_SQRT1_2);
        phased.add(BasisLabel{0, 0, 0, 0, z}, M_SQRT1_2 * phase);
    }
    plain = retrieve_siblings(std::move(plain), f.qram, 2);
    phased = retrieve_siblings(std::move(phased), f.qram, 2);

    for (const auto& [label, amp] : plain) {
        const std::complex<double> got = phased.amplitude(label);
        CHECK(std::abs(got - amp * phase) < 1e-15);
    }
}

TEST_CASE("norm is preserved across the operation set") {
    Fixture f(ValueCodec::exact());
    SparseState st = SparseState::ground(64, 3);
    st = flip_address_bit(std::move(st), 0);
    CHECK(st.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

    for (std::size_t h = 1; h <= 3; ++h) {
        st = retrieve_siblings(std::move(st), f.qram, h);
        CHECK(st.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
        st = apply_branch_split(std::move(st), f.codec);
        CHECK(st.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
        st = clear_value_registers(std::move(st), f.qram, h);
        st = circular_shift_left(std::move(st));
        CHECK(st.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    }
    st = retrieve_signs(std::move(st), f.qram);
    st = apply_sign_phase(std::move(st));
    CHECK(st.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}
