#include "qsp/ops.hpp"

#include <cmath>
#include <string>

namespace qsp {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint64_t address_mask(std::size_t bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

void check_sibling_support(const SparseState& state, std::size_t h, std::size_t depth,
                           const char* who, bool stale_error) {
    if (h < 1 || h > depth)
        throw PreconditionError(std::string(who) + ": level " + std::to_string(h) +
                                " outside [1, " + std::to_string(depth) + "]");
    const std::uint64_t lo = std::uint64_t{1} << (h - 1);
    const std::uint64_t hi = std::uint64_t{1} << h;
    for (const auto& [label, amp] : state) {
        if (label.a >= lo && label.a < hi) continue;
        const std::string msg = std::string(who) + ": address " + std::to_string(label.a) +
                                " outside level-" + std::to_string(h) + " range";
        if (stale_error) throw StaleAddressError(msg);
        throw PreconditionError(msg);
    }
}

double round_to_format(double x, const FixedFormat& fmt) {
    return fp_decode(fp_encode(x, fmt), fmt);
}

}  // namespace

SparseState retrieve_root(SparseState state, QramTree& qram) {
    if (state.support_size() != 1 || state.begin()->first.a != 0)
        throw PreconditionError("retrieve_root: support must be the single address 0");
    const BasisLabel& label = state.begin()->first;
    const std::uint64_t root_word = qram.cell(0).word_left;
    if (label.r != 0 || (label.l != 0 && label.l != root_word))
        throw PreconditionError("retrieve_root: value registers hold unrelated data");

    auto payload = qram.query({0}, FieldSelector::MiddleWord);

    SparseState out(state.layout().value_bits, state.layout().address_bits);
    for (const auto& [lab, amp] : state) {
        BasisLabel nl = lab;
        nl.l ^= payload.at(lab.a).left;
        out.add(nl, amp);
    }
    return out;
}

namespace {

SparseState xor_sibling_words(SparseState state, QramTree& qram, std::size_t h, const char* who,
                              bool stale_error) {
    check_sibling_support(state, h, qram.depth(), who, stale_error);
    for (const auto& [label, amp] : state) {
        const MemoryCell& cell = qram.cell(label.a);
        const bool clean = label.l == 0 && label.r == 0;
        const bool loaded = label.l == cell.word_left && label.r == cell.word_right;
        if (stale_error ? !loaded : !(clean || loaded)) {
            const std::string msg = std::string(who) + ": value registers at address " +
                                    std::to_string(label.a) + " do not match the cell words";
            if (stale_error) throw StaleAddressError(msg);
            throw PreconditionError(msg);
        }
    }

    auto payload = qram.query(state.address_support(), FieldSelector::BothWords);

    SparseState out(state.layout().value_bits, state.layout().address_bits);
    for (const auto& [label, amp] : state) {
        const BusPayload& p = payload.at(label.a);
        BasisLabel nl = label;
        nl.l ^= p.left;
        nl.r ^= p.right;
        out.add(nl, amp);
    }
    return out;
}

SparseState xor_sign_bits(SparseState state, QramTree& qram, const char* who, bool stale_error) {
    for (const auto& [label, amp] : state) {
        if (label.l != 0 || label.r != 0)
            throw PreconditionError(std::string(who) + ": value registers must be clean");
        if (stale_error && label.s != qram.cell(label.a).sign)
            throw StaleAddressError(std::string(who) + ": sign register at address " +
                                    std::to_string(label.a) + " does not match the cell");
    }

    auto payload = qram.query(state.address_support(), FieldSelector::SignBit);

    SparseState out(state.layout().value_bits, state.layout().address_bits);
    for (const auto& [label, amp] : state) {
        BasisLabel nl = label;
        nl.s ^= payload.at(label.a).sign;
        out.add(nl, amp);
    }
    return out;
}

}  // namespace

SparseState retrieve_siblings(SparseState state, QramTree& qram, std::size_t h) {
    return xor_sibling_words(std::move(state), qram, h, "retrieve_siblings", false);
}

SparseState retrieve_signs(SparseState state, QramTree& qram) {
    return xor_sign_bits(std::move(state), qram, "retrieve_signs", false);
}

SparseState clear_value_registers(SparseState state, QramTree& qram, std::size_t h) {
    return xor_sibling_words(std::move(state), qram, h, "clear_value_registers", true);
}

SparseState clear_sign_register(SparseState state, QramTree& qram) {
    return xor_sign_bits(std::move(state), qram, "clear_sign_register", true);
}

std::pair<double, double> branch_weights_exact(double a, double b) {
    if (a < 0.0 || b < 0.0)
        throw NegativeDecodeError("branch_weights_exact: negative input");
    if (a == 0.0 && b == 0.0) return {kInvSqrt2, kInvSqrt2};
    const double sum = a + b;
    return {std::sqrt(a / sum), std::sqrt(b / sum)};
}

PipelineResult branch_angle_pipeline(std::uint64_t a_word, std::uint64_t b_word,
                                     const FixedFormat& fmt) {
    const double a = fp_decode(a_word, fmt);
    const double b = fp_decode(b_word, fmt);
    if (a == 0.0 && b == 0.0)
        throw std::invalid_argument("branch_angle_pipeline: a = b = 0 takes the equal-split path");

    const double sum = round_to_format(a + b, fmt);  // exact unless it overflows
    const double quot = round_to_format(b / sum, fmt);
    const double root = round_to_format(std::sqrt(quot), fmt);
    const double asn = round_to_format(std::asin(std::min(root, 1.0)), fmt);
    const double theta = round_to_format(2.0 * asn, fmt);  // doubling is exact in fixed point

    PipelineResult res;
    res.theta_word = fp_encode(theta, fmt);
    if (res.theta_word == 0) {
        res.w0 = 1.0;
        res.w1 = 0.0;
        return res;
    }
    auto [w0, w1] = cascade_rotation_weights(res.theta_word, fmt);
    res.w0 = w0;
    res.w1 = w1;
    return res;
}

std::pair<double, double> cascade_rotation_weights(std::uint64_t theta_word,
                                                   const FixedFormat& fmt) {
    fmt.validate();
    if (theta_word == 0)
        throw ZeroAngleError("cascade_rotation_weights: zero angle is outside the domain");

    double w0 = 1.0;
    double w1 = 0.0;
    for (int bit = static_cast<int>(fmt.word_bits()) - 1; bit >= 0; --bit) {
        if (!((theta_word >> bit) & 1)) continue;
        const double phi = std::ldexp(1.0, bit - static_cast<int>(fmt.frac_bits));
        const double c = std::cos(phi / 2.0);
        const double s = std::sin(phi / 2.0);
        const double n0 = c * w0 - s * w1;
        const double n1 = s * w0 + c * w1;
        w0 = n0;
        w1 = n1;
    }
    return {w0, w1};
}

SparseState apply_branch_split(SparseState state, const ValueCodec& codec,
                               double prune_threshold) {
    SparseState out(state.layout().value_bits, state.layout().address_bits);
    for (const auto& [label, amp] : state) {
        if (label.v != 0)
            throw PreconditionError("apply_branch_split: branch qubit already in use");

        double w0 = 0.0;
        double w1 = 0.0;
        const double a = codec.decode(label.l);
        const double b = codec.decode(label.r);
        if (a == 0.0 && b == 0.0) {
            w0 = w1 = kInvSqrt2;
        } else if (codec.is_fixed()) {
            const PipelineResult res = branch_angle_pipeline(label.l, label.r, codec.fmt);
            w0 = res.w0;
            w1 = res.w1;
        } else {
            std::tie(w0, w1) = branch_weights_exact(a, b);
        }

        BasisLabel lo = label;
        BasisLabel hi = label;
        hi.v = 1;
        if (w0 != 0.0) out.add(lo, amp * w0);
        if (w1 != 0.0) out.add(hi, amp * w1);
    }
    out.prune(prune_threshold);
    return out;
}

SparseState circular_shift_left(SparseState state) {
    const std::size_t k = state.layout().address_bits;
    const std::uint64_t mask = address_mask(k);
    SparseState out(state.layout().value_bits, k);
    for (const auto& [label, amp] : state) {
        BasisLabel nl = label;
        nl.v = static_cast<std::uint8_t>((label.a >> (k - 1)) & 1);
        nl.a = ((label.a << 1) | label.v) & mask;
        out.add(nl, amp);
    }
    return out;
}

SparseState circular_shift_right(SparseState state) {
    const std::size_t k = state.layout().address_bits;
    const std::uint64_t mask = address_mask(k);
    SparseState out(state.layout().value_bits, k);
    for (const auto& [label, amp] : state) {
        BasisLabel nl = label;
        nl.v = static_cast<std::uint8_t>(label.a & 1);
        nl.a = ((label.a >> 1) | (std::uint64_t{label.v} << (k - 1))) & mask;
        out.add(nl, amp);
    }
    return out;
}

SparseState apply_sign_phase(SparseState state) {
    SparseState out(state.layout().value_bits, state.layout().address_bits);
    for (const auto& [label, amp] : state)
        out.add(label, (label.s == 1 && label.v == 1) ? -amp : amp);
    return out;
}

SparseState flip_address_bit(SparseState state, std::size_t bit) {
    if (bit >= state.layout().address_bits)
        throw OutOfRangeError("flip_address_bit: bit " + std::to_string(bit) +
                              " outside the address register");
    SparseState out(state.layout().value_bits, state.layout().address_bits);
    for (const auto& [label, amp] : state) {
        BasisLabel nl = label;
        nl.a ^= std::uint64_t{1} << bit;
        out.add(nl, amp);
    }
    return out;
}

SparseState flip_branch_bit(SparseState state) {
    SparseState out(state.layout().value_bits, state.layout().address_bits);
    for (const auto& [label, amp] : state) {
        BasisLabel nl = label;
        nl.v ^= 1;
        out.add(nl, amp);
    }
    return out;
}

}  // namespace qsp
