#pragma once

#include <cstdint>

#include "qsp/errors.hpp"

namespace qsp {

/// Unsigned fixed-point word format: int_bits integer bits above the
/// binary point, frac_bits below, total width word_bits() <= 64.
struct FixedFormat {
    unsigned int_bits = 16;
    unsigned frac_bits = 16;

    unsigned word_bits() const { return int_bits + frac_bits; }
    /// Largest encodable value, (2^t - 1) / 2^frac_bits.
    double max_value() const;

    void validate() const;
};

/// Round x to the nearest representable word (ties to even).
/// Throws OverflowError when x >= 2^int_bits or when rounding would
/// carry past the top of the word.
std::uint64_t fp_encode(double x, const FixedFormat& fmt);

double fp_decode(std::uint64_t word, const FixedFormat& fmt);

/// Value <-> word codec used by the register simulation. The fixed kind
/// quantizes through fp_encode/fp_decode; the exact kind stores the IEEE
/// bit pattern of the double unchanged, so no precision is lost.
struct ValueCodec {
    enum class Kind { Exact, Fixed };

    Kind kind = Kind::Exact;
    FixedFormat fmt;

    static ValueCodec exact() { return ValueCodec{Kind::Exact, FixedFormat{}}; }
    static ValueCodec fixed(FixedFormat f) {
        f.validate();
        return ValueCodec{Kind::Fixed, f};
    }

    bool is_fixed() const { return kind == Kind::Fixed; }
    unsigned word_bits() const { return is_fixed() ? fmt.word_bits() : 64u; }

    std::uint64_t encode(double x) const;
    /// Decodes a word; throws NegativeDecodeError if the result is negative
    /// (possible only for corrupted exact-mode words).
    double decode(std::uint64_t word) const;
};

}  // namespace qsp
