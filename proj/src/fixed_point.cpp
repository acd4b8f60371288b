#include "qsp/fixed_point.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qsp {

namespace {

double pow2(int e) { return std::ldexp(1.0, e); }

}  // namespace

double FixedFormat::max_value() const {
    const unsigned t = word_bits();
    const std::uint64_t max_word = (t >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << t) - 1);
    return static_cast<double>(max_word) * pow2(-static_cast<int>(frac_bits));
}

void FixedFormat::validate() const {
    if (word_bits() < 2)
        throw std::invalid_argument("FixedFormat: total width must be >= 2 bits");
    if (word_bits() > 64)
        throw std::invalid_argument("FixedFormat: total width must be <= 64 bits");
}

std::uint64_t fp_encode(double x, const FixedFormat& fmt) {
    fmt.validate();
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("fp_encode: value must be finite and non-negative");
    if (x >= pow2(static_cast<int>(fmt.int_bits)))
        throw OverflowError("fp_encode: " + std::to_string(x) + " exceeds " +
                            std::to_string(fmt.int_bits) + " integer bits");

    const double scaled = x * pow2(static_cast<int>(fmt.frac_bits));
    // nearbyint rounds to nearest, ties to even, in the default FP environment
    const double rounded = std::nearbyint(scaled);
    const unsigned t = fmt.word_bits();
    if (rounded >= pow2(static_cast<int>(t)))
        throw OverflowError("fp_encode: " + std::to_string(x) + " rounds past the top of a " +
                            std::to_string(t) + "-bit word");
    return static_cast<std::uint64_t>(rounded);
}

double fp_decode(std::uint64_t word, const FixedFormat& fmt) {
    fmt.validate();
    const unsigned t = fmt.word_bits();
    if (t < 64 && word >> t)
        throw OutOfRangeError("fp_decode: word wider than " + std::to_string(t) + " bits");
    return static_cast<double>(word) * pow2(-static_cast<int>(fmt.frac_bits));
}

std::uint64_t ValueCodec::encode(double x) const {
    if (is_fixed()) return fp_encode(x, fmt);
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("ValueCodec::encode: value must be finite and non-negative");
    return std::bit_cast<std::uint64_t>(x);
}

double ValueCodec::decode(std::uint64_t word) const {
    if (is_fixed()) return fp_decode(word, fmt);
    const double x = std::bit_cast<double>(word);
    if (std::isnan(x) || x < 0.0)
        throw NegativeDecodeError("ValueCodec::decode: word is not a non-negative value");
    return x;
}

}  // namespace qsp
