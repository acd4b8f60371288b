#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "qsp/errors.hpp"

namespace qsp {

/// Widths of the simulated registers: one sign qubit, two value words of
/// value_bits qubits each, one branch qubit and address_bits address qubits.
struct RegisterLayout {
    unsigned value_bits = 64;
    std::size_t address_bits = 0;

    bool operator==(const RegisterLayout&) const = default;
};

/// One computational basis label (s, l, r, v, a). Ordered by address first
/// so that map iteration lists components in address order.
struct BasisLabel {
    std::uint8_t s = 0;
    std::uint64_t l = 0;
    std::uint64_t r = 0;
    std::uint8_t v = 0;
    std::uint64_t a = 0;

    bool operator==(const BasisLabel&) const = default;

    friend bool operator<(const BasisLabel& x, const BasisLabel& y) {
        return std::tie(x.a, x.v, x.s, x.l, x.r) < std::tie(y.a, y.v, y.s, y.l, y.r);
    }
};

/// Map from basis labels to complex amplitudes, holding only nonzero
/// components. A value type: operations consume a state and produce the
/// next one; no shared mutation.
class SparseState {
  public:
    using Amplitude = std::complex<double>;
    using Map = std::map<BasisLabel, Amplitude>;

    SparseState(unsigned value_bits, std::size_t address_bits)
        : layout_{value_bits, address_bits} {}

    /// The all-zeros basis state with amplitude 1.
    static SparseState ground(unsigned value_bits, std::size_t address_bits);

    const RegisterLayout& layout() const { return layout_; }

    /// Accumulate an amplitude onto a label (checking register widths).
    void add(const BasisLabel& label, Amplitude amp);

    Amplitude amplitude(const BasisLabel& label) const;

    std::size_t support_size() const { return amps_.size(); }

    /// Sorted distinct addresses present in the support.
    std::vector<std::uint64_t> address_support() const;

    double norm_sq() const;

    /// Drop components with exactly zero amplitude, and, for a positive
    /// threshold, components with |amplitude| below it.
    void prune(double threshold = 0.0);

    Map::const_iterator begin() const { return amps_.begin(); }
    Map::const_iterator end() const { return amps_.end(); }
    const Map& components() const { return amps_; }

  private:
    RegisterLayout layout_;
    Map amps_;
};

}  // namespace qsp
