#include "qsp/state.hpp"

#include <cmath>
#include <string>

namespace qsp {

SparseState SparseState::ground(unsigned value_bits, std::size_t address_bits) {
    SparseState st(value_bits, address_bits);
    st.add(BasisLabel{}, 1.0);
    return st;
}

void SparseState::add(const BasisLabel& label, Amplitude amp) {
    if (label.s > 1 || label.v > 1)
        throw std::invalid_argument("SparseState::add: s and v are single qubits");
    if (layout_.value_bits < 64 &&
        ((label.l >> layout_.value_bits) || (label.r >> layout_.value_bits)))
        throw std::invalid_argument("SparseState::add: value word wider than the register");
    if (layout_.address_bits < 64 && (label.a >> layout_.address_bits))
        throw std::invalid_argument("SparseState::add: address wider than the register");

    auto [it, inserted] = amps_.try_emplace(label, amp);
    if (!inserted) it->second += amp;
}

SparseState::Amplitude SparseState::amplitude(const BasisLabel& label) const {
    auto it = amps_.find(label);
    return it == amps_.end() ? Amplitude{0.0} : it->second;
}

std::vector<std::uint64_t> SparseState::address_support() const {
    std::vector<std::uint64_t> out;
    for (const auto& [label, amp] : amps_)
        if (out.empty() || out.back() != label.a) out.push_back(label.a);
    return out;  // map order is address-major, so this is sorted and unique
}

double SparseState::norm_sq() const {
    double acc = 0.0;
    for (const auto& [label, amp] : amps_) acc += std::norm(amp);
    return acc;
}

void SparseState::prune(double threshold) {
    for (auto it = amps_.begin(); it != amps_.end();) {
        const double mag = std::abs(it->second);
        if (mag == 0.0 || mag < threshold)
            it = amps_.erase(it);
        else
            ++it;
    }
}

}  // namespace qsp
