#include "qsp/qram.hpp"

#include <algorithm>
#include <string>

namespace qsp {

QramTree::QramTree(std::size_t depth)
    : depth_(depth), switches_((std::size_t{1} << depth) - 1, SwitchState::Wait),
      cells_(std::size_t{1} << depth) {
    if (depth == 0) throw std::invalid_argument("QramTree: depth must be >= 1");
}

ActivePaths QramTree::route(const std::vector<std::uint64_t>& support) {
    if (route_active_ || !all_switches_wait())
        throw DirtyTreeError("QramTree::route: switches not in Wait state");
    if (support.empty()) throw std::invalid_argument("QramTree::route: empty address support");

    std::vector<std::uint64_t> leaves = support;
    std::sort(leaves.begin(), leaves.end());
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    if (leaves.back() >= cell_count())
        throw OutOfRangeError("QramTree::route: address " + std::to_string(leaves.back()) +
                              " >= " + std::to_string(cell_count()));

    activate_paths(leaves);
    counters_.routing_steps += depth_;  // pipelined: one unit per level
    route_active_ = true;
    ++epoch_;
    routed_leaves_ = leaves;
    return ActivePaths{std::move(leaves), epoch_, this};
}

std::map<std::uint64_t, BusPayload> QramTree::bus_transfer(const ActivePaths& paths,
                                                           FieldSelector sel) {
    if (!route_active_ || paths.owner != this || paths.epoch != epoch_)
        throw PathMismatchError("QramTree::bus_transfer: paths do not match the active route");

    counters_.bus_steps += 2 * depth_;  // down to the cells and back
    counters_.copy_ops += 2;            // cell -> bus, bus -> working register

    std::map<std::uint64_t, BusPayload> out;
    for (std::uint64_t z : routed_leaves_) out[z] = select_fields(cells_[z], sel);
    return out;
}

void QramTree::uncompute_route(const ActivePaths& paths) {
    if (!route_active_ || paths.owner != this || paths.epoch != epoch_)
        throw PathMismatchError("QramTree::uncompute_route: paths do not match the active route");
    reset_switches();
    counters_.uncompute_steps += depth_;
    route_active_ = false;
    routed_leaves_.clear();
}

std::map<std::uint64_t, BusPayload> QramTree::query(const std::vector<std::uint64_t>& support,
                                                    FieldSelector sel) {
    ActivePaths paths = route(support);
    auto out = bus_transfer(paths, sel);
    uncompute_route(paths);
    ++counters_.queries;
    return out;
}

void QramTree::write_cell(std::uint64_t z, const MemoryCell& cell) {
    if (z >= cell_count())
        throw OutOfRangeError("QramTree::write_cell: address " + std::to_string(z) + " >= " +
                              std::to_string(cell_count()));
    if (route_active_ || !all_switches_wait())
        throw DirtyTreeError("QramTree::write_cell: switches not in Wait state");

    activate_paths({z});
    counters_.routing_steps += depth_;
    counters_.bus_steps += 2 * depth_;
    counters_.copy_ops += 1;  // SWAP of bus and cell contents
    cells_[z] = cell;
    reset_switches();
    counters_.uncompute_steps += depth_;
    ++counters_.writes;
}

const MemoryCell& QramTree::cell(std::uint64_t z) const {
    if (z >= cell_count())
        throw OutOfRangeError("QramTree::cell: address " + std::to_string(z) + " >= " +
                              std::to_string(cell_count()));
    return cells_[z];
}

SwitchState QramTree::switch_state(std::size_t index) const {
    if (index >= switches_.size())
        throw OutOfRangeError("QramTree::switch_state: index " + std::to_string(index) + " >= " +
                              std::to_string(switches_.size()));
    return switches_[index];
}

bool QramTree::all_switches_wait() const {
    return std::all_of(switches_.begin(), switches_.end(),
                       [](SwitchState s) { return s == SwitchState::Wait; });
}

void QramTree::activate_paths(const std::vector<std::uint64_t>& support) {
    for (std::uint64_t addr : support) {
        std::size_t node = 0;  // switch heap: children of n are 2n+1, 2n+2
        for (std::size_t level = 0; level < depth_; ++level) {
            const bool bit = (addr >> (depth_ - 1 - level)) & 1;
            const SwitchState want = bit ? SwitchState::One : SwitchState::Zero;
            if (switches_[node] == SwitchState::Wait)
                switches_[node] = want;
            else if (switches_[node] != want)
                switches_[node] = SwitchState::Superposed;
            node = 2 * node + 1 + (bit ? 1 : 0);
        }
    }
}

void QramTree::reset_switches() {
    std::fill(switches_.begin(), switches_.end(), SwitchState::Wait);
}

BusPayload QramTree::select_fields(const MemoryCell& cell, FieldSelector sel) const {
    BusPayload p;
    switch (sel) {
        case FieldSelector::SignBit: p.sign = cell.sign; break;
        case FieldSelector::MiddleWord: p.left = cell.word_left; break;
        case FieldSelector::BothWords:
            p.left = cell.word_left;
            p.right = cell.word_right;
            break;
    }
    return p;
}

}  // namespace qsp
