#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "qsp/layout.hpp"

namespace qsp {

/// Router switch: idle (Wait), routing left or right, or carrying both
/// branch values of a superposed access.
enum class SwitchState : std::uint8_t { Wait, Zero, One, Superposed };

/// Which slice of a (1 + 2t)-qubit cell the bus copies.
enum class FieldSelector { SignBit, MiddleWord, BothWords };

/// Monotone step accounting. The unit is one tree-level traversal by one
/// logical packet; constant-time CNOT copies and SWAPs cost one unit each.
/// With pipelined routing a full query costs 4k + 2 units (k routing,
/// 2k bus traversal, 2 copies, k uncompute) and a cell write costs 4k + 1
/// (one SWAP instead of two copies), independent of superposition width.
struct StepCounters {
    std::uint64_t routing_steps = 0;
    std::uint64_t bus_steps = 0;
    std::uint64_t copy_ops = 0;
    std::uint64_t uncompute_steps = 0;
    std::uint64_t queries = 0;
    std::uint64_t writes = 0;

    std::uint64_t total_units() const {
        return routing_steps + bus_steps + copy_ops + uncompute_steps;
    }

    bool operator==(const StepCounters&) const = default;
};

/// Cell fields copied out by one bus traversal; unselected fields are zero.
struct BusPayload {
    std::uint8_t sign = 0;
    std::uint64_t left = 0;
    std::uint64_t right = 0;
};

class QramTree;

/// Handle to the routing pass currently established on a tree. Only the
/// pass that produced it may move the bus or be uncomputed.
struct ActivePaths {
    std::vector<std::uint64_t> leaves;  // sorted, deduplicated
    std::uint64_t epoch = 0;
    const QramTree* owner = nullptr;
};

/// Binary switch tree with K = 2^depth leaf cells.
///
/// Queries are transient: route() activates the switches along the
/// root-to-leaf paths of the address support, bus_transfer() copies the
/// selected cell fields, uncompute_route() returns every switch to Wait.
/// A single instance must not be queried concurrently.
class QramTree {
  public:
    explicit QramTree(std::size_t depth);

    std::size_t depth() const { return depth_; }
    std::size_t cell_count() const { return cells_.size(); }
    std::size_t switch_count() const { return switches_.size(); }

    /// Establish access paths for a non-empty set of addresses. All
    /// switches must be in Wait; charges depth() routing steps total
    /// (pipelined), regardless of the support size.
    ActivePaths route(const std::vector<std::uint64_t>& support);

    /// Send the bus down and back along established paths, XOR-copying the
    /// selected field of each reached cell. Charges 2 * depth() bus steps
    /// and 2 copy operations.
    std::map<std::uint64_t, BusPayload> bus_transfer(const ActivePaths& paths, FieldSelector sel);

    /// Reverse the routing operations; every switch returns to Wait.
    void uncompute_route(const ActivePaths& paths);

    /// Full retrieval (route + bus + uncompute) counted as one query.
    std::map<std::uint64_t, BusPayload> query(const std::vector<std::uint64_t>& support,
                                              FieldSelector sel);

    /// Replace cell z, leaving the bus reset and all switches in Wait.
    void write_cell(std::uint64_t z, const MemoryCell& cell);

    const MemoryCell& cell(std::uint64_t z) const;
    SwitchState switch_state(std::size_t index) const;
    bool all_switches_wait() const;

    const StepCounters& counters() const { return counters_; }

  private:
    void activate_paths(const std::vector<std::uint64_t>& support);
    void reset_switches();
    BusPayload select_fields(const MemoryCell& cell, FieldSelector sel) const;

    std::size_t depth_;
    std::vector<SwitchState> switches_;
    std::vector<MemoryCell> cells_;
    StepCounters counters_;
    std::uint64_t epoch_ = 0;
    bool route_active_ = false;
    std::vector<std::uint64_t> routed_leaves_;
};

}  // namespace qsp
