#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsp/matrix.hpp"

namespace qsp {

/// Array-backed segment tree of squared norms over the flattened matrix.
///
/// Leaves hold squared entries, internal nodes the sum of their children,
/// so the root is the squared Frobenius norm. The sign of each original
/// entry is kept in a parallel bit array (1 iff strictly negative).
///
/// Storage is a 0-based heap: node (h, p) lives at flat index 2^h + p - 1,
/// children of index n are 2n+1 and 2n+2.
class SegmentTree {
  public:
    explicit SegmentTree(const Matrix& m);

    /// Tree depth k = log2(K).
    std::size_t depth() const { return depth_; }

    /// Number of leaves K.
    std::size_t leaf_count() const { return leaves_; }

    /// Total node count, 2K - 1.
    std::size_t node_count() const { return nodes_.size(); }

    /// Node value at (height, position); height 0 is the root.
    double node(std::size_t h, std::size_t p) const;

    /// Node value by flat heap index.
    double node_flat(std::size_t idx) const;

    double root() const { return nodes_[0]; }

    /// Leaf value |a_z|^2.
    double leaf(std::size_t z) const;

    /// Sign bit of the original entry a_z (1 iff a_z < 0).
    bool leaf_sign(std::size_t z) const;
    const std::vector<std::uint8_t>& leaf_signs() const { return signs_; }

    /// Replace entry z with a new value: updates the leaf (square and sign)
    /// and recomputes exactly the ancestors on the root path. Produces the
    /// same node values, bitwise, as a rebuild from the updated data.
    void update_entry(std::size_t z, double value);

    const std::vector<double>& nodes() const { return nodes_; }

    static std::size_t flat_index(std::size_t h, std::size_t p) {
        return (std::size_t{1} << h) + p - 1;
    }

  private:
    std::size_t depth_;
    std::size_t leaves_;
    std::vector<double> nodes_;
    std::vector<std::uint8_t> signs_;
};

}  // namespace qsp
