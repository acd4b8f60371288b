#include "qsp/segment_tree.hpp"

#include <cmath>
#include <string>

namespace qsp {

SegmentTree::SegmentTree(const Matrix& m)
    : depth_(log2_exact(m.size())), leaves_(m.size()), nodes_(2 * m.size() - 1, 0.0),
      signs_(m.size(), 0) {
    const std::size_t first_leaf = leaves_ - 1;
    for (std::size_t z = 0; z < leaves_; ++z) {
        const double v = m.at_flat(z);
        nodes_[first_leaf + z] = v * v;
        signs_[z] = v < 0.0 ? 1 : 0;
    }
    for (std::size_t idx = first_leaf; idx-- > 0;)
        nodes_[idx] = nodes_[2 * idx + 1] + nodes_[2 * idx + 2];
}

double SegmentTree::node(std::size_t h, std::size_t p) const {
    if (h > depth_ || p >= (std::size_t{1} << h))
        throw OutOfRangeError("SegmentTree::node: (" + std::to_string(h) + "," +
                              std::to_string(p) + ") outside depth " + std::to_string(depth_));
    return nodes_[flat_index(h, p)];
}

double SegmentTree::node_flat(std::size_t idx) const {
    if (idx >= nodes_.size())
        throw OutOfRangeError("SegmentTree::node_flat: " + std::to_string(idx) + " >= " +
                              std::to_string(nodes_.size()));
    return nodes_[idx];
}

double SegmentTree::leaf(std::size_t z) const {
    if (z >= leaves_)
        throw OutOfRangeError("SegmentTree::leaf: " + std::to_string(z) + " >= " +
                              std::to_string(leaves_));
    return nodes_[leaves_ - 1 + z];
}

bool SegmentTree::leaf_sign(std::size_t z) const {
    if (z >= leaves_)
        throw OutOfRangeError("SegmentTree::leaf_sign: " + std::to_string(z) + " >= " +
                              std::to_string(leaves_));
    return signs_[z] != 0;
}

void SegmentTree::update_entry(std::size_t z, double value) {
    if (z >= leaves_)
        throw OutOfRangeError("SegmentTree::update_entry: " + std::to_string(z) + " >= " +
                              std::to_string(leaves_));
    if (!std::isfinite(value))
        throw NonFiniteError("SegmentTree::update_entry: non-finite value");

    std::size_t idx = leaves_ - 1 + z;
    nodes_[idx] = value * value;
    signs_[z] = value < 0.0 ? 1 : 0;
    while (idx > 0) {
        idx = (idx - 1) / 2;
        nodes_[idx] = nodes_[2 * idx + 1] + nodes_[2 * idx + 2];
    }
}

}  // namespace qsp
