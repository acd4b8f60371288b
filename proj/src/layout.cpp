#include "qsp/layout.hpp"

#include <string>

namespace qsp {

namespace {

std::size_t floor_log2(std::size_t z) {
    std::size_t l = 0;
    while (z >> (l + 1)) ++l;
    return l;
}

}  // namespace

std::size_t cell_level(std::size_t z) {
    if (z == 0) throw OutOfRangeError("cell_level: cell 0 holds the root, not a sibling pair");
    return floor_log2(z) + 1;
}

std::size_t cell_offset(std::size_t z) {
    if (z == 0) throw OutOfRangeError("cell_offset: cell 0 holds the root, not a sibling pair");
    return z - (std::size_t{1} << floor_log2(z));
}

std::vector<MemoryCell> pack_cells(const SegmentTree& tree, const ValueCodec& codec) {
    const std::size_t K = tree.leaf_count();
    std::vector<MemoryCell> cells(K);

    cells[0].sign = tree.leaf_sign(0) ? 1 : 0;
    cells[0].word_left = codec.encode(tree.root());
    cells[0].word_right = 0;  // filler

    for (std::size_t z = 1; z < K; ++z) {
        const std::size_t l = cell_level(z);
        const std::size_t d = cell_offset(z);
        cells[z].sign = tree.leaf_sign(z) ? 1 : 0;
        cells[z].word_left = codec.encode(tree.node(l, 2 * d));
        cells[z].word_right = codec.encode(tree.node(l, 2 * d + 1));
    }
    return cells;
}

std::vector<MemoryCell> pack_cells(const SegmentTree& tree, const FixedFormat& fmt) {
    return pack_cells(tree, ValueCodec::fixed(fmt));
}

}  // namespace qsp
