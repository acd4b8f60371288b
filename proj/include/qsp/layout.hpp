#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsp/fixed_point.hpp"
#include "qsp/segment_tree.hpp"

namespace qsp {

/// One (1 + 2t)-bit memory cell: a sign bit plus two t-bit words.
///
/// Cell z >= 1 packs the sibling node pair (cell_level(z), 2*cell_offset(z))
/// and (cell_level(z), 2*cell_offset(z)+1); cell 0 packs the tree root in
/// word_left and a filler word (all zeros) in word_right.
struct MemoryCell {
    std::uint8_t sign = 0;
    std::uint64_t word_left = 0;
    std::uint64_t word_right = 0;

    bool operator==(const MemoryCell&) const = default;
};

/// Tree level addressed by cell z: floor(log2 z) + 1, for z >= 1.
std::size_t cell_level(std::size_t z);

/// Within-level offset addressed by cell z: z - 2^floor(log2 z), for z >= 1.
std::size_t cell_offset(std::size_t z);

/// Pack a segment tree into K cells using the given codec. Every non-root
/// node lands in exactly one cell word; the root only in cell 0.
std::vector<MemoryCell> pack_cells(const SegmentTree& tree, const ValueCodec& codec);

/// Fixed-point packing with the default codec behaviour.
std::vector<MemoryCell> pack_cells(const SegmentTree& tree, const FixedFormat& fmt);

}  // namespace qsp
