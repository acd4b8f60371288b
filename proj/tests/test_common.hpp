#pragma once

#include <random>
#include <vector>

#include "qsp/matrix.hpp"

namespace qsp::testing {

/// The 2x4 reference matrix used across the test suite.
inline const std::vector<double> kSampleData = {2.2, 3.1, -3.0, 1.2, 0.3, 1.0, 0.5, -2.5};

inline Matrix sample_matrix() { return pad_matrix(kSampleData, 2, 4); }

inline std::vector<double> random_entries(std::mt19937_64& rng, std::size_t count,
                                          double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> data(count);
    bool nonzero = false;
    while (!nonzero)
        for (double& v : data) {
            v = dist(rng);
            if (v != 0.0) nonzero = true;
        }
    return data;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    return pad_matrix(random_entries(rng, rows * cols), rows, cols);
}

}  // namespace qsp::testing
