#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsp/errors.hpp"

namespace qsp {

/// Dense real matrix with dimensions padded up to powers of two.
/// Entries are stored row-major; cells outside the original extent are
/// exactly zero. Construct via pad_matrix -- the constructor is for
/// already-padded data.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
           std::size_t orig_rows, std::size_t orig_cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t orig_rows() const { return orig_rows_; }
    std::size_t orig_cols() const { return orig_cols_; }

    /// Total number of entries K = rows * cols (a power of two).
    std::size_t size() const { return entries_.size(); }

    double operator()(std::size_t i, std::size_t j) const;
    double at_flat(std::size_t z) const;

    const std::vector<double>& entries() const { return entries_; }

    /// Sum of squared entries, accumulated by a plain double loop.
    double sum_of_squares() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t orig_rows_;
    std::size_t orig_cols_;
    std::vector<double> entries_;
};

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

bool is_pow2(std::size_t n);

/// Base-2 logarithm of a power of two.
std::size_t log2_exact(std::size_t n);

/// Validate a raw rows x cols matrix (given row-major) and pad both
/// dimensions up to powers of two with zeros. Rejects empty, all-zero
/// and non-finite input. Negative zeros are normalized to +0.
Matrix pad_matrix(const std::vector<double>& raw, std::size_t rows, std::size_t cols);

/// Row-major flattening z = i * cols + j and its inverse.
std::size_t row_major_index(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols);
std::pair<std::size_t, std::size_t> unflatten_index(std::size_t z, std::size_t rows, std::size_t cols);

}  // namespace qsp
