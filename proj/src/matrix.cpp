#include "qsp/matrix.hpp"

#include <cmath>
#include <string>

namespace qsp {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
               std::size_t orig_rows, std::size_t orig_cols)
    : rows_(rows), cols_(cols), orig_rows_(orig_rows), orig_cols_(orig_cols),
      entries_(std::move(entries)) {
    if (!is_pow2(rows_) || !is_pow2(cols_))
        throw std::invalid_argument("Matrix: dimensions must be powers of two");
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("Matrix: entry count does not match dimensions");
}

double Matrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw OutOfRangeError("Matrix: index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    return entries_[i * cols_ + j];
}

double Matrix::at_flat(std::size_t z) const {
    if (z >= entries_.size())
        throw OutOfRangeError("Matrix: flat index " + std::to_string(z) + " >= " +
                              std::to_string(entries_.size()));
    return entries_[z];
}

double Matrix::sum_of_squares() const {
    double acc = 0.0;
    for (double v : entries_) acc += v * v;
    return acc;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

Matrix pad_matrix(const std::vector<double>& raw, std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("pad_matrix: dimensions must be >= 1");
    if (raw.size() != rows * cols)
        throw std::invalid_argument("pad_matrix: entry count does not match dimensions");

    bool any_nonzero = false;
    for (double v : raw) {
        if (!std::isfinite(v))
            throw NonFiniteError("pad_matrix: non-finite entry");
        if (v != 0.0) any_nonzero = true;
    }
    if (!any_nonzero)
        throw ZeroMatrixError("pad_matrix: all entries are zero");

    const std::size_t prows = next_pow2(rows);
    const std::size_t pcols = next_pow2(cols);
    std::vector<double> entries(prows * pcols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            double v = raw[i * cols + j];
            // -0.0 carries no sign information downstream
            entries[i * pcols + j] = (v == 0.0) ? 0.0 : v;
        }
    return Matrix(prows, pcols, std::move(entries), rows, cols);
}

std::size_t row_major_index(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols) {
    if (i >= rows || j >= cols)
        throw OutOfRangeError("row_major_index: (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    return i * cols + j;
}

std::pair<std::size_t, std::size_t> unflatten_index(std::size_t z, std::size_t rows,
                                                    std::size_t cols) {
    if (z >= rows * cols)
        throw OutOfRangeError("unflatten_index: " + std::to_string(z) + " >= " +
                              std::to_string(rows * cols));
    return {z / cols, z % cols};
}

}  // namespace qsp
