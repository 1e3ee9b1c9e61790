#pragma once

#include <cstdint>
#include <vector>

#include "nutkit/graph.hpp"
#include "nutkit/int.hpp"

namespace nutkit {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Symmetric 0/1 adjacency matrix of g.
IntMatrix adjacency_matrix(const Graph& g);

/// Circulant matrix with the given first row.
IntMatrix circulant_matrix(const std::vector<Int>& first_row);

} // namespace nutkit
