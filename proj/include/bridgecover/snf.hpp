// Dense integer matrices and their Smith normal form.
#pragma once

#include <string>
#include <vector>

#include "bridgecover/arith.hpp"

namespace bridgecover {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Integer& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntegerMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const IntegerMatrix&) const = default;

    static IntegerMatrix identity(int n);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

/// Throws std::invalid_argument on a dimension mismatch.
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

/// Invariant factors d_1 | d_2 | ... padded with zeros to min(rows, cols).
/// Serial reference kernel.
std::vector<Integer> smith_normal_form(const IntegerMatrix& mat);

/// Same result; row and column eliminations for each pivot run under OpenMP.
std::vector<Integer> smith_normal_form_parallel(const IntegerMatrix& mat);

int rank_from_snf(const std::vector<Integer>& diagonal);

}  // namespace bridgecover
