#pragma once

#include <cstddef>
#include <vector>

#include "ct/rational.hpp"

namespace ct {

/// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Appends the rows of other (same column count).
    void append_rows(const Matrix& other);

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Basis of the right nullspace {v : M v = 0}, computed by fraction-free
/// (Bareiss) elimination over the integers. One vector per free column, each
/// scaled to a primitive integer vector whose last nonzero entry is positive.
std::vector<std::vector<Rational>> solve_nullspace(const Matrix& matrix);

}  // namespace ct
