#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/bigint.hpp"

namespace chipfire {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix diagonal(const std::vector<BigInt>& diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<BigInt>& entries() const noexcept { return data_; }

    IntegerMatrix transpose() const;
    /// Removes one row and one column.
    IntegerMatrix minor_matrix(std::size_t row, std::size_t col) const;
    IntegerMatrix submatrix(const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) const;

    std::vector<BigInt> operator*(const std::vector<BigInt>& x) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    bool operator==(const IntegerMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);

using RationalVector = std::vector<Rational>;

std::vector<BigInt> to_big(const std::vector<std::int64_t>& v);

/// Matrix text format: "rows cols" then one line per row.
std::string write_matrix(const IntegerMatrix& m);
IntegerMatrix parse_matrix(std::string_view text);

}  // namespace chipfire
