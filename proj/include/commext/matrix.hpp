#ifndef COMMEXT_MATRIX_HPP
#define COMMEXT_MATRIX_HPP

#include "commext/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace commext {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * Dense row-major matrix over the rationals.
 *
 * 0-row and 0-column shapes are ordinary values: they show up whenever the
 * border width r - n is zero, and every operation below accepts them.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(const std::vector<Scalar>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Scalar>& entries() const { return data_; }

    bool is_zero() const;

    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& src);
    Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

inline Matrix matmul(const Matrix& a, const Matrix& b) { return a * b; }
inline Matrix matadd(const Matrix& a, const Matrix& b) { return a + b; }
inline Matrix matsub(const Matrix& a, const Matrix& b) { return a - b; }

Matrix transpose(const Matrix& m);
Matrix hconcat(const Matrix& left, const Matrix& right);
Matrix vconcat(const Matrix& top, const Matrix& bottom);

/// Four blocks of a partitioned square matrix, laid out as
/// [ top_left  top_right ]
/// [ bot_left  bot_right ].
struct Blocks {
    Matrix top_left;
    Matrix top_right;
    Matrix bottom_left;
    Matrix bottom_right;

    friend bool operator==(const Blocks&, const Blocks&) = default;
};

Matrix block_assemble(const Blocks& b);

/// Splits a square matrix at index n; inverse of block_assemble.
Blocks block_split(const Matrix& m, std::size_t n);

std::string to_string(const Matrix& m);

} // namespace commext

#endif // COMMEXT_MATRIX_HPP
