#include "commext/matrix.hpp"

#include <sstream>

namespace commext {

namespace {

void require(bool ok, const char* what) {
    if (!ok)
        throw DimensionError(what);
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        require(row.size() == cols_, "ragged initializer");
        for (long v : row)
            data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    require(row0 + nrows <= rows_ && col0 + ncols <= cols_, "block out of range");
    Matrix out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& src) {
    require(row0 + src.rows() <= rows_ && col0 + src.cols() <= cols_, "set_block out of range");
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j)
            (*this)(row0 + i, col0 + j) = src(i, j);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matadd: shape mismatch");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matsub: shape mismatch");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

Matrix operator-(const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = -a(i, j);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matmul: inner dimension mismatch");
    Matrix out(a.rows(), b.cols());
    Scalar acc;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) == 0)
                    continue;
                acc = aik * b(k, j);
                out(i, j) += acc;
            }
        }
    }
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = s * a(i, j);
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = m(i, j);
    return out;
}

Matrix hconcat(const Matrix& left, const Matrix& right) {
    require(left.rows() == right.rows(), "hconcat: row mismatch");
    Matrix out(left.rows(), left.cols() + right.cols());
    out.set_block(0, 0, left);
    out.set_block(0, left.cols(), right);
    return out;
}

Matrix vconcat(const Matrix& top, const Matrix& bottom) {
    require(top.cols() == bottom.cols(), "vconcat: column mismatch");
    Matrix out(top.rows() + bottom.rows(), top.cols());
    out.set_block(0, 0, top);
    out.set_block(top.rows(), 0, bottom);
    return out;
}

Matrix block_assemble(const Blocks& b) {
    const std::size_t n = b.top_left.rows();
    const std::size_t w = b.bottom_right.rows();
    require(b.top_left.is_square() && b.bottom_right.is_square(), "block_assemble: diagonal blocks must be square");
    require(b.top_right.rows() == n && b.top_right.cols() == w, "block_assemble: top-right shape");
    require(b.bottom_left.rows() == w && b.bottom_left.cols() == n, "block_assemble: bottom-left shape");
    Matrix out(n + w, n + w);
    out.set_block(0, 0, b.top_left);
    out.set_block(0, n, b.top_right);
    out.set_block(n, 0, b.bottom_left);
    out.set_block(n, n, b.bottom_right);
    return out;
}

Blocks block_split(const Matrix& m, std::size_t n) {
    require(m.is_square() && n <= m.rows(), "block_split: bad split");
    const std::size_t w = m.rows() - n;
    return Blocks{m.block(0, 0, n, n), m.block(0, n, n, w), m.block(n, 0, w, n), m.block(n, n, w, w)};
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << format_scalar(m(i, j));
    }
    os << ']';
    return os.str();
}

} // namespace commext
