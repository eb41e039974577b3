#include "commext/linalg.hpp"

#include <utility>

namespace commext {

Echelon rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t lead_row = 0;
    Scalar factor;

    for (std::size_t col = 0; col < cols && lead_row < rows; ++col) {
        std::size_t pivot = lead_row;
        while (pivot < rows && sgn(a(pivot, col)) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != lead_row)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a(pivot, j), a(lead_row, j));

        const Scalar inv = 1 / a(lead_row, col);
        for (std::size_t j = col; j < cols; ++j)
            a(lead_row, j) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead_row || sgn(a(i, col)) == 0)
                continue;
            const Scalar f = a(i, col);
            for (std::size_t j = col; j < cols; ++j) {
                if (sgn(a(lead_row, j)) == 0)
                    continue;
                factor = f * a(lead_row, j);
                a(i, j) -= factor;
            }
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return Echelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
    const Echelon e = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;

    Matrix basis(cols, cols - e.rank());
    std::size_t k = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        basis(free, k) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis(e.pivots[r], k) = -e.reduced(r, free);
        ++k;
    }
    return basis;
}

const char* to_string(SolveError e) {
    switch (e) {
    case SolveError::NoSolution:
        return "NoSolution";
    case SolveError::NotUnique:
        return "NotUnique";
    case SolveError::PreconditionViolated:
        return "PreconditionViolated";
    }
    return "?";
}

Solved<Matrix> solve_exact(const Matrix& a, const Matrix& b, bool require_unique) {
    if (a.rows() != b.rows())
        throw DimensionError("solve_exact: row mismatch");
    const std::size_t n = a.cols();
    const Echelon e = rref(hconcat(a, b));

    std::size_t rank_a = 0;
    for (auto p : e.pivots) {
        if (p >= n)
            return SolveError::NoSolution;
        ++rank_a;
    }
    if (require_unique && rank_a < n)
        return SolveError::NotUnique;

    Matrix x(n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(e.pivots[r], j) = e.reduced(r, n + j);
    return x;
}

Solved<Matrix> solve_right(const Matrix& a, const Matrix& b, bool require_unique) {
    if (a.cols() != b.cols())
        throw DimensionError("solve_right: column mismatch");
    auto s = solve_exact(transpose(a), transpose(b), require_unique);
    if (auto* x = solution(s))
        return transpose(*x);
    return s;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square())
        throw DimensionError("inverse: matrix not square");
    auto s = solve_exact(m, Matrix::identity(m.rows()), true);
    if (auto* x = solution(s))
        return *x;
    return std::nullopt;
}

} // namespace commext
