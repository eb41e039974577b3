#ifndef COMMEXT_TESTS_ORACLE_HPP
#define COMMEXT_TESTS_ORACLE_HPP

// Brute-force reference computations used only by tests. Nothing here calls
// into the elimination code of the library: ranks come from exhaustive minor
// search with Leibniz determinants over integers.

#include "commext/matrix.hpp"
#include "commext/rng.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using commext::Matrix;
using commext::Scalar;

// Rows scaled by the lcm of their denominators; rank is unchanged.
inline std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return out;
}

inline mpz_class leibniz_det(const std::vector<std::vector<mpz_class>>& a, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class det = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                inversions += perm[i] > perm[j];
        mpz_class term = 1;
        for (std::size_t i = 0; i < k && term != 0; ++i)
            term *= a[rows[i]][cols[perm[i]]];
        det += (inversions % 2 ? -term : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline bool has_nonzero_minor(const std::vector<std::vector<mpz_class>>& a, std::size_t nrows, std::size_t ncols,
                              std::size_t k) {
    if (k == 0)
        return true;
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
        std::vector<std::size_t> cols(k);
        std::iota(cols.begin(), cols.end(), 0);
        do {
            if (leibniz_det(a, rows, cols) != 0)
                return true;
        } while (next_combination(cols, ncols));
    } while (next_combination(rows, nrows));
    return false;
}

/// Largest k with a nonzero k x k minor.
inline std::size_t rank(const Matrix& m) {
    const auto a = integer_rows(m);
    std::size_t k = std::min(m.rows(), m.cols());
    while (k > 0 && !has_nonzero_minor(a, m.rows(), m.cols(), k))
        --k;
    return k;
}

inline Matrix random_matrix(commext::Rng& rng, std::size_t rows, std::size_t cols, long bound, bool fractions = false) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Scalar x(rng.uniform(-bound, bound));
            if (fractions)
                x /= Scalar(rng.uniform(1, 3));
            m(i, j) = x;
        }
    return m;
}

/// Random matrix of prescribed rank at most `r`, built as a product.
inline Matrix random_low_rank(commext::Rng& rng, std::size_t rows, std::size_t cols, std::size_t r, long bound) {
    return random_matrix(rng, rows, r, bound) * random_matrix(rng, r, cols, bound);
}

inline Matrix random_invertible(commext::Rng& rng, std::size_t n, long bound) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, bound);
        if (oracle::rank(m) == n)
            return m;
    }
}

} // namespace oracle

#endif // COMMEXT_TESTS_ORACLE_HPP
