#include "commext/subspace.hpp"

#include <vector>

namespace commext {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionError("subspaces live in different ambient spaces");
}

} // namespace

Subspace Subspace::span_of(const Matrix& m) {
    const Echelon e = rref(transpose(m));
    Subspace s;
    s.basis_ = transpose(e.reduced.block(0, 0, e.rank(), e.reduced.cols()));
    return s;
}

bool Subspace::contains(const Matrix& vectors) const {
    if (vectors.rows() != ambient_dim())
        throw DimensionError("contains: ambient mismatch");
    return rank(hconcat(basis_, vectors)) == dim();
}

Subspace sum(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    return Subspace::span_of(hconcat(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    // u x + v y = 0  <=>  u x = -v y lies in both.
    const Matrix k = kernel_basis(hconcat(u.basis(), v.basis()));
    const Matrix x_part = k.block(0, 0, u.dim(), k.cols());
    return Subspace::span_of(u.basis() * x_part);
}

bool is_direct_sum(std::span<const Subspace> parts) {
    if (parts.empty())
        return true;
    std::size_t total = 0;
    Matrix all(parts.front().ambient_dim(), 0);
    for (const auto& p : parts) {
        require_same_ambient(parts.front(), p);
        total += p.dim();
        all = hconcat(all, p.basis());
    }
    return rank(all) == total;
}

Solved<Coordinates> coordinates_in(const Matrix& t, const Matrix& p, const Matrix& q) {
    if (t.rows() != p.rows() || t.rows() != q.rows())
        throw DimensionError("coordinates_in: row mismatch");
    const Matrix pq = hconcat(p, q);
    if (rank(pq) != pq.cols())
        return SolveError::PreconditionViolated;
    auto s = solve_exact(pq, t, true);
    const Matrix* xy = solution(s);
    if (!xy)
        return error_of(s);
    return Coordinates{xy->block(0, 0, p.cols(), t.cols()), xy->block(p.cols(), 0, q.cols(), t.cols())};
}

Solved<Split> split_across_direct_sum(const Matrix& s, const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    if (s.rows() != u.ambient_dim())
        throw DimensionError("split_across_direct_sum: ambient mismatch");
    auto c = coordinates_in(s, u.basis(), v.basis());
    const Coordinates* xy = solution(c);
    if (!xy)
        return error_of(c);
    return Split{u.basis() * xy->x, -(v.basis() * xy->y)};
}

} // namespace commext
