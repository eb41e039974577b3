#ifndef COMMEXT_SUBSPACE_HPP
#define COMMEXT_SUBSPACE_HPP

#include "commext/linalg.hpp"

#include <span>
#include <utility>

namespace commext {

/*
 * A subspace of K^n stored by its canonical basis: the transpose of the
 * nonzero rows of rref(spanning_set^T). Two values compare equal exactly
 * when they describe the same subspace.
 */
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : basis_(ambient_dim, 0) {}

    /// Canonical basis of the column span of m.
    static Subspace span_of(const Matrix& m);

    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& vectors) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace() = default;
    Matrix basis_;
};

inline Subspace image(const Matrix& m) { return Subspace::span_of(m); }

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);
bool is_direct_sum(std::span<const Subspace> parts);

struct Coordinates {
    Matrix x;
    Matrix y;
};

/// The unique (X, Y) with t = p X + q Y. Requires p and q of full column rank
/// with images in direct sum (checked: PreconditionViolated otherwise).
Solved<Coordinates> coordinates_in(const Matrix& t, const Matrix& p, const Matrix& q);

struct Split {
    Matrix first;  // image inside u
    Matrix second; // image inside v
};

/// The unique pair with s = first - second, Im(first) in u, Im(second) in v.
Solved<Split> split_across_direct_sum(const Matrix& s, const Subspace& u, const Subspace& v);

} // namespace commext

#endif // COMMEXT_SUBSPACE_HPP
