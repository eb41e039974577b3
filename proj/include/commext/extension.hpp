#ifndef COMMEXT_EXTENSION_HPP
#define COMMEXT_EXTENSION_HPP

#include "commext/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace commext {

/// p square matrices of a common size n.
class InputTuple {
public:
    explicit InputTuple(std::vector<Matrix> matrices);

    std::size_t n() const { return n_; }
    std::size_t p() const { return matrices_.size(); }
    const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
    const std::vector<Matrix>& matrices() const { return matrices_; }

    friend bool operator==(const InputTuple&, const InputTuple&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Matrix> matrices_;
};

/*
 * Candidate commuting extension: for each i the size-r matrix
 *
 *     Z_i = [ A_i  B_i ]
 *           [ C_i  D_i ]
 *
 * with A_i of size n. Border blocks have width r - n (possibly 0).
 * Whether the Z_i actually commute is a property checked by
 * verify_extension, not an invariant of the type.
 */
class ExtensionTuple {
public:
    ExtensionTuple(std::size_t n, std::size_t r, std::vector<Blocks> blocks);

    /// Splits full size-r matrices at n.
    static ExtensionTuple from_full(std::size_t n, const std::vector<Matrix>& full);

    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    std::size_t width() const { return r_ - n_; }
    std::size_t p() const { return blocks_.size(); }

    const Blocks& operator[](std::size_t i) const { return blocks_[i]; }
    const std::vector<Blocks>& blocks() const { return blocks_; }

    Matrix full(std::size_t i) const { return block_assemble(blocks_[i]); }
    std::vector<Matrix> full_matrices() const;
    InputTuple top_left() const;

    friend bool operator==(const ExtensionTuple&, const ExtensionTuple&) = default;

private:
    std::size_t n_ = 0;
    std::size_t r_ = 0;
    std::vector<Blocks> blocks_;
};

/// [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

struct VerifyReport {
    enum class Failure { None, ShapeMismatch, TopLeftMismatch, NotCommuting };

    Failure failure = Failure::None;
    // First violation, 0-based. For TopLeftMismatch only i is meaningful.
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t row = 0;
    std::size_t col = 0;

    bool ok() const { return failure == Failure::None; }
    std::string describe() const;
};

/// Checks that every top-left block equals the corresponding input and that
/// all pairs Z_i Z_j = Z_j Z_i, exactly.
VerifyReport verify_extension(const ExtensionTuple& ext, const InputTuple& input);

/// Commutation check on a single pair of random combinations with integer
/// coefficients in [-coeff_bound, coeff_bound]. A false result is always
/// correct; a true result may be a false positive.
bool verify_randomized(const ExtensionTuple& ext, std::uint64_t seed, std::int64_t coeff_bound);

} // namespace commext

#endif // COMMEXT_EXTENSION_HPP
