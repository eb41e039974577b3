#ifndef COMMEXT_GL_ACTION_HPP
#define COMMEXT_GL_ACTION_HPP

#include "commext/extension.hpp"

#include <optional>
#include <string>

namespace commext {

/// Invertible matrix M of size r - n acting on border blocks.
class BorderTransform {
public:
    /// nullopt when m is singular or not square.
    static std::optional<BorderTransform> make(Matrix m);
    static BorderTransform identity(std::size_t width);

    const Matrix& matrix() const { return m_; }
    const Matrix& inverse_matrix() const { return inv_; }
    std::size_t width() const { return m_.rows(); }
    BorderTransform inverse() const { return BorderTransform(inv_, m_); }

    friend bool operator==(const BorderTransform& a, const BorderTransform& b) { return a.m_ == b.m_; }

private:
    BorderTransform(Matrix m, Matrix inv) : m_(std::move(m)), inv_(std::move(inv)) {}
    Matrix m_;
    Matrix inv_;
};

/// (A, B, C, D) -> (A, B M, M^-1 C, M^-1 D M) on every matrix of the tuple.
ExtensionTuple apply_action(const ExtensionTuple& ext, const BorderTransform& t);

struct BlockWitness {
    std::size_t index = 0; // 0-based matrix index
    char block = 'A';      // 'A', 'B', 'C' or 'D'
    std::size_t row = 0;
    std::size_t col = 0;
};

struct Equivalence {
    enum class Verdict { Equivalent, NotEquivalent, Unknown };

    Verdict verdict = Verdict::Unknown;
    std::optional<BorderTransform> transform; // e2 = apply_action(e1, transform)
    std::optional<BlockWitness> witness;
    bool anchored = true; // false when B_1 of e1 lacks full column rank
    std::string note;
};

/// Decides whether e2 = rho_M(e1) for some invertible M by solving
/// B'_1 = B_1 M and comparing all blocks after undoing M.
Equivalence find_equivalence(const ExtensionTuple& e1, const ExtensionTuple& e2);

} // namespace commext

#endif // COMMEXT_GL_ACTION_HPP
