#ifndef COMMEXT_LINALG_HPP
#define COMMEXT_LINALG_HPP

#include "commext/matrix.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace commext {

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots; // sorted pivot columns
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form with unit leading entries. The result is unique,
/// so equal row spaces give identical output.
Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}: one column per free variable, with a 1 in that
/// free coordinate and 0 in the other free coordinates.
Matrix kernel_basis(const Matrix& m);

enum class SolveError { NoSolution, NotUnique, PreconditionViolated };

const char* to_string(SolveError e);

template <class T>
using Solved = std::variant<T, SolveError>;

template <class T>
const T* solution(const Solved<T>& s) { return std::get_if<T>(&s); }

template <class T>
SolveError error_of(const Solved<T>& s) { return std::get<SolveError>(s); }

/// Solves a X = b. Free variables are set to zero. With require_unique a
/// consistent system whose coefficient matrix has a nontrivial kernel is
/// reported as NotUnique.
Solved<Matrix> solve_exact(const Matrix& a, const Matrix& b, bool require_unique);

/// Solves X a = b (i.e. a^T X^T = b^T).
Solved<Matrix> solve_right(const Matrix& a, const Matrix& b, bool require_unique);

std::optional<Matrix> inverse(const Matrix& m);

} // namespace commext

#endif // COMMEXT_LINALG_HPP
