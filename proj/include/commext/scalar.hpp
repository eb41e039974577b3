#ifndef COMMEXT_SCALAR_HPP
#define COMMEXT_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace commext {

// Exact rational. gmpxx keeps results of arithmetic in lowest terms with a
// positive denominator; values built from raw num/den go through make_scalar.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
    if (den == 0)
        throw std::domain_error("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

// True when num/den are coprime and den > 0.
bool is_normalized(const Scalar& x);

// Parses "a" or "a/b" (optional sign on a, decimal digits only). Throws
// std::invalid_argument on malformed text and std::domain_error on b = 0.
Scalar parse_scalar(std::string_view text);

// Inverse of parse_scalar: "a" for integers, "a/b" otherwise.
std::string format_scalar(const Scalar& x);

} // namespace commext

#endif // COMMEXT_SCALAR_HPP
