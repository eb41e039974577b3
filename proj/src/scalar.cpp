#include "commext/scalar.hpp"

#include <cctype>

namespace commext {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

bool is_normalized(const Scalar& x) {
    if (sgn(x.get_den()) <= 0)
        return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return g == 1;
}

Scalar parse_scalar(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den))
            throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (!all_digits(digits))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    mpz_class n(std::string(digits), 10);
    if (num.front() == '-')
        n = -n;
    mpz_class d(1);
    if (!den.empty()) {
        d = mpz_class(std::string(den), 10);
        if (d == 0)
            throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    }
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& x) {
    if (x.get_den() == 1)
        return x.get_num().get_str(10);
    return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

} // namespace commext
