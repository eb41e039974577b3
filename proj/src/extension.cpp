#include "commext/extension.hpp"

#include "commext/rng.hpp"

#include <sstream>

namespace commext {

InputTuple::InputTuple(std::vector<Matrix> matrices) : matrices_(std::move(matrices)) {
    if (matrices_.empty())
        throw DimensionError("input tuple must contain at least one matrix");
    n_ = matrices_.front().rows();
    for (const auto& m : matrices_)
        if (m.rows() != n_ || m.cols() != n_)
            throw DimensionError("input tuple matrices must be square of a common size");
}

ExtensionTuple::ExtensionTuple(std::size_t n, std::size_t r, std::vector<Blocks> blocks)
    : n_(n), r_(r), blocks_(std::move(blocks)) {
    if (n > r)
        throw DimensionError("extension size r must be at least n");
    const std::size_t w = r - n;
    for (const auto& b : blocks_) {
        const bool ok = b.top_left.rows() == n && b.top_left.cols() == n && b.top_right.rows() == n &&
                        b.top_right.cols() == w && b.bottom_left.rows() == w && b.bottom_left.cols() == n &&
                        b.bottom_right.rows() == w && b.bottom_right.cols() == w;
        if (!ok)
            throw DimensionError("extension block has the wrong shape");
    }
}

ExtensionTuple ExtensionTuple::from_full(std::size_t n, const std::vector<Matrix>& full) {
    std::vector<Blocks> blocks;
    blocks.reserve(full.size());
    std::size_t r = full.empty() ? n : full.front().rows();
    for (const auto& z : full) {
        if (z.rows() != r || z.cols() != r)
            throw DimensionError("extension matrices must be square of a common size");
        blocks.push_back(block_split(z, n));
    }
    return ExtensionTuple(n, r, std::move(blocks));
}

std::vector<Matrix> ExtensionTuple::full_matrices() const {
    std::vector<Matrix> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_)
        out.push_back(block_assemble(b));
    return out;
}

InputTuple ExtensionTuple::top_left() const {
    std::vector<Matrix> a;
    a.reserve(blocks_.size());
    for (const auto& b : blocks_)
        a.push_back(b.top_left);
    return InputTuple(std::move(a));
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("commutator: matrices must be square of equal size");
    return a * b - b * a;
}

std::string VerifyReport::describe() const {
    std::ostringstream os;
    switch (failure) {
    case Failure::None:
        os << "ok";
        break;
    case Failure::ShapeMismatch:
        os << "shape mismatch between extension and input";
        break;
    case Failure::TopLeftMismatch:
        os << "top-left block of Z_" << i + 1 << " differs from A_" << i + 1 << " at (" << row << "," << col << ")";
        break;
    case Failure::NotCommuting:
        os << "Z_" << i + 1 << " and Z_" << j + 1 << " do not commute; first nonzero commutator entry at (" << row
           << "," << col << ")";
        break;
    }
    return os.str();
}

VerifyReport verify_extension(const ExtensionTuple& ext, const InputTuple& input) {
    VerifyReport rep;
    if (ext.p() != input.p() || ext.n() != input.n()) {
        rep.failure = VerifyReport::Failure::ShapeMismatch;
        return rep;
    }
    for (std::size_t i = 0; i < ext.p(); ++i) {
        const Matrix& a = ext[i].top_left;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (a(r, c) != input[i](r, c)) {
                    rep.failure = VerifyReport::Failure::TopLeftMismatch;
                    rep.i = i;
                    rep.row = r;
                    rep.col = c;
                    return rep;
                }
    }
    const auto z = ext.full_matrices();
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            const Matrix c = commutator(z[i], z[j]);
            for (std::size_t r = 0; r < c.rows(); ++r)
                for (std::size_t k = 0; k < c.cols(); ++k)
                    if (sgn(c(r, k)) != 0) {
                        rep.failure = VerifyReport::Failure::NotCommuting;
                        rep.i = i;
                        rep.j = j;
                        rep.row = r;
                        rep.col = k;
                        return rep;
                    }
        }
    return rep;
}

bool verify_randomized(const ExtensionTuple& ext, std::uint64_t seed, std::int64_t coeff_bound) {
    if (ext.p() <= 1)
        return true;
    Rng rng(seed);
    const auto z = ext.full_matrices();
    Matrix x(ext.r(), ext.r());
    Matrix y(ext.r(), ext.r());
    for (const auto& zi : z) {
        const Scalar cx(rng.uniform(-coeff_bound, coeff_bound));
        const Scalar cy(rng.uniform(-coeff_bound, coeff_bound));
        x = x + cx * zi;
        y = y + cy * zi;
    }
    return commutator(x, y).is_zero();
}

} // namespace commext
