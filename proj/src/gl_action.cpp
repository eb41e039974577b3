#include "commext/gl_action.hpp"

#include "commext/linalg.hpp"

namespace commext {

std::optional<BorderTransform> BorderTransform::make(Matrix m) {
    if (!m.is_square())
        return std::nullopt;
    auto inv = commext::inverse(m);
    if (!inv)
        return std::nullopt;
    return BorderTransform(std::move(m), std::move(*inv));
}

BorderTransform BorderTransform::identity(std::size_t width) {
    return BorderTransform(Matrix::identity(width), Matrix::identity(width));
}

ExtensionTuple apply_action(const ExtensionTuple& ext, const BorderTransform& t) {
    if (t.width() != ext.width())
        throw DimensionError("apply_action: transform size differs from border width");
    const Matrix& m = t.matrix();
    const Matrix& inv = t.inverse_matrix();
    std::vector<Blocks> out;
    out.reserve(ext.p());
    for (const auto& b : ext.blocks())
        out.push_back(Blocks{b.top_left, b.top_right * m, inv * b.bottom_left, inv * b.bottom_right * m});
    return ExtensionTuple(ext.n(), ext.r(), std::move(out));
}

namespace {

std::optional<BlockWitness> first_difference(const ExtensionTuple& a, const ExtensionTuple& b) {
    for (std::size_t i = 0; i < a.p(); ++i) {
        const Matrix* lhs[] = {&a[i].top_left, &a[i].top_right, &a[i].bottom_left, &a[i].bottom_right};
        const Matrix* rhs[] = {&b[i].top_left, &b[i].top_right, &b[i].bottom_left, &b[i].bottom_right};
        for (int k = 0; k < 4; ++k)
            for (std::size_t r = 0; r < lhs[k]->rows(); ++r)
                for (std::size_t c = 0; c < lhs[k]->cols(); ++c)
                    if ((*lhs[k])(r, c) != (*rhs[k])(r, c))
                        return BlockWitness{i, "ABCD"[k], r, c};
    }
    return std::nullopt;
}

} // namespace

Equivalence find_equivalence(const ExtensionTuple& e1, const ExtensionTuple& e2) {
    if (e1.n() != e2.n() || e1.r() != e2.r() || e1.p() != e2.p())
        throw DimensionError("find_equivalence: extensions have different shapes");
    Equivalence out;
    if (e1.p() == 0) {
        out.verdict = Equivalence::Verdict::Equivalent;
        out.transform = BorderTransform::identity(e1.width());
        return out;
    }

    const Matrix& b1 = e1[0].top_right;
    const Matrix& b1_other = e2[0].top_right;
    out.anchored = rank(b1) == e1.width();
    if (!out.anchored)
        out.note = "B1 lacks full column rank; best-effort anchor solve";

    auto solved = solve_exact(b1, b1_other, false);
    const Matrix* m = solution(solved);
    if (!m) {
        if (out.anchored) {
            out.verdict = Equivalence::Verdict::NotEquivalent;
            out.witness = first_difference(e1, e2);
            out.note = "Im B1 differs between the two extensions";
        } else {
            out.verdict = Equivalence::Verdict::Unknown;
        }
        return out;
    }
    auto t = BorderTransform::make(*m);
    if (!t) {
        out.verdict = out.anchored ? Equivalence::Verdict::NotEquivalent : Equivalence::Verdict::Unknown;
        out.witness = first_difference(e1, e2);
        if (out.anchored)
            out.note = "anchor transform is singular";
        return out;
    }
    const ExtensionTuple undone = apply_action(e2, t->inverse());
    if (auto w = first_difference(e1, undone)) {
        out.verdict = out.anchored ? Equivalence::Verdict::NotEquivalent : Equivalence::Verdict::Unknown;
        out.witness = w;
        return out;
    }
    out.verdict = Equivalence::Verdict::Equivalent;
    out.transform = std::move(t);
    return out;
}

} // namespace commext
