#include "commext/solver.hpp"

#include "commext/subspace.hpp"

#include <sstream>

namespace commext {

const char* to_string(RejectKind k) {
    switch (k) {
    case RejectKind::UnsupportedP:
        return "UnsupportedP";
    case RejectKind::HypothesesFailed:
        return "HypothesesFailed";
    case RejectKind::NoValidPartner:
        return "NoValidPartner";
    case RejectKind::DimensionMismatch:
        return "DimensionMismatch";
    case RejectKind::NoSolution:
        return "NoSolution";
    case RejectKind::NotUnique:
        return "NotUnique";
    case RejectKind::NotCommuting:
        return "NotCommuting";
    }
    return "?";
}

std::string Reject::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (step > 0)
        os << " at step " << step;
    if (l)
        os << " (l=" << *l << ")";
    if (!detail.empty())
        os << ": " << detail;
    return os.str();
}

namespace {

struct Failure {
    Reject reject;
};

[[noreturn]] void fail(int step, RejectKind kind, std::string detail) {
    throw Failure{Reject{step, kind, std::nullopt, std::move(detail)}};
}

RejectKind kind_of(SolveError e) {
    switch (e) {
    case SolveError::NoSolution:
        return RejectKind::NoSolution;
    case SolveError::NotUnique:
        return RejectKind::NotUnique;
    case SolveError::PreconditionViolated:
        return RejectKind::NotUnique;
    }
    return RejectKind::NoSolution;
}

template <class T>
T take(Solved<T> s, int step, const char* what) {
    if (auto* v = std::get_if<T>(&s))
        return std::move(*v);
    const SolveError e = std::get<SolveError>(s);
    fail(step, kind_of(e), std::string(what) + ": " + to_string(e));
}

// Blocks of Z_i as they get determined.
struct Slot {
    std::optional<Matrix> b, c, d;
    bool done() const { return b && c && d; }
};

class Builder {
public:
    Builder(const InputTuple& input, std::size_t r) : a_(input), n_(input.n()), w_(r - input.n()), slots_(input.p()) {}

    Subspace commutator_image(std::size_t i, std::size_t j) const { return image(commutator(a_[i], a_[j])); }

    Subspace pivot_intersection(std::size_t k, std::size_t l, std::size_t m, int step) const {
        Subspace v = intersection(commutator_image(k, l), commutator_image(k, m));
        if (v.dim() != w_) {
            std::ostringstream os;
            os << "Im[A" << k + 1 << ",A" << l + 1 << "] cap Im[A" << k + 1 << ",A" << m + 1 << "] has dimension "
               << v.dim() << ", expected " << w_;
            fail(step, RejectKind::DimensionMismatch, os.str());
        }
        return v;
    }

    Split split(const Matrix& s, const Subspace& u, const Subspace& v, int step, const char* what) const {
        auto res = split_across_direct_sum(s, u, v);
        if (auto* sp = std::get_if<Split>(&res))
            return std::move(*sp);
        const SolveError e = std::get<SolveError>(res);
        fail(step, e == SolveError::PreconditionViolated ? RejectKind::DimensionMismatch : kind_of(e),
             std::string(what) + ": " + to_string(e));
    }

    // Step 1: anchor B_1 on Im[A_1,A_l] cap Im[A_1,A_m].
    void anchor(std::size_t l, std::size_t m, const ExtendOptions& options) {
        Subspace target = pivot_intersection(0, l, m, 1);
        if (options.b1_basis) {
            const Matrix& b1 = *options.b1_basis;
            if (b1.rows() != n_ || b1.cols() != w_ || rank(b1) != w_ || image(b1) != target)
                fail(1, RejectKind::DimensionMismatch, "supplied B1 does not span the anchor subspace");
            slots_[0].b = b1;
        } else {
            slots_[0].b = target.basis();
        }
    }

    // Steps 2-8 of the three-matrix routine on (A_1, A_l, A_m). With first
    // set, C_1 (step 4) and D_1 (step 8) are determined too; otherwise they
    // are already known and only P_1 is formed.
    void run(std::size_t l, std::size_t m, bool first) {
        const Matrix& b1 = *slots_[0].b;
        const Subspace im_b1 = image(b1);
        const Matrix& al = a_[l];
        const Matrix& am = a_[m];
        const Matrix& a1 = a_[0];

        // Step 2: [A_1,A_l] = B_l C_1 - B_1 C_l.
        const Subspace vl = pivot_intersection(l, 0, m, 2);
        const Split s2 = split(commutator(a1, al), vl, im_b1, 2, "split [A1,Al]");
        Matrix cl = take(solve_exact(b1, s2.second, true), 2, "B1 C_l = M2");

        // Step 3: [A_l,A_m] = B_m C_l - B_l C_m.
        const Subspace vm = pivot_intersection(m, 0, l, 3);
        const Split s3 = split(commutator(al, am), vm, vl, 3, "split [Al,Am]");
        Matrix bm = take(solve_right(cl, s3.first, true), 3, "B_m C_l = N_m");

        // Step 4: [A_1,A_m] = B_m C_1 - B_1 C_m.
        const Split s4 = split(commutator(a1, am), vm, im_b1, 4, "split [A1,Am]");
        if (first)
            slots_[0].c = take(solve_exact(bm, s4.first, true), 4, "P_m = B_m C1");

        // Step 5.
        Matrix cm = take(solve_exact(b1, s4.second, true), 5, "P1 = B1 C_m");

        // Step 6.
        Matrix bl = take(solve_right(cm, s3.second, true), 6, "N_l = B_l C_m");

        // Step 7: B_m D_l - B_l D_m = A_l B_m - A_m B_l.
        const Matrix rhs7 = al * bm - am * bl;
        const Coordinates xy = take(coordinates_in(rhs7, bm, bl), 7, "B_m X - B_l Y = A_l B_m - A_m B_l");
        Matrix dl = xy.x;
        Matrix dm = -xy.y;

        // Step 8: B_l D_1 - B_1 D_l = A_1 B_l - A_l B_1.
        if (first) {
            const Matrix rhs8 = a1 * bl - al * b1 + b1 * dl;
            slots_[0].d = take(solve_exact(bl, rhs8, true), 8, "B_l D1 = A1 B_l - A_l B1 + B1 D_l");
        }

        slots_[l] = Slot{std::move(bl), std::move(cl), std::move(dl)};
        if (!slots_[m].done())
            slots_[m] = Slot{std::move(bm), std::move(cm), std::move(dm)};
    }

    bool done(std::size_t i) const { return slots_[i].done(); }

    ExtensionTuple assemble() const {
        std::vector<Blocks> blocks;
        blocks.reserve(slots_.size());
        for (std::size_t i = 0; i < slots_.size(); ++i)
            blocks.push_back(Blocks{a_[i], *slots_[i].b, *slots_[i].c, *slots_[i].d});
        return ExtensionTuple(n_, n_ + w_, std::move(blocks));
    }

private:
    const InputTuple& a_;
    std::size_t n_;
    std::size_t w_;
    std::vector<Slot> slots_;
};

ExtendResult finish(const Builder& builder, const InputTuple& input) {
    ExtensionTuple ext = builder.assemble();
    const VerifyReport rep = verify_extension(ext, input);
    if (!rep.ok())
        return Reject{9, RejectKind::NotCommuting, std::nullopt, rep.describe()};
    return ext;
}

} // namespace

ExtendResult extend3(const Matrix& a1, const Matrix& a2, const Matrix& a3, std::size_t r,
                     const ExtendOptions& options) {
    const InputTuple input({a1, a2, a3});
    if (r < input.n())
        throw DimensionError("extend3: r must be at least n");
    const HypothesisReport hyp = check_hypotheses(input, r);
    if (!hyp.holds(0, 1, 2))
        return Reject{0, RejectKind::HypothesesFailed, std::nullopt, "H(1,2,3) does not hold at r=" + std::to_string(r)};
    try {
        Builder builder(input, r);
        builder.anchor(1, 2, options);
        builder.run(1, 2, true);
        return finish(builder, input);
    } catch (Failure& f) {
        return f.reject;
    }
}

ExtendResult extend_p(const InputTuple& input, std::size_t r, const ExtendOptions& options,
                      std::vector<TraceEvent>* trace) {
    if (input.p() < 3)
        return Reject{0, RejectKind::UnsupportedP, std::nullopt, "need at least 3 matrices, got " + std::to_string(input.p())};
    if (r < input.n())
        throw DimensionError("extend_p: r must be at least n");
    const HypothesisReport hyp = check_hypotheses(input, r);
    for (std::size_t l = 1; l < input.p(); ++l)
        if (!hyp.partner(l))
            return Reject{0, hyp.all_pairs_pass() ? RejectKind::NoValidPartner : RejectKind::HypothesesFailed, l + 1,
                          "no m with H(1," + std::to_string(l + 1) + ",m) at r=" + std::to_string(r)};

    Builder builder(input, r);
    std::size_t current = 2;
    try {
        const std::size_t m0 = *hyp.partner(1);
        builder.anchor(1, m0, options);
        builder.run(1, m0, true);
        if (trace)
            trace->push_back({2, m0 + 1, false});

        for (std::size_t l = 2; l < input.p(); ++l) {
            current = l + 1;
            if (builder.done(l)) {
                if (trace)
                    trace->push_back({l + 1, 0, true});
                continue;
            }
            const std::size_t m = *hyp.partner(l);
            builder.run(l, m, false);
            if (trace)
                trace->push_back({l + 1, m + 1, false});
        }
    } catch (Failure& f) {
        f.reject.l = current;
        return f.reject;
    }
    return finish(builder, input);
}

} // namespace commext
