#include "commext/generator.hpp"

#include "commext/linalg.hpp"
#include "commext/rng.hpp"
#include "commext/subspace.hpp"

#include <algorithm>
#include <set>

namespace commext {

namespace {

GenerationError invalid(std::string reason) {
    return GenerationError{GenerationError::Kind::InvalidParameters, std::move(reason), 0};
}

std::pair<Matrix, Matrix> sample_invertible(Rng& rng, std::size_t r, std::int64_t bound) {
    for (;;) {
        Matrix m(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                m(i, j) = Scalar(rng.uniform(-bound, bound));
        if (auto inv = inverse(m))
            return {std::move(m), std::move(*inv)};
    }
}

Matrix sample_distinct_diagonal(Rng& rng, std::size_t r, std::int64_t bound) {
    std::vector<Scalar> entries;
    std::set<std::int64_t> used;
    while (entries.size() < r) {
        const std::int64_t x = rng.uniform(-bound, bound);
        if (used.insert(x).second)
            entries.emplace_back(x);
    }
    return Matrix::diagonal(entries);
}

// Builds the instance from R, R^-1 and the diagonals.
GroundTruthInstance assemble(std::size_t n, Matrix r_mat, const Matrix& r_inv, std::vector<Matrix> diagonals) {
    const std::size_t r = r_mat.rows();
    const std::size_t w = r - n;
    std::vector<Matrix> full;
    full.reserve(diagonals.size());
    for (const auto& d : diagonals)
        full.push_back(r_inv * d * r_mat);

    ExtensionTuple truth = ExtensionTuple::from_full(n, full);
    InputTuple input = truth.top_left();
    GroundTruthInstance inst{
        n,
        r,
        diagonals.size(),
        0,
        0,
        std::move(r_mat),
        std::move(diagonals),
        std::move(truth),
        std::move(input),
        r_inv.block(0, 0, n, r),
        r_inv.block(n, 0, w, r),
        Matrix(),
        Matrix(),
        {},
    };
    inst.v = inst.conjugator.block(0, n, r, w);
    inst.v_prime = inst.conjugator.block(0, 0, r, n);
    return inst;
}

bool meets(const HypothesisReport& rep, Requirement req) {
    switch (req) {
    case Requirement::None:
        return true;
    case Requirement::Pairs:
        return rep.all_pairs_pass();
    case Requirement::Full:
        return rep.all_pairs_pass() && rep.all_triples_pass();
    }
    return false;
}

} // namespace

Generated generate_generic(const GenericParams& params) {
    const auto [n, r, p] = std::tuple{params.n, params.r, params.p};
    if (n == 0 || p == 0)
        return invalid("n and p must be positive");
    if (r < n)
        return invalid("r must be at least n");
    if (params.entry_bound < 1 || static_cast<std::uint64_t>(2 * params.entry_bound + 1) < r)
        return invalid("entry bound too small for " + std::to_string(r) + " distinct diagonal entries");
    if (params.max_retries == 0)
        return invalid("max_retries must be positive");

    const std::size_t w = r - n;
    if (params.requirement != Requirement::None) {
        if (p >= 2 && 2 * w > n)
            return GenerationError{GenerationError::Kind::GenerationFailed,
                                   "2(r-n) = " + std::to_string(2 * w) + " exceeds n; pair ranks cannot be met", 0};
        if (params.requirement == Requirement::Full && p >= 3 && 3 * w > n)
            return GenerationError{GenerationError::Kind::GenerationFailed,
                                   "3(r-n) = " + std::to_string(3 * w) + " exceeds n; r must be at most 4n/3", 0};
    }

    Rng rng(params.seed);
    for (std::size_t attempt = 1; attempt <= params.max_retries; ++attempt) {
        auto [r_mat, r_inv] = sample_invertible(rng, r, params.entry_bound);
        std::vector<Matrix> diagonals;
        for (std::size_t i = 0; i < p; ++i)
            diagonals.push_back(sample_distinct_diagonal(rng, r, params.entry_bound));

        GroundTruthInstance inst = assemble(n, std::move(r_mat), r_inv, std::move(diagonals));
        inst.report = check_hypotheses(inst.input, r);
        if (meets(inst.report, params.requirement)) {
            inst.seed = params.seed;
            inst.attempts = attempt;
            return inst;
        }
    }
    return GenerationError{GenerationError::Kind::GenerationFailed,
                           "no sample met the hypotheses in " + std::to_string(params.max_retries) + " attempts",
                           params.max_retries};
}

Generated generate_structured(const StructuredParams& params) {
    const std::size_t n = params.n;
    const std::size_t r = params.r;
    const std::size_t p = params.index_sets.size();
    if (n == 0 || p == 0)
        return invalid("n and the number of index sets must be positive");
    if (r < n)
        return invalid("r must be at least n");
    if (params.entry_bound < 1 || params.max_retries == 0)
        return invalid("entry bound and max_retries must be positive");

    const std::size_t w = r - n;
    std::set<std::size_t> seen;
    for (const auto& s : params.index_sets) {
        if (s.size() != w)
            return GenerationError{GenerationError::Kind::InvalidIndexSets,
                                   "every index set must have r-n = " + std::to_string(w) + " elements", 0};
        for (std::size_t idx : s)
            if (idx >= r || !seen.insert(idx).second)
                return GenerationError{GenerationError::Kind::InvalidIndexSets,
                                       "index sets must be disjoint subsets of [r]", 0};
    }

    std::vector<Matrix> diagonals;
    for (const auto& s : params.index_sets) {
        std::vector<Scalar> d(r, Scalar(0));
        for (std::size_t idx : s)
            d[idx] = 1;
        diagonals.push_back(Matrix::diagonal(d));
    }

    Rng rng(params.seed);
    for (std::size_t attempt = 1; attempt <= params.max_retries; ++attempt) {
        auto [r_mat, r_inv] = sample_invertible(rng, r, params.entry_bound);
        GroundTruthInstance inst = assemble(n, std::move(r_mat), r_inv, diagonals);

        std::vector<Subspace> images;
        bool full_rank = true;
        for (const auto& b : inst.ground_truth.blocks()) {
            images.push_back(image(b.top_right));
            full_rank = full_rank && images.back().dim() == w;
        }
        if (full_rank && is_direct_sum(images)) {
            inst.report = check_hypotheses(inst.input, r);
            inst.seed = params.seed;
            inst.attempts = attempt;
            return inst;
        }
    }
    return GenerationError{GenerationError::Kind::GenerationFailed,
                           "no conjugator gave top-right blocks in direct sum", params.max_retries};
}

ExtensionTuple generate_nilpotent(const InputTuple& input) {
    std::vector<Blocks> blocks;
    blocks.reserve(input.p());
    for (const auto& a : input.matrices())
        blocks.push_back(Blocks{a, -a, a, -a});
    return ExtensionTuple(input.n(), 2 * input.n(), std::move(blocks));
}

} // namespace commext
