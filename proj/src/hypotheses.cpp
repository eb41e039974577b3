#include "commext/hypotheses.hpp"

#include <algorithm>

namespace commext {

std::size_t HypothesisReport::pair_rank(std::size_t k, std::size_t l) const {
    return pair_ranks.at(k < l ? Pair{k, l} : Pair{l, k});
}

std::size_t HypothesisReport::triple_dim(std::size_t k, std::size_t l, std::size_t m) const {
    return triple_dims.at(l < m ? Triple{k, l, m} : Triple{k, m, l});
}

bool HypothesisReport::all_pairs_pass() const {
    return std::all_of(pair_ranks.begin(), pair_ranks.end(),
                       [&](const auto& kv) { return kv.second == required_pair_rank(); });
}

bool HypothesisReport::all_triples_pass() const {
    return std::all_of(triple_dims.begin(), triple_dims.end(),
                       [&](const auto& kv) { return kv.second == required_triple_dim(); });
}

bool HypothesisReport::holds(std::size_t k, std::size_t l, std::size_t m) const {
    if (k == l || k == m || l == m || std::max({k, l, m}) >= p)
        return false;
    return pair_passes(k, l) && pair_passes(k, m) && pair_passes(l, m) && triple_passes(k, l, m) &&
           triple_passes(l, k, m) && triple_passes(m, k, l);
}

std::optional<std::size_t> HypothesisReport::partner(std::size_t l) const {
    for (std::size_t m = 1; m < p; ++m)
        if (m != l && holds(0, l, m))
            return m;
    return std::nullopt;
}

HypothesisReport check_hypotheses(const InputTuple& input, std::size_t r) {
    HypothesisReport rep;
    rep.n = input.n();
    rep.r = r;
    rep.p = input.p();
    if (r < input.n())
        throw DimensionError("check_hypotheses: r must be at least n");

    const std::size_t p = input.p();
    std::map<HypothesisReport::Pair, Subspace> images;
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = k + 1; l < p; ++l) {
            Subspace im = image(commutator(input[k], input[l]));
            rep.pair_ranks[{k, l}] = im.dim();
            images.emplace(HypothesisReport::Pair{k, l}, std::move(im));
        }
    auto im = [&](std::size_t a, std::size_t b) -> const Subspace& {
        return images.at(a < b ? HypothesisReport::Pair{a, b} : HypothesisReport::Pair{b, a});
    };
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l)
            for (std::size_t m = l + 1; m < p; ++m) {
                if (l == k || m == k)
                    continue;
                rep.triple_dims[{k, l, m}] = sum(im(k, l), im(k, m)).dim();
            }

    if (p < 3) {
        rep.overall = false;
        rep.reason = "unsupported p";
        return rep;
    }
    for (std::size_t l = 1; l < p; ++l)
        if (!rep.partner(l)) {
            rep.overall = false;
            rep.reason = "no m with H(1," + std::to_string(l + 1) + ",m)";
            return rep;
        }
    rep.overall = true;
    rep.reason = "ok";
    return rep;
}

MinimalityCertificate minimality_bound(const InputTuple& input, const ExtensionTuple* achieved) {
    MinimalityCertificate cert;
    std::size_t best = 0;
    for (std::size_t k = 0; k < input.p(); ++k)
        for (std::size_t l = k + 1; l < input.p(); ++l) {
            const std::size_t rk = rank(commutator(input[k], input[l]));
            if (!cert.witness_pair || rk > best) {
                best = rk;
                cert.witness_pair = HypothesisReport::Pair{k, l};
            }
        }
    cert.lower_bound = input.n() + (best + 1) / 2;
    if (achieved) {
        cert.achieved_r = achieved->r();
        cert.tight = achieved->r() == cert.lower_bound && verify_extension(*achieved, input).ok();
    }
    return cert;
}

} // namespace commext
