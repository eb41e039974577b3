#ifndef COMMEXT_HYPOTHESES_HPP
#define COMMEXT_HYPOTHESES_HPP

#include "commext/extension.hpp"
#include "commext/subspace.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace commext {

/*
 * Rank data for a tuple at a target extension size r (all indices 0-based).
 *
 * pair_ranks holds rank [A_k, A_l] for k < l. triple_dims holds
 * dim(Im [A_k,A_l] + Im [A_k,A_m]) for every pivot k and partners l < m.
 * H(k,l,m) holds when the three pair ranks equal 2(r-n) and the three
 * pivot-anchored sums equal 3(r-n); it is symmetric in k, l, m.
 */
struct HypothesisReport {
    using Pair = std::pair<std::size_t, std::size_t>;
    using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t p = 0;
    std::map<Pair, std::size_t> pair_ranks;
    std::map<Triple, std::size_t> triple_dims;
    bool overall = false;
    std::string reason;

    std::size_t required_pair_rank() const { return 2 * (r - n); }
    std::size_t required_triple_dim() const { return 3 * (r - n); }

    std::size_t pair_rank(std::size_t k, std::size_t l) const;
    std::size_t triple_dim(std::size_t k, std::size_t l, std::size_t m) const;
    bool pair_passes(std::size_t k, std::size_t l) const { return pair_rank(k, l) == required_pair_rank(); }
    bool triple_passes(std::size_t k, std::size_t l, std::size_t m) const {
        return triple_dim(k, l, m) == required_triple_dim();
    }

    bool all_pairs_pass() const;
    bool all_triples_pass() const;

    bool holds(std::size_t k, std::size_t l, std::size_t m) const;

    /// Smallest m outside {0, l} with H(0, l, m).
    std::optional<std::size_t> partner(std::size_t l) const;
};

/// Fills every pair and triple entry. overall is the solver gate: p >= 3 and
/// every l >= 1 has a partner m with H(0, l, m).
HypothesisReport check_hypotheses(const InputTuple& input, std::size_t r);

struct MinimalityCertificate {
    std::size_t lower_bound = 0;
    std::optional<HypothesisReport::Pair> witness_pair;
    std::optional<std::size_t> achieved_r;
    bool tight = false;
};

/// lower_bound = n + ceil(max rank [A_k,A_l] / 2). When a verified extension
/// is supplied, tight records whether its size meets the bound.
MinimalityCertificate minimality_bound(const InputTuple& input, const ExtensionTuple* achieved = nullptr);

} // namespace commext

#endif // COMMEXT_HYPOTHESES_HPP
