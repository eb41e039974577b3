#ifndef COMMEXT_GENERATOR_HPP
#define COMMEXT_GENERATOR_HPP

#include "commext/extension.hpp"
#include "commext/hypotheses.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace commext {

/*
 * Instance built backwards from a known commuting tuple Z_i = R^-1 D_i R.
 *
 * With V' / V the first n / last r-n columns of R and U / U' the first n /
 * last r-n rows of R^-1, the blocks of Z_i are
 *
 *     A_i = U D_i V'   B_i = U D_i V
 *     C_i = U' D_i V'  D_i = U' D_i V
 *
 * and U V' = I, U' V = I, U V = 0, U' V' = 0.
 */
struct GroundTruthInstance {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t p = 0;
    std::uint64_t seed = 0;
    std::size_t attempts = 0; // samples drawn, 1 = accepted without retry

    Matrix conjugator; // R
    std::vector<Matrix> diagonals;
    ExtensionTuple ground_truth;
    InputTuple input;
    Matrix u, u_prime, v, v_prime;
    HypothesisReport report;
};

struct GenerationError {
    enum class Kind { InvalidParameters, InvalidIndexSets, GenerationFailed };
    Kind kind = Kind::GenerationFailed;
    std::string reason;
    std::size_t attempts = 0;
};

using Generated = std::variant<GroundTruthInstance, GenerationError>;

enum class Requirement {
    None,  // accept the first sample
    Pairs, // every rank [A_k,A_l] = 2(r-n)
    Full,  // pairs plus every pivot sum = 3(r-n)
};

struct GenericParams {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t p = 0;
    std::uint64_t seed = 0;
    std::int64_t entry_bound = 10;
    std::size_t max_retries = 32;
    Requirement requirement = Requirement::Full;
};

/// R with entries uniform in [-bound, bound] (resampled until invertible) and
/// D_i with distinct entries from the same range; rejection-sampled until
/// the requirement holds.
Generated generate_generic(const GenericParams& params);

struct StructuredParams {
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<std::vector<std::size_t>> index_sets; // 0-based, one per matrix
    std::uint64_t seed = 0;
    std::int64_t entry_bound = 10;
    std::size_t max_retries = 32;
};

/// D_i is the 0/1 indicator of index_sets[i]; R is resampled until every B_i
/// has rank r-n and the Im B_i are in direct sum.
Generated generate_structured(const StructuredParams& params);

/// Size-2n extension N_i = [A_i -A_i; A_i -A_i]. All products N_i N_j vanish.
ExtensionTuple generate_nilpotent(const InputTuple& input);

} // namespace commext

#endif // COMMEXT_GENERATOR_HPP
