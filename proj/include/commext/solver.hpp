#ifndef COMMEXT_SOLVER_HPP
#define COMMEXT_SOLVER_HPP

#include "commext/extension.hpp"
#include "commext/hypotheses.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace commext {

enum class RejectKind {
    UnsupportedP,      // fewer than three matrices
    HypothesesFailed,  // rank hypotheses do not hold at size r; says nothing about existence
    NoValidPartner,    // some l has no m with H(1,l,m)
    DimensionMismatch, // a subspace had the wrong dimension or an anchor was unusable
    NoSolution,        // a linear system at some step is inconsistent
    NotUnique,         // a block at steps 2-8 is not uniquely determined
    NotCommuting,      // final commutation check failed
};

const char* to_string(RejectKind k);

/// Reject reasons carry the step of the three-matrix routine (1..9) and, for
/// the p-matrix driver, the 1-based index l being processed when it failed.
struct Reject {
    int step = 0;
    RejectKind kind = RejectKind::HypothesesFailed;
    std::optional<std::size_t> l;
    std::string detail;

    /// True when the rejection certifies that no extension of size r exists.
    bool certifies_nonexistence() const {
        return kind != RejectKind::UnsupportedP && kind != RejectKind::HypothesesFailed &&
               kind != RejectKind::NoValidPartner;
    }
    std::string describe() const;
};

using ExtendResult = std::variant<ExtensionTuple, Reject>;

struct ExtendOptions {
    /// Replaces the canonical basis chosen at step 1. Must be n x (r-n) with
    /// the same column span as Im[A_1,A_2] cap Im[A_1,A_m].
    std::optional<Matrix> b1_basis;
};

/// One (l, m) visit of the p-matrix driver, 1-based. skipped marks an l whose
/// Z_l had already been produced as some earlier partner m.
struct TraceEvent {
    std::size_t l = 0;
    std::size_t m = 0;
    bool skipped = false;
};

/// Nine-step extension of a triple to size r.
ExtendResult extend3(const Matrix& a1, const Matrix& a2, const Matrix& a3, std::size_t r,
                     const ExtendOptions& options = {});

/// Extension of p >= 3 matrices, anchored on the shared block B_1.
ExtendResult extend_p(const InputTuple& input, std::size_t r, const ExtendOptions& options = {},
                      std::vector<TraceEvent>* trace = nullptr);

} // namespace commext

#endif // COMMEXT_SOLVER_HPP
