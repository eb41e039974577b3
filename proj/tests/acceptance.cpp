// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "commext/cli.hpp"
#include "commext/generator.hpp"
#include "commext/gl_action.hpp"
#include "commext/io.hpp"
#include "commext/solver.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace commext;

namespace {

struct Config {
    std::size_t n, r, p;
};

constexpr Config kConfigs[] = {{3, 4, 3}, {6, 7, 3}, {6, 8, 3}, {9, 11, 4}, {9, 12, 5}};
constexpr std::uint64_t kSeeds = 50;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass)
            detail = why;
        pass = false;
    }
};

struct Solved {
    Config config;
    std::uint64_t seed;
    GroundTruthInstance inst;
    ExtensionTuple ext;
    std::vector<ExtensionTuple> reruns; // criterion 2
};

std::string tag(const Config& c, std::uint64_t seed) {
    std::ostringstream s;
    s << "(n=" << c.n << ", r=" << c.r << ", p=" << c.p << ", seed=" << seed << ")";
    return s.str();
}

ExtendResult solve(const InputTuple& input, std::size_t r, const ExtendOptions& opts = {}) {
    if (input.p() == 3)
        return extend3(input[0], input[1], input[2], r, opts);
    return extend_p(input, r, opts);
}

std::vector<Solved> g_solved;

Outcome criterion1() {
    Outcome o;
    std::size_t count = 0;
    for (const Config& c : kConfigs)
        for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
            Generated g = generate_generic(GenericParams{c.n, c.r, c.p, seed});
            if (!std::holds_alternative<GroundTruthInstance>(g)) {
                o.fail("generation failed " + tag(c, seed) + ": " + std::get<GenerationError>(g).reason);
                continue;
            }
            auto inst = std::get<GroundTruthInstance>(std::move(g));
            if (!check_hypotheses(inst.input, c.r).overall) {
                o.fail("hypotheses fail " + tag(c, seed));
                continue;
            }
            ExtendResult res = solve(inst.input, c.r);
            if (const auto* rej = std::get_if<Reject>(&res)) {
                o.fail("reject " + tag(c, seed) + ": " + rej->describe());
                continue;
            }
            auto ext = std::get<ExtensionTuple>(std::move(res));
            const VerifyReport rep = verify_extension(ext, inst.input);
            if (!rep.ok()) {
                o.fail("verification " + tag(c, seed) + ": " + rep.describe());
                continue;
            }
            g_solved.push_back(Solved{c, seed, std::move(inst), std::move(ext), {}});
            ++count;
        }
    o.detail = o.pass ? std::to_string(count) + "/250 instances extended and verified exactly" : o.detail;
    return o;
}

Outcome criterion2() {
    Outcome o;
    if (g_solved.size() != 250)
        o.fail("criterion 1 produced " + std::to_string(g_solved.size()) + " instances");
    Rng rng(2);
    std::size_t comparisons = 0;
    for (Solved& s : g_solved) {
        const std::size_t w = s.config.r - s.config.n;
        const Matrix b1 = s.ext[0].top_right;
        for (int k = 0; k < 5; ++k) {
            ExtendOptions opts;
            opts.b1_basis = b1 * oracle::random_invertible(rng, w, 5);
            ExtendResult res = solve(s.inst.input, s.config.r, opts);
            if (const auto* rej = std::get_if<Reject>(&res)) {
                o.fail("rerun rejected " + tag(s.config, s.seed) + ": " + rej->describe());
                continue;
            }
            s.reruns.push_back(std::get<ExtensionTuple>(std::move(res)));
        }
        std::vector<const ExtensionTuple*> all{&s.ext, &s.inst.ground_truth};
        for (const auto& e : s.reruns)
            all.push_back(&e);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                if (i == j)
                    continue;
                ++comparisons;
                const Equivalence eq = find_equivalence(*all[i], *all[j]);
                if (eq.verdict != Equivalence::Verdict::Equivalent || !eq.transform) {
                    o.fail("not reconciled " + tag(s.config, s.seed));
                    continue;
                }
                if (!(apply_action(*all[i], *eq.transform) == *all[j]))
                    o.fail("transform does not reconcile blocks " + tag(s.config, s.seed));
            }
    }
    if (o.pass)
        o.detail = std::to_string(comparisons) + " ordered pairs reconciled exactly (5 reruns + solver + ground truth)";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (const Solved& s : g_solved) {
        const MinimalityCertificate cert = minimality_bound(s.inst.input, &s.ext);
        if (cert.lower_bound != s.config.r || !cert.tight)
            o.fail("bound " + std::to_string(cert.lower_bound) + " not tight " + tag(s.config, s.seed));
        const HypothesisReport below = check_hypotheses(s.inst.input, s.config.r - 1);
        if (below.overall || below.all_pairs_pass())
            o.fail("check at r-1 does not fail pair ranks " + tag(s.config, s.seed));
    }
    if (o.pass)
        o.detail = std::to_string(g_solved.size()) + " tight certificates; check at r-1 fails pair ranks in every case";
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / ("commext_accept_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    Rng rng(4);
    int code2 = 0, code3 = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Matrix> mats;
        for (int i = 0; i < 3; ++i)
            mats.push_back(oracle::random_matrix(rng, 6, 6, 10, true));
        const auto path = (dir / "t.txt").string();
        write_tuple_file(path, InputTuple(mats), 7);
        std::ostringstream out, err;
        const int code = run_cli({"extend", path, "-o", (dir / "e.txt").string()}, out, err);
        if (code == kExitFail)
            ++code2;
        else if (code == kExitReject)
            ++code3;
        else
            o.fail("trial " + std::to_string(trial) + " exited " + std::to_string(code));
    }
    std::filesystem::remove_all(dir);
    if (o.pass)
        o.detail = "100/100 rejected (" + std::to_string(code2) + " exit 2, " + std::to_string(code3) + " exit 3)";
    return o;
}

// anchors[k][(l, m)] = Im[A_k,A_l] ∩ Im[A_k,A_m]; depends only on the input.
using Anchors = std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, Subspace>>>;

Anchors anchors_of(const InputTuple& input) {
    const std::size_t p = input.p();
    Anchors out(p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l)
            for (std::size_t m = l + 1; m < p; ++m)
                if (l != k && m != k)
                    out[k].push_back({{l, m},
                                      intersection(image(commutator(input[k], input[l])),
                                                   image(commutator(input[k], input[m])))});
    return out;
}

void check_blocks(const ExtensionTuple& ext, const Anchors& anchors, const std::string& where, Outcome& o) {
    const std::size_t p = ext.p();
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l) {
            const Blocks& zk = ext[k];
            const Blocks& zl = ext[l];
            if (!(commutator(zk.top_left, zl.top_left) ==
                  zl.top_right * zk.bottom_left - zk.top_right * zl.bottom_left))
                o.fail("commutator identity " + where);
            if (!(zl.top_right * zk.bottom_right - zk.top_right * zl.bottom_right ==
                  zk.top_left * zl.top_right - zl.top_left * zk.top_right))
                o.fail("bottom-right identity " + where);
        }
    for (std::size_t k = 0; k < p; ++k) {
        const Subspace ib = image(ext[k].top_right);
        for (const auto& [lm, anchor] : anchors[k])
            if (!(ib == anchor))
                o.fail("Im B_" + std::to_string(k + 1) + " differs from anchor (" + std::to_string(lm.first + 1) +
                       "," + std::to_string(lm.second + 1) + ") " + where);
    }
}

Outcome criterion5() {
    Outcome o;
    std::size_t checked = 0;
    for (const Solved& s : g_solved) {
        const Anchors anchors = anchors_of(s.inst.input);
        check_blocks(s.ext, anchors, tag(s.config, s.seed), o);
        ++checked;
        for (const auto& e : s.reruns) {
            check_blocks(e, anchors, tag(s.config, s.seed) + " rerun", o);
            ++checked;
        }
    }
    if (o.pass)
        o.detail = "identities exact on " + std::to_string(checked) + " produced extensions";
    return o;
}

Outcome criterion6() {
    Outcome o;
    Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = rng.uniform(1, 6);
        const std::size_t p = rng.uniform(1, 4);
        std::vector<Matrix> mats;
        for (std::size_t i = 0; i < p; ++i)
            mats.push_back(oracle::random_matrix(rng, n, n, 10, true));
        const InputTuple input(mats);
        const ExtensionTuple nil = generate_nilpotent(input);
        if (!verify_extension(nil, input).ok())
            o.fail("nilpotent extension fails verification, trial " + std::to_string(trial));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j)
                if (!(nil.full(i) * nil.full(j)).is_zero())
                    o.fail("nonzero product, trial " + std::to_string(trial));
    }
    if (o.pass)
        o.detail = "20/20 verified, all pairwise products zero";
    return o;
}

Outcome criterion7() {
    Outcome o;
    int passing = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Generated g = generate_generic(GenericParams{6, 8, 3, seed, 10, 32, Requirement::None});
        if (const auto* inst = std::get_if<GroundTruthInstance>(&g))
            passing += check_hypotheses(inst->input, 8).overall;
    }
    o.detail = std::to_string(passing) + "/50 first samples pass every H_klm (need >= 45)";
    if (passing < 45)
        o.pass = false;
    return o;
}

// Oracle-side containment: x lies in Im(b) iff appending x does not raise the rank.
bool oracle_contains(const Matrix& b, const Matrix& x) {
    return oracle::rank(hconcat(b, x)) == oracle::rank(b);
}

Outcome criterion8() {
    Outcome o;
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = rng.uniform(1, 5);
        const std::size_t cols = rng.uniform(1, 5);
        const bool low = trial % 2;
        const Matrix m = low ? oracle::random_low_rank(rng, rows, cols, rng.uniform(0, 3), 3)
                             : oracle::random_matrix(rng, rows, cols, 4, true);
        const std::string where = "trial " + std::to_string(trial);
        const std::size_t rk = oracle::rank(m);
        if (rank(m) != rk)
            o.fail("rank " + where);

        const Matrix k = kernel_basis(m);
        if (k.cols() != cols - rk || !(m * k).is_zero() || oracle::rank(k) != k.cols())
            o.fail("kernel " + where);

        const Matrix other = low ? oracle::random_low_rank(rng, rows, rng.uniform(1, 4), rng.uniform(0, 3), 3)
                                 : oracle::random_matrix(rng, rows, rng.uniform(1, 4), 4);
        const Subspace u = image(m);
        const Subspace v = image(other);
        const Subspace w = intersection(u, v);
        const std::size_t expected = rk + oracle::rank(other) - oracle::rank(hconcat(m, other));
        if (w.dim() != expected || oracle::rank(w.basis()) != w.dim() || !oracle_contains(m, w.basis()) ||
            !oracle_contains(other, w.basis()))
            o.fail("intersection " + where);

        if (w.dim() == 0) {
            const Matrix s = m * oracle::random_matrix(rng, cols, 2, 3) - other * oracle::random_matrix(rng, other.cols(), 2, 3);
            const auto split = split_across_direct_sum(s, u, v);
            const Split* sp = solution(split);
            if (!sp)
                o.fail("split failed " + where);
            else if (!(sp->first - sp->second == s) || !oracle_contains(m, sp->first) ||
                     !oracle_contains(other, sp->second))
                o.fail("split " + where);
        }
    }
    if (o.pass)
        o.detail = "200/200 matrices agree with the minor-enumeration oracle";
    return o;
}

Outcome criterion9() {
    Outcome o;
    constexpr std::uint64_t kVerifySeeds = 20;
    Rng rng(9);
    std::size_t caught = 0, total = 0, valid_ok = 0, valid_total = 0;
    for (int i = 0; i < 20; ++i) {
        const Solved& s = g_solved.at(static_cast<std::size_t>(i) * g_solved.size() / 20);
        for (std::uint64_t seed = 0; seed < kVerifySeeds; ++seed) {
            valid_ok += verify_randomized(s.ext, seed, 1000);
            ++valid_total;
        }
        // Tamper one entry of a border block until the exact check notices.
        ExtensionTuple bad = s.ext;
        do {
            auto full = s.ext.full_matrices();
            const std::size_t idx = rng.uniform(0, static_cast<long>(full.size()) - 1);
            const std::size_t row = rng.uniform(static_cast<long>(s.ext.n()), static_cast<long>(s.ext.r()) - 1);
            const std::size_t col = rng.uniform(0, static_cast<long>(s.ext.r()) - 1);
            full[idx](row, col) += rng.uniform(1, 5);
            bad = ExtensionTuple::from_full(s.ext.n(), full);
        } while (verify_extension(bad, s.inst.input).ok());
        for (std::uint64_t seed = 0; seed < kVerifySeeds; ++seed) {
            caught += !verify_randomized(bad, seed, 1000);
            ++total;
        }
    }
    std::ostringstream d;
    d << caught << "/" << total << " tampered (instance, seed) pairs rejected, " << valid_ok << "/" << valid_total
      << " valid accepted";
    o.detail = d.str();
    if (valid_ok != valid_total || caught * 100 < total * 95)
        o.pass = false;
    return o;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"round-trip soundness", criterion1},
        {"essential uniqueness", criterion2},
        {"minimality", criterion3},
        {"rejection of generic inputs", criterion4},
        {"block identities", criterion5},
        {"nilpotent construction", criterion6},
        {"genericity at sampled points", criterion7},
        {"kernel oracle equivalence", criterion8},
        {"randomized verifier", criterion9},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
        ++index;
    }
    return failures == 0 ? 0 : 1;
}
