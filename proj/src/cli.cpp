#include "commext/cli.hpp"

#include "commext/generator.hpp"
#include "commext/gl_action.hpp"
#include "commext/io.hpp"
#include "commext/solver.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace commext {

namespace {

struct Options {
    bool json = false;

    std::string tuple_path;
    std::string ext_path;
    std::string ext2_path;
    std::string out_path;
    std::optional<std::size_t> size_r;

    bool randomized = false;
    std::uint64_t seed = 1;
    std::int64_t coeff_bound = 1000;

    std::string kind;
    std::size_t n = 0;
    std::size_t p = 3;
    std::int64_t entry_bound = 10;
    std::size_t max_retries = 32;
    std::string sets;
    std::string input_path;
    std::string out_tuple;
    std::string out_extension;
};

class Command {
public:
    Command(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    int check();
    int extend();
    int verify();
    int generate();
    int equiv();

private:
    void emit(const nlohmann::json& j) { out_ << j.dump(2) << '\n'; }
    void print_report(const HypothesisReport& rep);
    std::size_t target_size(const TupleFile& tf) const;

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

std::size_t Command::target_size(const TupleFile& tf) const {
    if (opt_.size_r)
        return *opt_.size_r;
    if (tf.r)
        return *tf.r;
    return minimality_bound(tf.tuple).lower_bound;
}

void Command::print_report(const HypothesisReport& rep) {
    out_ << "n = " << rep.n << ", r = " << rep.r << ", p = " << rep.p << '\n';
    out_ << "required: rank [A_k,A_l] = " << rep.required_pair_rank()
         << ", dim(Im[A_k,A_l] + Im[A_k,A_m]) = " << rep.required_triple_dim() << '\n';
    for (const auto& [kl, rk] : rep.pair_ranks)
        out_ << "  rank [A" << kl.first + 1 << ",A" << kl.second + 1 << "] = " << rk
             << (rk == rep.required_pair_rank() ? "  ok" : "  FAIL") << '\n';
    for (const auto& [klm, d] : rep.triple_dims) {
        const auto [k, l, m] = klm;
        out_ << "  dim(Im[A" << k + 1 << ",A" << l + 1 << "] + Im[A" << k + 1 << ",A" << m + 1 << "]) = " << d
             << (d == rep.required_triple_dim() ? "  ok" : "  FAIL") << '\n';
    }
    out_ << "gate: " << (rep.overall ? "pass" : "fail") << " (" << rep.reason << ")\n";
}

int Command::check() {
    const TupleFile tf = read_tuple_file(opt_.tuple_path);
    const std::size_t r = target_size(tf);
    if (r < tf.tuple.n()) {
        err_ << "error: r = " << r << " is smaller than n = " << tf.tuple.n() << '\n';
        return kExitError;
    }
    const HypothesisReport rep = check_hypotheses(tf.tuple, r);
    if (opt_.json)
        emit(to_json(rep));
    else
        print_report(rep);
    return rep.overall ? kExitOk : kExitFail;
}

int Command::extend() {
    const TupleFile tf = read_tuple_file(opt_.tuple_path);
    if (tf.tuple.p() < 3) {
        err_ << "error: UnsupportedP: extension needs at least 3 matrices, got " << tf.tuple.p() << '\n';
        return kExitError;
    }
    const std::size_t r = target_size(tf);
    if (r < tf.tuple.n()) {
        err_ << "error: r = " << r << " is smaller than n = " << tf.tuple.n() << '\n';
        return kExitError;
    }
    const HypothesisReport rep = check_hypotheses(tf.tuple, r);
    nlohmann::json j;
    j["r"] = r;
    j["hypotheses"] = to_json(rep);
    if (!rep.overall) {
        if (opt_.json) {
            j["status"] = "hypotheses_fail";
            emit(j);
        } else {
            print_report(rep);
            out_ << "hypotheses not satisfied at r = " << r << "; existence undecided\n";
        }
        return kExitFail;
    }

    const ExtendResult res = extend_p(tf.tuple, r);
    if (const auto* rej = std::get_if<Reject>(&res)) {
        if (opt_.json) {
            j["status"] = "reject";
            j["reject"] = to_json(*rej);
            emit(j);
        } else {
            out_ << "reject: " << rej->describe() << '\n';
            out_ << "no commuting extension of size " << r << " exists\n";
        }
        return kExitReject;
    }

    const auto& ext = std::get<ExtensionTuple>(res);
    const VerifyReport check = verify_extension(ext, tf.tuple);
    if (!check.ok()) {
        err_ << "internal error: solver output failed verification: " << check.describe() << '\n';
        return kExitError;
    }
    if (!opt_.out_path.empty())
        write_extension_file(opt_.out_path, ext);
    const MinimalityCertificate cert = minimality_bound(tf.tuple, &ext);
    if (opt_.json) {
        j["status"] = "ok";
        j["certificate"] = to_json(cert);
        j["output"] = opt_.out_path;
        emit(j);
    } else {
        out_ << "commuting extension of size " << r << " found";
        if (!opt_.out_path.empty())
            out_ << ", written to " << opt_.out_path;
        out_ << '\n';
        out_ << "lower bound n + ceil(max rank/2) = " << cert.lower_bound;
        if (cert.witness_pair)
            out_ << " (pair " << cert.witness_pair->first + 1 << "," << cert.witness_pair->second + 1 << ")";
        out_ << (cert.tight ? ", minimal" : ", not shown minimal") << '\n';
    }
    return kExitOk;
}

int Command::verify() {
    const ExtensionTuple ext = read_extension_file(opt_.ext_path);
    const TupleFile tf = read_tuple_file(opt_.tuple_path);
    if (ext.n() != tf.tuple.n() || ext.p() != tf.tuple.p()) {
        err_ << "error: extension (n=" << ext.n() << ", p=" << ext.p() << ") does not match tuple (n=" << tf.tuple.n()
             << ", p=" << tf.tuple.p() << ")\n";
        return kExitError;
    }
    const VerifyReport rep = verify_extension(ext, tf.tuple);
    std::optional<bool> randomized;
    if (opt_.randomized)
        randomized = verify_randomized(ext, opt_.seed, opt_.coeff_bound);
    const bool ok = rep.ok() && randomized.value_or(true);
    if (opt_.json) {
        nlohmann::json j = to_json(rep);
        j["ok"] = ok;
        j["randomized"] = randomized ? nlohmann::json(*randomized) : nlohmann::json(nullptr);
        emit(j);
    } else {
        out_ << "exact check: " << rep.describe() << '\n';
        if (randomized)
            out_ << "randomized check (seed " << opt_.seed << "): " << (*randomized ? "commute" : "do not commute")
                 << '\n';
    }
    return ok ? kExitOk : kExitFail;
}

std::vector<std::vector<std::size_t>> parse_sets(const std::string& text) {
    // "1,2;3,4;5,6", 1-based.
    std::vector<std::vector<std::size_t>> sets;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<std::size_t> s;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (item.empty())
                continue;
            std::size_t pos = 0;
            const long v = std::stol(item, &pos);
            if (pos != item.size() || v < 1)
                throw std::invalid_argument("bad index '" + item + "' in --sets (indices are 1-based)");
            s.push_back(static_cast<std::size_t>(v - 1));
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

int Command::generate() {
    if (opt_.kind == "nilpotent") {
        if (opt_.input_path.empty() || opt_.out_extension.empty()) {
            err_ << "error: nilpotent needs --input and --out-extension\n";
            return kExitError;
        }
        const TupleFile tf = read_tuple_file(opt_.input_path);
        const ExtensionTuple ext = generate_nilpotent(tf.tuple);
        if (!verify_extension(ext, tf.tuple).ok()) {
            err_ << "internal error: nilpotent construction failed verification\n";
            return kExitError;
        }
        write_extension_file(opt_.out_extension, ext);
        if (!opt_.out_tuple.empty())
            write_tuple_file(opt_.out_tuple, tf.tuple, ext.r());
        if (opt_.json)
            emit({{"kind", "nilpotent"}, {"n", ext.n()}, {"r", ext.r()}, {"p", ext.p()}});
        else
            out_ << "nilpotent extension of size " << ext.r() << " written to " << opt_.out_extension << '\n';
        return kExitOk;
    }

    if (opt_.out_tuple.empty()) {
        err_ << "error: --out-tuple is required\n";
        return kExitError;
    }
    if (!opt_.size_r) {
        err_ << "error: --size-r is required\n";
        return kExitError;
    }
    if (opt_.kind != "generic" && opt_.kind != "structured") {
        err_ << "error: unknown kind '" << opt_.kind << "' (generic, structured, nilpotent)\n";
        return kExitError;
    }
    const Generated gen =
        opt_.kind == "generic"
            ? generate_generic(GenericParams{opt_.n, *opt_.size_r, opt_.p, opt_.seed, opt_.entry_bound,
                                             opt_.max_retries, Requirement::Full})
            : generate_structured(StructuredParams{opt_.n, *opt_.size_r, parse_sets(opt_.sets), opt_.seed,
                                                   opt_.entry_bound, opt_.max_retries});

    if (const auto* e = std::get_if<GenerationError>(&gen)) {
        const bool failed = e->kind == GenerationError::Kind::GenerationFailed;
        if (opt_.json)
            emit({{"status", failed ? "generation_failed" : "invalid_parameters"},
                  {"reason", e->reason},
                  {"seed", opt_.seed}});
        else
            (failed ? out_ : err_) << (failed ? "generation failed: " : "error: ") << e->reason << " (seed "
                                   << opt_.seed << ")\n";
        return failed ? kExitReject : kExitError;
    }
    const auto& inst = std::get<GroundTruthInstance>(gen);
    if (!verify_extension(inst.ground_truth, inst.input).ok()) {
        err_ << "internal error: ground truth failed verification\n";
        return kExitError;
    }
    write_tuple_file(opt_.out_tuple, inst.input, inst.r);
    if (!opt_.out_extension.empty())
        write_extension_file(opt_.out_extension, inst.ground_truth);
    if (opt_.json) {
        emit({{"status", "ok"},
              {"kind", opt_.kind},
              {"seed", inst.seed},
              {"attempts", inst.attempts},
              {"hypotheses", to_json(inst.report)}});
    } else {
        out_ << opt_.kind << " instance n=" << inst.n << " r=" << inst.r << " p=" << inst.p << " seed=" << inst.seed
             << " attempts=" << inst.attempts << '\n';
        out_ << "tuple written to " << opt_.out_tuple << '\n';
        if (!opt_.out_extension.empty())
            out_ << "ground truth written to " << opt_.out_extension << '\n';
    }
    return kExitOk;
}

int Command::equiv() {
    const ExtensionTuple e1 = read_extension_file(opt_.ext_path);
    const ExtensionTuple e2 = read_extension_file(opt_.ext2_path);
    const TupleFile tf = read_tuple_file(opt_.tuple_path);
    if (e1.n() != e2.n() || e1.r() != e2.r() || e1.p() != e2.p() || e1.n() != tf.tuple.n() ||
        e1.p() != tf.tuple.p()) {
        err_ << "error: extensions and tuple have mismatched sizes\n";
        return kExitError;
    }
    for (const auto* e : {&e1, &e2}) {
        const VerifyReport rep = verify_extension(*e, tf.tuple);
        if (!rep.ok()) {
            err_ << "error: " << (e == &e1 ? opt_.ext_path : opt_.ext2_path)
                 << " is not a commuting extension of the tuple: " << rep.describe() << '\n';
            return kExitError;
        }
    }
    const Equivalence eq = find_equivalence(e1, e2);
    if (opt_.json) {
        emit(to_json(eq));
    } else {
        switch (eq.verdict) {
        case Equivalence::Verdict::Equivalent:
            out_ << "equivalent; second = rho_M(first) with M = " << to_string(eq.transform->matrix()) << '\n';
            break;
        case Equivalence::Verdict::NotEquivalent:
            out_ << "not equivalent";
            if (eq.witness)
                out_ << "; first differing block " << eq.witness->block << "_" << eq.witness->index + 1 << " at ("
                     << eq.witness->row + 1 << "," << eq.witness->col + 1 << ")";
            if (!eq.note.empty())
                out_ << " [" << eq.note << "]";
            out_ << '\n';
            break;
        case Equivalence::Verdict::Unknown:
            err_ << "undecided: " << eq.note << '\n';
            break;
        }
    }
    switch (eq.verdict) {
    case Equivalence::Verdict::Equivalent:
        return kExitOk;
    case Equivalence::Verdict::NotEquivalent:
        return kExitFail;
    case Equivalence::Verdict::Unknown:
        break;
    }
    return kExitError;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Minimal commuting extensions of matrix tuples over the rationals", "commext"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "Machine-readable JSON report");
    app.fallthrough();

    auto* check = app.add_subcommand("check", "Check rank hypotheses at size r");
    check->add_option("tuple", opt.tuple_path, "Tuple file")->required();
    check->add_option("--size-r,-r", opt.size_r, "Target extension size");

    auto* extend = app.add_subcommand("extend", "Compute a commuting extension of size r");
    extend->add_option("tuple", opt.tuple_path, "Tuple file")->required();
    extend->add_option("--size-r,-r", opt.size_r, "Target extension size");
    extend->add_option("--out,-o", opt.out_path, "Extension file to write");

    auto* verify = app.add_subcommand("verify", "Verify an extension against its tuple");
    verify->add_option("extension", opt.ext_path, "Extension file")->required();
    verify->add_option("tuple", opt.tuple_path, "Tuple file")->required();
    verify->add_flag("--randomized", opt.randomized, "Also run the two-combination randomized check");
    verify->add_option("--seed", opt.seed, "Seed for --randomized");
    verify->add_option("--coeff-bound", opt.coeff_bound, "Coefficient bound for --randomized");

    auto* generate = app.add_subcommand("generate", "Generate an instance");
    generate->add_option("kind", opt.kind, "generic | structured | nilpotent")->required();
    generate->add_option("--n", opt.n, "Input size n");
    generate->add_option("--size-r,-r", opt.size_r, "Extension size r");
    generate->add_option("--p", opt.p, "Number of matrices (generic)");
    generate->add_option("--seed", opt.seed, "Random seed");
    generate->add_option("--entry-bound", opt.entry_bound, "Entries drawn from [-bound, bound]");
    generate->add_option("--max-retries", opt.max_retries, "Rejection-sampling attempts");
    generate->add_option("--sets", opt.sets, "Structured index sets, 1-based, e.g. \"1,2;3,4;5,6\"");
    generate->add_option("--input", opt.input_path, "Tuple file (nilpotent)");
    generate->add_option("--out-tuple", opt.out_tuple, "Tuple file to write");
    generate->add_option("--out-extension", opt.out_extension, "Extension file to write");

    auto* equiv = app.add_subcommand("equiv", "Decide essential equivalence of two extensions");
    equiv->add_option("first", opt.ext_path, "Extension file")->required();
    equiv->add_option("second", opt.ext2_path, "Extension file")->required();
    equiv->add_option("tuple", opt.tuple_path, "Tuple file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    Command cmd(opt, out, err);
    try {
        if (check->parsed())
            return cmd.check();
        if (extend->parsed())
            return cmd.extend();
        if (verify->parsed())
            return cmd.verify();
        if (generate->parsed())
            return cmd.generate();
        if (equiv->parsed())
            return cmd.equiv();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

} // namespace commext
