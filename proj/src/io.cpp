#include "commext/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace commext {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column) {}

namespace {

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

struct Line {
    std::size_t number; // 1-based
    std::vector<Token> tokens;
};

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line; nullopt at end of input.
    std::optional<Line> next() {
        if (pending_) {
            auto line = std::move(pending_);
            pending_.reset();
            return line;
        }
        std::string raw;
        while (std::getline(in_, raw)) {
            ++number_;
            Line line{number_, {}};
            std::size_t i = 0;
            while (i < raw.size()) {
                while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                    ++i;
                if (i >= raw.size())
                    break;
                std::size_t start = i;
                while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                    ++i;
                line.tokens.push_back({raw.substr(start, i - start), start + 1});
            }
            if (line.tokens.empty() || line.tokens.front().text.front() == '#')
                continue;
            return line;
        }
        return std::nullopt;
    }

    void unread(Line line) { pending_ = std::move(line); }

    Line expect() {
        auto line = next();
        if (!line)
            throw ParseError(number_ + 1, 1, "unexpected end of input");
        return *line;
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
    std::optional<Line> pending_;
};

std::size_t parse_count(const Line& line, const Token& tok) {
    std::size_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(line.number, tok.column, "expected a non-negative integer, got '" + tok.text + "'");
    return value;
}

void expect_header(LineReader& reader, const char* kind) {
    const Line line = reader.expect();
    if (line.tokens.size() != 2 || line.tokens[0].text != "commext" || line.tokens[1].text != kind)
        throw ParseError(line.number, 1, std::string("expected header 'commext ") + kind + "'");
}

// "key value" with a non-negative integer value.
std::pair<std::string, std::size_t> read_field(const Line& line) {
    if (line.tokens.size() != 2)
        throw ParseError(line.number, 1, "expected '<key> <value>'");
    return {line.tokens[0].text, parse_count(line, line.tokens[1])};
}

Matrix read_matrix(LineReader& reader, std::size_t index, std::size_t size) {
    const Line head = reader.expect();
    if (head.tokens.size() != 2 || head.tokens[0].text != "matrix")
        throw ParseError(head.number, 1, "expected 'matrix " + std::to_string(index) + "'");
    if (parse_count(head, head.tokens[1]) != index)
        throw ParseError(head.number, head.tokens[1].column, "matrices must be numbered consecutively from 1");

    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        const Line row = reader.expect();
        if (row.tokens.size() != size)
            throw ParseError(row.number, 1,
                             "row has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(size));
        for (std::size_t j = 0; j < size; ++j) {
            try {
                m(i, j) = parse_scalar(row.tokens[j].text);
            } catch (const std::exception& e) {
                throw ParseError(row.number, row.tokens[j].column, e.what());
            }
        }
    }
    return m;
}

void expect_end(LineReader& reader) {
    if (auto extra = reader.next())
        throw ParseError(extra->number, 1, "trailing content after last matrix");
}

void write_matrix(std::ostream& out, std::size_t index, const Matrix& m) {
    out << "matrix " << index << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << format_scalar(m(i, j));
        out << '\n';
    }
}

} // namespace

TupleFile parse_tuple(std::istream& in) {
    LineReader reader(in);
    expect_header(reader, "tuple");
    std::optional<std::size_t> n, p, r;
    for (;;) {
        const Line line = reader.expect();
        if (line.tokens[0].text == "matrix") {
            if (!n || !p)
                throw ParseError(line.number, 1, "'n' and 'p' must precede the matrices");
            if (*p == 0)
                throw ParseError(line.number, 1, "p must be positive");
            if (r && *r < *n)
                throw ParseError(line.number, 1, "r must be at least n");
            reader.unread(line);
            std::vector<Matrix> mats;
            for (std::size_t k = 1; k <= *p; ++k)
                mats.push_back(read_matrix(reader, k, *n));
            expect_end(reader);
            return TupleFile{InputTuple(std::move(mats)), r};
        }
        auto [key, value] = read_field(line);
        if (key != "n" && key != "p" && key != "r")
            throw ParseError(line.number, 1, "unknown field '" + key + "'");
        auto& slot = key == "n" ? n : key == "p" ? p : r;
        if (slot)
            throw ParseError(line.number, 1, "duplicate field '" + key + "'");
        slot = value;
    }
}

ExtensionTuple parse_extension(std::istream& in) {
    LineReader reader(in);
    expect_header(reader, "extension");
    std::size_t fields[3];
    const char* names[] = {"n", "r", "p"};
    for (int f = 0; f < 3; ++f) {
        const Line line = reader.expect();
        auto [key, value] = read_field(line);
        if (key != names[f])
            throw ParseError(line.number, 1, std::string("expected field '") + names[f] + "'");
        fields[f] = value;
    }
    const auto [n, r, p] = std::tuple{fields[0], fields[1], fields[2]};
    if (r < n)
        throw ParseError(1, 1, "r must be at least n");
    std::vector<Matrix> full;
    for (std::size_t k = 1; k <= p; ++k)
        full.push_back(read_matrix(reader, k, r));
    expect_end(reader);
    std::vector<Blocks> blocks;
    for (const auto& z : full)
        blocks.push_back(block_split(z, n));
    return ExtensionTuple(n, r, std::move(blocks));
}

void write_tuple(std::ostream& out, const InputTuple& tuple, std::optional<std::size_t> r) {
    out << "commext tuple\n";
    out << "n " << tuple.n() << '\n';
    out << "p " << tuple.p() << '\n';
    if (r)
        out << "r " << *r << '\n';
    for (std::size_t i = 0; i < tuple.p(); ++i)
        write_matrix(out, i + 1, tuple[i]);
}

void write_extension(std::ostream& out, const ExtensionTuple& ext) {
    out << "commext extension\n";
    out << "n " << ext.n() << '\n';
    out << "r " << ext.r() << '\n';
    out << "p " << ext.p() << '\n';
    for (std::size_t i = 0; i < ext.p(); ++i)
        write_matrix(out, i + 1, ext.full(i));
}

TupleFile read_tuple_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return parse_tuple(in);
}

ExtensionTuple read_extension_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return parse_extension(in);
}

void write_tuple_file(const std::filesystem::path& path, const InputTuple& tuple, std::optional<std::size_t> r) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    write_tuple(out, tuple, r);
}

void write_extension_file(const std::filesystem::path& path, const ExtensionTuple& ext) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    write_extension(out, ext);
}

nlohmann::json to_json(const Matrix& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(format_scalar(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const HypothesisReport& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["p"] = rep.p;
    j["required_pair_rank"] = rep.required_pair_rank();
    j["required_triple_dim"] = rep.required_triple_dim();
    auto pairs = nlohmann::json::array();
    for (const auto& [kl, rk] : rep.pair_ranks)
        pairs.push_back({{"k", kl.first + 1}, {"l", kl.second + 1}, {"rank", rk}, {"pass", rk == rep.required_pair_rank()}});
    j["pairs"] = std::move(pairs);
    auto triples = nlohmann::json::array();
    for (const auto& [klm, d] : rep.triple_dims) {
        const auto [k, l, m] = klm;
        triples.push_back(
            {{"k", k + 1}, {"l", l + 1}, {"m", m + 1}, {"dim", d}, {"pass", d == rep.required_triple_dim()}});
    }
    j["triples"] = std::move(triples);
    j["overall"] = rep.overall;
    j["reason"] = rep.reason;
    return j;
}

nlohmann::json to_json(const MinimalityCertificate& cert) {
    nlohmann::json j;
    j["lower_bound"] = cert.lower_bound;
    if (cert.witness_pair)
        j["witness_pair"] = {cert.witness_pair->first + 1, cert.witness_pair->second + 1};
    else
        j["witness_pair"] = nullptr;
    j["achieved_r"] = cert.achieved_r ? nlohmann::json(*cert.achieved_r) : nlohmann::json(nullptr);
    j["tight"] = cert.tight;
    return j;
}

nlohmann::json to_json(const Reject& rej) {
    nlohmann::json j;
    j["kind"] = to_string(rej.kind);
    j["step"] = rej.step;
    j["l"] = rej.l ? nlohmann::json(*rej.l) : nlohmann::json(nullptr);
    j["detail"] = rej.detail;
    j["certifies_nonexistence"] = rej.certifies_nonexistence();
    return j;
}

nlohmann::json to_json(const VerifyReport& rep) {
    nlohmann::json j;
    j["ok"] = rep.ok();
    j["message"] = rep.describe();
    if (rep.failure == VerifyReport::Failure::NotCommuting)
        j["witness"] = {{"i", rep.i + 1}, {"j", rep.j + 1}, {"row", rep.row + 1}, {"col", rep.col + 1}};
    else if (rep.failure == VerifyReport::Failure::TopLeftMismatch)
        j["witness"] = {{"i", rep.i + 1}, {"row", rep.row + 1}, {"col", rep.col + 1}};
    return j;
}

nlohmann::json to_json(const Equivalence& eq) {
    nlohmann::json j;
    switch (eq.verdict) {
    case Equivalence::Verdict::Equivalent:
        j["verdict"] = "equivalent";
        break;
    case Equivalence::Verdict::NotEquivalent:
        j["verdict"] = "not_equivalent";
        break;
    case Equivalence::Verdict::Unknown:
        j["verdict"] = "unknown";
        break;
    }
    j["anchored"] = eq.anchored;
    j["transform"] = eq.transform ? to_json(eq.transform->matrix()) : nlohmann::json(nullptr);
    if (eq.witness)
        j["witness"] = {{"index", eq.witness->index + 1},
                        {"block", std::string(1, eq.witness->block)},
                        {"row", eq.witness->row + 1},
                        {"col", eq.witness->col + 1}};
    j["note"] = eq.note;
    return j;
}

} // namespace commext
