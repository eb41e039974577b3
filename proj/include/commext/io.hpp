#ifndef COMMEXT_IO_HPP
#define COMMEXT_IO_HPP

#include "commext/extension.hpp"
#include "commext/generator.hpp"
#include "commext/gl_action.hpp"
#include "commext/hypotheses.hpp"
#include "commext/solver.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace commext {

/*
 * Line-oriented text formats. Blank lines and lines starting with '#' are
 * ignored; tokens are separated by whitespace; every entry is a decimal
 * rational "a" or "a/b".
 *
 *   commext tuple          commext extension
 *   n 3                    n 3
 *   p 3                    r 4
 *   r 4      (optional)    p 3
 *   matrix 1               matrix 1
 *   <n rows of n>          <r rows of r>
 *   matrix 2 ...           matrix 2 ...
 *
 * Writers emit exactly this layout with single spaces, so write/read/write
 * is byte-identical.
 */
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct TupleFile {
    InputTuple tuple;
    std::optional<std::size_t> r;
};

TupleFile parse_tuple(std::istream& in);
ExtensionTuple parse_extension(std::istream& in);

void write_tuple(std::ostream& out, const InputTuple& tuple, std::optional<std::size_t> r = std::nullopt);
void write_extension(std::ostream& out, const ExtensionTuple& ext);

TupleFile read_tuple_file(const std::filesystem::path& path);
ExtensionTuple read_extension_file(const std::filesystem::path& path);
void write_tuple_file(const std::filesystem::path& path, const InputTuple& tuple,
                      std::optional<std::size_t> r = std::nullopt);
void write_extension_file(const std::filesystem::path& path, const ExtensionTuple& ext);

nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const HypothesisReport& rep);
nlohmann::json to_json(const MinimalityCertificate& cert);
nlohmann::json to_json(const Reject& rej);
nlohmann::json to_json(const VerifyReport& rep);
nlohmann::json to_json(const Equivalence& eq);

} // namespace commext

#endif // COMMEXT_IO_HPP
