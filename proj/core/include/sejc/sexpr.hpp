#ifndef SEJC_SEXPR_HPP
#define SEJC_SEXPR_HPP

#include "sejc/diagnostics.hpp"
#include "sejc/packages.hpp"
#include "sejc/value.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sejc {

// Incremental S-expression reader over a text buffer.
//
// Syntax: integers, ratios n/d (canonicalized on read), #\c and named
// characters, double-quoted strings with \" and \\ escapes, #j<n> int
// literals, ' quote shorthand, proper and dotted lists, ; line comments.
// Bare symbol tokens are upcased and interned in the ACL2 package (which
// resolves built-in names to COMMON-LISP); :name tokens are keywords;
// pkg::name tokens resolve through the package's import list. Mentioning
// an unknown package is a syntax error, so defpackage forms must precede
// uses (the workspace parser feeds them to the table between forms).
class SexprReader {
public:
    // The table must outlive the reader. Without one, a built-ins-only
    // table is used.
    explicit SexprReader(std::string_view text,
                         const PackageTable* packages = nullptr);

    // Next toplevel S-expression, or nullopt at end of input.
    // Throws ReadError (with position) on malformed input.
    std::optional<Value> next();

    // Position just before the most recently returned expression.
    SourcePos last_pos() const { return last_pos_; }

private:
    bool at_end() const;
    char peek() const;
    char advance();
    void skip_blank();
    Value parse();
    Value parse_list();
    Value parse_hash();
    Value parse_string();
    Value token_value(const std::string& token, SourcePos pos);
    Value symbol_value(const std::string& token, SourcePos pos);
    [[noreturn]] void fail(const std::string& message, SourcePos pos) const;
    SourcePos here() const { return {line_, col_}; }

    std::string_view text_;
    const PackageTable* packages_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
    SourcePos last_pos_{};
};

// All toplevel expressions in `text`.
std::vector<Value> read_sexprs(std::string_view text,
                               const PackageTable* packages = nullptr);

// Exactly one expression; trailing content is an error.
Value read_one_sexpr(std::string_view text,
                     const PackageTable* packages = nullptr);

} // namespace sejc

#endif
