#include "sejc/sexpr.hpp"

#include "sejc/diagnostics.hpp"

#include <cctype>
#include <cstdlib>

namespace sejc {

namespace {

const PackageTable& default_packages() {
    static const PackageTable table;
    return table;
}

bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == '"' || c == ';' || c == '\'';
}

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
}

bool is_constituent(char c) { return !is_blank(c) && !is_delimiter(c); }

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string upcased(const std::string& s) {
    std::string out = s;
    for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

bool ci_equal(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::toupper(static_cast<unsigned char>(a[i])) !=
            std::toupper(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

} // namespace

SexprReader::SexprReader(std::string_view text, const PackageTable* packages)
    : text_(text), packages_(packages ? packages : &default_packages()) {}

bool SexprReader::at_end() const { return i_ >= text_.size(); }

char SexprReader::peek() const { return text_[i_]; }

char SexprReader::advance() {
    char c = text_[i_++];
    if (c == '\n') {
        ++line_;
        col_ = 1;
    } else {
        ++col_;
    }
    return c;
}

void SexprReader::skip_blank() {
    while (!at_end()) {
        char c = peek();
        if (is_blank(c)) {
            advance();
        } else if (c == ';') {
            while (!at_end() && peek() != '\n') advance();
        } else {
            break;
        }
    }
}

void SexprReader::fail(const std::string& message, SourcePos pos) const {
    throw ReadError(message, pos);
}

std::optional<Value> SexprReader::next() {
    skip_blank();
    if (at_end()) return std::nullopt;
    last_pos_ = here();
    return parse();
}

Value SexprReader::parse() {
    skip_blank();
    if (at_end()) fail("unexpected end of input", here());
    SourcePos pos = here();
    char c = peek();
    if (c == '(') {
        advance();
        return parse_list();
    }
    if (c == ')') fail("unexpected ')'", pos);
    if (c == '\'') {
        advance();
        Value quoted = parse();
        return Value::list({symbol_value("QUOTE", pos), quoted});
    }
    if (c == '"') {
        advance();
        return parse_string();
    }
    if (c == '#') {
        advance();
        return parse_hash();
    }
    std::string token;
    while (!at_end() && is_constituent(peek())) token += advance();
    return token_value(token, pos);
}

Value SexprReader::parse_list() {
    SourcePos open = here();
    std::vector<Value> items;
    while (true) {
        skip_blank();
        if (at_end()) fail("unterminated list", open);
        if (peek() == ')') {
            advance();
            return Value::list(items);
        }
        // a lone "." introduces the tail of a dotted pair
        if (peek() == '.' &&
            (i_ + 1 >= text_.size() || !is_constituent(text_[i_ + 1]))) {
            SourcePos dot = here();
            advance();
            if (items.empty()) fail("nothing before '.' in list", dot);
            skip_blank();
            if (at_end() || peek() == ')')
                fail("expected an expression after '.'", dot);
            Value tail = parse();
            skip_blank();
            if (at_end() || peek() != ')')
                fail("expected ')' after dotted tail", dot);
            advance();
            Value acc = tail;
            for (auto it = items.rbegin(); it != items.rend(); ++it)
                acc = Value::cons(*it, acc);
            return acc;
        }
        items.push_back(parse());
    }
}

Value SexprReader::parse_string() {
    SourcePos open = {line_, col_ - 1};
    std::string out;
    while (true) {
        if (at_end()) fail("unterminated string", open);
        char c = advance();
        if (c == '"') return Value::string(std::move(out));
        if (c == '\\') {
            if (at_end()) fail("unterminated string", open);
            char e = advance();
            if (e != '"' && e != '\\')
                fail(std::string("unknown string escape '\\") + e + "'", open);
            out += e;
        } else {
            out += c;
        }
    }
}

Value SexprReader::parse_hash() {
    SourcePos pos = {line_, col_ - 1};
    if (at_end()) fail("dangling '#'", pos);
    char kind = advance();
    if (kind == '\\') {
        if (at_end()) fail("dangling character literal", pos);
        std::string name;
        name += advance(); // first char taken literally, delimiters included
        while (!at_end() && is_constituent(peek())) name += advance();
        if (name.size() == 1) return Value::character(static_cast<unsigned char>(name[0]));
        for (unsigned code = 0; code < 256; ++code) {
            const char* n = char_name(static_cast<unsigned char>(code));
            if (n && ci_equal(name, n))
                return Value::character(static_cast<unsigned char>(code));
        }
        fail("unknown character name \"" + name + "\"", pos);
    }
    if (kind == 'j' || kind == 'J') {
        std::string digits;
        if (!at_end() && (peek() == '-' || peek() == '+')) digits += advance();
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            digits += advance();
        if (digits.empty() || digits == "-" || digits == "+")
            fail("malformed #j literal", pos);
        if (!at_end() && is_constituent(peek()))
            fail("malformed #j literal", pos);
        errno = 0;
        long long v = std::strtoll(digits.c_str(), nullptr, 10);
        if (errno != 0 || v < -2147483648LL || v > 2147483647LL)
            fail("#j literal out of 32-bit range", pos);
        return Value::jint(static_cast<std::int32_t>(v));
    }
    fail(std::string("unknown '#' syntax '#") + kind + "'", pos);
}

Value SexprReader::token_value(const std::string& token, SourcePos pos) {
    std::string_view s(token);
    bool negative = false;
    if (s.size() > 1 && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    if (all_digits(s)) {
        BigInt n{std::string(s)};
        if (negative) n = -n;
        return Value::integer(std::move(n));
    }
    std::size_t slash = s.find('/');
    if (slash != std::string_view::npos && all_digits(s.substr(0, slash)) &&
        all_digits(s.substr(slash + 1))) {
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        if (den == 0) fail("ratio with zero denominator", pos);
        return Value::ratio(negative ? -num : num, den);
    }
    return symbol_value(token, pos);
}

Value SexprReader::symbol_value(const std::string& token, SourcePos pos) {
    std::string up = upcased(token);
    if (up.empty()) fail("empty symbol", pos);
    if (up[0] == ':') {
        std::string name = up.substr(1);
        if (name.empty() || name.find(':') != std::string::npos)
            fail("malformed keyword \"" + token + "\"", pos);
        return Value::symbol("KEYWORD", name);
    }
    std::size_t sep = up.find(':');
    if (sep == std::string::npos)
        return Value::symbol(packages_->intern("ACL2", up));
    if (sep + 1 >= up.size() || up[sep + 1] != ':' || sep == 0 ||
        sep + 2 >= up.size() ||
        up.find(':', sep + 2) != std::string::npos)
        fail("malformed symbol \"" + token + "\"", pos);
    std::string pkg = up.substr(0, sep);
    std::string name = up.substr(sep + 2);
    if (!packages_->known(pkg))
        fail("unknown package \"" + pkg + "\"", pos);
    return Value::symbol(packages_->intern(pkg, name));
}

std::vector<Value> read_sexprs(std::string_view text, const PackageTable* packages) {
    SexprReader reader(text, packages);
    std::vector<Value> out;
    while (auto v = reader.next()) out.push_back(*v);
    return out;
}

Value read_one_sexpr(std::string_view text, const PackageTable* packages) {
    SexprReader reader(text, packages);
    auto v = reader.next();
    if (!v) throw ReadError("expected an expression");
    if (reader.next()) throw ReadError("unexpected trailing content");
    return *v;
}

} // namespace sejc
