#include "doctest.h"

#include "sejc/java_ast.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace sejc;

namespace {

JExpr nm(const std::string& s) { return JExpr::name(s); }

JExpr add(JExpr l, JExpr r) { return JExpr::binary(JBinOp::Add, l, r); }
JExpr sub(JExpr l, JExpr r) { return JExpr::binary(JBinOp::Sub, l, r); }
JExpr mul(JExpr l, JExpr r) { return JExpr::binary(JBinOp::Mul, l, r); }

// ---- A reader for the printed Java expression subset ----
//
// The printer's contract is that its output reparses, under Java's own
// grammar, to exactly the tree it printed. These tests hold it to that
// by reading the output back with a small recursive-descent parser over
// the same precedence levels and comparing trees.

struct ParseFail {};

struct Token {
    enum Kind { Int, Ident, Str, Chr, Punct, End };
    Kind kind = End;
    std::string text;
    long long int_value = 0;
    int char_value = 0;
};

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseFail{};
}

// Decodes the escape sequence at src[i] (positioned on the backslash),
// advancing i past it.
int decode_escape(const std::string& src, std::size_t& i) {
    ++i;
    if (i >= src.size()) throw ParseFail{};
    char c = src[i++];
    switch (c) {
    case 'n': return '\n';
    case 'r': return '\r';
    case 't': return '\t';
    case '\\': return '\\';
    case '\'': return '\'';
    case '"': return '"';
    case 'u': {
        if (i + 4 > src.size()) throw ParseFail{};
        int v = 0;
        for (int k = 0; k < 4; ++k) v = v * 16 + hex_value(src[i++]);
        return v;
    }
    default: throw ParseFail{};
    }
}

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c == '$';
}

bool ident_part(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (c >= '0' && c <= '9') {
            std::size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            Token t;
            t.kind = Token::Int;
            t.int_value = std::stoll(src.substr(i, j - i));
            out.push_back(t);
            i = j;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_part(src[j])) ++j;
            Token t;
            t.kind = Token::Ident;
            t.text = src.substr(i, j - i);
            out.push_back(t);
            i = j;
            continue;
        }
        if (c == '"') {
            ++i;
            Token t;
            t.kind = Token::Str;
            while (true) {
                if (i >= src.size()) throw ParseFail{};
                if (src[i] == '"') {
                    ++i;
                    break;
                }
                if (src[i] == '\\')
                    t.text.push_back(static_cast<char>(decode_escape(src, i)));
                else
                    t.text.push_back(src[i++]);
            }
            out.push_back(t);
            continue;
        }
        if (c == '\'') {
            ++i;
            if (i >= src.size()) throw ParseFail{};
            Token t;
            t.kind = Token::Chr;
            if (src[i] == '\\')
                t.char_value = decode_escape(src, i);
            else if (src[i] == '\'')
                throw ParseFail{};
            else
                t.char_value = static_cast<unsigned char>(src[i++]);
            if (i >= src.size() || src[i] != '\'') throw ParseFail{};
            ++i;
            out.push_back(t);
            continue;
        }
        auto punct = [&](std::string text) {
            Token t;
            t.kind = Token::Punct;
            t.text = std::move(text);
            out.push_back(t);
        };
        char d = i + 1 < src.size() ? src[i + 1] : '\0';
        if ((c == '|' && d == '|') || (c == '&' && d == '&') ||
            (c == '=' && d == '=') || (c == '!' && d == '=') ||
            (c == '<' && d == '=') || (c == '>' && d == '=')) {
            punct(std::string{c, d});
            i += 2;
            continue;
        }
        // Adjacent minus signs would lex as Java's decrement operator,
        // not as two negations.
        if (c == '-' && d == '-') throw ParseFail{};
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '!' ||
            c == '<' || c == '>' || c == '(' || c == ')' || c == ',' ||
            c == '.') {
            punct(std::string(1, c));
            ++i;
            continue;
        }
        throw ParseFail{};
    }
    out.push_back(Token{});
    return out;
}

class Reader {
public:
    explicit Reader(const std::string& src) : toks_(lex(src)) {}

    JExpr parse() {
        JExpr e = parse_or();
        if (tok().kind != Token::End) throw ParseFail{};
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& tok(std::size_t off = 0) const {
        std::size_t k = pos_ + off;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    bool punct(const char* p, std::size_t off = 0) const {
        return tok(off).kind == Token::Punct && tok(off).text == p;
    }
    void expect(const char* p) {
        if (!punct(p)) throw ParseFail{};
        ++pos_;
    }

    JExpr parse_or() {
        JExpr e = parse_and();
        while (punct("||")) {
            ++pos_;
            e = JExpr::binary(JBinOp::Or, e, parse_and());
        }
        return e;
    }
    JExpr parse_and() {
        JExpr e = parse_eq();
        while (punct("&&")) {
            ++pos_;
            e = JExpr::binary(JBinOp::And, e, parse_eq());
        }
        return e;
    }
    JExpr parse_eq() {
        JExpr e = parse_rel();
        while (punct("==") || punct("!=")) {
            JBinOp op = punct("==") ? JBinOp::Eq : JBinOp::Ne;
            ++pos_;
            e = JExpr::binary(op, e, parse_rel());
        }
        return e;
    }
    JExpr parse_rel() {
        JExpr e = parse_add();
        while (punct("<") || punct("<=") || punct(">") || punct(">=")) {
            JBinOp op = punct("<")    ? JBinOp::Lt
                        : punct("<=") ? JBinOp::Le
                        : punct(">")  ? JBinOp::Gt
                                      : JBinOp::Ge;
            ++pos_;
            e = JExpr::binary(op, e, parse_add());
        }
        return e;
    }
    JExpr parse_add() {
        JExpr e = parse_mul();
        while (punct("+") || punct("-")) {
            JBinOp op = punct("+") ? JBinOp::Add : JBinOp::Sub;
            ++pos_;
            e = JExpr::binary(op, e, parse_mul());
        }
        return e;
    }
    JExpr parse_mul() {
        JExpr e = parse_unary();
        while (punct("*") || punct("/")) {
            JBinOp op = punct("*") ? JBinOp::Mul : JBinOp::Div;
            ++pos_;
            e = JExpr::binary(op, e, parse_unary());
        }
        return e;
    }
    JExpr parse_unary() {
        if (punct("!")) {
            ++pos_;
            return JExpr::unary(JUnOp::Not, parse_unary());
        }
        if (punct("-")) {
            ++pos_;
            // JExpr::unary folds negated integer literals, matching how
            // Java reads -5 as a single literal value.
            return JExpr::unary(JUnOp::Neg, parse_unary());
        }
        return parse_cast();
    }
    static bool cast_follow(const Token& t) {
        switch (t.kind) {
        case Token::Int:
        case Token::Ident:
        case Token::Str:
        case Token::Chr: return true;
        case Token::Punct:
            return t.text == "(" || t.text == "!" || t.text == "-";
        default: return false;
        }
    }
    JExpr parse_cast() {
        if (punct("(") && tok(1).kind == Token::Ident && punct(")", 2) &&
            cast_follow(tok(3)) && tok(1).text != "true" &&
            tok(1).text != "false" && tok(1).text != "new") {
            std::string type = tok(1).text;
            pos_ += 3;
            return JExpr::cast(std::move(type), parse_unary());
        }
        return parse_postfix();
    }
    JExpr parse_postfix() {
        JExpr e = parse_primary();
        while (punct(".")) {
            if (tok(1).kind != Token::Ident) throw ParseFail{};
            std::string f = tok(1).text;
            pos_ += 2;
            // Instance method calls are not part of the emitted subset;
            // every call prints as a (possibly qualified) static call.
            if (punct("(")) throw ParseFail{};
            e = JExpr::field(e, std::move(f));
        }
        return e;
    }
    JExpr parse_primary() {
        const Token& t = tok();
        switch (t.kind) {
        case Token::Int: {
            long long v = t.int_value;
            ++pos_;
            return JExpr::int_lit(v);
        }
        case Token::Str: {
            std::string s = t.text;
            ++pos_;
            return JExpr::string_lit(std::move(s));
        }
        case Token::Chr: {
            int c = t.char_value;
            ++pos_;
            return JExpr::char_lit(c);
        }
        case Token::Ident: {
            std::string id = t.text;
            if (id == "true" || id == "false") {
                ++pos_;
                return JExpr::bool_lit(id == "true");
            }
            if (id == "new") {
                if (tok(1).kind != Token::Ident) throw ParseFail{};
                std::string type = tok(1).text;
                pos_ += 2;
                expect("(");
                expect(")");
                return JExpr::new_object(std::move(type));
            }
            ++pos_;
            if (punct("(")) {
                ++pos_;
                std::vector<JExpr> args;
                if (!punct(")")) {
                    args.push_back(parse_or());
                    while (punct(",")) {
                        ++pos_;
                        args.push_back(parse_or());
                    }
                }
                expect(")");
                return JExpr::call(std::move(id), std::move(args));
            }
            return JExpr::name(std::move(id));
        }
        case Token::Punct:
            if (t.text == "(") {
                ++pos_;
                JExpr e = parse_or();
                expect(")");
                return e;
            }
            throw ParseFail{};
        default: throw ParseFail{};
        }
    }
};

std::optional<JExpr> try_parse(const std::string& text) {
    try {
        return Reader(text).parse();
    } catch (const ParseFail&) {
        return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Every text obtained by deleting one matched pair of parentheses.
std::vector<std::string> paren_deletions(const std::string& s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '(') continue;
        int depth = 0;
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] == '(') {
                ++depth;
            } else if (s[j] == ')' && --depth == 0) {
                std::string t = s;
                t.erase(j, 1);
                t.erase(i, 1);
                out.push_back(std::move(t));
                break;
            }
        }
    }
    return out;
}

void check_round_trip(const JExpr& e) {
    std::string printed = print_expr(e);
    CAPTURE(printed);
    auto back = try_parse(printed);
    REQUIRE(back.has_value());
    REQUIRE(*back == e);
}

void check_parens_minimal(const JExpr& e) {
    std::string printed = print_expr(e);
    for (const std::string& weaker : paren_deletions(printed)) {
        CAPTURE(printed);
        CAPTURE(weaker);
        auto back = try_parse(weaker);
        REQUIRE((!back.has_value() || *back != e));
    }
}

// Expression constructors used by the exhaustive shape enumeration.
// Leaves are plain names, so the printed text contains no parentheses
// other than the ones the printer decided on (plus the structural ones
// of calls and object creation, which the minimality check also holds
// to account).
struct Shape {
    int arity;
    std::function<JExpr(std::vector<JExpr>)> build;
};

std::vector<Shape> all_shapes() {
    std::vector<Shape> v;
    const JBinOp bin_ops[] = {JBinOp::Add, JBinOp::Sub, JBinOp::Mul,
                              JBinOp::Div, JBinOp::And, JBinOp::Or,
                              JBinOp::Eq,  JBinOp::Ne,  JBinOp::Lt,
                              JBinOp::Le,  JBinOp::Gt,  JBinOp::Ge};
    for (JBinOp op : bin_ops)
        v.push_back({2, [op](std::vector<JExpr> a) {
                         return JExpr::binary(op, a[0], a[1]);
                     }});
    v.push_back({1, [](std::vector<JExpr> a) {
                     return JExpr::unary(JUnOp::Not, a[0]);
                 }});
    v.push_back({1, [](std::vector<JExpr> a) {
                     return JExpr::unary(JUnOp::Neg, a[0]);
                 }});
    v.push_back(
        {1, [](std::vector<JExpr> a) { return JExpr::cast("T", a[0]); }});
    v.push_back(
        {1, [](std::vector<JExpr> a) { return JExpr::field(a[0], "fld"); }});
    v.push_back(
        {1, [](std::vector<JExpr> a) { return JExpr::call("f", {a[0]}); }});
    v.push_back({2, [](std::vector<JExpr> a) {
                     return JExpr::call("g", {a[0], a[1]});
                 }});
    return v;
}

JExpr apply_at(const Shape& shape, int slot, JExpr sub) {
    std::vector<JExpr> args(static_cast<std::size_t>(shape.arity),
                            JExpr::name("x"));
    args[static_cast<std::size_t>(slot)] = std::move(sub);
    return shape.build(std::move(args));
}

JExpr random_expr(std::mt19937_64& rng, int depth) {
    auto pick = [&](int n) { return static_cast<int>(rng() % n); };
    if (depth == 0) {
        switch (pick(6)) {
        case 0: return JExpr::int_lit(pick(2001) - 1000);
        case 1: return JExpr::bool_lit(pick(2) == 0);
        case 2: return JExpr::char_lit(pick(256));
        case 3: {
            std::string s;
            int len = pick(6);
            for (int k = 0; k < len; ++k)
                s.push_back(static_cast<char>(rng() % 256));
            return JExpr::string_lit(std::move(s));
        }
        case 4: return JExpr::name(pick(2) == 0 ? "x" : "y$2");
        default: return JExpr::new_object("MV");
        }
    }
    switch (pick(5)) {
    case 0: {
        JBinOp op = static_cast<JBinOp>(pick(12));
        return JExpr::binary(op, random_expr(rng, depth - 1),
                             random_expr(rng, depth - 1));
    }
    case 1:
        return JExpr::unary(pick(2) == 0 ? JUnOp::Neg : JUnOp::Not,
                            random_expr(rng, depth - 1));
    case 2:
        return JExpr::cast(pick(2) == 0 ? "T" : "Acl2Value",
                           random_expr(rng, depth - 1));
    case 3:
        return JExpr::field(random_expr(rng, depth - 1),
                            pick(2) == 0 ? "fld" : "$1");
    default: {
        std::vector<JExpr> args;
        int n = pick(3);
        for (int k = 0; k < n; ++k)
            args.push_back(random_expr(rng, depth - 1));
        return JExpr::call("f$g", std::move(args));
    }
    }
}

} // namespace

TEST_CASE("expression printing follows Java precedence") {
    CHECK(print_expr(add(mul(JExpr::int_lit(2), nm("x")),
                         mul(nm("y"), nm("y")))) == "2 * x + y * y");
    CHECK(print_expr(mul(nm("a"), add(nm("b"), nm("c")))) == "a * (b + c)");
    CHECK(print_expr(JExpr::unary(JUnOp::Not,
                                  JExpr::call("zp", {nm("n")}))) == "!zp(n)");
    CHECK(print_expr(add(add(nm("a"), nm("b")), nm("c"))) == "a + b + c");
    CHECK(print_expr(add(nm("a"), add(nm("b"), nm("c")))) == "a + (b + c)");
    CHECK(print_expr(sub(sub(nm("a"), nm("b")), nm("c"))) == "a - b - c");
    CHECK(print_expr(sub(nm("a"), sub(nm("b"), nm("c")))) == "a - (b - c)");
    CHECK(print_expr(JExpr::binary(JBinOp::Div, nm("a"),
                                   JExpr::binary(JBinOp::Div, nm("b"),
                                                 nm("c")))) == "a / (b / c)");
    CHECK(print_expr(mul(JExpr::unary(JUnOp::Neg, nm("x")), nm("y"))) ==
          "-x * y");
    CHECK(print_expr(JExpr::unary(JUnOp::Neg, mul(nm("x"), nm("y")))) ==
          "-(x * y)");
    CHECK(print_expr(JExpr::binary(
              JBinOp::And,
              JExpr::binary(JBinOp::Or, nm("x"), nm("y")), nm("z"))) ==
          "(x || y) && z");
    CHECK(print_expr(JExpr::binary(
              JBinOp::Or, nm("x"),
              JExpr::binary(JBinOp::And, nm("y"), nm("z")))) ==
          "x || y && z");
    CHECK(print_expr(JExpr::binary(
              JBinOp::Eq, JExpr::binary(JBinOp::Lt, nm("x"), nm("y")),
              JExpr::binary(JBinOp::Lt, nm("z"), nm("w")))) ==
          "x < y == z < w");
    CHECK(print_expr(JExpr::binary(
              JBinOp::Lt, JExpr::binary(JBinOp::Eq, nm("x"), nm("y")),
              nm("z"))) == "(x == y) < z");
}

TEST_CASE("unary minus avoids the decrement token") {
    CHECK(print_expr(JExpr::unary(
              JUnOp::Neg, JExpr::unary(JUnOp::Neg, nm("x")))) == "-(-x)");
    CHECK(print_expr(sub(nm("a"), JExpr::unary(JUnOp::Neg, nm("b")))) ==
          "a - -b");
    CHECK(print_expr(sub(nm("a"), JExpr::int_lit(-5))) == "a - -5");
    CHECK(print_expr(JExpr::unary(JUnOp::Not,
                                  JExpr::unary(JUnOp::Not, nm("x")))) ==
          "!!x");
    // Negating an integer literal folds into the literal itself.
    CHECK(JExpr::unary(JUnOp::Neg, JExpr::int_lit(5)) == JExpr::int_lit(-5));
    CHECK(JExpr::unary(JUnOp::Neg, JExpr::int_lit(-5)) == JExpr::int_lit(5));
    CHECK(print_expr(JExpr::int_lit(-5)) == "-5");
}

TEST_CASE("casts fields calls and object creation print as in Java") {
    CHECK(print_expr(JExpr::binary(
              JBinOp::Ne, JExpr::cast("Acl2Value", nm("e")),
              nm("Acl2Symbol.NIL"))) == "(Acl2Value) e != Acl2Symbol.NIL");
    CHECK(print_expr(JExpr::field(JExpr::cast("MV", nm("x")), "$0")) ==
          "((MV) x).$0");
    CHECK(print_expr(JExpr::cast("int", add(nm("a"), nm("b")))) ==
          "(int) (a + b)");
    CHECK(print_expr(JExpr::cast("T", JExpr::unary(JUnOp::Neg, nm("x")))) ==
          "(T) -x");
    CHECK(print_expr(JExpr::unary(JUnOp::Neg, JExpr::cast("T", nm("x")))) ==
          "-(T) x");
    CHECK(print_expr(JExpr::call("f", {})) == "f()");
    CHECK(print_expr(JExpr::call("P.g", {nm("x"), JExpr::call("h", {nm("y")})})) ==
          "P.g(x, h(y))");
    CHECK(print_expr(JExpr::field(JExpr::new_object("MV"), "$1")) ==
          "new MV().$1");
    CHECK(print_expr(JExpr::field(add(nm("a"), nm("b")), "fld")) ==
          "(a + b).fld");
    CHECK(print_expr(JExpr::new_object("MV_AV_AV")) == "new MV_AV_AV()");
}

TEST_CASE("literals print with Java escapes") {
    CHECK(print_expr(JExpr::int_lit(0)) == "0");
    CHECK(print_expr(JExpr::int_lit(123456789012345LL)) == "123456789012345");
    CHECK(print_expr(JExpr::bool_lit(true)) == "true");
    CHECK(print_expr(JExpr::bool_lit(false)) == "false");
    CHECK(print_expr(JExpr::char_lit('a')) == "'a'");
    CHECK(print_expr(JExpr::char_lit('\n')) == "'\\n'");
    CHECK(print_expr(JExpr::char_lit('\r')) == "'\\r'");
    CHECK(print_expr(JExpr::char_lit('\t')) == "'\\t'");
    CHECK(print_expr(JExpr::char_lit('\'')) == "'\\''");
    CHECK(print_expr(JExpr::char_lit('\\')) == "'\\\\'");
    CHECK(print_expr(JExpr::char_lit('"')) == "'\"'");
    CHECK(print_expr(JExpr::char_lit(0)) == "'\\u0000'");
    CHECK(print_expr(JExpr::char_lit(200)) == "'\\u00c8'");
    CHECK(print_expr(JExpr::string_lit("")) == "\"\"");
    CHECK(print_expr(JExpr::string_lit("hello")) == "\"hello\"");
    CHECK(print_expr(JExpr::string_lit("a\"b")) == "\"a\\\"b\"");
    CHECK(print_expr(JExpr::string_lit("a'b")) == "\"a'b\"");
    CHECK(print_expr(JExpr::string_lit("a\\b")) == "\"a\\\\b\"");
    CHECK(print_expr(JExpr::string_lit("a\nb")) == "\"a\\nb\"");
    CHECK(print_expr(JExpr::string_lit(std::string(1, '\x07'))) ==
          "\"\\u0007\"");
}

TEST_CASE("default constructed nodes are defined values") {
    CHECK(JExpr{} == JExpr::int_lit(0));
    CHECK(JStmt{} == JStmt::cont());
    CHECK(JExpr::int_lit(1) != JExpr::int_lit(2));
    CHECK(JExpr::name("x") != JExpr::call("x", {}));
    CHECK(JStmt::assign("a", nm("b")) != JStmt::assign("a", nm("c")));
}

TEST_CASE("statements print one per line with four space indent") {
    std::vector<JStmt> body;
    body.push_back(JStmt::local_decl(
        "Acl2ConsPair", "z", JExpr::call("cons", {nm("x"), nm("y")})));
    body.push_back(JStmt::local_decl("Acl2Value", "$tmp1"));
    body.push_back(JStmt::if_stmt(
        JExpr::call("equal", {nm("x"), nm("y")}),
        {JStmt::assign("$tmp1", nm("x"))},
        {{JStmt::assign("$tmp1", nm("z"))}}));
    body.push_back(JStmt::return_stmt(nm("$tmp1")));
    CHECK(print_stmts(body) ==
          "Acl2ConsPair z = cons(x, y);\n"
          "Acl2Value $tmp1;\n"
          "if (equal(x, y)) {\n"
          "    $tmp1 = x;\n"
          "} else {\n"
          "    $tmp1 = z;\n"
          "}\n"
          "return $tmp1;\n");

    JStmt loop = JStmt::while_stmt(
        JExpr::bool_lit(true),
        {JStmt::if_stmt(
             JExpr::unary(JUnOp::Not, JExpr::call("zp", {nm("n")})),
             {JStmt::assign("r", JExpr::call("binary_star",
                                             {nm("n"), nm("r")})),
              JStmt::cont()}),
         JStmt::return_stmt(nm("r"))});
    CHECK(print_stmt(loop, 1) ==
          "    while (true) {\n"
          "        if (!zp(n)) {\n"
          "            r = binary_star(n, r);\n"
          "            continue;\n"
          "        }\n"
          "        return r;\n"
          "    }\n");

    CHECK(print_stmt(JStmt::expr_stmt(JExpr::call("f", {}))) == "f();\n");
}

TEST_CASE("class printing orders members and separates them") {
    JClass acl2;
    acl2.name = "ACL2";
    acl2.methods.push_back(
        {"public static",
         "Acl2Value",
         "g",
         {{"Acl2Value", "x"}, {"Acl2Value", "y"}},
         {JStmt::local_decl("Acl2ConsPair", "z",
                            JExpr::call("cons", {nm("x"), nm("y")})),
          JStmt::local_decl("Acl2Value", "$tmp1"),
          JStmt::if_stmt(JExpr::call("equal", {nm("x"), nm("y")}),
                         {JStmt::assign("$tmp1", nm("x"))},
                         {{JStmt::assign("$tmp1", nm("z"))}}),
          JStmt::return_stmt(nm("$tmp1"))}});

    JClass main;
    main.name = "Demo";
    main.nested.push_back(acl2);
    main.fields.push_back(
        {"private static final", "Acl2Integer", "$N_3",
         JExpr::call("Acl2Integer.make", {JExpr::int_lit(3)})});
    main.static_init = {{JStmt::expr_stmt(JExpr::call(
        "Acl2Environment.register", {JExpr::string_lit("ACL2")}))}};
    main.methods.push_back(
        {"public static",
         "int",
         "i",
         {{"int", "x"}, {"int", "y"}},
         {JStmt::return_stmt(add(mul(JExpr::int_lit(2), nm("x")),
                                 mul(nm("y"), nm("y"))))}});

    CHECK(print_class(main) ==
          "// Generated by sejc. Do not edit.\n"
          "\n"
          "public class Demo {\n"
          "    public static class ACL2 {\n"
          "        public static Acl2Value g(Acl2Value x, Acl2Value y) {\n"
          "            Acl2ConsPair z = cons(x, y);\n"
          "            Acl2Value $tmp1;\n"
          "            if (equal(x, y)) {\n"
          "                $tmp1 = x;\n"
          "            } else {\n"
          "                $tmp1 = z;\n"
          "            }\n"
          "            return $tmp1;\n"
          "        }\n"
          "    }\n"
          "\n"
          "    private static final Acl2Integer $N_3 = Acl2Integer.make(3);\n"
          "\n"
          "    static {\n"
          "        Acl2Environment.register(\"ACL2\");\n"
          "    }\n"
          "\n"
          "    public static int i(int x, int y) {\n"
          "        return 2 * x + y * y;\n"
          "    }\n"
          "}\n");
}

TEST_CASE("a unit prints one file per class with matching names") {
    JavaUnit unit;
    unit.main_class.name = "Demo";
    unit.env_class.name = "DemoEnvironment";

    auto files = print_unit(unit);
    REQUIRE(files.size() == 2);
    CHECK(files[0].first == "Demo.java");
    CHECK(files[1].first == "DemoEnvironment.java");
    CHECK(files[0].second.rfind("// Generated by sejc. Do not edit.\n", 0) ==
          0);

    unit.test_class = JClass{};
    unit.test_class->name = "DemoTests";
    files = print_unit(unit);
    REQUIRE(files.size() == 3);
    CHECK(files[2].first == "DemoTests.java");
}

TEST_CASE("the reader recognizes the printed subset") {
    CHECK(*try_parse("x + y * z") ==
          add(nm("x"), mul(nm("y"), nm("z"))));
    CHECK(*try_parse("a + b + c") == add(add(nm("a"), nm("b")), nm("c")));
    CHECK(*try_parse("(T) x") == JExpr::cast("T", nm("x")));
    CHECK(*try_parse("(a) + b") == add(nm("a"), nm("b")));
    CHECK(*try_parse("f(x, y)") == JExpr::call("f", {nm("x"), nm("y")}));
    CHECK(*try_parse("new MV()") == JExpr::new_object("MV"));
    CHECK(*try_parse("x.fld.fld") ==
          JExpr::field(JExpr::field(nm("x"), "fld"), "fld"));
    CHECK(*try_parse("-5") == JExpr::int_lit(-5));
    CHECK(*try_parse("'\\u00c8'") == JExpr::char_lit(200));
    CHECK(!try_parse("--x").has_value());
    CHECK(!try_parse("x +").has_value());
    CHECK(!try_parse("x y").has_value());
    CHECK(!try_parse("T x").has_value());
    CHECK(!try_parse("").has_value());
}

TEST_CASE("printed expressions reparse to the identical tree") {
    std::vector<Shape> shapes = all_shapes();
    for (const Shape& shape : shapes) {
        std::vector<JExpr> leaves(static_cast<std::size_t>(shape.arity),
                                  JExpr::name("x"));
        check_round_trip(shape.build(leaves));
    }
    for (const Shape& root : shapes)
        for (int slot = 0; slot < root.arity; ++slot)
            for (const Shape& child : shapes) {
                std::vector<JExpr> leaves(
                    static_cast<std::size_t>(child.arity), JExpr::name("x"));
                check_round_trip(apply_at(root, slot, child.build(leaves)));
            }
}

TEST_CASE("every depth three shape round trips with minimal parens") {
    std::vector<Shape> shapes = all_shapes();
    for (const Shape& root : shapes)
        for (int rslot = 0; rslot < root.arity; ++rslot)
            for (const Shape& child : shapes)
                for (int cslot = 0; cslot < child.arity; ++cslot)
                    for (const Shape& grand : shapes) {
                        std::vector<JExpr> leaves(
                            static_cast<std::size_t>(grand.arity),
                            JExpr::name("x"));
                        JExpr e = apply_at(
                            root, rslot,
                            apply_at(child, cslot, grand.build(leaves)));
                        check_round_trip(e);
                        check_parens_minimal(e);
                    }
}

TEST_CASE("random deep expressions survive a print and reparse cycle") {
    std::mt19937_64 rng(20260814);
    for (int k = 0; k < 500; ++k) check_round_trip(random_expr(rng, 4));
}
