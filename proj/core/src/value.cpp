#include "sejc/value.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstring>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sejc {

namespace {

constexpr const char* kCommonLisp = "COMMON-LISP";
constexpr const char* kKeyword = "KEYWORD";

// Names of COMMON-LISP symbols that the built-in ACL2 package imports:
// t, nil, the built-in function symbols, and the surface-form heads the
// frontend recognizes. Bare mentions of these names resolve to COMMON-LISP.
const char* const kBuiltinNames[] = {
    "T", "NIL",
    // built-in functions
    "CONS", "CAR", "CDR", "CONSP", "EQUAL", "NOT", "ZP",
    "BINARY-+", "BINARY-*", "UNARY--", "UNARY-/", "<",
    "ACL2-NUMBERP", "RATIONALP", "INTEGERP", "SYMBOLP", "CHARACTERP",
    "STRINGP", "BOOLEANP", "NATP", "MV-NTH", "LEN", "CHAR-CODE",
    "CODE-CHAR", "COERCE", "INT-VALUE", "INT-ADD", "INT-MUL", "INT-VALUEP",
    "MV",
    // surface forms and structural markers
    "IF", "QUOTE", "LAMBDA", "LET", "LET*", "AND", "OR",
    "MBE", "MBT", "PROG2$", "PROGN$", "MV-LET", "RETURN-LAST",
    "DECLARE", "XARGS",
    // top-level form heads
    "DEFPACKAGE", "DEFUN", "FUNCTION-TYPE-MAIN", "FUNCTION-TYPE-OTHER",
    "DEFTEST",
};

struct NamedChar {
    unsigned char code;
    const char* name;
};

constexpr std::array<NamedChar, 7> kNamedChars = {{
    {0, "Null"},
    {9, "Tab"},
    {10, "Newline"},
    {12, "Page"},
    {13, "Return"},
    {32, "Space"},
    {127, "Rubout"},
}};

std::size_t combine_hash(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

const std::vector<std::string>& builtin_common_lisp_names() {
    static const std::vector<std::string> names(std::begin(kBuiltinNames),
                                                std::end(kBuiltinNames));
    return names;
}

bool is_builtin_common_lisp_name(const std::string& name) {
    for (const auto& n : builtin_common_lisp_names())
        if (n == name) return true;
    return false;
}

std::string to_string(const Symbol& s) { return s.pkg + "::" + s.name; }

std::size_t SymbolHash::operator()(const Symbol& s) const {
    return combine_hash(std::hash<std::string>{}(s.pkg),
                        std::hash<std::string>{}(s.name));
}

struct Value::Rep {
    std::variant<BigInt, Ratio, unsigned char, std::string, Symbol,
                 std::pair<Value, Value>, std::int32_t>
        v;
};

Value::Value() : rep_(nil().rep_) {}

Value::~Value() {
    if (!rep_) return;
    // Destroying a long unshared cons chain through the shared_ptr members
    // would recurse once per node; steal children into an explicit worklist
    // so each node dies with null links instead.
    std::vector<std::shared_ptr<const Rep>> pending;
    std::shared_ptr<const Rep> cur = std::move(rep_);
    while (true) {
        if (cur.use_count() == 1 &&
            std::holds_alternative<std::pair<Value, Value>>(cur->v)) {
            auto& pr = const_cast<std::pair<Value, Value>&>(
                std::get<std::pair<Value, Value>>(cur->v));
            if (pr.first.rep_) pending.push_back(std::move(pr.first.rep_));
            if (pr.second.rep_) pending.push_back(std::move(pr.second.rep_));
        }
        cur.reset();
        if (pending.empty()) break;
        cur = std::move(pending.back());
        pending.pop_back();
    }
}

Value Value::integer(BigInt n) {
    return Value(std::make_shared<Rep>(Rep{std::move(n)}));
}

Value Value::ratio(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("ratio with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (den == 1) return integer(std::move(num));
    return Value(std::make_shared<Rep>(Rep{Ratio{std::move(num), std::move(den)}}));
}

Value Value::character(unsigned char c) {
    return Value(std::make_shared<Rep>(Rep{c}));
}

Value Value::string(std::string s) {
    return Value(std::make_shared<Rep>(Rep{std::move(s)}));
}

Value Value::symbol(Symbol s) {
    if (s.pkg == kCommonLisp) {
        if (s.name == "NIL") return nil();
        if (s.name == "T") return t();
    }
    return Value(std::make_shared<Rep>(Rep{std::move(s)}));
}

Value Value::symbol(std::string pkg, std::string name) {
    return symbol(Symbol{std::move(pkg), std::move(name)});
}

Value Value::cons(Value car, Value cdr) {
    return Value(std::make_shared<Rep>(
        Rep{std::make_pair(std::move(car), std::move(cdr))}));
}

Value Value::jint(std::int32_t v) {
    return Value(std::make_shared<Rep>(Rep{v}));
}

Value Value::boolean(bool b) { return b ? t() : nil(); }

Value Value::t() {
    static const Value v(
        std::make_shared<Rep>(Rep{Symbol{kCommonLisp, "T"}}));
    return v;
}

Value Value::nil() {
    static const Value v(
        std::make_shared<Rep>(Rep{Symbol{kCommonLisp, "NIL"}}));
    return v;
}

Value Value::list(const std::vector<Value>& items) {
    Value acc = nil();
    for (auto it = items.rbegin(); it != items.rend(); ++it)
        acc = cons(*it, acc);
    return acc;
}

ValueKind Value::kind() const {
    switch (rep_->v.index()) {
    case 0: return ValueKind::Integer;
    case 1: return ValueKind::Ratio;
    case 2: return ValueKind::Character;
    case 3: return ValueKind::String;
    case 4: return ValueKind::Symbol;
    case 5: return ValueKind::Cons;
    default: return ValueKind::JInt;
    }
}

bool Value::is_nil() const {
    return is_symbol() && symbol_value() == Symbol{kCommonLisp, "NIL"};
}

bool Value::is_t() const {
    return is_symbol() && symbol_value() == Symbol{kCommonLisp, "T"};
}

const BigInt& Value::int_value() const { return std::get<BigInt>(rep_->v); }
const Ratio& Value::ratio_value() const { return std::get<Ratio>(rep_->v); }
unsigned char Value::char_value() const { return std::get<unsigned char>(rep_->v); }
const std::string& Value::string_value() const { return std::get<std::string>(rep_->v); }
const Symbol& Value::symbol_value() const { return std::get<Symbol>(rep_->v); }
const Value& Value::car() const { return std::get<std::pair<Value, Value>>(rep_->v).first; }
const Value& Value::cdr() const { return std::get<std::pair<Value, Value>>(rep_->v).second; }
std::int32_t Value::jint_value() const { return std::get<std::int32_t>(rep_->v); }

bool Value::operator==(const Value& o) const {
    Value x = *this;
    Value y = o;
    while (true) {
        if (x.rep_ == y.rep_) return true;
        if (x.kind() != y.kind()) return false;
        switch (x.kind()) {
        case ValueKind::Integer: return x.int_value() == y.int_value();
        case ValueKind::Ratio:
            return x.ratio_value().num == y.ratio_value().num &&
                   x.ratio_value().den == y.ratio_value().den;
        case ValueKind::Character: return x.char_value() == y.char_value();
        case ValueKind::String: return x.string_value() == y.string_value();
        case ValueKind::Symbol: return x.symbol_value() == y.symbol_value();
        case ValueKind::JInt: return x.jint_value() == y.jint_value();
        case ValueKind::Cons:
            if (!(x.car() == y.car())) return false;
            x = x.cdr();
            y = y.cdr();
            continue;
        }
    }
}

std::size_t Value::hash() const {
    std::size_t h = static_cast<std::size_t>(kind()) * 0x9e3779b9u;
    Value x = *this;
    while (true) {
        switch (x.kind()) {
        case ValueKind::Integer:
            return combine_hash(h, std::hash<std::string>{}(x.int_value().str()));
        case ValueKind::Ratio:
            return combine_hash(
                h, combine_hash(std::hash<std::string>{}(x.ratio_value().num.str()),
                                std::hash<std::string>{}(x.ratio_value().den.str())));
        case ValueKind::Character:
            return combine_hash(h, x.char_value());
        case ValueKind::String:
            return combine_hash(h, std::hash<std::string>{}(x.string_value()));
        case ValueKind::Symbol:
            return combine_hash(h, SymbolHash{}(x.symbol_value()));
        case ValueKind::JInt:
            return combine_hash(h, static_cast<std::size_t>(
                                       static_cast<std::uint32_t>(x.jint_value())));
        case ValueKind::Cons:
            h = combine_hash(h, x.car().hash());
            x = x.cdr();
            continue;
        }
    }
}

namespace {

void print_value_to(const Value& v, std::ostream& os) {
    switch (v.kind()) {
    case ValueKind::Integer:
        os << v.int_value();
        return;
    case ValueKind::Ratio:
        os << v.ratio_value().num << '/' << v.ratio_value().den;
        return;
    case ValueKind::Character: {
        os << "#\\";
        if (const char* name = char_name(v.char_value()))
            os << name;
        else
            os << v.char_value();
        return;
    }
    case ValueKind::String: {
        os << '"';
        for (char c : v.string_value()) {
            if (c == '"' || c == '\\') os << '\\';
            os << c;
        }
        os << '"';
        return;
    }
    case ValueKind::Symbol: {
        const Symbol& s = v.symbol_value();
        if (s.pkg == kKeyword) {
            os << ':' << s.name;
        } else if (s.pkg == kCommonLisp && is_builtin_common_lisp_name(s.name)) {
            os << s.name;
        } else if (s.pkg == "ACL2" && !is_builtin_common_lisp_name(s.name)) {
            os << s.name;
        } else {
            os << s.pkg << "::" << s.name;
        }
        return;
    }
    case ValueKind::JInt:
        os << "#j" << v.jint_value();
        return;
    case ValueKind::Cons: {
        os << '(';
        Value x = v;
        bool first = true;
        while (true) {
            if (!first) os << ' ';
            print_value_to(x.car(), os);
            first = false;
            const Value& rest = x.cdr();
            if (rest.is_nil()) break;
            if (!rest.is_cons()) {
                os << " . ";
                print_value_to(rest, os);
                break;
            }
            x = rest;
        }
        os << ')';
        return;
    }
    }
}

} // namespace

std::string Value::print() const {
    std::ostringstream os;
    print_value_to(*this, os);
    return os.str();
}

namespace {
// (numerator, denominator) view of a number
std::pair<BigInt, BigInt> as_fraction(const Value& v) {
    if (v.is_integer()) return {v.int_value(), BigInt(1)};
    return {v.ratio_value().num, v.ratio_value().den};
}
} // namespace

Value num_add(const Value& a, const Value& b) {
    auto [n1, d1] = as_fraction(a);
    auto [n2, d2] = as_fraction(b);
    return Value::ratio(n1 * d2 + n2 * d1, d1 * d2);
}

Value num_mul(const Value& a, const Value& b) {
    auto [n1, d1] = as_fraction(a);
    auto [n2, d2] = as_fraction(b);
    return Value::ratio(n1 * n2, d1 * d2);
}

Value num_neg(const Value& a) {
    auto [n, d] = as_fraction(a);
    return Value::ratio(-n, d);
}

Value num_recip(const Value& a) {
    auto [n, d] = as_fraction(a);
    if (n == 0) return Value::integer(0);
    return Value::ratio(d, n);
}

int num_compare(const Value& a, const Value& b) {
    auto [n1, d1] = as_fraction(a);
    auto [n2, d2] = as_fraction(b);
    BigInt lhs = n1 * d2;
    BigInt rhs = n2 * d1;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

const char* char_name(unsigned char c) {
    for (const auto& nc : kNamedChars)
        if (nc.code == c) return nc.name;
    return nullptr;
}

bool lookup_named_char(const std::string& name, unsigned char& out) {
    for (const auto& nc : kNamedChars) {
        if (name == nc.name) {
            out = nc.code;
            return true;
        }
    }
    return false;
}

} // namespace sejc
