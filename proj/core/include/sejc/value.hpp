#ifndef SEJC_VALUE_HPP
#define SEJC_VALUE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sejc {

using BigInt = boost::multiprecision::cpp_int;

// A symbol is a package name plus a symbol name; identity is the pair.
// Import resolution happens in the reader, so two symbols are the same
// iff both components are equal.
struct Symbol {
    std::string pkg;
    std::string name;

    bool operator==(const Symbol&) const = default;
    auto operator<=>(const Symbol&) const = default;
};

std::string to_string(const Symbol& s);

struct SymbolHash {
    std::size_t operator()(const Symbol& s) const;
};

enum class ValueKind {
    Integer,
    Ratio, // only non-integer rationals; denominator 1 collapses to Integer
    Character,
    String,
    Symbol,
    Cons,
    JInt, // 32-bit two's-complement value of the Java int model
};

// Non-integer rational in canonical form: den > 1, gcd(|num|, den) == 1.
struct Ratio {
    BigInt num;
    BigInt den;
};

// Immutable source-language value with structural sharing.
class Value {
public:
    Value(); // nil
    Value(const Value&) = default;
    Value(Value&&) = default;
    Value& operator=(const Value&) = default;
    Value& operator=(Value&&) = default;
    ~Value(); // tears down long cons spines without deep recursion

    static Value integer(BigInt n);
    static Value integer(long n) { return integer(BigInt(n)); }
    // Canonicalizes: reduces by gcd, moves the sign to the numerator, and
    // returns an Integer when the reduced denominator is 1. den must be nonzero.
    static Value ratio(BigInt num, BigInt den);
    static Value character(unsigned char c);
    static Value string(std::string s);
    static Value symbol(Symbol s);
    static Value symbol(std::string pkg, std::string name);
    static Value cons(Value car, Value cdr);
    static Value jint(std::int32_t v);
    static Value boolean(bool b);
    static Value t();
    static Value nil();
    static Value list(const std::vector<Value>& items); // proper list

    ValueKind kind() const;
    bool is_integer() const { return kind() == ValueKind::Integer; }
    bool is_ratio() const { return kind() == ValueKind::Ratio; }
    bool is_number() const { return is_integer() || is_ratio(); }
    bool is_character() const { return kind() == ValueKind::Character; }
    bool is_string() const { return kind() == ValueKind::String; }
    bool is_symbol() const { return kind() == ValueKind::Symbol; }
    bool is_cons() const { return kind() == ValueKind::Cons; }
    bool is_jint() const { return kind() == ValueKind::JInt; }
    bool is_nil() const;
    bool is_t() const;
    bool is_boolean() const { return is_nil() || is_t(); }

    const BigInt& int_value() const;
    const Ratio& ratio_value() const;
    unsigned char char_value() const;
    const std::string& string_value() const;
    const Symbol& symbol_value() const;
    const Value& car() const;
    const Value& cdr() const;
    std::int32_t jint_value() const;

    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }
    std::size_t hash() const;

    // S-expression text; read_sexprs on the output yields this value back.
    std::string print() const;

private:
    struct Rep;
    explicit Value(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

struct ValueHash {
    std::size_t operator()(const Value& v) const { return v.hash(); }
};

// Exact arithmetic on numbers (Integer or Ratio values). Preconditions:
// all operands satisfy is_number().
Value num_add(const Value& a, const Value& b);
Value num_mul(const Value& a, const Value& b);
Value num_neg(const Value& a);
Value num_recip(const Value& a); // reciprocal; 0 maps to 0
int num_compare(const Value& a, const Value& b); // -1, 0, 1

// Character names recognized by the reader and used by the printer.
const char* char_name(unsigned char c); // nullptr when the char has no name
bool lookup_named_char(const std::string& name, unsigned char& out);

// Symbol names the built-in ACL2 package imports from COMMON-LISP: T, NIL,
// the built-in function names, and the surface-form heads. The reader
// resolves bare mentions of these names to COMMON-LISP.
const std::vector<std::string>& builtin_common_lisp_names();
bool is_builtin_common_lisp_name(const std::string& name);

} // namespace sejc

#endif
