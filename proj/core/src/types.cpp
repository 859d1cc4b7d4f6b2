#include "sejc/types.hpp"

#include <cctype>
#include <sstream>

namespace sejc {

namespace {

// Bit i of kSupers[t] is set iff t <= type i.
constexpr unsigned bit(SrcType t) { return 1u << static_cast<unsigned>(t); }

constexpr std::array<unsigned, 10> make_supers() {
    using T = SrcType;
    std::array<unsigned, 10> s{};
    s[static_cast<int>(T::AVALUE)] = bit(T::AVALUE);
    s[static_cast<int>(T::ANUMBER)] = bit(T::ANUMBER) | bit(T::AVALUE);
    s[static_cast<int>(T::ARATIONAL)] =
        bit(T::ARATIONAL) | bit(T::ANUMBER) | bit(T::AVALUE);
    s[static_cast<int>(T::AINTEGER)] =
        bit(T::AINTEGER) | bit(T::ARATIONAL) | bit(T::ANUMBER) | bit(T::AVALUE);
    s[static_cast<int>(T::ACONS)] = bit(T::ACONS) | bit(T::AVALUE);
    s[static_cast<int>(T::ASYMBOL)] = bit(T::ASYMBOL) | bit(T::AVALUE);
    s[static_cast<int>(T::ABOOLEAN)] =
        bit(T::ABOOLEAN) | bit(T::ASYMBOL) | bit(T::AVALUE);
    s[static_cast<int>(T::ACHARACTER)] = bit(T::ACHARACTER) | bit(T::AVALUE);
    s[static_cast<int>(T::ASTRING)] = bit(T::ASTRING) | bit(T::AVALUE);
    s[static_cast<int>(T::JINT)] = bit(T::JINT);
    return s;
}

constexpr std::array<unsigned, 10> kSupers = make_supers();

} // namespace

std::string type_keyword(SrcType t) {
    switch (t) {
    case SrcType::AVALUE: return ":avalue";
    case SrcType::ANUMBER: return ":anumber";
    case SrcType::ARATIONAL: return ":arational";
    case SrcType::AINTEGER: return ":ainteger";
    case SrcType::ACONS: return ":acons";
    case SrcType::ASYMBOL: return ":asymbol";
    case SrcType::ABOOLEAN: return ":aboolean";
    case SrcType::ACHARACTER: return ":acharacter";
    case SrcType::ASTRING: return ":astring";
    case SrcType::JINT: return ":jint";
    }
    return "?";
}

std::string type_code(SrcType t) {
    switch (t) {
    case SrcType::AVALUE: return "AV";
    case SrcType::ANUMBER: return "AN";
    case SrcType::ARATIONAL: return "AR";
    case SrcType::AINTEGER: return "AI";
    case SrcType::ACONS: return "AP";
    case SrcType::ASYMBOL: return "AY";
    case SrcType::ABOOLEAN: return "AB";
    case SrcType::ACHARACTER: return "AC";
    case SrcType::ASTRING: return "AS";
    case SrcType::JINT: return "JI";
    }
    return "?";
}

std::optional<SrcType> type_from_keyword_name(const std::string& name) {
    std::string lower;
    for (char c : name)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (SrcType t : kAllSrcTypes)
        if (type_keyword(t).substr(1) == lower) return t;
    return std::nullopt;
}

bool type_leq(SrcType a, SrcType b) {
    return (kSupers[static_cast<int>(a)] & bit(b)) != 0;
}

std::optional<SrcType> type_glb(SrcType a, SrcType b) {
    // Greatest lower bound by enumeration: the lower bound above all others.
    std::optional<SrcType> best;
    for (SrcType c : kAllSrcTypes) {
        if (!type_leq(c, a) || !type_leq(c, b)) continue;
        bool greatest = true;
        for (SrcType d : kAllSrcTypes) {
            if (type_leq(d, a) && type_leq(d, b) && !type_leq(d, c)) {
                greatest = false;
                break;
            }
        }
        if (greatest) {
            best = c;
            break;
        }
    }
    return best;
}

std::optional<SrcType> type_lub(SrcType a, SrcType b) {
    std::optional<SrcType> best;
    for (SrcType c : kAllSrcTypes) {
        if (!type_leq(a, c) || !type_leq(b, c)) continue;
        bool least = true;
        for (SrcType d : kAllSrcTypes) {
            if (type_leq(a, d) && type_leq(b, d) && !type_leq(c, d)) {
                least = false;
                break;
            }
        }
        if (least) {
            best = c;
            break;
        }
    }
    return best;
}

bool value_has_type(const Value& v, SrcType t) {
    switch (t) {
    case SrcType::AVALUE: return !v.is_jint();
    case SrcType::ANUMBER: return v.is_number();
    case SrcType::ARATIONAL: return v.is_number();
    case SrcType::AINTEGER: return v.is_integer();
    case SrcType::ACONS: return v.is_cons();
    case SrcType::ASYMBOL: return v.is_symbol();
    case SrcType::ABOOLEAN: return v.is_boolean();
    case SrcType::ACHARACTER: return v.is_character();
    case SrcType::ASTRING: return v.is_string();
    case SrcType::JINT: return v.is_jint();
    }
    return false;
}

SrcType most_specific_type(const Value& v) {
    switch (v.kind()) {
    case ValueKind::Integer: return SrcType::AINTEGER;
    case ValueKind::Ratio: return SrcType::ARATIONAL;
    case ValueKind::Character: return SrcType::ACHARACTER;
    case ValueKind::String: return SrcType::ASTRING;
    case ValueKind::Symbol:
        return v.is_boolean() ? SrcType::ABOOLEAN : SrcType::ASYMBOL;
    case ValueKind::Cons: return SrcType::ACONS;
    case ValueKind::JInt: return SrcType::JINT;
    }
    return SrcType::AVALUE;
}

std::string result_type_code(const ResultType& t) {
    if (t.scalar()) return type_code(t.single());
    std::string out = "(";
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        if (i) out += ",";
        out += type_code(t.parts[i]);
    }
    return out + ")";
}

bool result_leq(const ResultType& a, const ResultType& b) {
    if (a.parts.size() != b.parts.size()) return false;
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        if (!type_leq(a.parts[i], b.parts[i])) return false;
    return true;
}

std::optional<ResultType> result_lub(const ResultType& a, const ResultType& b) {
    if (a.parts.size() != b.parts.size()) return std::nullopt;
    ResultType out;
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        auto l = type_lub(a.parts[i], b.parts[i]);
        if (!l) return std::nullopt;
        out.parts.push_back(*l);
    }
    return out;
}

bool result_convertible(const ResultType& from, const ResultType& to) {
    if (from.parts.size() != to.parts.size()) return false;
    for (std::size_t i = 0; i < from.parts.size(); ++i) {
        if (!type_leq(from.parts[i], to.parts[i]) &&
            !type_leq(to.parts[i], from.parts[i]))
            return false;
    }
    return true;
}

std::string fn_type_string(const FnType& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.inputs.size(); ++i) {
        if (i) os << ' ';
        os << type_keyword(t.inputs[i]);
    }
    os << ") -> ";
    if (t.outputs.size() == 1) {
        os << type_keyword(t.outputs[0]);
    } else {
        os << '(';
        for (std::size_t i = 0; i < t.outputs.size(); ++i) {
            if (i) os << ' ';
            os << type_keyword(t.outputs[i]);
        }
        os << ')';
    }
    return os.str();
}

} // namespace sejc
