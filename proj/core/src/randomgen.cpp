#include "sejc/randomgen.hpp"

namespace sejc {

namespace {

int pick(std::mt19937& rng, int n) { return static_cast<int>(rng() % n); }

Value random_integer(std::mt19937& rng) {
    switch (pick(rng, 10)) {
    case 0: return Value::integer(0);
    case 1: { // big 64-bit-ish
        long v = static_cast<long>(rng()) * 977 + pick(rng, 977);
        return Value::integer(v);
    }
    case 2: { // beyond 64 bits
        BigInt v{"123456789012345678901234567890"};
        v += pick(rng, 1000);
        if (pick(rng, 2)) v = -v;
        return Value::integer(std::move(v));
    }
    default:
        return Value::integer(pick(rng, 41) - 20);
    }
}

Value random_rational(std::mt19937& rng) {
    if (pick(rng, 2)) return random_integer(rng);
    long num = pick(rng, 199) - 99;
    long den = 1 + pick(rng, 98);
    return Value::ratio(num, den);
}

Value random_symbol(std::mt19937& rng) {
    switch (pick(rng, 6)) {
    case 0: return Value::t();
    case 1: return Value::nil();
    case 2: return Value::symbol("KEYWORD", "K");
    case 3: return Value::symbol("ACL2", "SOME-SYMBOL");
    case 4: return Value::symbol("ACL2", "X");
    default: return Value::symbol("COMMON-LISP", "CONS");
    }
}

Value random_string(std::mt19937& rng) {
    std::string s;
    int len = pick(rng, 8);
    for (int i = 0; i < len; ++i) s += static_cast<char>(' ' + pick(rng, 95));
    return Value::string(std::move(s));
}

} // namespace

Value random_value_of_type(SrcType t, std::mt19937& rng, int depth) {
    switch (t) {
    case SrcType::AINTEGER: return random_integer(rng);
    case SrcType::ARATIONAL:
    case SrcType::ANUMBER: return random_rational(rng);
    case SrcType::ABOOLEAN: return Value::boolean(pick(rng, 2) == 0);
    case SrcType::ASYMBOL: return random_symbol(rng);
    case SrcType::ACHARACTER:
        return Value::character(static_cast<unsigned char>(pick(rng, 256)));
    case SrcType::ASTRING: return random_string(rng);
    case SrcType::ACONS:
        return Value::cons(
            random_value_of_type(SrcType::AVALUE, rng, depth - 1),
            random_value_of_type(SrcType::AVALUE, rng, depth - 1));
    case SrcType::JINT:
        return Value::jint(static_cast<std::int32_t>(rng()));
    case SrcType::AVALUE:
        switch (pick(rng, depth > 0 ? 7 : 5)) {
        case 0: return random_rational(rng);
        case 1: return random_symbol(rng);
        case 2: return Value::character(static_cast<unsigned char>(pick(rng, 256)));
        case 3: return random_string(rng);
        case 4: return random_integer(rng);
        case 5:
            return Value::cons(
                random_value_of_type(SrcType::AVALUE, rng, depth - 1),
                random_value_of_type(SrcType::AVALUE, rng, depth - 1));
        default: { // short proper list
            std::vector<Value> items;
            int len = 1 + pick(rng, 3);
            for (int i = 0; i < len; ++i)
                items.push_back(
                    random_value_of_type(SrcType::AVALUE, rng, depth - 1));
            return Value::list(items);
        }
        }
    }
    return Value::nil();
}

} // namespace sejc
