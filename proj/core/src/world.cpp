#include "sejc/world.hpp"

#include "sejc/diagnostics.hpp"

namespace sejc {

namespace {

Symbol cl(const char* name) { return Symbol{"COMMON-LISP", name}; }

std::vector<NativeInfo> make_natives() {
    using T = SrcType;
    auto fn = [](std::vector<T> in, std::vector<T> out) {
        return FnType{std::move(in), std::move(out)};
    };
    std::vector<NativeInfo> out;
    auto add = [&](const char* name, int arity, FnType main,
                   std::vector<FnType> others = {}) {
        out.push_back(NativeInfo{cl(name), arity, std::move(main), std::move(others)});
    };

    add("CONS", 2, fn({T::AVALUE, T::AVALUE}, {T::ACONS}));
    add("CAR", 1, fn({T::AVALUE}, {T::AVALUE}));
    add("CDR", 1, fn({T::AVALUE}, {T::AVALUE}));
    add("CONSP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("EQUAL", 2, fn({T::AVALUE, T::AVALUE}, {T::ABOOLEAN}));
    add("NOT", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("ZP", 1, fn({T::AINTEGER}, {T::ABOOLEAN}));
    add("BINARY-+", 2, fn({T::ANUMBER, T::ANUMBER}, {T::ANUMBER}),
        {fn({T::ARATIONAL, T::ARATIONAL}, {T::ARATIONAL}),
         fn({T::AINTEGER, T::AINTEGER}, {T::AINTEGER})});
    add("BINARY-*", 2, fn({T::ANUMBER, T::ANUMBER}, {T::ANUMBER}),
        {fn({T::ARATIONAL, T::ARATIONAL}, {T::ARATIONAL}),
         fn({T::AINTEGER, T::AINTEGER}, {T::AINTEGER})});
    add("UNARY--", 1, fn({T::ANUMBER}, {T::ANUMBER}),
        {fn({T::ARATIONAL}, {T::ARATIONAL}), fn({T::AINTEGER}, {T::AINTEGER})});
    add("UNARY-/", 1, fn({T::ANUMBER}, {T::ANUMBER}),
        {fn({T::ARATIONAL}, {T::ARATIONAL})});
    add("<", 2, fn({T::ARATIONAL, T::ARATIONAL}, {T::ABOOLEAN}));
    add("ACL2-NUMBERP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("RATIONALP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("INTEGERP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("NATP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("SYMBOLP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("CHARACTERP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("STRINGP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("BOOLEANP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    add("MV-NTH", 2, fn({T::AINTEGER, T::AVALUE}, {T::AVALUE}));
    add("LEN", 1, fn({T::AVALUE}, {T::AINTEGER}));
    add("CHAR-CODE", 1, fn({T::ACHARACTER}, {T::AINTEGER}));
    add("CODE-CHAR", 1, fn({T::AINTEGER}, {T::ACHARACTER}));
    add("COERCE", 2, fn({T::AVALUE, T::ASYMBOL}, {T::AVALUE}));
    add("INT-VALUE", 1, fn({T::AINTEGER}, {T::JINT}));
    add("INT-ADD", 2, fn({T::JINT, T::JINT}, {T::JINT}));
    add("INT-MUL", 2, fn({T::JINT, T::JINT}, {T::JINT}));
    add("INT-VALUEP", 1, fn({T::AVALUE}, {T::ABOOLEAN}));
    return out;
}

} // namespace

const std::vector<NativeInfo>& natives() {
    static const std::vector<NativeInfo> table = make_natives();
    return table;
}

const NativeInfo* find_native(const Symbol& name) {
    for (const NativeInfo& n : natives())
        if (n.name == name) return &n;
    return nullptr;
}

bool is_native(const Symbol& name) { return find_native(name) != nullptr; }

const Symbol& mv_symbol() {
    static const Symbol s = cl("MV");
    return s;
}
const Symbol& mv_nth_symbol() {
    static const Symbol s = cl("MV-NTH");
    return s;
}
const Symbol& if_symbol() {
    static const Symbol s = cl("IF");
    return s;
}
const Symbol& quote_symbol() {
    static const Symbol s = cl("QUOTE");
    return s;
}
const Symbol& return_last_symbol() {
    static const Symbol s = cl("RETURN-LAST");
    return s;
}

void World::add_function(FunctionRecord fn) {
    if (functions_.count(fn.name))
        throw WorkspaceError("function " + to_string(fn.name) +
                             " is already defined");
    if (is_native(fn.name))
        throw WorkspaceError("cannot redefine built-in function " +
                             to_string(fn.name));
    order_.push_back(fn.name);
    functions_.emplace(fn.name, std::move(fn));
}

const FunctionRecord* World::find(const Symbol& name) const {
    auto it = functions_.find(name);
    return it == functions_.end() ? nullptr : &it->second;
}

FunctionRecord* World::find(const Symbol& name) {
    auto it = functions_.find(name);
    return it == functions_.end() ? nullptr : &it->second;
}

std::optional<int> World::result_count(const Symbol& fn) const {
    if (is_native(fn)) return 1;
    if (const FunctionRecord* f = find(fn))
        return static_cast<int>(f->main_type.outputs.size());
    return std::nullopt;
}

} // namespace sejc
