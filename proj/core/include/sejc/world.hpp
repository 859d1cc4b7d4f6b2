#ifndef SEJC_WORLD_HPP
#define SEJC_WORLD_HPP

#include "sejc/packages.hpp"
#include "sejc/term.hpp"
#include "sejc/types.hpp"
#include "sejc/value.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sejc {

// A defined function: header, guard, translated body, and declared types.
// The main type drives code generation for the primary method overload;
// each other type adds one overload. Without a directive the main type
// defaults to all-:avalue with a single output.
struct FunctionRecord {
    Symbol name;
    std::vector<Symbol> params;
    Term guard;  // 't when the defun declares none
    Term body;
    FnType main_type;
    bool main_declared = false; // directive given, vs. the all-:avalue default
    std::vector<FnType> other_types;

    // All declared types, main first; the order fixes overload emission.
    std::vector<FnType> all_types() const {
        std::vector<FnType> out{main_type};
        out.insert(out.end(), other_types.begin(), other_types.end());
        return out;
    }
};

// A (deftest name call) form: the call is ground and its expected value
// comes from the source interpreter at generation time.
struct TestSpec {
    std::string name;
    Term call;
};

// A built-in function: fixed arity, native evaluation, and declared types
// used when guards are honored (with guards off every built-in is treated
// as all-:avalue, like user functions).
struct NativeInfo {
    Symbol name;
    int arity;
    FnType main_type;
    std::vector<FnType> other_types;

    std::vector<FnType> all_types() const {
        std::vector<FnType> out{main_type};
        out.insert(out.end(), other_types.begin(), other_types.end());
        return out;
    }
};

const std::vector<NativeInfo>& natives();
const NativeInfo* find_native(const Symbol& name);
bool is_native(const Symbol& name);

// The multiple-value constructor is variadic and handled structurally,
// not through the natives table.
const Symbol& mv_symbol();
const Symbol& mv_nth_symbol();
const Symbol& if_symbol();
const Symbol& quote_symbol();
const Symbol& return_last_symbol();

// Everything a workspace defines: packages, functions in definition
// order, and test specifications.
class World {
public:
    PackageTable& packages() { return packages_; }
    const PackageTable& packages() const { return packages_; }

    void add_function(FunctionRecord fn); // throws WorkspaceError on duplicates
    const FunctionRecord* find(const Symbol& name) const;
    FunctionRecord* find(const Symbol& name);
    const std::vector<Symbol>& function_order() const { return order_; }

    std::vector<TestSpec>& tests() { return tests_; }
    const std::vector<TestSpec>& tests() const { return tests_; }

    // Declared output count of a callable symbol: natives and mv-less
    // functions have 1; a function's directive fixes it otherwise.
    std::optional<int> result_count(const Symbol& fn) const;

private:
    PackageTable packages_;
    std::vector<Symbol> order_;
    std::unordered_map<Symbol, FunctionRecord, SymbolHash> functions_;
    std::vector<TestSpec> tests_;
};

} // namespace sejc

#endif
