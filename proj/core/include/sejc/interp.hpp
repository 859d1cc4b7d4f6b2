#ifndef SEJC_INTERP_HPP
#define SEJC_INTERP_HPP

#include "sejc/diagnostics.hpp"
#include "sejc/term.hpp"
#include "sejc/world.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace sejc {

// One or more values: the result of evaluating a term. Multiple values
// arise only from mv calls and from functions declared with several
// outputs; they are consumed by mv-nth projections and mv-let bindings.
struct MultiValue {
    std::vector<Value> vals;

    MultiValue() = default;
    MultiValue(Value v) : vals{std::move(v)} {}
    explicit MultiValue(std::vector<Value> vs) : vals(std::move(vs)) {}

    bool single() const { return vals.size() == 1; }
    const Value& one() const;

    bool operator==(const MultiValue&) const = default;
    std::string print() const; // "(mv v1 v2)" for tuples
};

using Bindings = std::unordered_map<Symbol, MultiValue, SymbolHash>;

// Evaluates one built-in function application under the completion
// conventions (car/cdr of a non-cons give nil, arithmetic coerces
// non-numbers, and so on). Both the source interpreter and the evaluator
// of generated code funnel through this, so the two sides share one
// definition of the built-ins, the way a compiler and its runtime
// library share one. int-value outside 32-bit range is an error; int-add
// and int-mul demand Java int arguments.
Value apply_native(const Symbol& fn, const std::vector<Value>& args,
                   Phase phase = Phase::Interpretation);

// Source-term evaluator over a World. Uses an explicit work stack, so
// host stack depth stays constant regardless of call depth and tail
// calls run in constant space.
class Interp {
public:
    explicit Interp(const World& world, std::uint64_t max_steps = 0);

    // Evaluates a translated-form term. Free variables of t must be
    // bound in env. if is non-strict; everything else is call-by-value.
    MultiValue eval(const Term& t, const Bindings& env = {});

    // Calls a defined or built-in function on argument values.
    MultiValue call(const Symbol& fn, const std::vector<Value>& args);

    // Evaluates a ground call term such as a deftest's (f '1 '2).
    MultiValue eval_ground(const Term& call);

    std::uint64_t steps() const { return steps_; }

private:
    const World& world_;
    std::uint64_t max_steps_;
    std::uint64_t steps_ = 0;
};

} // namespace sejc

#endif
