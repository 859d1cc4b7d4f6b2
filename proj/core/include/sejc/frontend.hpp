#ifndef SEJC_FRONTEND_HPP
#define SEJC_FRONTEND_HPP

#include "sejc/term.hpp"
#include "sejc/world.hpp"

#include <cstdint>
#include <string_view>
#include <unordered_map>

namespace sejc {

// Parameter counts of the user-defined functions in scope, used to check
// application arity during body translation (built-ins are known
// globally and not listed here).
using ArityMap = std::unordered_map<Symbol, int, SymbolHash>;

// Surface-to-translated-form conversion:
//   - constants (numbers, strings, characters, keywords, t, nil, #j ints)
//     and (quote x) become Quote
//   - let/let* become applications of closed lambdas, mv-let becomes the
//     two-layer lambda application over a fresh tuple variable
//   - and/or/mbt/mbe/prog2$/progn$ expand to their if/return-last forms
//   - mv becomes a call of the built-in mv
//   - explicit ((lambda (...) ...) ...) applications are accepted and
//     re-closed, so the function is idempotent on its own output
// Throws WorkspaceError on unknown forms, arity mismatches, and malformed
// binders.
Term translate_body(const Value& surface, const ArityMap& fns);

struct ParseOptions {
    // Check every declared function type by evaluating the function on
    // random guard-satisfying inputs and testing output membership.
    // Samples whose evaluation exceeds the step cap are inconclusive and
    // skipped; checking a type stops early once the total step budget is
    // spent, so workspaces with expensive functions still parse quickly.
    bool validate_directives = true;
    int directive_samples = 100;
    std::uint64_t sample_step_cap = 10000;
    std::uint64_t sample_total_steps = 2000000;
    unsigned seed = 0x5e1c0de;
};

// Reads a workspace: defpackage, defun, function-type-main,
// function-type-other, and deftest forms, in order. Produces a World
// with translated guards and bodies.
World parse_workspace(std::string_view text, const ParseOptions& opts = {});

} // namespace sejc

#endif
