#ifndef SEJC_PRETRANS_HPP
#define SEJC_PRETRANS_HPP

#include "sejc/term.hpp"
#include "sejc/types.hpp"
#include "sejc/world.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sejc {

// ---- Simplification passes (run before annotation, in this order) ----

// mbe keeps its :exec part when guards are honored and its :logic part
// otherwise; mbt becomes 't or its argument accordingly. Errors on a
// return-last form that is neither an mbe nor a prog2$/progn$ marker.
Term resolve_mbe(const Term& t, bool guards);

// (if 't a b) -> a, applied innermost-first to a fixpoint.
Term simplify_if_t(const Term& t);

// prog2$/progn$ sequencing collapses to its final form.
Term elide_progn(const Term& t);

// Lambda parameters unused in the body are dropped with their arguments;
// a lambda application left with no parameters collapses to its body.
Term drop_unused_bindings(const Term& t);

// Parameters bound to the variable of the same name are dropped, which
// can leave lambdas open (their bodies then capture enclosing bindings).
Term drop_trivial_bindings(const Term& t);

// All five passes in order.
Term simplify(const Term& t, bool guards);

// ---- Annotated terms ----

enum class VarMark { Unmarked, New, Old };

// A variable occurrence or binding with its type, its reuse mark (set by
// mark_reuse: New = Java declaration, Old = assignment to the reused
// variable), and its final Java name (set by rename_apart).
struct AVar {
    Symbol sym;
    ResultType type;
    VarMark mark = VarMark::Unmarked;
    std::string target_name;

    AVar() = default;
    AVar(Symbol s, ResultType t, VarMark m = VarMark::Unmarked,
         std::string name = {})
        : sym(std::move(s)), type(std::move(t)), mark(m),
          target_name(std::move(name)) {}

    bool operator==(const AVar&) const = default;
};

// A term after type annotation: the same shape as Term, except that a
// conversion node wraps the root and every argument position, variables
// carry types/marks/names, and reconstructed and/or calls may appear.
// Immutable and cheap to copy, like Term.
class ATerm {
public:
    enum class Kind { Conv, Var, Quote, App, LambdaApp };

    ATerm() : ATerm(quote(Value::nil())) {}

    static ATerm conv(ResultType from, ResultType to, ATerm inner);
    static ATerm var(AVar v);
    static ATerm quote(Value v);
    static ATerm app(Symbol fn, std::vector<ATerm> args,
                     std::optional<FnType> overload = std::nullopt);
    static ATerm lambda_app(std::vector<AVar> params, ATerm body,
                            std::vector<ATerm> args);

    Kind kind() const;
    bool is_conv() const { return kind() == Kind::Conv; }
    bool is_var() const { return kind() == Kind::Var; }
    bool is_quote() const { return kind() == Kind::Quote; }
    bool is_app() const { return kind() == Kind::App; }
    bool is_lambda_app() const { return kind() == Kind::LambdaApp; }

    const ResultType& from() const;              // Conv
    const ResultType& to() const;                // Conv
    const ATerm& inner() const;                  // Conv
    const AVar& var_info() const;                // Var
    const Value& quoted() const;                 // Quote
    const Symbol& fn() const;                    // App
    const std::optional<FnType>& overload() const; // App
    const std::vector<ATerm>& args() const;      // App, LambdaApp
    const std::vector<AVar>& params() const;     // LambdaApp
    const ATerm& body() const;                   // LambdaApp

    bool operator==(const ATerm& o) const;
    bool operator!=(const ATerm& o) const { return !(*this == o); }

    // Annotated display: conversions as ([AI>AN] x), variables as
    // [N][AI]x, lambda applications as let bindings.
    std::string display() const;

private:
    struct Node;
    explicit ATerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Strips conversions, marks, and target names, undoing and/or
// reconstruction: the translated term the annotation started from.
Term erase(const ATerm& t);

// ---- Type annotation ----

// Overload choice for one call: among the declared types of matching
// arity, those accepting the argument types without narrowing, then the
// pointwise-most-specific of them; when none qualifies, the main type
// (first candidate) wins and the caller inserts casts.
FnType select_fn_type(const std::vector<SrcType>& arg_types,
                      const std::vector<FnType>& candidates);

// Every pair of declared input-type tuples whose pointwise glb exists
// must have that glb declared too; otherwise some argument types would
// have no most-specific overload. Throws WorkspaceError naming the
// missing tuple.
void check_glb_closure(const FunctionRecord& fn);

// Type analysis of a fully simplified body: types every variable from
// its binding site, picks overloads, merges if branches, reconstructs
// boolean and/or, and wraps each root and argument position in a
// conversion. With guards=false every declared type is ignored and
// everything is a single :avalue. Throws WorkspaceError when no legal
// conversion exists or if branches have no common type.
ATerm annotate(const Term& t, const std::vector<Symbol>& params,
               const FnType& type, const World& w, bool guards = true);
ATerm annotate(const Term& t, const FunctionRecord& fn, const World& w,
               bool guards = true);

// ---- Variable reuse and renaming ----

// Marks every lambda binding New or Old. A binding is Old when the
// variable it shadows has the same name and type and its value is dead:
// no occurrence of it evaluates after the binding's argument. Variable
// occurrences mirror the mark of their binding; function parameters
// stay unmarked.
ATerm mark_reuse(const ATerm& t, const std::vector<AVar>& fn_params);

// Assigns final Java names: parameters and New bindings get their
// translated name, or base$k (smallest k >= 1) when the name is already
// taken in the method; Old bindings keep the reused variable's name.
// fn_params receive their target names in place.
ATerm rename_apart(const ATerm& t, std::vector<AVar>& fn_params);

enum class NameKind { Package, Method, Variable };

// ACL2 name to Java name: packages keep case, methods and variables
// lowercase; hyphens become underscores, other characters outside
// [A-Za-z0-9_] become $xx (two hex digits), a leading digit gains a _
// prefix, and Java reserved words gain a $ suffix.
std::string translate_name(const std::string& name, NameKind kind);

// ---- Whole-body convenience ----

// One function body through every pre-translation step under the given
// type (the main type when absent): simplify, annotate, mark_reuse,
// rename_apart. params come back typed and named.
struct AnnotatedFunction {
    std::vector<AVar> params;
    ATerm body;
};

AnnotatedFunction pretranslate(const FunctionRecord& fn, const World& w,
                               bool guards,
                               const FnType* type = nullptr);

} // namespace sejc

#endif
