#include "sejc/frontend.hpp"

#include "sejc/diagnostics.hpp"
#include "sejc/interp.hpp"
#include "sejc/randomgen.hpp"
#include "sejc/sexpr.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace sejc {

namespace {

Symbol cl(const char* name) { return Symbol{"COMMON-LISP", name}; }

bool is_sym(const Value& v, const char* name) {
    return v.is_symbol() && v.symbol_value() == cl(name);
}

std::vector<Value> list_items(const Value& v, const char* what) {
    std::vector<Value> items;
    Value x = v;
    while (x.is_cons()) {
        items.push_back(x.car());
        x = x.cdr();
    }
    if (!x.is_nil())
        throw WorkspaceError(std::string(what) + " must be a proper list");
    return items;
}

// A variable name: a symbol other than t, nil, and keywords.
Symbol variable_symbol(const Value& v, const char* what) {
    if (!v.is_symbol() || v.is_boolean() || v.symbol_value().pkg == "KEYWORD")
        throw WorkspaceError(std::string(what) + " must be a variable symbol, got " +
                             v.print());
    return v.symbol_value();
}

// Closes a lambda application: any body variable not already a parameter
// becomes an extra parameter bound to itself, in first-occurrence order.
Term close_lambda(std::vector<Symbol> params, Term body, std::vector<Term> args) {
    for (const Symbol& v : free_vars(body)) {
        if (std::find(params.begin(), params.end(), v) == params.end()) {
            params.push_back(v);
            args.push_back(Term::var(v));
        }
    }
    return Term::lambda_app(std::move(params), std::move(body), std::move(args));
}

class BodyTranslator {
public:
    explicit BodyTranslator(const ArityMap& fns) : fns_(fns) {}

    Term translate(const Value& s) {
        if (s.is_number() || s.is_character() || s.is_string() || s.is_jint())
            return Term::quote(s);
        if (s.is_symbol()) {
            const Symbol& sym = s.symbol_value();
            if (s.is_boolean() || sym.pkg == "KEYWORD") return Term::quote(s);
            return Term::var(sym);
        }
        // s is a cons: special form, macro, or application
        const Value& head = s.car();
        if (head.is_cons()) return translate_lambda_app(s);
        if (!head.is_symbol())
            throw WorkspaceError("cannot apply non-function " + head.print());

        std::vector<Value> items = list_items(s, "application");
        std::vector<Value> args(items.begin() + 1, items.end());
        const Symbol& fn = head.symbol_value();

        if (fn == cl("QUOTE")) {
            if (args.size() != 1)
                throw WorkspaceError("quote takes exactly one argument");
            return Term::quote(args[0]);
        }
        if (fn == cl("IF")) {
            if (args.size() != 3)
                throw WorkspaceError("if takes exactly 3 arguments");
            return Term::app(if_symbol(),
                             {translate(args[0]), translate(args[1]),
                              translate(args[2])});
        }
        if (fn == cl("AND")) return expand_and(args, 0);
        if (fn == cl("OR")) return expand_or(args, 0);
        if (fn == cl("LET")) return translate_let(args);
        if (fn == cl("LET*")) return translate_let_star(args);
        if (fn == cl("MBE")) return translate_mbe(args);
        if (fn == cl("MBT")) {
            if (args.size() != 1)
                throw WorkspaceError("mbt takes exactly one argument");
            return Term::app(return_last_symbol(),
                             {Term::quote(Value::symbol(cl("MBE1-RAW"))),
                              Term::quote(Value::t()), translate(args[0])});
        }
        if (fn == cl("PROG2$")) {
            if (args.size() != 2)
                throw WorkspaceError("prog2$ takes exactly 2 arguments");
            return Term::app(return_last_symbol(),
                             {Term::quote(Value::symbol(cl("PROGN"))),
                              translate(args[0]), translate(args[1])});
        }
        if (fn == cl("PROGN$")) {
            if (args.empty())
                throw WorkspaceError("progn$ needs at least one form");
            Term acc = translate(args.back());
            for (std::size_t i = args.size() - 1; i-- > 0;)
                acc = Term::app(return_last_symbol(),
                                {Term::quote(Value::symbol(cl("PROGN"))),
                                 translate(args[i]), acc});
            return acc;
        }
        if (fn == cl("RETURN-LAST")) {
            // Accepted directly so already-translated forms re-translate
            // to themselves; mbe/mbt/prog2$/progn$ expand into this.
            if (args.size() != 3)
                throw WorkspaceError("return-last takes exactly 3 arguments");
            Term kind = translate(args[0]);
            if (kind.kind() != Term::Kind::Quote ||
                !kind.quoted().is_symbol())
                throw WorkspaceError(
                    "return-last needs a quoted symbol as first argument");
            return Term::app(return_last_symbol(),
                             {std::move(kind), translate(args[1]),
                              translate(args[2])});
        }
        if (fn == cl("MV")) {
            if (args.size() < 2)
                throw WorkspaceError("mv needs at least 2 values");
            std::vector<Term> targs;
            for (const Value& a : args) targs.push_back(translate(a));
            return Term::app(mv_symbol(), std::move(targs));
        }
        if (fn == cl("MV-LET")) return translate_mv_let(args);
        if (fn == cl("LAMBDA"))
            throw WorkspaceError("lambda must appear applied: ((lambda ...) ...)");

        // ordinary application
        int arity = -1;
        if (const NativeInfo* n = find_native(fn)) {
            arity = n->arity;
        } else {
            auto it = fns_.find(fn);
            if (it == fns_.end())
                throw WorkspaceError("call of unknown function " + to_string(fn));
            arity = it->second;
        }
        if (static_cast<int>(args.size()) != arity)
            throw WorkspaceError(to_string(fn) + " takes " +
                                 std::to_string(arity) + " arguments, got " +
                                 std::to_string(args.size()));
        std::vector<Term> targs;
        for (const Value& a : args) targs.push_back(translate(a));
        return Term::app(fn, std::move(targs));
    }

private:
    Term translate_lambda_app(const Value& s) {
        std::vector<Value> items = list_items(s, "lambda application");
        std::vector<Value> lam = list_items(items[0], "lambda expression");
        if (lam.size() != 3 || !is_sym(lam[0], "LAMBDA"))
            throw WorkspaceError("malformed lambda application " + s.print());
        std::vector<Symbol> params;
        for (const Value& p : list_items(lam[1], "lambda parameter list"))
            params.push_back(variable_symbol(p, "lambda parameter"));
        check_distinct(params, "lambda parameters");
        if (items.size() - 1 != params.size())
            throw WorkspaceError("lambda applied to " +
                                 std::to_string(items.size() - 1) +
                                 " arguments but has " +
                                 std::to_string(params.size()) + " parameters");
        std::vector<Term> args;
        for (std::size_t i = 1; i < items.size(); ++i)
            args.push_back(translate(items[i]));
        return close_lambda(std::move(params), translate(lam[2]), std::move(args));
    }

    Term expand_and(const std::vector<Value>& args, std::size_t i) {
        if (i == args.size()) return Term::quote(Value::t());
        if (i + 1 == args.size()) return translate(args[i]);
        return Term::app(if_symbol(), {translate(args[i]), expand_and(args, i + 1),
                                       Term::quote(Value::nil())});
    }

    Term expand_or(const std::vector<Value>& args, std::size_t i) {
        if (i == args.size()) return Term::quote(Value::nil());
        if (i + 1 == args.size()) return translate(args[i]);
        Term a = translate(args[i]);
        return Term::app(if_symbol(), {a, a, expand_or(args, i + 1)});
    }

    struct Binding {
        Symbol var;
        Term expr;
    };

    std::vector<Binding> parse_bindings(const Value& v) {
        std::vector<Binding> out;
        for (const Value& b : list_items(v, "binding list")) {
            std::vector<Value> pair = list_items(b, "binding");
            if (pair.size() != 2)
                throw WorkspaceError("binding must be (var expr), got " + b.print());
            out.push_back({variable_symbol(pair[0], "bound variable"),
                           translate(pair[1])});
        }
        return out;
    }

    void check_distinct(const std::vector<Symbol>& syms, const char* what) {
        std::set<Symbol> seen;
        for (const Symbol& s : syms)
            if (!seen.insert(s).second)
                throw WorkspaceError(std::string(what) + " contain " +
                                     to_string(s) + " twice");
    }

    Term translate_let(const std::vector<Value>& args) {
        if (args.size() != 2)
            throw WorkspaceError("let takes a binding list and one body form");
        std::vector<Binding> bindings = parse_bindings(args[0]);
        std::vector<Symbol> params;
        std::vector<Term> exprs;
        for (auto& b : bindings) {
            params.push_back(b.var);
            exprs.push_back(std::move(b.expr));
        }
        check_distinct(params, "let bindings");
        return close_lambda(std::move(params), translate(args[1]),
                            std::move(exprs));
    }

    Term translate_let_star(const std::vector<Value>& args) {
        if (args.size() != 2)
            throw WorkspaceError("let* takes a binding list and one body form");
        std::vector<Value> bindings = list_items(args[0], "binding list");
        Term body = translate(args[1]);
        for (std::size_t i = bindings.size(); i-- > 0;) {
            std::vector<Value> pair = list_items(bindings[i], "binding");
            if (pair.size() != 2)
                throw WorkspaceError("binding must be (var expr), got " +
                                     bindings[i].print());
            Symbol var = variable_symbol(pair[0], "bound variable");
            body = close_lambda({var}, std::move(body), {translate(pair[1])});
        }
        return body;
    }

    Term translate_mbe(const std::vector<Value>& args) {
        if (args.size() != 4)
            throw WorkspaceError("mbe takes :logic and :exec parts");
        std::optional<Value> logic, exec;
        for (std::size_t i = 0; i < 4; i += 2) {
            if (args[i] == Value::symbol("KEYWORD", "LOGIC"))
                logic = args[i + 1];
            else if (args[i] == Value::symbol("KEYWORD", "EXEC"))
                exec = args[i + 1];
            else
                throw WorkspaceError("mbe keyword must be :logic or :exec, got " +
                                     args[i].print());
        }
        if (!logic || !exec)
            throw WorkspaceError("mbe needs both :logic and :exec parts");
        return Term::app(return_last_symbol(),
                         {Term::quote(Value::symbol(cl("MBE1-RAW"))),
                          translate(*exec), translate(*logic)});
    }

    Term translate_mv_let(const std::vector<Value>& args) {
        if (args.size() != 3)
            throw WorkspaceError(
                "mv-let takes a variable list, an expression, and a body");
        std::vector<Symbol> vars;
        for (const Value& v : list_items(args[0], "mv-let variable list"))
            vars.push_back(variable_symbol(v, "mv-let variable"));
        if (vars.size() < 2)
            throw WorkspaceError("mv-let needs at least 2 variables");
        check_distinct(vars, "mv-let variables");
        Symbol mv = cl("MV");
        std::vector<Term> projections;
        for (std::size_t i = 0; i < vars.size(); ++i)
            projections.push_back(
                Term::app(mv_nth_symbol(), {Term::quote(Value::integer(
                                                static_cast<long>(i))),
                                            Term::var(mv)}));
        Term inner = close_lambda(std::move(vars), translate(args[2]),
                                  std::move(projections));
        return close_lambda({mv}, std::move(inner), {translate(args[1])});
    }

    const ArityMap& fns_;
};

} // namespace

Term translate_body(const Value& surface, const ArityMap& fns) {
    return BodyTranslator(fns).translate(surface);
}

namespace {

SrcType parse_type_keyword(const Value& v) {
    if (v.is_symbol() && v.symbol_value().pkg == "KEYWORD") {
        if (auto t = type_from_keyword_name(v.symbol_value().name)) return *t;
    }
    throw WorkspaceError("expected a type keyword such as :avalue, got " +
                         v.print());
}

std::vector<SrcType> parse_type_list(const Value& v, const char* what) {
    std::vector<SrcType> out;
    for (const Value& t : list_items(v, what)) out.push_back(parse_type_keyword(t));
    return out;
}

struct RawDefun {
    Symbol name;
    std::vector<Symbol> params;
    Value guard;      // surface form; t when absent
    Value body;       // surface form
    bool has_guard = false;
};

// Declared result count of each term position, used to check that
// multiple values flow only where declared: tuples may be produced by mv
// and multi-output calls, bound whole by a lambda (the mv-let pattern),
// and consumed by mv-nth; every other position takes a single value.
// Counts come from directives (or the default of one). Variables carry
// the count of whatever their binder delivers.
using VarCounts = std::unordered_map<Symbol, int, SymbolHash>;

int term_result_count(const Term& t, const World& w, VarCounts& vars) {
    auto single = [&](const Term& u, const std::string& where) {
        int n = term_result_count(u, w, vars);
        if (n != 1)
            throw WorkspaceError(where + " must be a single value but produces " +
                                 std::to_string(n));
        return n;
    };
    switch (t.kind()) {
    case Term::Kind::Var: {
        auto it = vars.find(t.var_name());
        return it == vars.end() ? 1 : it->second;
    }
    case Term::Kind::Quote:
        return 1;
    case Term::Kind::App: {
        if (t.fn() == mv_symbol()) {
            for (const Term& a : t.args()) single(a, "an mv component");
            return static_cast<int>(t.args().size());
        }
        if (t.fn() == if_symbol()) {
            single(t.args()[0], "an if test");
            int a = term_result_count(t.args()[1], w, vars);
            int b = term_result_count(t.args()[2], w, vars);
            if (a != b)
                throw WorkspaceError(
                    "if branches produce different result counts (" +
                    std::to_string(a) + " vs " + std::to_string(b) + ")");
            return a;
        }
        if (t.fn() == mv_nth_symbol()) {
            single(t.args()[0], "an mv-nth index");
            term_result_count(t.args()[1], w, vars); // tuple or single
            return 1;
        }
        if (t.fn() == return_last_symbol()) {
            int first = term_result_count(t.args()[1], w, vars);
            int last = term_result_count(t.args()[2], w, vars);
            bool mbe = t.args()[0].is_quote() &&
                       t.args()[0].quoted().is_symbol() &&
                       t.args()[0].quoted().symbol_value().name == "MBE1-RAW";
            if (mbe ? first != last : first != 1)
                throw WorkspaceError(
                    mbe ? "mbe parts produce different result counts (" +
                              std::to_string(first) + " vs " +
                              std::to_string(last) + ")"
                        : "a prog2$ first form must be a single value");
            return last;
        }
        for (const Term& a : t.args())
            single(a, "an argument of " + to_string(t.fn()));
        if (auto n = w.result_count(t.fn())) return *n;
        throw WorkspaceError("call of unknown function " + to_string(t.fn()));
    }
    case Term::Kind::LambdaApp: {
        // Bindings are parallel: argument counts come from the outer
        // scope before any parameter takes effect.
        std::vector<int> counts;
        for (const Term& a : t.args())
            counts.push_back(term_result_count(a, w, vars));
        std::vector<std::pair<Symbol, std::optional<int>>> saved;
        for (std::size_t i = 0; i < t.params().size(); ++i) {
            const Symbol& p = t.params()[i];
            auto it = vars.find(p);
            saved.emplace_back(p, it == vars.end()
                                      ? std::nullopt
                                      : std::optional<int>(it->second));
            vars[p] = counts[i];
        }
        int out = term_result_count(t.body(), w, vars);
        for (auto& [p, old] : saved) {
            if (old) vars[p] = *old;
            else vars.erase(p);
        }
        return out;
    }
    }
    return 1;
}

int term_result_count(const Term& t, const World& w) {
    VarCounts vars;
    return term_result_count(t, w, vars);
}

void validate_function_types(const World& world, const ParseOptions& opts) {
    std::mt19937 rng(opts.seed);
    for (const Symbol& name : world.function_order()) {
        const FunctionRecord& fn = *world.find(name);
        // Only directives the workspace states are claims worth checking;
        // the all-:avalue default makes no promise about error-freedom.
        std::vector<FnType> declared = fn.other_types;
        if (fn.main_declared) declared.insert(declared.begin(), fn.main_type);
        for (const FnType& ty : declared) {
            int found = 0;
            int budget = opts.directive_samples * 50;
            std::uint64_t spent = 0;
            while (found < opts.directive_samples && budget-- > 0 &&
                   spent < opts.sample_total_steps) {
                std::vector<Value> args;
                args.reserve(ty.inputs.size());
                for (SrcType in : ty.inputs)
                    args.push_back(random_value_of_type(in, rng));
                Bindings env;
                for (std::size_t i = 0; i < args.size(); ++i)
                    env.emplace(fn.params[i], MultiValue(args[i]));
                // Bound each sample so a diverging call (or one on a
                // huge random number) is skipped instead of hanging.
                Interp probe(world, opts.sample_step_cap);
                try {
                    if (probe.eval(fn.guard, env).one().is_nil()) continue;
                } catch (const EvalError&) {
                    spent += probe.steps();
                    continue; // guard itself rejects these inputs
                }
                MultiValue out;
                try {
                    out = probe.call(name, args);
                } catch (const StepLimitExceeded&) {
                    spent += probe.steps();
                    continue; // inconclusive sample
                } catch (const EvalError& e) {
                    throw WorkspaceError(
                        "declared type " + fn_type_string(ty) + " of " +
                        to_string(name) +
                        " fails on sampled guard-satisfying inputs: " +
                        e.raw_message());
                }
                spent += probe.steps();
                ++found;
                if (out.vals.size() != ty.outputs.size())
                    throw WorkspaceError("declared type " + fn_type_string(ty) +
                                         " of " + to_string(name) +
                                         " has wrong result count");
                for (std::size_t i = 0; i < out.vals.size(); ++i) {
                    if (!value_has_type(out.vals[i], ty.outputs[i])) {
                        std::string argtext;
                        for (const Value& a : args) argtext += " " + a.print();
                        throw WorkspaceError(
                            "declared type " + fn_type_string(ty) + " of " +
                            to_string(name) + " is wrong: on inputs" + argtext +
                            " the result " + out.vals[i].print() +
                            " is not " + type_keyword(ty.outputs[i]));
                    }
                }
            }
        }
    }
}

} // namespace

World parse_workspace(std::string_view text, const ParseOptions& opts) {
    World world;
    SexprReader reader(text, &world.packages());

    std::vector<RawDefun> defuns;
    struct Directive {
        bool main;
        Symbol fn;
        FnType type;
    };
    std::vector<Directive> directives;
    struct RawTest {
        std::string name;
        Value call;
    };
    std::vector<RawTest> raw_tests;

    // Single sequential pass over the forms; defpackage takes effect
    // immediately so later reads resolve against it.
    while (auto form = reader.next()) {
        SourcePos pos = reader.last_pos();
        try {
            if (!form->is_cons())
                throw WorkspaceError("stray atom at top level: " + form->print());
            const Value& head = form->car();
            std::vector<Value> items = list_items(*form, "top-level form");
            std::vector<Value> rest(items.begin() + 1, items.end());

            if (is_sym(head, "DEFPACKAGE")) {
                if (rest.empty() || !rest[0].is_string())
                    throw WorkspaceError("defpackage needs a package name string");
                if (rest.size() > 2)
                    throw WorkspaceError("defpackage takes at most one clause");
                std::vector<Symbol> imports;
                if (rest.size() == 2) {
                    std::vector<Value> clause =
                        list_items(rest[1], "defpackage clause");
                    if (clause.empty() ||
                        clause[0] != Value::symbol("KEYWORD", "IMPORT"))
                        throw WorkspaceError(
                            "defpackage clause must be (:import sym...)");
                    for (std::size_t i = 1; i < clause.size(); ++i) {
                        if (!clause[i].is_symbol())
                            throw WorkspaceError("imports must be symbols");
                        imports.push_back(clause[i].symbol_value());
                    }
                }
                world.packages().define(rest[0].string_value(), std::move(imports));
            } else if (is_sym(head, "DEFUN")) {
                if (rest.size() < 3 || rest.size() > 4)
                    throw WorkspaceError(
                        "defun takes a name, parameters, optional declare, and a body");
                RawDefun d;
                d.name = variable_symbol(rest[0], "function name");
                if (d.name.pkg == "COMMON-LISP")
                    throw WorkspaceError(
                        "cannot define functions in the COMMON-LISP package");
                std::vector<Symbol> params;
                for (const Value& p : list_items(rest[1], "parameter list"))
                    params.push_back(variable_symbol(p, "parameter"));
                d.params = std::move(params);
                d.guard = Value::t();
                if (rest.size() == 4) {
                    std::vector<Value> decl = list_items(rest[2], "declare form");
                    if (decl.size() != 2 || !is_sym(decl[0], "DECLARE"))
                        throw WorkspaceError("expected (declare (xargs :guard ...))");
                    std::vector<Value> xargs = list_items(decl[1], "xargs form");
                    if (xargs.size() != 3 || !is_sym(xargs[0], "XARGS") ||
                        xargs[1] != Value::symbol("KEYWORD", "GUARD"))
                        throw WorkspaceError("expected (declare (xargs :guard ...))");
                    d.guard = xargs[2];
                    d.has_guard = true;
                }
                d.body = rest.back();
                defuns.push_back(std::move(d));
            } else if (is_sym(head, "FUNCTION-TYPE-MAIN") ||
                       is_sym(head, "FUNCTION-TYPE-OTHER")) {
                if (rest.size() != 3 || !rest[0].is_symbol())
                    throw WorkspaceError(
                        "type directive takes a function, an input type list, "
                        "and an output type list");
                Directive dir;
                dir.main = is_sym(head, "FUNCTION-TYPE-MAIN");
                dir.fn = rest[0].symbol_value();
                dir.type.inputs = parse_type_list(rest[1], "input type list");
                dir.type.outputs = parse_type_list(rest[2], "output type list");
                if (dir.type.outputs.empty())
                    throw WorkspaceError("a function must have at least one output");
                directives.push_back(std::move(dir));
            } else if (is_sym(head, "DEFTEST")) {
                if (rest.size() != 2 || !rest[0].is_symbol())
                    throw WorkspaceError("deftest takes a name and a call");
                raw_tests.push_back(
                    {rest[0].symbol_value().name, rest[1]});
            } else {
                throw WorkspaceError("unknown top-level form " + head.print());
            }
        } catch (WorkspaceError& e) {
            if (e.pos().line == 0) throw WorkspaceError(e.raw_message(), pos);
            throw;
        }
    }

    // Headers first so bodies can call forward and recursively.
    ArityMap arities;
    std::set<Symbol> defined;
    for (const RawDefun& d : defuns) {
        if (!defined.insert(d.name).second)
            throw WorkspaceError("function " + to_string(d.name) +
                                 " is already defined");
        if (is_native(d.name))
            throw WorkspaceError("cannot redefine built-in function " +
                                 to_string(d.name));
        arities[d.name] = static_cast<int>(d.params.size());
    }

    for (const RawDefun& d : defuns) {
        FunctionRecord rec;
        rec.name = d.name;
        rec.params = d.params;
        {
            std::set<Symbol> seen(d.params.begin(), d.params.end());
            if (seen.size() != d.params.size())
                throw WorkspaceError("duplicate parameter in " + to_string(d.name));
        }
        rec.guard = translate_body(d.guard, arities);
        rec.body = translate_body(d.body, arities);
        for (const Symbol& v : free_vars(rec.body))
            if (std::find(d.params.begin(), d.params.end(), v) == d.params.end())
                throw WorkspaceError("body of " + to_string(d.name) +
                                     " uses unbound variable " + to_string(v));
        for (const Symbol& v : free_vars(rec.guard))
            if (std::find(d.params.begin(), d.params.end(), v) == d.params.end())
                throw WorkspaceError("guard of " + to_string(d.name) +
                                     " uses unbound variable " + to_string(v));
        rec.main_type.inputs.assign(d.params.size(), SrcType::AVALUE);
        rec.main_type.outputs = {SrcType::AVALUE};
        world.add_function(std::move(rec));
    }

    std::set<Symbol> has_main;
    for (const Directive& dir : directives) {
        FunctionRecord* rec = world.find(dir.fn);
        if (!rec)
            throw WorkspaceError("type directive for undefined function " +
                                 to_string(dir.fn));
        if (dir.type.inputs.size() != rec->params.size())
            throw WorkspaceError("type directive for " + to_string(dir.fn) +
                                 " has " + std::to_string(dir.type.inputs.size()) +
                                 " input types but the function has " +
                                 std::to_string(rec->params.size()) +
                                 " parameters");
        if (dir.main) {
            if (!has_main.insert(dir.fn).second)
                throw WorkspaceError("duplicate main type directive for " +
                                     to_string(dir.fn));
            rec->main_type = dir.type;
            rec->main_declared = true;
        } else {
            rec->other_types.push_back(dir.type);
        }
    }

    // Other types must match the main type's shape and be strictly
    // narrower somewhere.
    for (const Symbol& name : world.function_order()) {
        FunctionRecord* rec = world.find(name);
        for (const FnType& other : rec->other_types) {
            const FnType& main = rec->main_type;
            if (other.outputs.size() != main.outputs.size())
                throw WorkspaceError("other type of " + to_string(name) +
                                     " has a different output count than the "
                                     "main type");
            bool narrower_somewhere = false;
            auto check = [&](SrcType o, SrcType m, const char* where) {
                if (!type_leq(o, m))
                    throw WorkspaceError("other type " + fn_type_string(other) +
                                         " of " + to_string(name) +
                                         " is not narrower than the main type (" +
                                         std::string(where) + ")");
                if (o != m) narrower_somewhere = true;
            };
            for (std::size_t i = 0; i < other.inputs.size(); ++i)
                check(other.inputs[i], main.inputs[i], "inputs");
            for (std::size_t i = 0; i < other.outputs.size(); ++i)
                check(other.outputs[i], main.outputs[i], "outputs");
            if (!narrower_somewhere)
                throw WorkspaceError("other type of " + to_string(name) +
                                     " equals the main type");
        }
        // Overloads are distinguished by parameter types alone, so two
        // declared types may not share an input tuple.
        auto all = rec->all_types();
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (all[i].inputs == all[j].inputs)
                    throw WorkspaceError(
                        "two declared types of " + to_string(name) +
                        " have identical input types " +
                        fn_type_string(all[i]) + " and " +
                        fn_type_string(all[j]));
    }

    // Multiple values must be declared: the computed result count of each
    // body must match the declared output count.
    for (const Symbol& name : world.function_order()) {
        const FunctionRecord& rec = *world.find(name);
        int counted = term_result_count(rec.body, world);
        int declared = static_cast<int>(rec.main_type.outputs.size());
        if (counted != declared) {
            if (!has_main.count(name) && counted > 1)
                throw WorkspaceError(
                    "function " + to_string(name) +
                    " produces multiple values and needs a main type "
                    "directive declaring " +
                    std::to_string(counted) + " outputs");
            throw WorkspaceError("function " + to_string(name) + " produces " +
                                 std::to_string(counted) +
                                 " values but its type directives declare " +
                                 std::to_string(declared));
        }
    }

    std::set<std::string> test_names;
    for (const RawTest& t : raw_tests) {
        if (!test_names.insert(t.name).second)
            throw WorkspaceError("duplicate test name " + t.name);
        Term call = translate_body(t.call, arities);
        if (!call.is_app() || is_native(call.fn()) || !world.find(call.fn()))
            throw WorkspaceError("test " + t.name +
                                 " must call a workspace-defined function");
        if (!free_vars(call).empty())
            throw WorkspaceError("test " + t.name + " call is not ground");
        world.tests().push_back({t.name, std::move(call)});
    }

    if (opts.validate_directives) validate_function_types(world, opts);

    return world;
}

} // namespace sejc
