#include "sejc/pretrans.hpp"

#include "sejc/diagnostics.hpp"

#include <sstream>
#include <unordered_map>

namespace sejc {

namespace {

Symbol cl(const char* name) { return Symbol{"COMMON-LISP", name}; }

using TypeEnv = std::unordered_map<Symbol, ResultType, SymbolHash>;

std::string inputs_keyword_string(const std::vector<SrcType>& inputs) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (i) os << ' ';
        os << type_keyword(inputs[i]);
    }
    os << ')';
    return os.str();
}

bool inputs_leq(const std::vector<SrcType>& a, const std::vector<SrcType>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!type_leq(a[i], b[i])) return false;
    return true;
}

class Annotator {
public:
    Annotator(const World& w, bool guards) : world_(w), guards_(guards) {}

    ATerm run(const Term& t, const std::vector<Symbol>& params,
              const FnType& type) {
        TypeEnv env;
        for (std::size_t i = 0; i < params.size(); ++i)
            env.emplace(params[i],
                        ResultType(guards_ ? type.inputs.at(i)
                                           : SrcType::AVALUE));
        ResultType dest =
            guards_ ? ResultType(type.outputs)
                    : ResultType(std::vector<SrcType>(type.outputs.size(),
                                                      SrcType::AVALUE));
        return ann(t, dest, env);
    }

private:
    const World& world_;
    bool guards_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw WorkspaceError(msg);
    }

    std::vector<FnType> callable_types(const Symbol& fn) const {
        std::size_t arity = 0;
        std::size_t outs = 1;
        std::vector<FnType> declared;
        if (const NativeInfo* n = find_native(fn)) {
            arity = static_cast<std::size_t>(n->arity);
            outs = n->main_type.outputs.size();
            declared = n->all_types();
        } else if (const FunctionRecord* f = world_.find(fn)) {
            arity = f->params.size();
            outs = f->main_type.outputs.size();
            declared = f->all_types();
        } else {
            fail("call of undefined function " + to_string(fn));
        }
        if (!guards_)
            return {FnType{std::vector<SrcType>(arity, SrcType::AVALUE),
                           std::vector<SrcType>(outs, SrcType::AVALUE)}};
        return declared;
    }

    ResultType quote_type(const Value& v) const {
        return ResultType(most_specific_type(v));
    }

    // The static type of a term, with variables typed from env. Used to
    // fix binding types, pick overloads, and merge if branches before
    // the annotated tree is built.
    ResultType type_of(const Term& t, const TypeEnv& env) const {
        switch (t.kind()) {
        case Term::Kind::Var: {
            auto it = env.find(t.var_name());
            if (it == env.end())
                fail("unbound variable " + to_string(t.var_name()) +
                     " in annotation");
            return it->second;
        }
        case Term::Kind::Quote:
            return quote_type(t.quoted());
        case Term::Kind::App:
            return app_type(t, env);
        case Term::Kind::LambdaApp: {
            TypeEnv inner = env;
            for (std::size_t i = 0; i < t.params().size(); ++i)
                inner[t.params()[i]] = type_of(t.args()[i], env);
            return type_of(t.body(), inner);
        }
        }
        fail("unreachable term kind");
    }

    ResultType app_type(const Term& t, const TypeEnv& env) const {
        const Symbol& fn = t.fn();
        const auto& args = t.args();
        if (fn == if_symbol() && args.size() == 3) {
            ResultType a = type_of(args[1], env);
            ResultType b = type_of(args[2], env);
            auto merged = result_lub(a, b);
            if (!merged)
                fail("if branches have no common type (" +
                     result_type_code(a) + " vs " + result_type_code(b) +
                     ") in " + t.print());
            return *merged;
        }
        if (fn == mv_symbol()) {
            std::vector<SrcType> parts;
            for (const Term& a : args) {
                ResultType rt = type_of(a, env);
                if (!rt.scalar())
                    fail("mv component is itself a multiple value in " +
                         t.print());
                parts.push_back(rt.single());
            }
            return ResultType(std::move(parts));
        }
        if (fn == mv_nth_symbol() && args.size() == 2) {
            ResultType second = type_of(args[1], env);
            if (!second.scalar()) {
                long idx = tuple_index(t, second);
                return ResultType(second.parts[static_cast<std::size_t>(idx)]);
            }
            // otherwise an ordinary call of the mv-nth built-in
        }
        if (fn == return_last_symbol())
            fail("return-last must be resolved away before annotation: " +
                 t.print());
        std::vector<SrcType> arg_types;
        for (const Term& a : args) {
            ResultType rt = type_of(a, env);
            if (!rt.scalar())
                fail("argument of " + to_string(fn) +
                     " is a multiple value in " + t.print());
            arg_types.push_back(rt.single());
        }
        FnType chosen = select_fn_type(arg_types, callable_types(fn));
        return ResultType(chosen.outputs);
    }

    // Index of an mv-nth projection out of a known multiple value; the
    // index must be a constant in range, as mv-let produces.
    long tuple_index(const Term& t, const ResultType& tuple) const {
        const Term& idx = t.args()[0];
        if (!idx.is_quote() || !idx.quoted().is_integer())
            fail("mv-nth on a multiple value needs a constant index: " +
                 t.print());
        BigInt i = idx.quoted().int_value();
        if (i < 0 || i >= BigInt(tuple.parts.size()))
            fail("mv-nth index " + idx.quoted().print() + " out of range for " +
                 result_type_code(tuple) + " in " + t.print());
        return static_cast<long>(i);
    }

    ATerm wrap(const ResultType& from, const ResultType& to, ATerm t,
               const Term& shown) const {
        if (!result_convertible(from, to))
            fail("no conversion from " + result_type_code(from) + " to " +
                 result_type_code(to) + " for " + shown.print());
        return ATerm::conv(from, to, std::move(t));
    }

    ATerm ann(const Term& t, const ResultType& dest, const TypeEnv& env) const {
        switch (t.kind()) {
        case Term::Kind::Var: {
            auto it = env.find(t.var_name());
            if (it == env.end())
                fail("unbound variable " + to_string(t.var_name()) +
                     " in annotation");
            return wrap(it->second, dest,
                        ATerm::var(AVar{t.var_name(), it->second}), t);
        }
        case Term::Kind::Quote:
            return wrap(quote_type(t.quoted()), dest, ATerm::quote(t.quoted()),
                        t);
        case Term::Kind::App:
            return ann_app(t, dest, env);
        case Term::Kind::LambdaApp: {
            // The conversion to dest sinks into the body; the binding
            // positions always convert identically, because parameter
            // types are defined as their arguments' computed types.
            TypeEnv inner = env;
            std::vector<AVar> params;
            std::vector<ATerm> args;
            for (std::size_t i = 0; i < t.params().size(); ++i) {
                ResultType at = type_of(t.args()[i], env);
                args.push_back(ann(t.args()[i], at, env));
                params.push_back(AVar{t.params()[i], at});
                inner[t.params()[i]] = std::move(at);
            }
            ATerm body = ann(t.body(), dest, inner);
            return ATerm::conv(dest, dest,
                               ATerm::lambda_app(std::move(params),
                                                 std::move(body),
                                                 std::move(args)));
        }
        }
        fail("unreachable term kind");
    }

    ATerm ann_app(const Term& t, const ResultType& dest,
                  const TypeEnv& env) const {
        const Symbol& fn = t.fn();
        const auto& args = t.args();
        const ResultType boolean{SrcType::ABOOLEAN};

        if (fn == if_symbol() && args.size() == 3) {
            ResultType test_t = type_of(args[0], env);
            // Boolean or: (if a a b); boolean and: (if a b 'nil). Both
            // become Java && / ||, so every operand must be :aboolean.
            if (test_t == boolean) {
                if (args[1] == args[0] && type_of(args[2], env) == boolean) {
                    ATerm a = ann(args[0], boolean, env);
                    ATerm b = ann(args[2], boolean, env);
                    return wrap(boolean, dest,
                                ATerm::app(cl("OR"), {std::move(a),
                                                      std::move(b)}),
                                t);
                }
                if (args[2] == Term::quote(Value::nil()) &&
                    type_of(args[1], env) == boolean) {
                    ATerm a = ann(args[0], boolean, env);
                    ATerm b = ann(args[1], boolean, env);
                    return wrap(boolean, dest,
                                ATerm::app(cl("AND"), {std::move(a),
                                                       std::move(b)}),
                                t);
                }
            }
            ResultType then_t = type_of(args[1], env);
            ResultType else_t = type_of(args[2], env);
            auto merged = result_lub(then_t, else_t);
            if (!merged)
                fail("if branches have no common type (" +
                     result_type_code(then_t) + " vs " +
                     result_type_code(else_t) + ") in " + t.print());
            ATerm test = ann(args[0], test_t, env);
            ATerm then_b = ann(args[1], *merged, env);
            ATerm else_b = ann(args[2], *merged, env);
            return wrap(*merged, dest,
                        ATerm::app(if_symbol(),
                                   {std::move(test), std::move(then_b),
                                    std::move(else_b)}),
                        t);
        }

        if (fn == mv_symbol()) {
            std::vector<SrcType> parts;
            std::vector<ATerm> anns;
            for (const Term& a : args) {
                ResultType rt = type_of(a, env);
                if (!rt.scalar())
                    fail("mv component is itself a multiple value in " +
                         t.print());
                anns.push_back(ann(a, rt, env));
                parts.push_back(rt.single());
            }
            return wrap(ResultType(std::move(parts)), dest,
                        ATerm::app(mv_symbol(), std::move(anns)), t);
        }

        if (fn == mv_nth_symbol() && args.size() == 2) {
            ResultType second = type_of(args[1], env);
            if (!second.scalar()) {
                long idx = tuple_index(t, second);
                ATerm index = ann(args[0], quote_type(args[0].quoted()), env);
                ATerm tuple = ann(args[1], second, env);
                return wrap(
                    ResultType(second.parts[static_cast<std::size_t>(idx)]),
                    dest,
                    ATerm::app(mv_nth_symbol(),
                               {std::move(index), std::move(tuple)}),
                    t);
            }
        }

        if (fn == return_last_symbol())
            fail("return-last must be resolved away before annotation: " +
                 t.print());

        std::vector<SrcType> arg_types;
        for (const Term& a : args) {
            ResultType rt = type_of(a, env);
            if (!rt.scalar())
                fail("argument of " + to_string(fn) +
                     " is a multiple value in " + t.print());
            arg_types.push_back(rt.single());
        }
        FnType chosen = select_fn_type(arg_types, callable_types(fn));
        std::vector<ATerm> anns;
        for (std::size_t i = 0; i < args.size(); ++i)
            anns.push_back(ann(args[i], ResultType(chosen.inputs[i]), env));
        return wrap(ResultType(chosen.outputs), dest,
                    ATerm::app(fn, std::move(anns), chosen), t);
    }
};

} // namespace

FnType select_fn_type(const std::vector<SrcType>& arg_types,
                      const std::vector<FnType>& candidates) {
    if (candidates.empty())
        throw WorkspaceError("overload selection with no declared types");
    const FnType* best = nullptr;
    for (const FnType& c : candidates) {
        if (!inputs_leq(arg_types, c.inputs)) continue;
        if (!best || inputs_leq(c.inputs, best->inputs)) best = &c;
    }
    // No type accepts the arguments as they are: the main type wins and
    // the argument conversions become casts.
    return best ? *best : candidates.front();
}

void check_glb_closure(const FunctionRecord& fn) {
    std::vector<FnType> all = fn.all_types();
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const auto& a = all[i].inputs;
            const auto& b = all[j].inputs;
            if (a.size() != b.size()) continue;
            std::vector<SrcType> meet;
            bool exists = true;
            for (std::size_t k = 0; k < a.size(); ++k) {
                auto g = type_glb(a[k], b[k]);
                if (!g) {
                    exists = false;
                    break;
                }
                meet.push_back(*g);
            }
            if (!exists) continue;
            bool declared = false;
            for (const FnType& c : all)
                if (c.inputs == meet) {
                    declared = true;
                    break;
                }
            if (!declared)
                throw WorkspaceError(
                    "function types of " + to_string(fn.name) +
                    " are not closed under greatest lower bounds: input "
                    "types " +
                    inputs_keyword_string(a) + " and " +
                    inputs_keyword_string(b) + " meet at the undeclared " +
                    inputs_keyword_string(meet) +
                    "; declare a function type with those inputs");
        }
    }
}

ATerm annotate(const Term& t, const std::vector<Symbol>& params,
               const FnType& type, const World& w, bool guards) {
    Annotator a(w, guards);
    return a.run(t, params, type);
}

ATerm annotate(const Term& t, const FunctionRecord& fn, const World& w,
               bool guards) {
    return annotate(t, fn.params, fn.main_type, w, guards);
}

} // namespace sejc
