#include "sejc/interp.hpp"

#include <sstream>
#include <variant>

namespace sejc {

const Value& MultiValue::one() const {
    if (vals.size() != 1)
        throw EvalError(Phase::Interpretation,
                        "expected a single value, got " +
                            std::to_string(vals.size()));
    return vals[0];
}

std::string MultiValue::print() const {
    if (single()) return vals[0].print();
    std::ostringstream os;
    os << "(mv";
    for (const Value& v : vals) os << ' ' << v.print();
    os << ')';
    return os.str();
}

namespace {

// Arithmetic completion: non-numbers act as the operation's neutral
// element (0 for additive contexts, 1 for multiplicative ones).
Value fix_num(const Value& v) { return v.is_number() ? v : Value::integer(0); }
Value fix_one(const Value& v) { return v.is_number() ? v : Value::integer(1); }

Value nth_completion(const Value& index, Value list) {
    BigInt n = index.is_integer() ? index.int_value() : BigInt(0);
    while (n > 0 && list.is_cons()) {
        list = list.cdr();
        --n;
    }
    return list.is_cons() ? list.car() : Value::nil();
}

Value coerce_to_list(const Value& v) {
    if (!v.is_string()) return Value::nil();
    std::vector<Value> chars;
    for (char c : v.string_value())
        chars.push_back(Value::character(static_cast<unsigned char>(c)));
    return Value::list(chars);
}

Value coerce_to_string(Value v) {
    std::string out;
    while (v.is_cons()) {
        const Value& c = v.car();
        out += c.is_character() ? static_cast<char>(c.char_value()) : '\0';
        v = v.cdr();
    }
    return Value::string(std::move(out));
}

[[noreturn]] void bad_native(const Symbol& fn, const std::string& what,
                             Phase phase) {
    throw EvalError(phase, to_string(fn) + ": " + what);
}

std::int32_t want_jint(const Symbol& fn, const Value& v, Phase phase) {
    if (!v.is_jint()) bad_native(fn, "argument is not a Java int", phase);
    return v.jint_value();
}

} // namespace

Value apply_native(const Symbol& fn, const std::vector<Value>& args, Phase phase) {
    const NativeInfo* info = find_native(fn);
    if (!info) bad_native(fn, "not a built-in function", phase);
    if (static_cast<int>(args.size()) != info->arity)
        bad_native(fn,
                   "expects " + std::to_string(info->arity) + " arguments, got " +
                       std::to_string(args.size()),
                   phase);

    const std::string& name = fn.name;
    const Value& a = args[0];
    if (name == "CONS") return Value::cons(a, args[1]);
    if (name == "CAR") return a.is_cons() ? a.car() : Value::nil();
    if (name == "CDR") return a.is_cons() ? a.cdr() : Value::nil();
    if (name == "CONSP") return Value::boolean(a.is_cons());
    if (name == "EQUAL") return Value::boolean(a == args[1]);
    if (name == "NOT") return Value::boolean(a.is_nil());
    if (name == "ZP")
        return Value::boolean(!(a.is_integer() && a.int_value() > 0));
    if (name == "BINARY-+") return num_add(fix_num(a), fix_num(args[1]));
    if (name == "BINARY-*") return num_mul(fix_one(a), fix_one(args[1]));
    if (name == "UNARY--") return num_neg(fix_num(a));
    if (name == "UNARY-/") return num_recip(fix_num(a));
    if (name == "<")
        return Value::boolean(num_compare(fix_num(a), fix_num(args[1])) < 0);
    if (name == "ACL2-NUMBERP") return Value::boolean(a.is_number());
    if (name == "RATIONALP") return Value::boolean(a.is_number());
    if (name == "INTEGERP") return Value::boolean(a.is_integer());
    if (name == "NATP")
        return Value::boolean(a.is_integer() && a.int_value() >= 0);
    if (name == "SYMBOLP") return Value::boolean(a.is_symbol());
    if (name == "CHARACTERP") return Value::boolean(a.is_character());
    if (name == "STRINGP") return Value::boolean(a.is_string());
    if (name == "BOOLEANP") return Value::boolean(a.is_boolean());
    if (name == "MV-NTH") return nth_completion(a, args[1]);
    if (name == "LEN") {
        BigInt n = 0;
        Value v = a;
        while (v.is_cons()) {
            ++n;
            v = v.cdr();
        }
        return Value::integer(n);
    }
    if (name == "CHAR-CODE")
        return Value::integer(a.is_character() ? a.char_value() : 0);
    if (name == "CODE-CHAR") {
        if (a.is_integer() && a.int_value() >= 0 && a.int_value() < 256)
            return Value::character(
                static_cast<unsigned char>(a.int_value().convert_to<unsigned>()));
        return Value::character(0);
    }
    if (name == "COERCE") {
        const Value& dir = args[1];
        if (dir.is_symbol() && dir.symbol_value().name == "LIST")
            return coerce_to_list(a);
        return coerce_to_string(a);
    }
    if (name == "INT-VALUE") {
        if (!a.is_integer() || a.int_value() < -2147483648LL ||
            a.int_value() > 2147483647LL)
            bad_native(fn, "argument outside 32-bit int range", phase);
        return Value::jint(a.int_value().convert_to<std::int32_t>());
    }
    if (name == "INT-ADD") {
        std::uint32_t x = static_cast<std::uint32_t>(want_jint(fn, a, phase));
        std::uint32_t y =
            static_cast<std::uint32_t>(want_jint(fn, args[1], phase));
        return Value::jint(static_cast<std::int32_t>(x + y));
    }
    if (name == "INT-MUL") {
        std::uint32_t x = static_cast<std::uint32_t>(want_jint(fn, a, phase));
        std::uint32_t y =
            static_cast<std::uint32_t>(want_jint(fn, args[1], phase));
        return Value::jint(static_cast<std::int32_t>(x * y));
    }
    if (name == "INT-VALUEP") return Value::boolean(a.is_jint());
    bad_native(fn, "no native evaluation rule", phase);
}

namespace {

// Steps measure work, and work on big numbers grows with their size:
// results wider than one machine word cost extra steps proportional to
// their width. A step limit therefore also bounds how large values can
// get, so runaway growth (squaring in a loop, factorial accumulators)
// trips the limit instead of stalling in a single giant multiplication.
std::uint64_t value_weight(const Value& v) {
    if (v.is_integer()) return v.int_value().backend().size();
    if (v.is_ratio())
        return v.ratio_value().num.backend().size() +
               v.ratio_value().den.backend().size();
    return 1;
}

using Env = std::shared_ptr<const Bindings>;

struct TEval {
    const Term* term;
    Env env;
};
struct TBranch {
    const Term* then_branch;
    const Term* else_branch;
    Env env;
};
struct TCall {
    const Term* app; // App node, for fn symbol and arity
};
struct TLambda {
    const Term* lam; // LambdaApp node
    Env env;
};

using Task = std::variant<TEval, TBranch, TCall, TLambda>;

} // namespace

Interp::Interp(const World& world, std::uint64_t max_steps)
    : world_(world), max_steps_(max_steps) {}

MultiValue Interp::eval(const Term& t, const Bindings& env) {
    std::vector<Task> tasks;
    std::vector<MultiValue> results;
    tasks.push_back(TEval{&t, std::make_shared<Bindings>(env)});

    auto pop_args = [&results](std::size_t n) {
        std::vector<MultiValue> args(results.end() - n, results.end());
        results.resize(results.size() - n);
        return args;
    };

    while (!tasks.empty()) {
        ++steps_;
        if (max_steps_ && steps_ > max_steps_)
            throw StepLimitExceeded(Phase::Interpretation);
        Task task = std::move(tasks.back());
        tasks.pop_back();

        if (auto* ev = std::get_if<TEval>(&task)) {
            const Term& term = *ev->term;
            switch (term.kind()) {
            case Term::Kind::Var: {
                auto it = ev->env->find(term.var_name());
                if (it == ev->env->end())
                    throw EvalError(Phase::Interpretation,
                                    "unbound variable " +
                                        to_string(term.var_name()));
                results.push_back(it->second);
                break;
            }
            case Term::Kind::Quote:
                results.push_back(MultiValue(term.quoted()));
                break;
            case Term::Kind::App: {
                if (term.fn() == if_symbol()) {
                    if (term.args().size() != 3)
                        throw EvalError(Phase::Interpretation,
                                        "if expects 3 arguments");
                    tasks.push_back(TBranch{&term.args()[1], &term.args()[2],
                                            ev->env});
                    tasks.push_back(TEval{&term.args()[0], ev->env});
                    break;
                }
                tasks.push_back(TCall{&term});
                for (auto it = term.args().rbegin(); it != term.args().rend();
                     ++it)
                    tasks.push_back(TEval{&*it, ev->env});
                break;
            }
            case Term::Kind::LambdaApp: {
                if (term.params().size() != term.args().size())
                    throw EvalError(Phase::Interpretation,
                                    "lambda arity mismatch");
                tasks.push_back(TLambda{&term, ev->env});
                for (auto it = term.args().rbegin(); it != term.args().rend();
                     ++it)
                    tasks.push_back(TEval{&*it, ev->env});
                break;
            }
            }
        } else if (auto* br = std::get_if<TBranch>(&task)) {
            MultiValue test = std::move(results.back());
            results.pop_back();
            const Term* chosen =
                test.one().is_nil() ? br->else_branch : br->then_branch;
            tasks.push_back(TEval{chosen, br->env});
        } else if (auto* call = std::get_if<TCall>(&task)) {
            const Term& app = *call->app;
            const Symbol& fn = app.fn();
            std::vector<MultiValue> argv = pop_args(app.args().size());

            if (fn == mv_symbol()) {
                if (argv.size() < 2)
                    throw EvalError(Phase::Interpretation,
                                    "mv needs at least 2 values");
                std::vector<Value> vals;
                for (auto& m : argv) vals.push_back(m.one());
                results.push_back(MultiValue(std::move(vals)));
                continue;
            }
            if (fn == mv_nth_symbol() && argv.size() == 2 && !argv[1].single()) {
                const Value& idx = argv[0].one();
                const auto& tuple = argv[1].vals;
                Value out = Value::nil();
                if (idx.is_integer() && idx.int_value() >= 0 &&
                    idx.int_value() < tuple.size())
                    out = tuple[idx.int_value().convert_to<std::size_t>()];
                results.push_back(MultiValue(std::move(out)));
                continue;
            }
            if (fn == return_last_symbol()) {
                if (argv.size() != 3)
                    throw EvalError(Phase::Interpretation,
                                    "return-last expects 3 arguments");
                results.push_back(std::move(argv[2]));
                continue;
            }
            if (is_native(fn)) {
                std::vector<Value> vals;
                for (auto& m : argv) vals.push_back(m.one());
                Value out = apply_native(fn, vals);
                std::uint64_t w = value_weight(out);
                if (w > 1) steps_ += w - 1;
                results.push_back(MultiValue(std::move(out)));
                continue;
            }
            const FunctionRecord* rec = world_.find(fn);
            if (!rec)
                throw EvalError(Phase::Interpretation,
                                "call of undefined function " + to_string(fn));
            if (rec->params.size() != argv.size())
                throw EvalError(Phase::Interpretation,
                                "arity mismatch calling " + to_string(fn));
            auto fresh = std::make_shared<Bindings>();
            for (std::size_t i = 0; i < argv.size(); ++i)
                fresh->emplace(rec->params[i], std::move(argv[i]));
            tasks.push_back(TEval{&rec->body, std::move(fresh)});
        } else {
            auto& lam = std::get<TLambda>(task);
            const Term& term = *lam.lam;
            std::vector<MultiValue> argv = pop_args(term.args().size());
            // Lambdas out of the frontend are closed, but simplification
            // may open them, so bindings extend the enclosing scope.
            auto extended = std::make_shared<Bindings>(*lam.env);
            for (std::size_t i = 0; i < argv.size(); ++i)
                (*extended)[term.params()[i]] = std::move(argv[i]);
            tasks.push_back(TEval{&term.body(), std::move(extended)});
        }
    }

    if (results.size() != 1)
        throw EvalError(Phase::Interpretation, "evaluation stack imbalance");
    return std::move(results.back());
}

MultiValue Interp::call(const Symbol& fn, const std::vector<Value>& args) {
    if (is_native(fn)) return MultiValue(apply_native(fn, args));
    const FunctionRecord* rec = world_.find(fn);
    if (!rec)
        throw EvalError(Phase::Interpretation,
                        "call of undefined function " + to_string(fn));
    if (rec->params.size() != args.size())
        throw EvalError(Phase::Interpretation,
                        "arity mismatch calling " + to_string(fn));
    Bindings env;
    for (std::size_t i = 0; i < args.size(); ++i)
        env.emplace(rec->params[i], MultiValue(args[i]));
    return eval(rec->body, env);
}

MultiValue Interp::eval_ground(const Term& call) {
    if (!free_vars(call).empty())
        throw EvalError(Phase::Interpretation, "term is not ground: " +
                                                   call.print());
    return eval(call, {});
}

} // namespace sejc
