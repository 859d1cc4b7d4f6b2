#include "sejc/pretrans.hpp"

#include "sejc/diagnostics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sejc {

namespace {

Symbol cl(const char* name) { return Symbol{"COMMON-LISP", name}; }

bool is_quoted_symbol(const Term& t, const Symbol& s) {
    return t.is_quote() && t.quoted().is_symbol() && t.quoted().symbol_value() == s;
}

} // namespace

// ---- ATerm ----

struct ATerm::Node {
    Kind kind;
    ResultType from;
    ResultType to;
    AVar var;
    Value quoted{Value::nil()};
    Symbol fn;
    std::optional<FnType> overload;
    std::vector<AVar> params;
    std::vector<ATerm> args;     // App and LambdaApp arguments
    std::vector<ATerm> sub;      // Conv inner / LambdaApp body
};

ATerm ATerm::conv(ResultType from, ResultType to, ATerm inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Conv;
    n->from = std::move(from);
    n->to = std::move(to);
    n->sub.push_back(std::move(inner));
    return ATerm(std::move(n));
}

ATerm ATerm::var(AVar v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = std::move(v);
    return ATerm(std::move(n));
}

ATerm ATerm::quote(Value v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Quote;
    n->quoted = std::move(v);
    return ATerm(std::move(n));
}

ATerm ATerm::app(Symbol fn, std::vector<ATerm> args,
                 std::optional<FnType> overload) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::App;
    n->fn = std::move(fn);
    n->args = std::move(args);
    n->overload = std::move(overload);
    return ATerm(std::move(n));
}

ATerm ATerm::lambda_app(std::vector<AVar> params, ATerm body,
                        std::vector<ATerm> args) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::LambdaApp;
    n->params = std::move(params);
    n->sub.push_back(std::move(body));
    n->args = std::move(args);
    return ATerm(std::move(n));
}

ATerm::Kind ATerm::kind() const { return node_->kind; }
const ResultType& ATerm::from() const { return node_->from; }
const ResultType& ATerm::to() const { return node_->to; }
const ATerm& ATerm::inner() const { return node_->sub.at(0); }
const AVar& ATerm::var_info() const { return node_->var; }
const Value& ATerm::quoted() const { return node_->quoted; }
const Symbol& ATerm::fn() const { return node_->fn; }
const std::optional<FnType>& ATerm::overload() const { return node_->overload; }
const std::vector<ATerm>& ATerm::args() const { return node_->args; }
const std::vector<AVar>& ATerm::params() const { return node_->params; }
const ATerm& ATerm::body() const { return node_->sub.at(0); }

bool ATerm::operator==(const ATerm& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
    case Kind::Conv:
        return from() == o.from() && to() == o.to() && inner() == o.inner();
    case Kind::Var:
        return var_info() == o.var_info();
    case Kind::Quote:
        return quoted() == o.quoted();
    case Kind::App:
        return fn() == o.fn() && overload() == o.overload() &&
               args() == o.args();
    case Kind::LambdaApp:
        return params() == o.params() && body() == o.body() &&
               args() == o.args();
    }
    return false;
}

namespace {

void display_var_to(const AVar& v, std::ostream& os) {
    if (v.mark == VarMark::New) os << "[N]";
    if (v.mark == VarMark::Old) os << "[O]";
    os << '[' << result_type_code(v.type) << ']' << display_symbol(v.sym);
}

void display_to(const ATerm& t, std::ostream& os) {
    switch (t.kind()) {
    case ATerm::Kind::Conv:
        os << "([" << result_type_code(t.from()) << '>'
           << result_type_code(t.to()) << "] ";
        display_to(t.inner(), os);
        os << ')';
        return;
    case ATerm::Kind::Var:
        display_var_to(t.var_info(), os);
        return;
    case ATerm::Kind::Quote:
        os << Term::quote(t.quoted()).print();
        return;
    case ATerm::Kind::App: {
        os << '(' << display_symbol(t.fn());
        for (const ATerm& a : t.args()) {
            os << ' ';
            display_to(a, os);
        }
        os << ')';
        return;
    }
    case ATerm::Kind::LambdaApp: {
        os << "(let (";
        for (std::size_t i = 0; i < t.params().size(); ++i) {
            if (i) os << ' ';
            os << '(';
            display_var_to(t.params()[i], os);
            os << ' ';
            display_to(t.args()[i], os);
            os << ')';
        }
        os << ") ";
        display_to(t.body(), os);
        os << ')';
        return;
    }
    }
}

} // namespace

std::string ATerm::display() const {
    std::ostringstream os;
    display_to(*this, os);
    return os.str();
}

Term erase(const ATerm& t) {
    switch (t.kind()) {
    case ATerm::Kind::Conv:
        return erase(t.inner());
    case ATerm::Kind::Var:
        return Term::var(t.var_info().sym);
    case ATerm::Kind::Quote:
        return Term::quote(t.quoted());
    case ATerm::Kind::App: {
        // Reconstructed and/or come back as the if calls they stood for.
        if (t.fn() == cl("OR") && t.args().size() == 2) {
            Term a = erase(t.args()[0]);
            return Term::app(if_symbol(), {a, a, erase(t.args()[1])});
        }
        if (t.fn() == cl("AND") && t.args().size() == 2) {
            return Term::app(if_symbol(),
                             {erase(t.args()[0]), erase(t.args()[1]),
                              Term::quote(Value::nil())});
        }
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const ATerm& a : t.args()) args.push_back(erase(a));
        return Term::app(t.fn(), std::move(args));
    }
    case ATerm::Kind::LambdaApp: {
        std::vector<Symbol> params;
        params.reserve(t.params().size());
        for (const AVar& p : t.params()) params.push_back(p.sym);
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const ATerm& a : t.args()) args.push_back(erase(a));
        return Term::lambda_app(std::move(params), erase(t.body()),
                                std::move(args));
    }
    }
    throw WorkspaceError("unreachable annotated-term kind");
}

// ---- Simplification passes ----

Term resolve_mbe(const Term& t, bool guards) {
    switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Quote:
        return t;
    case Term::Kind::App: {
        if (t.fn() == return_last_symbol()) {
            const auto& args = t.args();
            if (args.size() == 3 && is_quoted_symbol(args[0], cl("MBE1-RAW")))
                return resolve_mbe(guards ? args[1] : args[2], guards);
            if (args.size() == 3 && is_quoted_symbol(args[0], cl("PROGN"))) {
                return Term::app(t.fn(),
                                 {args[0], resolve_mbe(args[1], guards),
                                  resolve_mbe(args[2], guards)});
            }
            throw WorkspaceError("unsupported return-last form: " + t.print());
        }
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(resolve_mbe(a, guards));
        return Term::app(t.fn(), std::move(args));
    }
    case Term::Kind::LambdaApp: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(resolve_mbe(a, guards));
        return Term::lambda_app(t.params(), resolve_mbe(t.body(), guards),
                                std::move(args));
    }
    }
    return t;
}

Term simplify_if_t(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Quote:
        return t;
    case Term::Kind::App: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(simplify_if_t(a));
        if (t.fn() == if_symbol() && args.size() == 3 &&
            is_quoted_symbol(args[0], cl("T")))
            return args[1];
        return Term::app(t.fn(), std::move(args));
    }
    case Term::Kind::LambdaApp: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(simplify_if_t(a));
        return Term::lambda_app(t.params(), simplify_if_t(t.body()),
                                std::move(args));
    }
    }
    return t;
}

Term elide_progn(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Quote:
        return t;
    case Term::Kind::App: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(elide_progn(a));
        if (t.fn() == return_last_symbol() && args.size() == 3 &&
            is_quoted_symbol(args[0], cl("PROGN")))
            return args[2];
        return Term::app(t.fn(), std::move(args));
    }
    case Term::Kind::LambdaApp: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(elide_progn(a));
        return Term::lambda_app(t.params(), elide_progn(t.body()),
                                std::move(args));
    }
    }
    return t;
}

Term drop_unused_bindings(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Quote:
        return t;
    case Term::Kind::App: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(drop_unused_bindings(a));
        return Term::app(t.fn(), std::move(args));
    }
    case Term::Kind::LambdaApp: {
        Term body = drop_unused_bindings(t.body());
        std::set<Symbol> used;
        for (const Symbol& s : free_vars(body)) used.insert(s);
        std::vector<Symbol> params;
        std::vector<Term> args;
        for (std::size_t i = 0; i < t.params().size(); ++i) {
            if (!used.count(t.params()[i])) continue;
            params.push_back(t.params()[i]);
            args.push_back(drop_unused_bindings(t.args()[i]));
        }
        if (params.empty()) return body;
        return Term::lambda_app(std::move(params), std::move(body),
                                std::move(args));
    }
    }
    return t;
}

Term drop_trivial_bindings(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Quote:
        return t;
    case Term::Kind::App: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(drop_trivial_bindings(a));
        return Term::app(t.fn(), std::move(args));
    }
    case Term::Kind::LambdaApp: {
        Term body = drop_trivial_bindings(t.body());
        std::vector<Symbol> params;
        std::vector<Term> args;
        for (std::size_t i = 0; i < t.params().size(); ++i) {
            Term arg = drop_trivial_bindings(t.args()[i]);
            if (arg == Term::var(t.params()[i])) continue;
            params.push_back(t.params()[i]);
            args.push_back(std::move(arg));
        }
        if (params.empty()) return body;
        return Term::lambda_app(std::move(params), std::move(body),
                                std::move(args));
    }
    }
    return t;
}

Term simplify(const Term& t, bool guards) {
    return drop_trivial_bindings(
        drop_unused_bindings(elide_progn(simplify_if_t(resolve_mbe(t, guards)))));
}

// ---- Variable reuse marking ----

namespace {

// Two walks over the same tree with identical binder numbering: the
// first records, per binder, when it is last used and where each lambda
// binding's argument finishes evaluating; the second applies the
// New/Old decisions. The clock advances at variable occurrences,
// following evaluation order (arguments left to right, then the body).
class ReuseMarker {
public:
    explicit ReuseMarker(const std::vector<AVar>& fn_params) {
        for (const AVar& p : fn_params) {
            int id = new_binder(p.type, -1, false);
            push(p.sym, id);
            marks_[id] = VarMark::Unmarked;
        }
        base_ = next_id_;
    }

    ATerm run(const ATerm& t) {
        scan(t);
        decide();
        next_id_ = base_;
        return rebuild(t);
    }

private:
    struct Frame {
        ResultType type;
        long last_use = -1;
        long arg_end = -1;
        int shadowed = -1;
        bool type_match = false;
    };

    std::vector<Frame> binders_;
    std::unordered_map<Symbol, std::vector<int>, SymbolHash> scopes_;
    std::unordered_map<int, VarMark> marks_;
    long clock_ = 0;
    int next_id_ = 0;
    int base_ = 0; // ids below this are function parameters

    int new_binder(const ResultType& type, int shadowed, bool type_match) {
        Frame f;
        f.type = type;
        f.shadowed = shadowed;
        f.type_match = type_match;
        binders_.push_back(std::move(f));
        return next_id_++;
    }

    void push(const Symbol& s, int id) { scopes_[s].push_back(id); }
    void pop(const Symbol& s) { scopes_[s].pop_back(); }
    int lookup(const Symbol& s) const {
        auto it = scopes_.find(s);
        if (it == scopes_.end() || it->second.empty()) return -1;
        return it->second.back();
    }

    void scan(const ATerm& t) {
        switch (t.kind()) {
        case ATerm::Kind::Conv:
            scan(t.inner());
            return;
        case ATerm::Kind::Var: {
            ++clock_;
            int id = lookup(t.var_info().sym);
            if (id >= 0) binders_[id].last_use = clock_;
            return;
        }
        case ATerm::Kind::Quote:
            return;
        case ATerm::Kind::App:
            for (const ATerm& a : t.args()) scan(a);
            return;
        case ATerm::Kind::LambdaApp: {
            std::vector<int> ids;
            for (const AVar& p : t.params()) {
                int prev = lookup(p.sym);
                bool match = prev >= 0 && binders_[prev].type == p.type;
                ids.push_back(new_binder(p.type, prev, match));
            }
            for (std::size_t i = 0; i < t.args().size(); ++i) {
                scan(t.args()[i]);
                binders_[ids[i]].arg_end = clock_;
            }
            for (std::size_t i = 0; i < t.params().size(); ++i)
                push(t.params()[i].sym, ids[i]);
            scan(t.body());
            for (const AVar& p : t.params()) pop(p.sym);
            return;
        }
        }
    }

    void decide() {
        for (int id = base_; id < static_cast<int>(binders_.size()); ++id) {
            const Frame& f = binders_[id];
            bool old = f.shadowed >= 0 && f.type_match &&
                       binders_[f.shadowed].last_use <= f.arg_end;
            marks_[id] = old ? VarMark::Old : VarMark::New;
        }
    }

    VarMark mark_of(int id) const {
        auto it = marks_.find(id);
        return it == marks_.end() ? VarMark::Unmarked : it->second;
    }

    ATerm rebuild(const ATerm& t) {
        switch (t.kind()) {
        case ATerm::Kind::Conv:
            return ATerm::conv(t.from(), t.to(), rebuild(t.inner()));
        case ATerm::Kind::Var: {
            AVar v = t.var_info();
            v.mark = mark_of(lookup(v.sym));
            return ATerm::var(std::move(v));
        }
        case ATerm::Kind::Quote:
            return t;
        case ATerm::Kind::App: {
            std::vector<ATerm> args;
            args.reserve(t.args().size());
            for (const ATerm& a : t.args()) args.push_back(rebuild(a));
            return ATerm::app(t.fn(), std::move(args), t.overload());
        }
        case ATerm::Kind::LambdaApp: {
            std::vector<int> ids;
            std::vector<AVar> params = t.params();
            for (AVar& p : params) {
                int id = next_id_++;
                ids.push_back(id);
                p.mark = mark_of(id);
            }
            std::vector<ATerm> args;
            args.reserve(t.args().size());
            for (const ATerm& a : t.args()) args.push_back(rebuild(a));
            for (std::size_t i = 0; i < params.size(); ++i)
                push(params[i].sym, ids[i]);
            ATerm body = rebuild(t.body());
            for (const AVar& p : params) pop(p.sym);
            return ATerm::lambda_app(std::move(params), std::move(body),
                                     std::move(args));
        }
        }
        throw WorkspaceError("unreachable annotated-term kind");
    }
};

} // namespace

ATerm mark_reuse(const ATerm& t, const std::vector<AVar>& fn_params) {
    ReuseMarker marker(fn_params);
    return marker.run(t);
}

// ---- Renaming apart and name translation ----

namespace {

const std::set<std::string>& java_reserved_words() {
    static const std::set<std::string> words = {
        "abstract", "assert",   "boolean",    "break",      "byte",
        "case",     "catch",    "char",       "class",      "const",
        "continue", "default",  "do",         "double",     "else",
        "enum",     "extends",  "final",      "finally",    "float",
        "for",      "goto",     "if",         "implements", "import",
        "instanceof", "int",    "interface",  "long",       "native",
        "new",      "package",  "private",    "protected",  "public",
        "return",   "short",    "static",     "strictfp",   "super",
        "switch",   "synchronized", "this",   "throw",      "throws",
        "transient", "try",     "void",       "volatile",   "while",
        "true",     "false",    "null",       "_",
    };
    return words;
}

class Renamer {
public:
    std::string fresh(const std::string& base) {
        if (used_.insert(base).second) return base;
        for (int k = 1;; ++k) {
            std::string cand = base + "$" + std::to_string(k);
            if (used_.insert(cand).second) return cand;
        }
    }

    void bind(const Symbol& s, const std::string& target) {
        scopes_[s].push_back(target);
    }
    void unbind(const Symbol& s) { scopes_[s].pop_back(); }

    ATerm walk(const ATerm& t) {
        switch (t.kind()) {
        case ATerm::Kind::Conv:
            return ATerm::conv(t.from(), t.to(), walk(t.inner()));
        case ATerm::Kind::Var: {
            AVar v = t.var_info();
            v.target_name = current(v.sym);
            return ATerm::var(std::move(v));
        }
        case ATerm::Kind::Quote:
            return t;
        case ATerm::Kind::App: {
            std::vector<ATerm> args;
            args.reserve(t.args().size());
            for (const ATerm& a : t.args()) args.push_back(walk(a));
            return ATerm::app(t.fn(), std::move(args), t.overload());
        }
        case ATerm::Kind::LambdaApp: {
            std::vector<ATerm> args;
            args.reserve(t.args().size());
            for (const ATerm& a : t.args()) args.push_back(walk(a));
            std::vector<AVar> params = t.params();
            for (AVar& p : params) {
                if (p.mark == VarMark::Old)
                    p.target_name = current(p.sym);
                else
                    p.target_name =
                        fresh(translate_name(p.sym.name, NameKind::Variable));
            }
            for (const AVar& p : params) bind(p.sym, p.target_name);
            ATerm body = walk(t.body());
            for (const AVar& p : params) unbind(p.sym);
            return ATerm::lambda_app(std::move(params), std::move(body),
                                     std::move(args));
        }
        }
        throw WorkspaceError("unreachable annotated-term kind");
    }

private:
    std::set<std::string> used_;
    std::unordered_map<Symbol, std::vector<std::string>, SymbolHash> scopes_;

    std::string current(const Symbol& s) const {
        auto it = scopes_.find(s);
        if (it == scopes_.end() || it->second.empty())
            return translate_name(s.name, NameKind::Variable);
        return it->second.back();
    }
};

} // namespace

ATerm rename_apart(const ATerm& t, std::vector<AVar>& fn_params) {
    Renamer renamer;
    for (AVar& p : fn_params) {
        p.target_name =
            renamer.fresh(translate_name(p.sym.name, NameKind::Variable));
        renamer.bind(p.sym, p.target_name);
    }
    return renamer.walk(t);
}

std::string translate_name(const std::string& name, NameKind kind) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (char c : name) {
        unsigned char u = static_cast<unsigned char>(c);
        if (kind != NameKind::Package)
            u = static_cast<unsigned char>(std::tolower(u));
        if (u == '-') {
            out += '_';
        } else if ((u >= 'A' && u <= 'Z') || (u >= 'a' && u <= 'z') ||
                   (u >= '0' && u <= '9') || u == '_') {
            out += static_cast<char>(u);
        } else {
            out += '$';
            out += hex[(u >> 4) & 0xf];
            out += hex[u & 0xf];
        }
    }
    if (!out.empty() && out[0] >= '0' && out[0] <= '9') out.insert(0, "_");
    if (java_reserved_words().count(out)) out += '$';
    return out;
}

// ---- Whole-body convenience ----

AnnotatedFunction pretranslate(const FunctionRecord& fn, const World& w,
                               bool guards, const FnType* type) {
    FnType ft;
    if (type)
        ft = *type;
    else if (guards)
        ft = fn.main_type;
    else
        ft = FnType{std::vector<SrcType>(fn.params.size(), SrcType::AVALUE),
                    std::vector<SrcType>(fn.main_type.outputs.size(),
                                         SrcType::AVALUE)};

    Term body = simplify(fn.body, guards);
    ATerm ann = annotate(body, fn.params, ft, w, guards);

    std::vector<AVar> params;
    params.reserve(fn.params.size());
    for (std::size_t i = 0; i < fn.params.size(); ++i)
        params.push_back(AVar{fn.params[i],
                              ResultType(guards ? ft.inputs[i]
                                                : SrcType::AVALUE)});
    ATerm marked = mark_reuse(ann, params);
    ATerm named = rename_apart(marked, params);
    return AnnotatedFunction{std::move(params), std::move(named)};
}

} // namespace sejc
