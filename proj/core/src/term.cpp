#include "sejc/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <variant>

namespace sejc {

namespace {

struct VarNode {
    Symbol name;
};
struct QuoteNode {
    Value value;
};
struct AppNode {
    Symbol fn;
    std::vector<Term> args;
};
struct LambdaAppNode {
    std::vector<Symbol> params;
    Term body;
    std::vector<Term> args;
};

} // namespace

struct Term::Node {
    std::variant<VarNode, QuoteNode, AppNode, LambdaAppNode> v;
};

Term Term::var(Symbol name) {
    return Term(std::make_shared<const Node>(Node{VarNode{std::move(name)}}));
}

Term Term::quote(Value v) {
    return Term(std::make_shared<const Node>(Node{QuoteNode{std::move(v)}}));
}

Term Term::app(Symbol fn, std::vector<Term> args) {
    return Term(std::make_shared<const Node>(
        Node{AppNode{std::move(fn), std::move(args)}}));
}

Term Term::lambda_app(std::vector<Symbol> params, Term body,
                      std::vector<Term> args) {
    return Term(std::make_shared<const Node>(Node{
        LambdaAppNode{std::move(params), std::move(body), std::move(args)}}));
}

Term::Kind Term::kind() const {
    switch (node_->v.index()) {
    case 0: return Kind::Var;
    case 1: return Kind::Quote;
    case 2: return Kind::App;
    default: return Kind::LambdaApp;
    }
}

const Symbol& Term::var_name() const { return std::get<VarNode>(node_->v).name; }
const Value& Term::quoted() const { return std::get<QuoteNode>(node_->v).value; }
const Symbol& Term::fn() const { return std::get<AppNode>(node_->v).fn; }

const std::vector<Term>& Term::args() const {
    if (auto* a = std::get_if<AppNode>(&node_->v)) return a->args;
    return std::get<LambdaAppNode>(node_->v).args;
}

const std::vector<Symbol>& Term::params() const {
    return std::get<LambdaAppNode>(node_->v).params;
}

const Term& Term::body() const { return std::get<LambdaAppNode>(node_->v).body; }

bool Term::operator==(const Term& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
    case Kind::Var: return var_name() == o.var_name();
    case Kind::Quote: return quoted() == o.quoted();
    case Kind::App:
        return fn() == o.fn() && args() == o.args();
    case Kind::LambdaApp:
        return params() == o.params() && body() == o.body() && args() == o.args();
    }
    return false;
}

namespace {

std::string lowercased(const std::string& s) {
    std::string out = s;
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Symbols and quoted data display lowercase, matching how source is
// written (the reader upcases on the way in).
void print_symbol_to(const Symbol& s, std::ostream& os) {
    if (s.pkg == "KEYWORD") {
        os << ':' << lowercased(s.name);
    } else if (s.pkg == "COMMON-LISP" && is_builtin_common_lisp_name(s.name)) {
        os << lowercased(s.name);
    } else if (s.pkg == "ACL2" && !is_builtin_common_lisp_name(s.name)) {
        os << lowercased(s.name);
    } else {
        os << lowercased(s.pkg) << "::" << lowercased(s.name);
    }
}

void print_quoted_to(const Value& v, std::ostream& os) {
    switch (v.kind()) {
    case ValueKind::Symbol:
        print_symbol_to(v.symbol_value(), os);
        return;
    case ValueKind::Cons: {
        os << '(';
        Value x = v;
        bool first = true;
        while (true) {
            if (!first) os << ' ';
            print_quoted_to(x.car(), os);
            first = false;
            const Value& rest = x.cdr();
            if (rest.is_nil()) break;
            if (!rest.is_cons()) {
                os << " . ";
                print_quoted_to(rest, os);
                break;
            }
            x = rest;
        }
        os << ')';
        return;
    }
    default:
        os << v.print();
        return;
    }
}

void print_term_to(const Term& t, std::ostream& os) {
    switch (t.kind()) {
    case Term::Kind::Var:
        print_symbol_to(t.var_name(), os);
        return;
    case Term::Kind::Quote:
        os << '\'';
        print_quoted_to(t.quoted(), os);
        return;
    case Term::Kind::App: {
        os << '(';
        print_symbol_to(t.fn(), os);
        for (const Term& a : t.args()) {
            os << ' ';
            print_term_to(a, os);
        }
        os << ')';
        return;
    }
    case Term::Kind::LambdaApp: {
        os << "((lambda (";
        for (std::size_t i = 0; i < t.params().size(); ++i) {
            if (i) os << ' ';
            print_symbol_to(t.params()[i], os);
        }
        os << ") ";
        print_term_to(t.body(), os);
        os << ')';
        for (const Term& a : t.args()) {
            os << ' ';
            print_term_to(a, os);
        }
        os << ')';
        return;
    }
    }
}

void collect_free_vars(const Term& t, const std::set<Symbol>& bound,
                       std::vector<Symbol>& out, std::set<Symbol>& seen) {
    switch (t.kind()) {
    case Term::Kind::Var:
        if (!bound.count(t.var_name()) && seen.insert(t.var_name()).second)
            out.push_back(t.var_name());
        return;
    case Term::Kind::Quote:
        return;
    case Term::Kind::App:
        for (const Term& a : t.args()) collect_free_vars(a, bound, out, seen);
        return;
    case Term::Kind::LambdaApp: {
        for (const Term& a : t.args()) collect_free_vars(a, bound, out, seen);
        std::set<Symbol> inner = bound;
        for (const Symbol& p : t.params()) inner.insert(p);
        collect_free_vars(t.body(), inner, out, seen);
        return;
    }
    }
}

} // namespace

std::string Term::print() const {
    std::ostringstream os;
    print_term_to(*this, os);
    return os.str();
}

std::string display_symbol(const Symbol& s) {
    std::ostringstream os;
    print_symbol_to(s, os);
    return os.str();
}

std::vector<Symbol> free_vars(const Term& t) {
    std::vector<Symbol> out;
    std::set<Symbol> seen;
    collect_free_vars(t, {}, out, seen);
    return out;
}

bool lambdas_closed(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Quote:
        return true;
    case Term::Kind::App:
        return std::all_of(t.args().begin(), t.args().end(), lambdas_closed);
    case Term::Kind::LambdaApp: {
        for (const Symbol& v : free_vars(t.body())) {
            if (std::find(t.params().begin(), t.params().end(), v) ==
                t.params().end())
                return false;
        }
        return lambdas_closed(t.body()) &&
               std::all_of(t.args().begin(), t.args().end(), lambdas_closed);
    }
    }
    return true;
}

} // namespace sejc
