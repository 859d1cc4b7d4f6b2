#ifndef SEJC_TERM_HPP
#define SEJC_TERM_HPP

#include "sejc/value.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sejc {

// A term in translated form: variables, quoted constants, applications of
// named functions, and applications of lambda expressions. There is no
// standalone lambda — lambdas exist only applied, with one argument per
// parameter. Terms are immutable and cheap to copy.
class Term {
public:
    enum class Kind { Var, Quote, App, LambdaApp };

    Term() : Term(quote(Value::nil())) {}

    static Term var(Symbol name);
    static Term quote(Value v);
    static Term app(Symbol fn, std::vector<Term> args);
    static Term lambda_app(std::vector<Symbol> params, Term body,
                           std::vector<Term> args);

    Kind kind() const;
    bool is_var() const { return kind() == Kind::Var; }
    bool is_quote() const { return kind() == Kind::Quote; }
    bool is_app() const { return kind() == Kind::App; }
    bool is_lambda_app() const { return kind() == Kind::LambdaApp; }

    const Symbol& var_name() const;          // Var
    const Value& quoted() const;             // Quote
    const Symbol& fn() const;                // App
    const std::vector<Term>& args() const;   // App, LambdaApp
    const std::vector<Symbol>& params() const; // LambdaApp
    const Term& body() const;                // LambdaApp

    // Convenience for recognizing (quote v) applications of specific
    // built-ins in rewrites.
    bool is_app_of(const Symbol& fn) const { return is_app() && this->fn() == fn; }

    bool operator==(const Term& o) const;
    bool operator!=(const Term& o) const { return !(*this == o); }

    // Surface S-expression display, lowercase: quotes with ', lambda
    // applications as ((lambda (params) body) args).
    std::string print() const;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Lowercase display form of a symbol, package-qualified only when the
// bare name would read back differently.
std::string display_symbol(const Symbol& s);

// Free variables in first-occurrence order (left to right, test before
// branches, lambda-app arguments before the body's unbound leftovers).
// Lambda parameters bind within their body only.
std::vector<Symbol> free_vars(const Term& t);

// True when every lambda in t is closed: free vars of body ⊆ params.
bool lambdas_closed(const Term& t);

} // namespace sejc

#endif
