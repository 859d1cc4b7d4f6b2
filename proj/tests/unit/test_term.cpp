#include "sejc/term.hpp"

#include "doctest.h"

using namespace sejc;

namespace {

Symbol acl2(const std::string& n) { return Symbol{"ACL2", n}; }
Symbol cl(const std::string& n) { return Symbol{"COMMON-LISP", n}; }

} // namespace

TEST_CASE("term constructors and accessors") {
    Term v = Term::var(acl2("X"));
    CHECK(v.is_var());
    CHECK(v.var_name() == acl2("X"));

    Term q = Term::quote(Value::integer(3));
    CHECK(q.is_quote());
    CHECK(q.quoted() == Value::integer(3));

    Term app = Term::app(cl("CONS"), {v, q});
    CHECK(app.is_app());
    CHECK(app.fn() == cl("CONS"));
    REQUIRE(app.args().size() == 2);
    CHECK(app.args()[0] == v);
    CHECK(app.is_app_of(cl("CONS")));
    CHECK(!app.is_app_of(cl("CAR")));

    Term lam = Term::lambda_app({acl2("X")}, app, {q});
    CHECK(lam.is_lambda_app());
    REQUIRE(lam.params().size() == 1);
    CHECK(lam.params()[0] == acl2("X"));
    CHECK(lam.body() == app);
    REQUIRE(lam.args().size() == 1);
    CHECK(lam.args()[0] == q);

    CHECK(Term() == Term::quote(Value::nil()));
}

TEST_CASE("term equality is structural") {
    Term a = Term::app(cl("CONS"), {Term::var(acl2("X")), Term::quote(Value::t())});
    Term b = Term::app(cl("CONS"), {Term::var(acl2("X")), Term::quote(Value::t())});
    Term c = Term::app(cl("CONS"), {Term::var(acl2("Y")), Term::quote(Value::t())});
    CHECK(a == b);
    CHECK(a != c);
    CHECK(Term::var(acl2("X")) != Term::quote(Value::symbol(acl2("X"))));

    Term lam1 = Term::lambda_app({acl2("X")}, Term::var(acl2("X")),
                                 {Term::quote(Value::integer(1))});
    Term lam2 = Term::lambda_app({acl2("X")}, Term::var(acl2("X")),
                                 {Term::quote(Value::integer(1))});
    Term lam3 = Term::lambda_app({acl2("Y")}, Term::var(acl2("Y")),
                                 {Term::quote(Value::integer(1))});
    CHECK(lam1 == lam2);
    CHECK(lam1 != lam3); // no alpha-equivalence: names matter
}

TEST_CASE("term printing") {
    CHECK(Term::var(acl2("X")).print() == "x");
    CHECK(Term::quote(Value::integer(0)).print() == "'0");
    CHECK(Term::quote(Value::nil()).print() == "'nil");
    CHECK(Term::quote(Value::string("hi")).print() == "'\"hi\"");
    CHECK(Term::app(cl("CONS"),
                    {Term::var(acl2("X")), Term::var(acl2("Y"))})
              .print() == "(cons x y)");
    Term lam = Term::lambda_app(
        {acl2("X"), acl2("Y")},
        Term::app(cl("CONS"), {Term::var(acl2("X")), Term::var(acl2("Y"))}),
        {Term::quote(Value::integer(0)), Term::var(acl2("Y"))});
    CHECK(lam.print() == "((lambda (x y) (cons x y)) '0 y)");

    // Symbols outside the bare-print packages keep their qualifier.
    CHECK(Term::var(Symbol{"P", "A"}).print() == "p::a");
    CHECK(Term::app(Symbol{"P", "G"}, {Term::var(acl2("X"))}).print() ==
          "(p::g x)");
}

TEST_CASE("free variables in first-occurrence order") {
    Term x = Term::var(acl2("X"));
    Term y = Term::var(acl2("Y"));
    Term z = Term::var(acl2("Z"));

    CHECK(free_vars(Term::quote(Value::t())).empty());
    CHECK(free_vars(x) == std::vector<Symbol>{acl2("X")});

    Term app = Term::app(cl("CONS"), {y, Term::app(cl("CONS"), {x, y})});
    CHECK(free_vars(app) == std::vector<Symbol>{acl2("Y"), acl2("X")});

    // Lambda parameters bind in the body only; arguments come first.
    Term lam = Term::lambda_app({acl2("X")},
                                Term::app(cl("CONS"), {x, z}), {y});
    CHECK(free_vars(lam) == std::vector<Symbol>{acl2("Y"), acl2("Z")});

    // A variable that is both an argument and a body leftover counts once.
    Term lam2 = Term::lambda_app({acl2("X")},
                                 Term::app(cl("CONS"), {x, y}), {y});
    CHECK(free_vars(lam2) == std::vector<Symbol>{acl2("Y")});
}

TEST_CASE("lambda closedness predicate") {
    Term x = Term::var(acl2("X"));
    Term y = Term::var(acl2("Y"));
    Term closed = Term::lambda_app({acl2("X"), acl2("Y")},
                                   Term::app(cl("CONS"), {x, y}),
                                   {Term::quote(Value::integer(0)), y});
    CHECK(lambdas_closed(closed));

    Term open = Term::lambda_app({acl2("X")}, Term::app(cl("CONS"), {x, y}),
                                 {Term::quote(Value::integer(0))});
    CHECK(!lambdas_closed(open));

    // Deep: an open lambda inside a closed one is detected.
    Term nested = Term::lambda_app({acl2("Y")}, open, {Term::quote(Value::t())});
    CHECK(!lambdas_closed(nested));
    CHECK(lambdas_closed(Term::app(cl("CONS"), {x, y})));
}
