#include "sejc/frontend.hpp"
#include "sejc/interp.hpp"
#include "sejc/sexpr.hpp"

#include "doctest.h"

using namespace sejc;

namespace {

Symbol acl2(const std::string& n) { return Symbol{"ACL2", n}; }

// Translates a surface form given the user functions in scope.
Term tr(const std::string& text, const ArityMap& fns = {}) {
    return translate_body(read_one_sexpr(text), fns);
}

// The translated-form display of a surface form.
std::string trp(const std::string& text, const ArityMap& fns = {}) {
    return tr(text, fns).print();
}

const ArityMap kFns{{acl2("TWO-VALS"), 0}, {acl2("F"), 2}};

} // namespace

TEST_CASE("constants and variables translate directly") {
    CHECK(tr("x") == Term::var(acl2("X")));
    CHECK(tr("5") == Term::quote(Value::integer(5)));
    CHECK(tr("'(1 2)") == Term::quote(read_one_sexpr("(1 2)")));
    CHECK(tr("t") == Term::quote(Value::t()));
    CHECK(tr("nil") == Term::quote(Value::nil()));
    CHECK(tr(":key") == Term::quote(Value::symbol("KEYWORD", "KEY")));
    CHECK(tr("\"s\"") == Term::quote(Value::string("s")));
    CHECK(tr("#\\a") == Term::quote(Value::character('a')));
    CHECK(tr("#j7") == Term::quote(Value::jint(7)));
}

TEST_CASE("let becomes a closed lambda application") {
    CHECK(trp("(let ((x '0)) (cons x y))") ==
          "((lambda (x y) (cons x y)) '0 y)");
    // Numbers need no quote: constants translate to quotes anyway.
    CHECK(trp("(let ((x 0)) (cons x y))") ==
          "((lambda (x y) (cons x y)) '0 y)");
    // Bindings are parallel: the binding of y refers to the outer y.
    CHECK(trp("(let ((x '1) (y x)) (cons x y))") ==
          "((lambda (x y) (cons x y)) '1 x)");
}

TEST_CASE("let* nests one binding at a time") {
    CHECK(trp("(let* ((x '1) (x (binary-+ x '1))) (binary-* '2 x))") ==
          "((lambda (x) ((lambda (x) (binary-* '2 x)) (binary-+ x '1))) '1)");
}

TEST_CASE("and and or expand to if") {
    CHECK(trp("(and a b)") == "(if a b 'nil)");
    CHECK(trp("(and a b c)") == "(if a (if b c 'nil) 'nil)");
    CHECK(trp("(and)") == "'t");
    CHECK(trp("(and a)") == "a");
    CHECK(trp("(or a b)") == "(if a a b)");
    CHECK(trp("(or a a)") == "(if a a a)");
    CHECK(trp("(or)") == "'nil");
    CHECK(trp("(or a)") == "a");
}

TEST_CASE("mbe, mbt, and prog2$ expand to return-last") {
    CHECK(trp("(mbe :logic l :exec e)") ==
          "(return-last 'common-lisp::mbe1-raw e l)");
    CHECK(trp("(mbe :exec e :logic l)") ==
          "(return-last 'common-lisp::mbe1-raw e l)");
    CHECK(trp("(mbt x)") == "(return-last 'common-lisp::mbe1-raw 't x)");
    CHECK(trp("(prog2$ a b)") == "(return-last 'common-lisp::progn a b)");
    CHECK(trp("(progn$ a b c)") ==
          "(return-last 'common-lisp::progn a "
          "(return-last 'common-lisp::progn b c))");
    CHECK(trp("(progn$ a)") == "a");
}

TEST_CASE("mv and mv-let expand to tuple construction and projection") {
    CHECK(trp("(mv a b)") == "(mv a b)");
    CHECK(trp("(mv-let (x y) (two-vals) (cons x y))", kFns) ==
          "((lambda (mv) ((lambda (x y) (cons x y)) (mv-nth '0 mv) "
          "(mv-nth '1 mv))) (two-vals))");
    // A body using an outer variable closes both lambda layers over it.
    CHECK(trp("(mv-let (x y) (two-vals) (cons x z))", kFns) ==
          "((lambda (mv z) ((lambda (x y z) (cons x z)) (mv-nth '0 mv) "
          "(mv-nth '1 mv) z)) (two-vals) z)");
}

TEST_CASE("explicit lambda applications are accepted and re-closed") {
    CHECK(trp("((lambda (x y) (cons x y)) '0 y)") ==
          "((lambda (x y) (cons x y)) '0 y)");
    // An open lambda written directly gets closed the same way let does.
    CHECK(trp("((lambda (x) (cons x y)) '0)") ==
          "((lambda (x y) (cons x y)) '0 y)");
}

TEST_CASE("translation is idempotent on its own output") {
    const char* surfaces[] = {
        "(let ((x '0)) (cons x y))",
        "(let* ((x '1) (y (binary-+ x '1))) (binary-* x y))",
        "(and (consp x) (or (natp y) (zp y)))",
        "(mbe :logic (binary-* x x) :exec (binary-* x x))",
        "(prog2$ (car x) (mbt (natp y)))",
        "(mv-let (x y) (two-vals) (f (binary-+ x y) 'nil))",
        "(if (equal x y) (mv x 'a) (mv y 'b))",
    };
    for (const char* s : surfaces) {
        Term once = tr(s, kFns);
        Term twice = tr(once.print(), kFns);
        CAPTURE(s);
        CHECK(once == twice);
        CHECK(lambdas_closed(once));
        CHECK(free_vars(once) == free_vars(twice));
    }
}

TEST_CASE("translation rejects malformed forms") {
    CHECK_THROWS_AS(tr("(no-such-fn x)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(cons x)"), WorkspaceError);          // native arity
    CHECK_THROWS_AS(tr("(f x)", kFns), WorkspaceError);       // defined arity
    CHECK_THROWS_AS(tr("(let ((x '1) (x '2)) x)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(let ((t '1)) t)"), WorkspaceError);  // t not a variable
    CHECK_THROWS_AS(tr("(let ((:k '1)) x)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(let ((x)) x)"), WorkspaceError);
    CHECK_THROWS_AS(tr("((lambda (x y) x) '1)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(lambda (x) x)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(mbe :logic x)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(mbe :logic x :logic y)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(mv x)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(mv-let (x) (two-vals) x)", kFns), WorkspaceError);
    CHECK_THROWS_AS(tr("(quote a b)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(if x y)"), WorkspaceError);
    CHECK_THROWS_AS(tr("(1 2 3)"), WorkspaceError);
}

TEST_CASE("workspaces define packages, functions, types, and tests") {
    World w = parse_workspace(R"((defpackage "P" (:import cons natp))

(defun p::g (x)
  (declare (xargs :guard (natp x)))
  (p::cons x x))

(defun f (x y)
  (binary-* x (binary-+ y '3)))
(function-type-main f (:anumber :anumber) (:anumber))
(function-type-other f (:arational :arational) (:arational))
(function-type-other f (:ainteger :ainteger) (:ainteger))

(deftest g3 (p::g '3))
(deftest f21 (f '2 '1))
)");

    // p::cons resolved through the import to the built-in.
    const FunctionRecord* g = w.find(Symbol{"P", "G"});
    REQUIRE(g != nullptr);
    CHECK(g->body == Term::app(Symbol{"COMMON-LISP", "CONS"},
                               {Term::var(acl2("X")), Term::var(acl2("X"))}));
    CHECK(g->guard.print() == "(natp x)");
    CHECK(g->main_type == FnType{{SrcType::AVALUE}, {SrcType::AVALUE}});

    const FunctionRecord* f = w.find(acl2("F"));
    REQUIRE(f != nullptr);
    CHECK(f->main_type ==
          FnType{{SrcType::ANUMBER, SrcType::ANUMBER}, {SrcType::ANUMBER}});
    REQUIRE(f->other_types.size() == 2);
    CHECK(f->other_types[1] ==
          FnType{{SrcType::AINTEGER, SrcType::AINTEGER}, {SrcType::AINTEGER}});

    CHECK(w.function_order() ==
          std::vector<Symbol>{Symbol{"P", "G"}, acl2("F")});

    REQUIRE(w.tests().size() == 2);
    CHECK(w.tests()[0].name == "G3");
    Interp interp(w);
    CHECK(interp.eval_ground(w.tests()[0].call) ==
          MultiValue(Value::cons(Value::integer(3), Value::integer(3))));
    CHECK(interp.eval_ground(w.tests()[1].call) ==
          MultiValue(Value::integer(8)));
}

TEST_CASE("forward and recursive references resolve") {
    World w = parse_workspace(R"((defun even-p (n)
  (declare (xargs :guard (natp n)))
  (if (zp n) 't (odd-p (binary-+ '-1 n))))
(defun odd-p (n)
  (declare (xargs :guard (natp n)))
  (if (zp n) 'nil (even-p (binary-+ '-1 n))))
)");
    Interp interp(w);
    CHECK(interp.call(acl2("EVEN-P"), {Value::integer(10)}) ==
          MultiValue(Value::t()));
    CHECK(interp.call(acl2("ODD-P"), {Value::integer(7)}) ==
          MultiValue(Value::t()));
}

TEST_CASE("directive checking accepts true types and rejects wrong ones") {
    const char* good = R"((defun sq (x)
  (declare (xargs :guard (natp x)))
  (binary-* x x))
(function-type-main sq (:ainteger) (:ainteger))
)";
    CHECK_NOTHROW(parse_workspace(good));

    const char* wrong_output = R"((defun sq (x)
  (declare (xargs :guard (natp x)))
  (binary-* x x))
(function-type-main sq (:ainteger) (:aboolean))
)";
    CHECK_THROWS_WITH_AS(parse_workspace(wrong_output),
                         doctest::Contains("is wrong"), WorkspaceError);

    // The sampler only keeps guard-satisfying inputs: int-value errors on
    // out-of-range integers, which the guard excludes, so the directive
    // checks out even though unguarded sampling would hit the error.
    const char* guard_dependent = R"((defun int-of (x)
  (declare (xargs :guard (and (integerp x)
                              (< x '2147483648)
                              (< '-2147483649 x))))
  (int-value x))
(function-type-main int-of (:ainteger) (:jint))
)";
    CHECK_NOTHROW(parse_workspace(guard_dependent));

    ParseOptions off;
    off.validate_directives = false;
    CHECK_NOTHROW(parse_workspace(wrong_output, off));
}

TEST_CASE("multiple-value result counts must match declarations") {
    const char* undeclared = R"((defun two (x) (mv x x))
)";
    CHECK_THROWS_WITH_AS(parse_workspace(undeclared),
                         doctest::Contains("main type directive"),
                         WorkspaceError);

    const char* declared = R"((defun two (x) (mv x x))
(function-type-main two (:avalue) (:avalue :avalue))
)";
    CHECK_NOTHROW(parse_workspace(declared));

    const char* mismatched_if = R"((defun bad (x) (if x (mv x x) x))
(function-type-main bad (:avalue) (:avalue :avalue))
)";
    CHECK_THROWS_WITH_AS(parse_workspace(mismatched_if),
                         doctest::Contains("different result counts"),
                         WorkspaceError);

    // A tuple cannot flow into a single-value position.
    const char* tuple_arg = R"((defun two (x) (mv x x))
(function-type-main two (:avalue) (:avalue :avalue))
(defun bad (x) (car (two x)))
)";
    CHECK_THROWS_WITH_AS(parse_workspace(tuple_arg),
                         doctest::Contains("single value"), WorkspaceError);

    // mv-let consumes exactly the declared shape.
    const char* consumed = R"((defun two (x) (mv x (binary-+ '1 x)))
(function-type-main two (:avalue) (:avalue :avalue))
(defun add-both (x) (mv-let (a b) (two x) (binary-+ a b)))
)";
    World w = parse_workspace(consumed);
    Interp interp(w);
    CHECK(interp.call(acl2("ADD-BOTH"), {Value::integer(3)}) ==
          MultiValue(Value::integer(7)));
}

TEST_CASE("other types must refine the main type") {
    const char* not_narrower = R"((defun id (x) x)
(function-type-main id (:ainteger) (:ainteger))
(function-type-other id (:asymbol) (:asymbol))
)";
    CHECK_THROWS_WITH_AS(parse_workspace(not_narrower),
                         doctest::Contains("not narrower"), WorkspaceError);

    const char* equal_type = R"((defun id (x) x)
(function-type-main id (:avalue) (:avalue))
(function-type-other id (:avalue) (:avalue))
)";
    CHECK_THROWS_WITH_AS(parse_workspace(equal_type),
                         doctest::Contains("equals the main type"),
                         WorkspaceError);

    const char* same_inputs = R"((defun id (x) x)
(function-type-main id (:anumber) (:anumber))
(function-type-other id (:anumber) (:ainteger))
)";
    CHECK_THROWS_WITH_AS(parse_workspace(same_inputs),
                         doctest::Contains("identical input types"),
                         WorkspaceError);

    ParseOptions off;
    off.validate_directives = false;
    const char* shape = R"((defun id (x) x)
(function-type-main id (:avalue) (:avalue))
(function-type-other id (:ainteger :ainteger) (:ainteger))
)";
    CHECK_THROWS_AS(parse_workspace(shape, off), WorkspaceError);
}

TEST_CASE("workspace-level errors") {
    using doctest::Contains;
    auto fails = [](const char* text, const char* what) {
        CHECK_THROWS_WITH_AS(parse_workspace(text), Contains(what),
                             WorkspaceError);
    };

    fails("(defun f (x) x) (defun f (y) y)", "already defined");
    // cons resolves through the built-in import into COMMON-LISP, where
    // definitions are banned, so built-ins cannot be redefined.
    fails("(defun cons (x y) x)", "COMMON-LISP");
    fails("(defun common-lisp::f (x) x)", "COMMON-LISP");
    fails("(defun f (x x) x)", "duplicate parameter");
    fails("(defun f (x) (cons x y))", "unbound variable");
    fails("(defun f (x) (declare (xargs :guard (natp y))) x)",
          "unbound variable");
    fails("(defun f (x) x) (function-type-main g (:avalue) (:avalue))",
          "undefined function");
    fails("(defun f (x) x) (function-type-main f (:avalue :avalue) (:avalue))",
          "parameters");
    fails("(defun f (x) x)\n(function-type-main f (:avalue) (:avalue))\n"
          "(function-type-main f (:ainteger) (:ainteger))",
          "duplicate main type");
    fails("(deftest t1 (cons '1 '2))", "workspace-defined");
    fails("(defun f (x) x) (deftest t1 (f y))", "not ground");
    fails("(defun f (x) x) (deftest t1 (f '1)) (deftest t1 (f '2))",
          "duplicate test name");
    fails("x", "stray atom");
    fails("(defthing f (x) x)", "unknown top-level form");
    fails("(defpackage \"P\") (defpackage \"P\")", "already");
    fails("(defun f (x) x) (function-type-main f (:avalue) ())",
          "at least one output");
    fails("(defun f (x) x (cons x x))", "declare");
}

TEST_CASE("workspace errors carry the position of the offending form") {
    try {
        parse_workspace("(defun f (x) x)\n  (defthing g)\n");
        FAIL("expected a workspace error");
    } catch (const WorkspaceError& e) {
        CHECK(e.pos().line == 2);
        CHECK(e.pos().col == 3);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("defpackage takes effect for the forms after it") {
    // Before its defpackage, a package qualifier is unreadable.
    CHECK_THROWS_AS(parse_workspace("(defun f (x) (p::g x))"), ReadError);
    CHECK_NOTHROW(parse_workspace(R"((defpackage "P" (:import natp))
(defun p::g (x) (p::natp x))
)"));
}
