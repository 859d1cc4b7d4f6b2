#ifndef SEJC_JAVA_AST_HPP
#define SEJC_JAVA_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sejc {

// Abstract syntax for the emitted Java subset: enough for static
// methods over the runtime value classes, int arithmetic, and the
// multiple-value singleton classes. Expressions and statements are
// immutable and cheap to copy, like Term.

enum class JBinOp { Add, Sub, Mul, Div, And, Or, Eq, Ne, Lt, Le, Gt, Ge };
enum class JUnOp { Not, Neg };

class JExpr {
public:
    enum class Kind {
        IntLit,
        BoolLit,
        CharLit,
        StringLit,
        Name,
        Call,
        Binary,
        Unary,
        Cast,
        Field,
        New
    };

    JExpr() : JExpr(int_lit(0)) {}

    static JExpr int_lit(long long v);
    static JExpr bool_lit(bool v);
    static JExpr char_lit(int code); // 0..255
    static JExpr string_lit(std::string s);
    static JExpr name(std::string qualified);
    static JExpr call(std::string fn, std::vector<JExpr> args);
    static JExpr binary(JBinOp op, JExpr l, JExpr r);
    static JExpr unary(JUnOp op, JExpr e);
    static JExpr cast(std::string type, JExpr e);
    static JExpr field(JExpr target, std::string field);
    static JExpr new_object(std::string type);

    Kind kind() const;
    long long int_value() const;        // IntLit
    bool bool_value() const;            // BoolLit
    int char_value() const;             // CharLit
    const std::string& text() const;    // StringLit, Name, Call fn,
                                        // Cast/New type, Field name
    const std::vector<JExpr>& args() const; // Call
    JBinOp bin_op() const;              // Binary
    JUnOp un_op() const;                // Unary
    const JExpr& left() const;          // Binary
    const JExpr& right() const;         // Binary
    const JExpr& operand() const;       // Unary, Cast, Field target

    bool operator==(const JExpr& o) const;
    bool operator!=(const JExpr& o) const { return !(*this == o); }

    struct Node;  // opaque; defined in the implementation file

private:
    explicit JExpr(std::shared_ptr<const Node> node)
        : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

class JStmt {
public:
    enum class Kind { LocalDecl, Assign, If, While, Return, Continue, ExprStmt };

    JStmt() : JStmt(cont()) {}

    static JStmt local_decl(std::string type, std::string name,
                            std::optional<JExpr> init = std::nullopt);
    static JStmt assign(std::string lvalue, JExpr e);
    static JStmt if_stmt(JExpr test, std::vector<JStmt> then_body,
                         std::optional<std::vector<JStmt>> else_body =
                             std::nullopt);
    static JStmt while_stmt(JExpr test, std::vector<JStmt> body);
    static JStmt return_stmt(JExpr e);
    static JStmt cont();
    static JStmt expr_stmt(JExpr e);

    Kind kind() const;
    const std::string& type() const;   // LocalDecl
    const std::string& name() const;   // LocalDecl, Assign lvalue
    const std::optional<JExpr>& init() const; // LocalDecl
    const JExpr& expr() const;         // Assign, Return, ExprStmt, If/While test
    const std::vector<JStmt>& body() const;   // If then, While body
    const std::optional<std::vector<JStmt>>& else_body() const; // If

    bool operator==(const JStmt& o) const;
    bool operator!=(const JStmt& o) const { return !(*this == o); }

    struct Node;  // opaque; defined in the implementation file

private:
    explicit JStmt(std::shared_ptr<const Node> node)
        : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct JParam {
    std::string type;
    std::string name;
    bool operator==(const JParam&) const = default;
};

struct JField {
    std::string modifiers; // e.g. "private static final"
    std::string type;
    std::string name;
    std::optional<JExpr> initializer;
};

struct JMethod {
    std::string modifiers; // e.g. "public static"
    std::string return_type;
    std::string name;
    std::vector<JParam> params;
    std::vector<JStmt> body;
};

struct JClass {
    std::string name;
    std::vector<JClass> nested;
    std::vector<JField> fields;
    std::vector<JMethod> methods;
    std::optional<std::vector<JStmt>> static_init;
};

struct JavaUnit {
    JClass main_class;
    JClass env_class;
    std::optional<JClass> test_class;
};

// ---- Printing ----

// Expression text with minimal parentheses: a child is parenthesized
// exactly when Java's precedence would otherwise reparse the output as
// a different tree. In particular the right operand of any binary
// operator is parenthesized at equal precedence (also for + and *, so
// a + (b + c) survives a round trip), and -(-x) keeps its parentheses
// to avoid the -- token.
std::string print_expr(const JExpr& e);

// One statement (or a block's worth) at the given indent level, four
// spaces per level, one statement per line.
std::string print_stmt(const JStmt& s, int indent = 0);
std::string print_stmts(const std::vector<JStmt>& stmts, int indent = 0);

// A whole top-level class as file text (fixed generated-file header,
// UTF-8, LF line endings).
std::string print_class(const JClass& c);

// All files of a unit as (file name, file text) pairs, main class
// first: <Main>.java, <Env>.java, and <Tests>.java when present.
std::vector<std::pair<std::string, std::string>>
print_unit(const JavaUnit& u);

} // namespace sejc

#endif
