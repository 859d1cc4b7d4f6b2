#include "sejc/java_ast.hpp"

#include <sstream>

namespace sejc {

// ---- JExpr ----

struct JExpr::Node {
    Kind kind;
    long long int_value = 0;
    bool bool_value = false;
    int char_value = 0;
    std::string text;
    std::vector<JExpr> args;
    JBinOp bin_op = JBinOp::Add;
    JUnOp un_op = JUnOp::Not;
    std::vector<JExpr> sub; // Binary: l, r; Unary/Cast/Field: operand
};

namespace {

std::shared_ptr<JExpr::Node> enode(JExpr::Kind k) {
    auto n = std::make_shared<JExpr::Node>();
    n->kind = k;
    return n;
}

} // namespace

JExpr JExpr::int_lit(long long v) {
    auto n = enode(Kind::IntLit);
    n->int_value = v;
    return JExpr(std::move(n));
}

JExpr JExpr::bool_lit(bool v) {
    auto n = enode(Kind::BoolLit);
    n->bool_value = v;
    return JExpr(std::move(n));
}

JExpr JExpr::char_lit(int code) {
    auto n = enode(Kind::CharLit);
    n->char_value = code;
    return JExpr(std::move(n));
}

JExpr JExpr::string_lit(std::string s) {
    auto n = enode(Kind::StringLit);
    n->text = std::move(s);
    return JExpr(std::move(n));
}

JExpr JExpr::name(std::string qualified) {
    auto n = enode(Kind::Name);
    n->text = std::move(qualified);
    return JExpr(std::move(n));
}

JExpr JExpr::call(std::string fn, std::vector<JExpr> args) {
    auto n = enode(Kind::Call);
    n->text = std::move(fn);
    n->args = std::move(args);
    return JExpr(std::move(n));
}

JExpr JExpr::binary(JBinOp op, JExpr l, JExpr r) {
    auto n = enode(Kind::Binary);
    n->bin_op = op;
    n->sub = {std::move(l), std::move(r)};
    return JExpr(std::move(n));
}

JExpr JExpr::unary(JUnOp op, JExpr e) {
    // Negating an integer literal folds into the literal: the printed
    // form "-5" reads back as a single literal, so a distinct tree
    // could not survive a print/reparse round trip.
    if (op == JUnOp::Neg && e.kind() == Kind::IntLit)
        return int_lit(-e.int_value());
    auto n = enode(Kind::Unary);
    n->un_op = op;
    n->sub = {std::move(e)};
    return JExpr(std::move(n));
}

JExpr JExpr::cast(std::string type, JExpr e) {
    auto n = enode(Kind::Cast);
    n->text = std::move(type);
    n->sub = {std::move(e)};
    return JExpr(std::move(n));
}

JExpr JExpr::field(JExpr target, std::string field) {
    auto n = enode(Kind::Field);
    n->text = std::move(field);
    n->sub = {std::move(target)};
    return JExpr(std::move(n));
}

JExpr JExpr::new_object(std::string type) {
    auto n = enode(Kind::New);
    n->text = std::move(type);
    return JExpr(std::move(n));
}

JExpr::Kind JExpr::kind() const { return node_->kind; }
long long JExpr::int_value() const { return node_->int_value; }
bool JExpr::bool_value() const { return node_->bool_value; }
int JExpr::char_value() const { return node_->char_value; }
const std::string& JExpr::text() const { return node_->text; }
const std::vector<JExpr>& JExpr::args() const { return node_->args; }
JBinOp JExpr::bin_op() const { return node_->bin_op; }
JUnOp JExpr::un_op() const { return node_->un_op; }
const JExpr& JExpr::left() const { return node_->sub[0]; }
const JExpr& JExpr::right() const { return node_->sub[1]; }
const JExpr& JExpr::operand() const { return node_->sub[0]; }

bool JExpr::operator==(const JExpr& o) const {
    if (node_ == o.node_) return true;
    const Node& a = *node_;
    const Node& b = *o.node_;
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Kind::IntLit: return a.int_value == b.int_value;
    case Kind::BoolLit: return a.bool_value == b.bool_value;
    case Kind::CharLit: return a.char_value == b.char_value;
    case Kind::StringLit:
    case Kind::Name:
    case Kind::New: return a.text == b.text;
    case Kind::Call: return a.text == b.text && a.args == b.args;
    case Kind::Binary: return a.bin_op == b.bin_op && a.sub == b.sub;
    case Kind::Unary: return a.un_op == b.un_op && a.sub == b.sub;
    case Kind::Cast:
    case Kind::Field: return a.text == b.text && a.sub == b.sub;
    }
    return false;
}

// ---- JStmt ----

struct JStmt::Node {
    Kind kind;
    std::string type;
    std::string name;
    std::optional<JExpr> init;
    JExpr expr;
    std::vector<JStmt> body;
    std::optional<std::vector<JStmt>> else_body;
};

namespace {

std::shared_ptr<JStmt::Node> snode(JStmt::Kind k) {
    auto n = std::make_shared<JStmt::Node>();
    n->kind = k;
    return n;
}

} // namespace

JStmt JStmt::local_decl(std::string type, std::string name,
                        std::optional<JExpr> init) {
    auto n = snode(Kind::LocalDecl);
    n->type = std::move(type);
    n->name = std::move(name);
    n->init = std::move(init);
    return JStmt(std::move(n));
}

JStmt JStmt::assign(std::string lvalue, JExpr e) {
    auto n = snode(Kind::Assign);
    n->name = std::move(lvalue);
    n->expr = std::move(e);
    return JStmt(std::move(n));
}

JStmt JStmt::if_stmt(JExpr test, std::vector<JStmt> then_body,
                     std::optional<std::vector<JStmt>> else_body) {
    auto n = snode(Kind::If);
    n->expr = std::move(test);
    n->body = std::move(then_body);
    n->else_body = std::move(else_body);
    return JStmt(std::move(n));
}

JStmt JStmt::while_stmt(JExpr test, std::vector<JStmt> body) {
    auto n = snode(Kind::While);
    n->expr = std::move(test);
    n->body = std::move(body);
    return JStmt(std::move(n));
}

JStmt JStmt::return_stmt(JExpr e) {
    auto n = snode(Kind::Return);
    n->expr = std::move(e);
    return JStmt(std::move(n));
}

JStmt JStmt::cont() { return JStmt(snode(Kind::Continue)); }

JStmt JStmt::expr_stmt(JExpr e) {
    auto n = snode(Kind::ExprStmt);
    n->expr = std::move(e);
    return JStmt(std::move(n));
}

JStmt::Kind JStmt::kind() const { return node_->kind; }
const std::string& JStmt::type() const { return node_->type; }
const std::string& JStmt::name() const { return node_->name; }
const std::optional<JExpr>& JStmt::init() const { return node_->init; }
const JExpr& JStmt::expr() const { return node_->expr; }
const std::vector<JStmt>& JStmt::body() const { return node_->body; }
const std::optional<std::vector<JStmt>>& JStmt::else_body() const {
    return node_->else_body;
}

bool JStmt::operator==(const JStmt& o) const {
    if (node_ == o.node_) return true;
    const Node& a = *node_;
    const Node& b = *o.node_;
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Kind::LocalDecl:
        return a.type == b.type && a.name == b.name && a.init == b.init;
    case Kind::Assign: return a.name == b.name && a.expr == b.expr;
    case Kind::If:
        return a.expr == b.expr && a.body == b.body &&
               a.else_body == b.else_body;
    case Kind::While: return a.expr == b.expr && a.body == b.body;
    case Kind::Return:
    case Kind::ExprStmt: return a.expr == b.expr;
    case Kind::Continue: return true;
    }
    return false;
}

// ---- Printing ----

namespace {

const char* bin_op_text(JBinOp op) {
    switch (op) {
    case JBinOp::Add: return "+";
    case JBinOp::Sub: return "-";
    case JBinOp::Mul: return "*";
    case JBinOp::Div: return "/";
    case JBinOp::And: return "&&";
    case JBinOp::Or: return "||";
    case JBinOp::Eq: return "==";
    case JBinOp::Ne: return "!=";
    case JBinOp::Lt: return "<";
    case JBinOp::Le: return "<=";
    case JBinOp::Gt: return ">";
    case JBinOp::Ge: return ">=";
    }
    return "?";
}

// Java precedence levels for the emitted subset (higher binds tighter).
int bin_prec(JBinOp op) {
    switch (op) {
    case JBinOp::Mul:
    case JBinOp::Div: return 12;
    case JBinOp::Add:
    case JBinOp::Sub: return 11;
    case JBinOp::Lt:
    case JBinOp::Le:
    case JBinOp::Gt:
    case JBinOp::Ge: return 9;
    case JBinOp::Eq:
    case JBinOp::Ne: return 8;
    case JBinOp::And: return 4;
    case JBinOp::Or: return 3;
    }
    return 0;
}

constexpr int kPrimaryPrec = 15;
constexpr int kUnaryPrec = 13;

int precedence(const JExpr& e) {
    switch (e.kind()) {
    case JExpr::Kind::Binary: return bin_prec(e.bin_op());
    case JExpr::Kind::Unary:
    case JExpr::Kind::Cast: return kUnaryPrec;
    case JExpr::Kind::IntLit:
        // A negative literal prints with a leading minus sign and binds
        // like a unary expression.
        return e.int_value() < 0 ? kUnaryPrec : kPrimaryPrec;
    default: return kPrimaryPrec;
    }
}

// The printed form starts with a '-' that would fuse with an enclosing
// unary minus into the -- token.
bool starts_with_minus(const JExpr& e) {
    if (e.kind() == JExpr::Kind::IntLit) return e.int_value() < 0;
    return e.kind() == JExpr::Kind::Unary && e.un_op() == JUnOp::Neg;
}

void escape_char_into(std::ostream& os, int code, char quote) {
    char c = static_cast<char>(code);
    if (c == quote || c == '\\') {
        os << '\\' << c;
    } else if (c == '\n') {
        os << "\\n";
    } else if (c == '\r') {
        os << "\\r";
    } else if (c == '\t') {
        os << "\\t";
    } else if (code >= 32 && code <= 126) {
        os << c;
    } else {
        static const char* hex = "0123456789abcdef";
        os << "\\u00" << hex[(code >> 4) & 0xf] << hex[code & 0xf];
    }
}

void print_into(std::ostream& os, const JExpr& e, int needed);

void print_node(std::ostream& os, const JExpr& e) {
    switch (e.kind()) {
    case JExpr::Kind::IntLit:
        os << e.int_value();
        return;
    case JExpr::Kind::BoolLit:
        os << (e.bool_value() ? "true" : "false");
        return;
    case JExpr::Kind::CharLit:
        os << '\'';
        escape_char_into(os, e.char_value(), '\'');
        os << '\'';
        return;
    case JExpr::Kind::StringLit:
        os << '"';
        for (char c : e.text())
            escape_char_into(os, static_cast<unsigned char>(c), '"');
        os << '"';
        return;
    case JExpr::Kind::Name:
        os << e.text();
        return;
    case JExpr::Kind::Call: {
        os << e.text() << '(';
        for (std::size_t i = 0; i < e.args().size(); ++i) {
            if (i) os << ", ";
            print_into(os, e.args()[i], 0);
        }
        os << ')';
        return;
    }
    case JExpr::Kind::Binary: {
        int p = bin_prec(e.bin_op());
        print_into(os, e.left(), p);
        os << ' ' << bin_op_text(e.bin_op()) << ' ';
        // Left associativity: an equal-precedence right child needs
        // parentheses to reparse as the same tree.
        print_into(os, e.right(), p + 1);
        return;
    }
    case JExpr::Kind::Unary: {
        os << (e.un_op() == JUnOp::Not ? '!' : '-');
        if (e.un_op() == JUnOp::Neg && starts_with_minus(e.operand())) {
            os << '(';
            print_into(os, e.operand(), 0);
            os << ')';
        } else {
            print_into(os, e.operand(), kUnaryPrec);
        }
        return;
    }
    case JExpr::Kind::Cast:
        os << '(' << e.text() << ") ";
        print_into(os, e.operand(), kUnaryPrec);
        return;
    case JExpr::Kind::Field:
        print_into(os, e.operand(), kPrimaryPrec);
        os << '.' << e.text();
        return;
    case JExpr::Kind::New:
        os << "new " << e.text() << "()";
        return;
    }
}

void print_into(std::ostream& os, const JExpr& e, int needed) {
    if (precedence(e) < needed) {
        os << '(';
        print_node(os, e);
        os << ')';
    } else {
        print_node(os, e);
    }
}

void indent_into(std::ostream& os, int indent) {
    for (int i = 0; i < indent; ++i) os << "    ";
}

void print_stmt_into(std::ostream& os, const JStmt& s, int indent);

void print_block_into(std::ostream& os, const std::vector<JStmt>& body,
                      int indent) {
    for (const JStmt& s : body) print_stmt_into(os, s, indent);
}

void print_stmt_into(std::ostream& os, const JStmt& s, int indent) {
    indent_into(os, indent);
    switch (s.kind()) {
    case JStmt::Kind::LocalDecl:
        os << s.type() << ' ' << s.name();
        if (s.init()) {
            os << " = ";
            print_into(os, *s.init(), 0);
        }
        os << ";\n";
        return;
    case JStmt::Kind::Assign:
        os << s.name() << " = ";
        print_into(os, s.expr(), 0);
        os << ";\n";
        return;
    case JStmt::Kind::If:
        os << "if (";
        print_into(os, s.expr(), 0);
        os << ") {\n";
        print_block_into(os, s.body(), indent + 1);
        indent_into(os, indent);
        if (s.else_body()) {
            os << "} else {\n";
            print_block_into(os, *s.else_body(), indent + 1);
            indent_into(os, indent);
        }
        os << "}\n";
        return;
    case JStmt::Kind::While:
        os << "while (";
        print_into(os, s.expr(), 0);
        os << ") {\n";
        print_block_into(os, s.body(), indent + 1);
        indent_into(os, indent);
        os << "}\n";
        return;
    case JStmt::Kind::Return:
        os << "return ";
        print_into(os, s.expr(), 0);
        os << ";\n";
        return;
    case JStmt::Kind::Continue:
        os << "continue;\n";
        return;
    case JStmt::Kind::ExprStmt:
        print_into(os, s.expr(), 0);
        os << ";\n";
        return;
    }
}

void print_class_into(std::ostream& os, const JClass& c, int indent,
                      bool nested) {
    indent_into(os, indent);
    os << (nested ? "public static class " : "public class ") << c.name
       << " {\n";
    bool first = true;
    for (const JClass& inner : c.nested) {
        if (!first) os << '\n';
        first = false;
        print_class_into(os, inner, indent + 1, true);
    }
    if (!c.fields.empty() && !first) os << '\n';
    for (const JField& f : c.fields) {
        first = false;
        indent_into(os, indent + 1);
        if (!f.modifiers.empty()) os << f.modifiers << ' ';
        os << f.type << ' ' << f.name;
        if (f.initializer) {
            os << " = ";
            print_into(os, *f.initializer, 0);
        }
        os << ";\n";
    }
    if (c.static_init) {
        if (!first) os << '\n';
        first = false;
        indent_into(os, indent + 1);
        os << "static {\n";
        print_block_into(os, *c.static_init, indent + 2);
        indent_into(os, indent + 1);
        os << "}\n";
    }
    for (const JMethod& m : c.methods) {
        if (!first) os << '\n';
        first = false;
        indent_into(os, indent + 1);
        if (!m.modifiers.empty()) os << m.modifiers << ' ';
        os << m.return_type << ' ' << m.name << '(';
        for (std::size_t i = 0; i < m.params.size(); ++i) {
            if (i) os << ", ";
            os << m.params[i].type << ' ' << m.params[i].name;
        }
        os << ") {\n";
        print_block_into(os, m.body, indent + 2);
        indent_into(os, indent + 1);
        os << "}\n";
    }
    indent_into(os, indent);
    os << "}\n";
}

} // namespace

std::string print_expr(const JExpr& e) {
    std::ostringstream os;
    print_into(os, e, 0);
    return os.str();
}

std::string print_stmt(const JStmt& s, int indent) {
    std::ostringstream os;
    print_stmt_into(os, s, indent);
    return os.str();
}

std::string print_stmts(const std::vector<JStmt>& stmts, int indent) {
    std::ostringstream os;
    print_block_into(os, stmts, indent);
    return os.str();
}

std::string print_class(const JClass& c) {
    std::ostringstream os;
    os << "// Generated by sejc. Do not edit.\n\n";
    print_class_into(os, c, 0, false);
    return os.str();
}

std::vector<std::pair<std::string, std::string>>
print_unit(const JavaUnit& u) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back(u.main_class.name + ".java", print_class(u.main_class));
    out.emplace_back(u.env_class.name + ".java", print_class(u.env_class));
    if (u.test_class)
        out.emplace_back(u.test_class->name + ".java",
                         print_class(*u.test_class));
    return out;
}

} // namespace sejc
