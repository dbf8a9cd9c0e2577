#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "lie/tensor.hpp"

namespace wb::dsl {

/// Error tied to a position in the source text (1-based).
class SourceError : public Error {
public:
    SourceError(int line, int col, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col), msg_(msg)
    {
    }
    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& bare() const { return msg_; }

private:
    int line_, col_;
    std::string msg_;
};

struct Pos {
    int line = 1;
    int col = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    /// Wedge doubles as the power operator when its left side is a scalar.
    enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Wedge, Tensor };

    Kind kind = Kind::Number;
    Rational number;   // Number
    std::string name;  // Ident
    std::vector<ExprPtr> kids;
    Pos pos;

    friend bool operator==(const Expr& a, const Expr& b);
};

struct ParamDecl {
    std::vector<std::string> names;
    Pos pos;
    friend bool operator==(const ParamDecl& a, const ParamDecl& b) { return a.names == b.names; }
};

struct BracketLine {
    std::string a, b;
    ExprPtr value;
    Pos pos;
    friend bool operator==(const BracketLine& x, const BracketLine& y)
    {
        return x.a == y.a && x.b == y.b && *x.value == *y.value;
    }
};

struct AlgebraDecl {
    std::string name;
    std::vector<std::pair<std::string, Parity>> basis;
    std::vector<BracketLine> brackets;
    Pos pos;
    friend bool operator==(const AlgebraDecl& x, const AlgebraDecl& y)
    {
        return x.name == y.name && x.basis == y.basis && x.brackets == y.brackets;
    }
};

struct TensorDecl {
    std::string name;
    ExprPtr value;
    std::optional<std::string> on;
    Pos pos;
    friend bool operator==(const TensorDecl& x, const TensorDecl& y)
    {
        return x.name == y.name && *x.value == *y.value && x.on == y.on;
    }
};

struct CochainLine {
    std::string source;
    ExprPtr value;
    Pos pos;
    friend bool operator==(const CochainLine& x, const CochainLine& y)
    {
        return x.source == y.source && *x.value == *y.value;
    }
};

struct CochainDecl {
    std::string name;
    std::string on;
    std::vector<CochainLine> images;
    Pos pos;
    friend bool operator==(const CochainDecl& x, const CochainDecl& y)
    {
        return x.name == y.name && x.on == y.on && x.images == y.images;
    }
};

/// `check KIND word...;` where words are names, integers and keywords.
struct CheckStmt {
    std::string kind;
    std::vector<std::string> words;
    Pos pos;
    friend bool operator==(const CheckStmt& x, const CheckStmt& y) { return x.kind == y.kind && x.words == y.words; }
};

using Statement = std::variant<ParamDecl, AlgebraDecl, TensorDecl, CochainDecl, CheckStmt>;

struct WorkbenchFile {
    std::vector<Statement> statements;
    friend bool operator==(const WorkbenchFile& a, const WorkbenchFile& b) { return a.statements == b.statements; }
};

/// Parses the whole text; throws SourceError at the first problem.
WorkbenchFile parse(const std::string& text);
/// A single expression (used by tests and tools).
ExprPtr parse_expression(const std::string& text);

/// Canonical DSL text; parse(render(f)) == f.
std::string render(const WorkbenchFile& f);
std::string render(const Expr& e);
std::string render(const Statement& s);

/// Allowed word patterns per check kind (for messages and validation).
const std::vector<std::pair<std::string, std::vector<std::string>>>& check_patterns();

} // namespace wb::dsl
