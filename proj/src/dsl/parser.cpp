#include <cctype>
#include <sstream>

#include "dsl/ast.hpp"

namespace wb::dsl {

bool operator==(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind || a.number != b.number || a.name != b.name || a.kids.size() != b.kids.size())
        return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!(*a.kids[i] == *b.kids[i]))
            return false;
    return true;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& check_patterns()
{
    static const std::vector<std::pair<std::string, std::vector<std::string>>> p = {
        {"jacobi", {"$"}},
        {"cybe", {"$", "$ on $"}},
        {"mcybe", {"$", "$ on $"}},
        {"invariant", {"$", "$ on $"}},
        {"cobracket", {"$", "$ on $"}},
        {"cocycle", {"$ over $"}},
        {"coboundary", {"$ over $"}},
        {"differential", {"$ over $ = $"}},
        {"compatible", {"$ $"}},
        {"h2", {"$"}},
        {"decompose", {"$ = $ + $", "$ = $ + $ on $"}},
        {"limit", {"$ $ = $", "$ $ = $ on $"}},
        {"adtwist", {"$ by $ with $ ~ $", "$ by $ with $ ~ $ on $"}},
        {"twist",
         {"jordanian", "jordanian order #", "extended #", "extended # order #", "linear $", "linear $ order #"}},
        {"factored", {"#", "# order #"}},
        {"mu_prime", {"#"}},
    };
    return p;
}

namespace {

enum class Tok { Ident, Number, Punct, TensorOp, Arrow, End };

struct Token {
    Tok kind;
    std::string text;
    Pos pos;
};

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

std::vector<Token> lex(const std::string& s)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
            while (i < s.size() && s[i] != '\n')
                advance(1);
            continue;
        }
        Pos p{line, col};
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j]))
                ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), p});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Tok::Number, s.substr(i, j - i), p});
            advance(j - i);
        } else if (s.compare(i, 3, "(x)") == 0) {
            out.push_back({Tok::TensorOp, "(x)", p});
            advance(3);
        } else if (s.compare(i, 2, "->") == 0) {
            out.push_back({Tok::Arrow, "->", p});
            advance(2);
        } else if (std::string(";{}[],=+-*/^():~").find(c) != std::string::npos) {
            out.push_back({Tok::Punct, std::string(1, c), p});
            advance(1);
        } else {
            throw SourceError(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", Pos{line, col}});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    WorkbenchFile file()
    {
        WorkbenchFile f;
        while (peek().kind != Tok::End)
            f.statements.push_back(statement());
        return f;
    }

    ExprPtr expression_only()
    {
        auto e = sum();
        if (peek().kind != Tok::End)
            fail(peek(), "unexpected '" + peek().text + "' after expression");
        return e;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const
    {
        throw SourceError(t.pos.line, t.pos.col, msg);
    }

    bool is_punct(const std::string& p, std::size_t k = 0) const
    {
        return peek(k).kind == Tok::Punct && peek(k).text == p;
    }
    bool is_word(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }

    void expect_punct(const std::string& p)
    {
        if (!is_punct(p))
            fail(peek(), "expected '" + p + "'" + (peek().kind == Tok::End ? " before end of input" : ", found '" + peek().text + "'"));
        next();
    }

    void expect_word(const std::string& w)
    {
        if (!is_word(w))
            fail(peek(), "expected '" + w + "'");
        next();
    }

    std::string ident(const char* what)
    {
        if (peek().kind != Tok::Ident)
            fail(peek(), std::string("expected ") + what);
        return next().text;
    }

    Statement statement()
    {
        const Token& t = peek();
        if (t.kind != Tok::Ident)
            fail(t, "expected a statement, found '" + t.text + "'");
        if (t.text == "param")
            return param();
        if (t.text == "algebra")
            return algebra();
        if (t.text == "tensor")
            return tensor();
        if (t.text == "cochain")
            return cochain();
        if (t.text == "check")
            return check();
        fail(t, "unknown statement '" + t.text + "'");
    }

    ParamDecl param()
    {
        ParamDecl d;
        d.pos = next().pos;
        while (peek().kind == Tok::Ident)
            d.names.push_back(next().text);
        if (d.names.empty())
            fail(peek(), "expected parameter names");
        expect_punct(";");
        return d;
    }

    AlgebraDecl algebra()
    {
        AlgebraDecl a;
        a.pos = next().pos;
        a.name = ident("algebra name");
        expect_punct("{");
        while (!is_punct("}")) {
            if (is_word("basis")) {
                next();
                while (peek().kind == Tok::Ident) {
                    std::string g = next().text;
                    expect_punct(":");
                    const Token& pt = peek();
                    std::string par = ident("parity");
                    if (par != "even" && par != "odd")
                        fail(pt, "parity must be 'even' or 'odd'");
                    a.basis.emplace_back(g, par == "odd" ? Parity::Odd : Parity::Even);
                }
                expect_punct(";");
            } else if (is_word("bracket")) {
                BracketLine b;
                b.pos = next().pos;
                expect_punct("[");
                b.a = ident("generator");
                expect_punct(",");
                b.b = ident("generator");
                expect_punct("]");
                expect_punct("=");
                b.value = sum();
                expect_punct(";");
                a.brackets.push_back(std::move(b));
            } else {
                fail(peek(), "expected 'basis', 'bracket' or '}'");
            }
        }
        next();
        if (is_punct(";"))
            next();
        return a;
    }

    TensorDecl tensor()
    {
        TensorDecl t;
        t.pos = next().pos;
        t.name = ident("tensor name");
        expect_punct("=");
        t.value = sum();
        if (is_word("on")) {
            next();
            t.on = ident("algebra name");
        }
        expect_punct(";");
        return t;
    }

    CochainDecl cochain()
    {
        CochainDecl c;
        c.pos = next().pos;
        c.name = ident("cochain name");
        expect_word("on");
        c.on = ident("algebra name");
        expect_punct("{");
        while (!is_punct("}")) {
            CochainLine l;
            l.pos = peek().pos;
            l.source = ident("generator");
            if (peek().kind != Tok::Arrow)
                fail(peek(), "expected '->'");
            next();
            l.value = sum();
            expect_punct(";");
            c.images.push_back(std::move(l));
        }
        next();
        if (is_punct(";"))
            next();
        return c;
    }

    CheckStmt check()
    {
        CheckStmt c;
        c.pos = next().pos;
        const Token& kt = peek();
        c.kind = ident("check kind");
        const std::vector<std::string>* pats = nullptr;
        for (const auto& [k, v] : check_patterns())
            if (k == c.kind)
                pats = &v;
        if (!pats)
            fail(kt, "unknown check '" + c.kind + "'");
        std::vector<Token> words;
        while (!is_punct(";")) {
            if (peek().kind == Tok::End)
                fail(peek(), "expected ';'");
            words.push_back(next());
        }
        next();
        for (const auto& pat : *pats) {
            std::istringstream is(pat);
            std::vector<std::string> slots;
            for (std::string w; is >> w;)
                slots.push_back(w);
            if (slots.size() != words.size())
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < slots.size() && ok; ++i) {
                const auto& w = words[i];
                if (slots[i] == "$")
                    ok = w.kind == Tok::Ident;
                else if (slots[i] == "#")
                    ok = w.kind == Tok::Number;
                else
                    ok = w.text == slots[i];
            }
            if (ok) {
                for (const auto& w : words)
                    c.words.push_back(w.text);
                return c;
            }
        }
        std::string msg = "malformed 'check " + c.kind + "'; expected one of:";
        for (const auto& p : *pats)
            msg += " [" + p + "]";
        fail(kt, msg);
    }

    // sum := prod (('+'|'-') prod)*
    ExprPtr sum()
    {
        ExprPtr lhs = prod();
        while (is_punct("+") || is_punct("-")) {
            Token op = next();
            auto e = std::make_shared<Expr>();
            e->kind = op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
            e->pos = op.pos;
            e->kids = {lhs, prod()};
            lhs = e;
        }
        return lhs;
    }

    bool starts_atom() const
    {
        const Token& t = peek();
        return t.kind == Tok::Number || (t.kind == Tok::Ident && t.text != "on") || (t.kind == Tok::Punct && t.text == "(");
    }

    // prod := unary (('*' | juxtaposition) unary)*
    ExprPtr prod()
    {
        ExprPtr lhs = unary();
        for (;;) {
            Pos p = peek().pos;
            if (is_punct("*"))
                next();
            else if (!starts_atom())
                break;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Mul;
            e->pos = p;
            e->kids = {lhs, unary()};
            lhs = e;
        }
        return lhs;
    }

    ExprPtr unary()
    {
        if (is_punct("-")) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Neg;
            e->pos = next().pos;
            e->kids = {unary()};
            return e;
        }
        return tens();
    }

    // tens := atom [('^' | '(x)') atom], non-associative
    ExprPtr tens()
    {
        ExprPtr lhs = atom();
        if (is_punct("^") || peek().kind == Tok::TensorOp) {
            Token op = next();
            auto e = std::make_shared<Expr>();
            e->kind = op.kind == Tok::TensorOp ? Expr::Kind::Tensor : Expr::Kind::Wedge;
            e->pos = op.pos;
            e->kids = {lhs, atom()};
            if (is_punct("^") || peek().kind == Tok::TensorOp)
                fail(peek(), "'^' and '(x)' do not chain; add parentheses");
            return e;
        }
        return lhs;
    }

    ExprPtr atom()
    {
        const Token& t = peek();
        auto e = std::make_shared<Expr>();
        e->pos = t.pos;
        if (t.kind == Tok::Number) {
            e->kind = Expr::Kind::Number;
            mpz_class num(next().text);
            mpz_class den = 1;
            if (is_punct("/") && peek(1).kind == Tok::Number) {
                next();
                const Token& dt = peek();
                den = mpz_class(next().text);
                if (den == 0)
                    fail(dt, "zero denominator");
            }
            e->number = Rational(num, den);
            e->number.canonicalize();
            return e;
        }
        if (t.kind == Tok::Ident && t.text != "on") {
            e->kind = Expr::Kind::Ident;
            e->name = next().text;
            return e;
        }
        if (is_punct("(")) {
            next();
            ExprPtr inner = sum();
            expect_punct(")");
            return inner;
        }
        fail(t, t.kind == Tok::End ? "unexpected end of input in expression" : "unexpected '" + t.text + "' in expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int level(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        return 1;
    case Expr::Kind::Mul:
        return 2;
    case Expr::Kind::Neg:
        return 3;
    case Expr::Kind::Wedge:
    case Expr::Kind::Tensor:
        return 4;
    default:
        return 5;
    }
}

std::string render_at(const Expr& e, int min_level)
{
    std::string s;
    switch (e.kind) {
    case Expr::Kind::Number:
        s = e.number.get_str();
        break;
    case Expr::Kind::Ident:
        s = e.name;
        break;
    case Expr::Kind::Neg:
        s = "-" + render_at(*e.kids[0], 3);
        break;
    case Expr::Kind::Add:
        s = render_at(*e.kids[0], 1) + " + " + render_at(*e.kids[1], 2);
        break;
    case Expr::Kind::Sub:
        s = render_at(*e.kids[0], 1) + " - " + render_at(*e.kids[1], 2);
        break;
    case Expr::Kind::Mul:
        s = render_at(*e.kids[0], 2) + " * " + render_at(*e.kids[1], 3);
        break;
    case Expr::Kind::Wedge:
        s = render_at(*e.kids[0], 5) + " ^ " + render_at(*e.kids[1], 5);
        break;
    case Expr::Kind::Tensor:
        s = render_at(*e.kids[0], 5) + " (x) " + render_at(*e.kids[1], 5);
        break;
    }
    return level(e) < min_level ? "(" + s + ")" : s;
}

} // namespace

WorkbenchFile parse(const std::string& text)
{
    return Parser(lex(text)).file();
}

ExprPtr parse_expression(const std::string& text)
{
    return Parser(lex(text)).expression_only();
}

std::string render(const Expr& e)
{
    return render_at(e, 0);
}

namespace {

struct StatementRenderer {
    std::string operator()(const ParamDecl& d) const
    {
        std::string s = "param";
        for (const auto& n : d.names)
            s += " " + n;
        return s + ";";
    }
    std::string operator()(const AlgebraDecl& a) const
    {
        std::string s = "algebra " + a.name + " {\n  basis";
        for (const auto& [g, p] : a.basis)
            s += " " + g + (p == Parity::Odd ? ":odd" : ":even");
        s += ";\n";
        for (const auto& b : a.brackets)
            s += "  bracket [" + b.a + "," + b.b + "] = " + render(*b.value) + ";\n";
        return s + "}";
    }
    std::string operator()(const TensorDecl& t) const
    {
        return "tensor " + t.name + " = " + render(*t.value) + (t.on ? " on " + *t.on : "") + ";";
    }
    std::string operator()(const CochainDecl& c) const
    {
        std::string s = "cochain " + c.name + " on " + c.on + " {\n";
        for (const auto& l : c.images)
            s += "  " + l.source + " -> " + render(*l.value) + ";\n";
        return s + "}";
    }
    std::string operator()(const CheckStmt& c) const
    {
        std::string s = "check " + c.kind;
        for (const auto& w : c.words)
            s += " " + w;
        return s + ";";
    }
};

} // namespace

std::string render(const Statement& s)
{
    return std::visit(StatementRenderer{}, s);
}

std::string render(const WorkbenchFile& f)
{
    std::string out;
    for (const auto& s : f.statements)
        out += render(s) + "\n";
    return out;
}

} // namespace wb::dsl
