#include "dsl/session.hpp"

#include <chrono>
#include <future>

#include "catalog/catalog.hpp"
#include "dsl/checks.hpp"

namespace wb::dsl {

const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Unsupported:
        return "unsupported";
    }
    return "?";
}

bool Report::all_passed() const
{
    for (const auto& c : checks)
        if (c.status != Status::Pass)
            return false;
    return true;
}

int Report::exit_code() const
{
    return all_passed() ? 0 : 1;
}

CheckResult guarded(const std::string& text, const std::function<CheckResult()>& body, bool timings)
{
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = body();
    } catch (const UnsupportedInput& e) {
        r = {};
        r.status = Status::Unsupported;
        r.details.push_back(e.what());
    } catch (const std::exception& e) {
        r = {};
        r.status = Status::Fail;
        r.witness = std::string("error: ") + e.what();
    }
    r.check = text;
    if (timings)
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ------------------------------------------------------------ session

struct Session::Value {
    bool scalar = true;
    Poly s;
    TensorElement t;
};

Session::Session(RunOptions opts) : opts_(std::move(opts))
{
    // fixed interning order keeps internal term order independent of the file
    for (const char* p : {"h", "xi", "theta", "alpha1", "alpha2", "t_pencil", "_pencil_t"})
        Param::intern(p);
}

void Session::load_text(const std::string& text)
{
    load(parse(text));
}

void Session::declare(const std::string& name, Pos pos)
{
    if (!names_.insert(name).second)
        throw SourceError(pos.line, pos.col, "re-declaration of " + name);
}

void Session::load(const WorkbenchFile& f)
{
    for (const auto& st : f.statements) {
        if (const auto* p = std::get_if<ParamDecl>(&st)) {
            for (const auto& n : p->names) {
                declare(n, p->pos);
                params_.insert(n);
                Param::intern(n);
            }
        } else if (const auto* a = std::get_if<AlgebraDecl>(&st)) {
            load_algebra(*a);
        } else if (const auto* t = std::get_if<TensorDecl>(&st)) {
            load_tensor(*t);
        } else if (const auto* c = std::get_if<CochainDecl>(&st)) {
            load_cochain(*c);
        } else {
            load_check(std::get<CheckStmt>(st));
        }
    }
}

void Session::load_algebra(const AlgebraDecl& d)
{
    declare(d.name, d.pos);
    std::vector<GradedBasis::Entry> entries;
    for (const auto& [g, p] : d.basis)
        entries.emplace_back(g, p);
    BasisPtr basis;
    try {
        basis = GradedBasis::make(std::move(entries));
    } catch (const Error& e) {
        throw SourceError(d.pos.line, d.pos.col, e.what());
    }
    LieSuperAlgebra::Builder b(d.name, basis);
    for (const auto& line : d.brackets) {
        auto i = basis->find(line.a), j = basis->find(line.b);
        if (!i || !j)
            throw SourceError(line.pos.line, line.pos.col, "unknown identifier " + (i ? line.b : line.a));
        if (b.is_set(*i, *j))
            throw SourceError(line.pos.line, line.pos.col, "bracket [" + line.a + "," + line.b + "] given twice");
        TensorElement v = eval_tensor(*line.value, basis, 1);
        try {
            b.set(*i, *j, v);
        } catch (const Error& e) {
            throw SourceError(line.pos.line, line.pos.col, e.what());
        }
    }
    algebras_.emplace(d.name, b.build());
    last_algebra_ = d.name;
}

void Session::load_tensor(const TensorDecl& d)
{
    declare(d.name, d.pos);
    std::string host_name = d.on ? *d.on : last_algebra_;
    if (host_name.empty())
        throw SourceError(d.pos.line, d.pos.col, "tensor " + d.name + " needs 'on ALGEBRA' (no algebra declared yet)");
    LieSuperAlgebra host = find_algebra(host_name, d.pos);
    TensorElement t = eval_tensor(*d.value, host.basis(), 0);
    tensors_.emplace(d.name, HostedTensor{std::move(t), std::move(host)});
}

void Session::load_cochain(const CochainDecl& d)
{
    declare(d.name, d.pos);
    LieSuperAlgebra host = find_algebra(d.on, d.pos);
    const auto& B = host.basis();
    std::vector<std::optional<TensorElement>> images(static_cast<std::size_t>(host.dim()));
    std::optional<int> parity;
    for (const auto& line : d.images) {
        auto i = B->find(line.source);
        if (!i)
            throw SourceError(line.pos.line, line.pos.col, "unknown identifier " + line.source);
        if (images[static_cast<std::size_t>(*i)])
            throw SourceError(line.pos.line, line.pos.col, "image of " + line.source + " given twice");
        TensorElement v = eval_tensor(*line.value, B, 1);
        for (const auto& [idx, c] : v.terms()) {
            int p = (B->parity(idx[0]) + B->parity(*i)) & 1;
            if (parity && *parity != p)
                throw SourceError(line.pos.line, line.pos.col, "parity mismatch in the image of " + line.source);
            parity = p;
        }
        images[static_cast<std::size_t>(*i)] = std::move(v);
    }
    std::vector<TensorElement> full;
    for (auto& im : images)
        full.push_back(im ? std::move(*im) : TensorElement(B, 1));
    cochains_.emplace(d.name, HostedCochain{Cochain1(d.name, B, std::move(full), parity.value_or(0)), std::move(host)});
}

// ---------------------------------------------------------- resolution

LieSuperAlgebra Session::find_algebra(const std::string& name, Pos pos) const
{
    if (auto it = algebras_.find(name); it != algebras_.end())
        return it->second;
    try {
        auto e = catalog_get(name);
        if (e.kind == CatalogEntry::Kind::Algebra)
            return *e.algebra;
    } catch (const DefinitionError&) {
    }
    throw SourceError(pos.line, pos.col, "unknown algebra " + name);
}

HostedTensor Session::find_tensor(const std::string& name, Pos pos) const
{
    if (auto it = tensors_.find(name); it != tensors_.end())
        return it->second;
    try {
        auto e = catalog_get(name);
        if (e.kind == CatalogEntry::Kind::Tensor)
            return {*e.tensor, *e.algebra};
    } catch (const DefinitionError&) {
    }
    throw SourceError(pos.line, pos.col, "unknown tensor " + name);
}

HostedCochain Session::find_cochain(const std::string& name, Pos pos) const
{
    if (auto it = cochains_.find(name); it != cochains_.end())
        return it->second;
    try {
        auto e = catalog_get(name);
        if (e.kind == CatalogEntry::Kind::Cochain1)
            return {*e.cochain, *e.algebra};
    } catch (const DefinitionError&) {
    }
    throw SourceError(pos.line, pos.col, "unknown cochain " + name);
}

const LieSuperAlgebra& Session::algebra(const std::string& name) const
{
    auto it = algebras_.find(name);
    if (it == algebras_.end())
        throw DefinitionError("unknown algebra " + name);
    return it->second;
}

const HostedTensor& Session::tensor(const std::string& name) const
{
    auto it = tensors_.find(name);
    if (it == tensors_.end())
        throw DefinitionError("unknown tensor " + name);
    return it->second;
}

const HostedCochain& Session::cochain(const std::string& name) const
{
    auto it = cochains_.find(name);
    if (it == cochains_.end())
        throw DefinitionError("unknown cochain " + name);
    return it->second;
}

// ---------------------------------------------------------- expressions

Session::Value Session::eval(const Expr& e, const BasisPtr& basis) const
{
    auto fail = [&](const std::string& msg) -> SourceError { return SourceError(e.pos.line, e.pos.col, msg); };
    Value v;
    switch (e.kind) {
    case Expr::Kind::Number:
        v.s = Poly(e.number);
        return v;
    case Expr::Kind::Ident: {
        if (basis)
            if (auto i = basis->find(e.name)) {
                v.scalar = false;
                v.t = TensorElement::basis_vector(basis, *i);
                return v;
            }
        if (params_.count(e.name)) {
            v.s = Poly::param(e.name);
            return v;
        }
        std::optional<HostedTensor> h;
        try {
            h = find_tensor(e.name, e.pos);
        } catch (const SourceError&) {
            throw fail("unknown identifier " + e.name);
        }
        if (!basis || !same_basis(h->tensor.basis(), basis))
            throw fail("tensor " + e.name + " lives on a different algebra");
        v.scalar = false;
        v.t = h->tensor;
        return v;
    }
    case Expr::Kind::Neg: {
        v = eval(*e.kids[0], basis);
        if (v.scalar)
            v.s = -v.s;
        else
            v.t = -v.t;
        return v;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
        Value a = eval(*e.kids[0], basis), b = eval(*e.kids[1], basis);
        Poly sgn(e.kind == Expr::Kind::Add ? 1 : -1);
        if (a.scalar && b.scalar) {
            a.s += sgn * b.s;
            return a;
        }
        // a literal 0 is the zero tensor of any degree
        if (a.scalar && a.s.is_zero()) {
            b.t = sgn * b.t;
            return b;
        }
        if (b.scalar && b.s.is_zero())
            return a;
        if (a.scalar != b.scalar)
            throw fail("cannot add a scalar and a tensor");
        if (a.t.degree() != b.t.degree())
            throw fail("cannot add tensors of degree " + std::to_string(a.t.degree()) + " and " +
                       std::to_string(b.t.degree()));
        a.t += sgn * b.t;
        return a;
    }
    case Expr::Kind::Mul: {
        Value a = eval(*e.kids[0], basis), b = eval(*e.kids[1], basis);
        if (a.scalar && b.scalar) {
            a.s *= b.s;
            return a;
        }
        if (!a.scalar && !b.scalar)
            throw fail("product of two tensors; use '(x)' or '^'");
        if (a.scalar)
            std::swap(a, b);
        a.t *= b.s;
        return a;
    }
    case Expr::Kind::Wedge: {
        Value a = eval(*e.kids[0], basis);
        if (a.scalar) {
            const Expr& ex = *e.kids[1];
            if (ex.kind != Expr::Kind::Number || ex.number.get_den() != 1 || ex.number < 0 || ex.number > 64)
                throw fail("exponent must be a small non-negative integer");
            Poly r(1);
            for (long k = ex.number.get_num().get_si(); k > 0; --k)
                r *= a.s;
            a.s = r;
            return a;
        }
        Value b = eval(*e.kids[1], basis);
        if (b.scalar || a.t.degree() != 1 || b.t.degree() != 1)
            throw fail("'^' needs two elements of the algebra");
        a.t = wedge(a.t, b.t);
        return a;
    }
    case Expr::Kind::Tensor: {
        Value a = eval(*e.kids[0], basis), b = eval(*e.kids[1], basis);
        if (a.scalar || b.scalar)
            throw fail("'(x)' needs tensors on both sides");
        if (a.t.degree() + b.t.degree() > 3)
            throw fail("tensor degree above 3");
        a.t = tensor_product(a.t, b.t);
        return a;
    }
    }
    throw fail("bad expression");
}

TensorElement Session::eval_tensor(const Expr& e, const BasisPtr& basis, int degree) const
{
    Value v = eval(e, basis);
    if (v.scalar) {
        if (!v.s.is_zero())
            throw SourceError(e.pos.line, e.pos.col, "expected an element, found a scalar");
        return TensorElement(basis, degree > 0 ? degree : 2);
    }
    if (degree > 0 && v.t.degree() != degree)
        throw SourceError(e.pos.line, e.pos.col,
                          "expected degree " + std::to_string(degree) + ", found degree " + std::to_string(v.t.degree()));
    return v.t;
}

// ---------------------------------------------------------------- checks

void Session::load_check(const CheckStmt& c)
{
    const auto& w = c.words;
    Pos pos = c.pos;
    std::string text = render(Statement{c});
    auto err = [&](const std::string& m) { return SourceError(pos.line, pos.col, m); };
    auto integer = [&](const std::string& s, int lo, int hi) {
        int v = std::stoi(s);
        if (v < lo || v > hi)
            throw err("value " + s + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
        return v;
    };
    // "T [on A]" suffix handling for tensor checks
    auto hosted = [&](std::size_t tensor_word, std::size_t on_word) {
        HostedTensor h = find_tensor(w[tensor_word], pos);
        if (w.size() > on_word && w[on_word] == "on") {
            LieSuperAlgebra A = find_algebra(w[on_word + 1], pos);
            if (!same_basis(A.basis(), h.tensor.basis()))
                throw err("tensor " + w[tensor_word] + " does not live on " + w[on_word + 1]);
            h.host = A;
        }
        return h;
    };
    auto order_at = [&](std::size_t k) -> std::optional<int> {
        if (w.size() > k + 1 && w[k] == "order")
            return integer(w[k + 1], 1, 8);
        return std::nullopt;
    };
    auto param = [&](const std::string& name) {
        if (!params_.count(name) && !Param::find(name))
            throw err("unknown parameter " + name);
        return Param::intern(name);
    };

    std::function<CheckResult(const RunOptions&)> run;
    const std::string& k = c.kind;
    if (k == "jacobi") {
        auto A = find_algebra(w[0], pos);
        run = [A](const RunOptions&) { return checks::jacobi(A); };
    } else if (k == "cybe" || k == "mcybe" || k == "invariant" || k == "cobracket") {
        auto h = hosted(0, 1);
        if (k == "cybe")
            run = [h](const RunOptions&) { return checks::cybe(h.host, h.tensor); };
        else if (k == "mcybe")
            run = [h](const RunOptions&) { return checks::mcybe(h.host, h.tensor); };
        else if (k == "invariant")
            run = [h](const RunOptions&) { return checks::invariant(h.host, h.tensor); };
        else
            run = [h](const RunOptions&) { return checks::cobracket(h.host, h.tensor); };
    } else if (k == "cocycle" || k == "coboundary") {
        auto phi = find_algebra(w[0], pos);
        auto A = find_algebra(w[2], pos);
        if (!same_basis(phi.basis(), A.basis()))
            throw err(w[0] + " and " + w[2] + " have different bases");
        if (k == "cocycle")
            run = [A, phi](const RunOptions&) { return checks::cocycle(A, phi); };
        else
            run = [A, phi](const RunOptions& o) { return checks::coboundary(A, phi, o.assumptions); };
    } else if (k == "differential") {
        auto psi = find_cochain(w[0], pos);
        auto A = find_algebra(w[2], pos);
        auto phi = find_algebra(w[4], pos);
        if (!same_basis(psi.cochain.basis(), A.basis()) || !same_basis(phi.basis(), A.basis()))
            throw err("differential operands live on different bases");
        run = [A, psi, phi](const RunOptions&) { return checks::differential(A, psi.cochain, phi); };
    } else if (k == "compatible") {
        auto a = find_algebra(w[0], pos), b = find_algebra(w[1], pos);
        if (!same_basis(a.basis(), b.basis()))
            throw err(w[0] + " and " + w[1] + " have different bases");
        run = [a, b](const RunOptions&) { return checks::compatible(a, b); };
    } else if (k == "h2") {
        auto A = find_algebra(w[0], pos);
        run = [A](const RunOptions& o) { return checks::h2(A, o.assumptions); };
    } else if (k == "decompose") {
        auto full = hosted(0, 5);
        auto r1 = find_tensor(w[2], pos), r2 = find_tensor(w[4], pos);
        for (const auto* r : {&r1, &r2})
            if (!same_basis(r->tensor.basis(), full.tensor.basis()))
                throw err("decompose operands live on different bases");
        run = [full, r1, r2](const RunOptions&) { return checks::decompose(full.tensor, r1.tensor, r2.tensor); };
    } else if (k == "limit") {
        auto r = hosted(0, 4);
        Param p = param(w[1]);
        auto target = find_tensor(w[3], pos);
        if (!same_basis(target.tensor.basis(), r.tensor.basis()))
            throw err("limit operands live on different bases");
        run = [r, p, target](const RunOptions&) { return checks::limit(r.tensor, p, target.tensor); };
    } else if (k == "adtwist") {
        auto r = hosted(0, 7);
        auto z = r.host.basis()->find(w[2]);
        if (!z)
            throw err("unknown identifier " + w[2]);
        Param p = param(w[4]);
        auto target = find_tensor(w[6], pos);
        if (!same_basis(target.tensor.basis(), r.tensor.basis()))
            throw err("adtwist operands live on different bases");
        int zi = *z;
        run = [r, zi, p, target](const RunOptions&) { return checks::adtwist(r.host, r.tensor, zi, p, target.tensor); };
    } else if (k == "twist") {
        if (w[0] == "jordanian") {
            auto d = order_at(1);
            run = [d](const RunOptions& o) { return checks::twist_jordanian(d.value_or(o.order)); };
        } else if (w[0] == "extended") {
            int n = integer(w[1], 2, 6);
            auto d = order_at(2);
            run = [n, d](const RunOptions& o) { return checks::twist_extended(n, d.value_or(o.order)); };
        } else {
            auto h = find_tensor(w[1], pos);
            if (h.tensor.degree() != 2)
                throw err("linear twist needs a degree-2 tensor");
            auto d = order_at(2);
            run = [h, d](const RunOptions& o) { return checks::twist_linear(h.host, h.tensor, d.value_or(o.order)); };
        }
    } else if (k == "factored") {
        int n = integer(w[0], 2, 6);
        auto d = order_at(1);
        run = [n, d](const RunOptions& o) { return checks::factored(n, d.value_or(o.order)); };
    } else if (k == "mu_prime") {
        int n = integer(w[0], 2, 6);
        run = [n](const RunOptions&) { return checks::mu_prime(n); };
    } else {
        throw err("unknown check '" + k + "'");
    }
    checks_.push_back({text, std::move(run)});
}

Report Session::run() const
{
    Report rep;
    rep.order = opts_.order;
    rep.assumptions = opts_.assumptions;
    rep.timings = opts_.timings;
    const RunOptions opts = opts_;
    std::vector<std::future<CheckResult>> futs;
    for (const auto& c : checks_) {
        auto task = [&c, &opts] { return guarded(c.text, [&] { return c.run(opts); }, opts.timings); };
        futs.push_back(std::async(opts.parallel ? std::launch::async : std::launch::deferred, task));
    }
    for (auto& f : futs)
        rep.checks.push_back(f.get());
    return rep;
}

} // namespace wb::dsl
