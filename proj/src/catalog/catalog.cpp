#include "catalog/catalog.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace wb {

namespace {

using Matrix = std::vector<std::vector<long>>;

Matrix zeros(int n)
{
    return Matrix(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
}

Matrix commutator(const Matrix& a, const Matrix& b)
{
    auto n = a.size();
    Matrix c = zeros(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return c;
}

std::string pair_suffix(int n, int i, int j)
{
    return n < 10 ? std::to_string(i) + std::to_string(j) : std::to_string(i) + "_" + std::to_string(j);
}

TensorElement vec(const BasisPtr& b, const std::string& name)
{
    return TensorElement::basis_vector(b, name);
}

TensorElement tp(const TensorElement& a, const TensorElement& b)
{
    return tensor_product(a, b);
}

} // namespace

std::string sl_h_name(int n, int k)
{
    return "H" + pair_suffix(n, k, k + 1);
}

std::string sl_e_name(int n, int i, int j)
{
    return "E" + pair_suffix(n, i, j);
}

LieSuperAlgebra make_sl(int n)
{
    if (n < 2)
        throw UsageError("sl(N) needs N >= 2");
    std::vector<GradedBasis::Entry> entries;
    std::vector<Matrix> mats;
    for (int k = 1; k < n; ++k) {
        entries.emplace_back(sl_h_name(n, k), Parity::Even);
        Matrix m = zeros(n);
        m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)] = 1;
        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = -1;
        mats.push_back(std::move(m));
    }
    std::map<std::pair<int, int>, int> eidx;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                continue;
            eidx[{i, j}] = static_cast<int>(entries.size());
            entries.emplace_back(sl_e_name(n, i, j), Parity::Even);
            Matrix m = zeros(n);
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
            mats.push_back(std::move(m));
        }
    auto basis = GradedBasis::make(std::move(entries));
    LieSuperAlgebra::Builder b("sl" + std::to_string(n), basis);
    int dim = basis->size();
    for (int a = 0; a < dim; ++a)
        for (int c = a + 1; c < dim; ++c) {
            Matrix m = commutator(mats[static_cast<std::size_t>(a)], mats[static_cast<std::size_t>(c)]);
            LinComb v;
            long acc = 0;
            for (int k = 1; k < n; ++k) {
                acc += m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
                if (acc)
                    v.emplace_back(k - 1, Poly(acc));
            }
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j && m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)])
                        v.emplace_back(eidx[{i, j}], Poly(m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]));
            b.set(a, c, v);
        }
    return b.build();
}

LieSuperAlgebra make_gl(int n, const std::string& prefix)
{
    if (n < 2)
        throw UsageError("gl(N) needs N >= 2");
    std::vector<GradedBasis::Entry> entries;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            entries.emplace_back(prefix + pair_suffix(n, i, j), Parity::Even);
    auto basis = GradedBasis::make(std::move(entries));
    auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    LieSuperAlgebra::Builder b((prefix == "E" ? "gl" : "gl" + prefix) + std::to_string(n), basis);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (idx(i, j) >= idx(k, l))
                        continue;
                    LinComb v;
                    if (j == k)
                        v.emplace_back(idx(i, l), Poly(1));
                    if (l == i)
                        v.emplace_back(idx(k, j), Poly(-1));
                    b.set(idx(i, j), idx(k, l), v);
                }
    return b.build();
}

LieSuperAlgebra make_borel()
{
    auto basis = GradedBasis::make({{"h", Parity::Even}, {"x", Parity::Even}});
    LieSuperAlgebra::Builder b("borel", basis);
    b.set("h", "x", {{1, Poly(2)}});
    return b.build();
}

TensorElement sl_h1n(int n)
{
    auto B = make_sl(n).basis();
    TensorElement h(B, 1);
    for (int k = 1; k < n; ++k)
        h += vec(B, sl_h_name(n, k));
    return h;
}

TensorElement make_rdj(int n, Param h)
{
    auto B = make_sl(n).basis();
    Poly hp = Poly::param(h);
    auto H = [&](int k) { return vec(B, sl_h_name(n, k)); };
    auto E = [&](int i, int j) { return vec(B, sl_e_name(n, i, j)); };
    TensorElement r(B, 2);
    for (int k = 1; k < n; ++k)
        r += hp * make_rational(k * (n - k), n) * tp(H(k), H(k));
    for (int k = 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            r += hp * make_rational((n - l) * k, n) * (tp(H(k), H(l)) + tp(H(l), H(k)));
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            r += Poly(2) * hp * tp(E(l, k), E(k, l));
    return r;
}

TensorElement make_rjordan(int n, Param xi)
{
    auto B = make_sl(n).basis();
    auto E = [&](int i, int j) { return vec(B, sl_e_name(n, i, j)); };
    TensorElement s = wedge(sl_h1n(n), E(1, n));
    for (int k = 2; k < n; ++k)
        s += Poly(2) * wedge(E(1, k), E(k, n));
    return -Poly::param(xi) * s;
}

TensorElement make_rfull(int n, Param h, Param xi)
{
    auto B = make_sl(n).basis();
    auto H = [&](int k) { return B->index(sl_h_name(n, k)); };
    auto E = [&](int i, int j) { return B->index(sl_e_name(n, i, j)); };
    Poly hp = Poly::param(h), xp = Poly::param(xi);
    TensorElement r(B, 2);
    for (int k = 1; k < n; ++k)
        for (int l = 1; l < n; ++l) {
            int a = std::min(k, l), c = std::max(k, l);
            r.add({H(k), H(l), 0}, hp * make_rational(a * (n - c), n));
        }
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            r.add({E(l, k), E(k, l), 0}, Poly(2) * hp);
    for (int k = 1; k < n; ++k) {
        r.add({H(k), E(1, n), 0}, -xp);
        r.add({E(1, n), H(k), 0}, xp);
    }
    for (int k = 2; k < n; ++k) {
        r.add({E(1, k), E(k, n), 0}, Poly(-2) * xp);
        r.add({E(k, n), E(1, k), 0}, Poly(2) * xp);
    }
    return r;
}

LieSuperAlgebra make_dual_standard(int n, Param h)
{
    return dual_algebra(cobracket_from_r(make_sl(n), make_rdj(n, h)), "sl" + std::to_string(n) + ".dual.std");
}

LieSuperAlgebra make_dual_jordan(int n, Param xi)
{
    return dual_algebra(cobracket_from_r(make_sl(n), make_rjordan(n, xi)),
                        "sl" + std::to_string(n) + ".dual.jordan");
}

DoublePieces make_double_pieces(Param theta)
{
    auto basis = GradedBasis::make(
        {{"H", Parity::Even}, {"Hp", Parity::Even}, {"Xp", Parity::Even}, {"Xm", Parity::Even}});
    Poly t = Poly::param(theta);
    LieSuperAlgebra::Builder g1("double.g1", basis), g2("double.g2", basis);
    g1.set("H", "Xp", {{2, Poly(1)}}).set("H", "Xm", {{3, Poly(-1)}}).set("Xp", "Xm", {{1, Poly(1)}});
    g2.set("Hp", "Xp", {{2, Poly(1)}}).set("Hp", "Xm", {{3, Poly(-1)}}).set("Xp", "Xm", {{0, Poly(1)}});
    auto hat = dual_basis(basis);
    LieSuperAlgebra::Builder d1("double.g1dual", hat), d2("double.g2dual", hat);
    d1.set("hat_Hp", "hat_Xm", {{3, -t}});
    d2.set("hat_H", "hat_Xp", {{2, -t}});
    TensorElement r = t * (tp(vec(basis, "Xp"), vec(basis, "Xm")) + tp(vec(basis, "H"), vec(basis, "Hp")));
    return {g1.build(), g2.build(), d1.build(), d2.build(), r};
}

OspPieces make_osp12()
{
    auto basis = GradedBasis::make({{"h", Parity::Even},
                                    {"Xp", Parity::Even},
                                    {"Xm", Parity::Even},
                                    {"vp", Parity::Odd},
                                    {"vm", Parity::Odd}});
    enum { h, Xp, Xm, vp, vm };
    auto q = [](long a, long b = 1) { return Poly(make_rational(a, b)); };
    // X± = ±4 v±v±; the even brackets follow from the odd ones.
    LieSuperAlgebra::Builder b("osp12", basis);
    b.set(h, vp, {{vp, q(1)}}).set(h, vm, {{vm, q(-1)}}).set(vp, vm, {{h, q(-1, 4)}});
    b.set(vp, vp, {{Xp, q(1, 2)}}).set(vm, vm, {{Xm, q(-1, 2)}});
    b.set(h, Xp, {{Xp, q(2)}}).set(h, Xm, {{Xm, q(-2)}}).set(Xp, Xm, {{h, q(1)}});
    b.set(Xp, vm, {{vp, q(1)}}).set(Xm, vp, {{vm, q(1)}});

    auto hat = dual_basis(basis);
    LieSuperAlgebra::Builder m1("mu1star", hat), m2("mu2star", hat);
    m1.set(h, Xp, {{Xp, q(-2)}}).set(h, Xm, {{Xm, q(-2)}});
    m1.set(h, vp, {{vp, q(-1)}}).set(h, vm, {{vm, q(-1)}});
    m1.set(vp, vp, {{Xp, q(4)}}).set(vm, vm, {{Xm, q(4)}});
    m2.set(Xp, h, {{h, q(2)}}).set(Xp, Xm, {{Xm, q(2)}});
    m2.set(Xp, vp, {{vp, q(1)}}).set(Xp, vm, {{vm, q(1)}});
    m2.set(vp, vp, {{h, q(4)}}).set(vp, vm, {{Xm, q(4)}});

    auto e = [&](int i) { return TensorElement::basis_vector(hat, i); };
    Cochain1 psi("psi", hat, {-e(Xp), -e(h), -e(Xm), e(vm), e(vm)}, 0);
    return {b.build(), m1.build(), m2.build(), psi};
}

// ------------------------------------------------------------------- mu'

namespace {

using Value = std::map<int, long>;

bool tables_match(const LieSuperAlgebra& a, const LieSuperAlgebra& b, const std::vector<int>& perm)
{
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::map<int, Poly> lhs, rhs;
            for (const auto& [k, c] : a.bracket(i, j))
                lhs[perm[static_cast<std::size_t>(k)]] = c;
            for (const auto& [k, c] : b.bracket(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                rhs[k] = c;
            if (lhs != rhs)
                return false;
        }
    return true;
}

// Table of b carried onto `basis` through index map perm (ours -> b's).
LieSuperAlgebra transported(const LieSuperAlgebra& b, const std::vector<int>& perm, const BasisPtr& basis)
{
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    LieSuperAlgebra::Builder out(b.name(), basis);
    int n = b.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            LinComb v;
            for (const auto& [k, c] : b.bracket(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                v.emplace_back(inv[static_cast<std::size_t>(k)], c);
            out.set(i, j, v);
        }
    return out.build();
}

} // namespace

LieSuperAlgebra make_mu_prime(int n, MuPrimeReport* report)
{
    LieSuperAlgebra gly = make_gl(n, "Y");
    auto basis = gly.basis();
    auto Y = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    auto d = [](int a, int b) { return a == b ? 1L : 0L; };

    MuPrimeReport rep;
    rep.n = n;
    std::map<std::pair<int, int>, Value> table;

    auto assign = [&](MuPrimeLine& line, int a, int b, Value v) {
        ++line.instances;
        std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
        if (v.empty()) {
            ++line.zero;
            return;
        }
        auto label = "mu'(" + basis->name(a) + "," + basis->name(b) + ")";
        if (a == b) {
            ++line.conflicts;
            rep.conflicts.push_back(label + " is nonzero on equal arguments (" + line.text + ")");
            return;
        }
        if (a > b) {
            std::swap(a, b);
            for (auto& [k, c] : v)
                c = -c;
        }
        auto [it, fresh] = table.try_emplace({a, b}, v);
        if (fresh || it->second == v) {
            ++line.assigned;
            return;
        }
        ++line.conflicts;
        rep.conflicts.push_back(label + " reassigned with a different value (" + line.text + ")");
    };
    auto add = [](Value& v, int k, long c) { v[k] += c; };

    MuPrimeLine L;
    L = {"mu'(Y1k,Yij) = 2 d(i,k) YNj for k,j<N; i>1"};
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (k < n && j < n && i > 1) {
                    Value v;
                    add(v, Y(n, j), 2 * d(i, k));
                    assign(L, Y(1, k), Y(i, j), v);
                }
    rep.lines.push_back(L);

    L = {"mu'(Yij,YlN) = -2 d(j,l) YNj for j<N; i,l>1"};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l)
                if (j < n && i > 1 && l > 1) {
                    Value v;
                    add(v, Y(n, j), -2 * d(j, l));
                    assign(L, Y(i, j), Y(l, n), v);
                }
    rep.lines.push_back(L);

    L = {"mu'(Yij,Y1N) = -d(j,1) Yi1 - d(i,N) YNj for j<N; i>1"};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j < n && i > 1) {
                Value v;
                add(v, Y(i, 1), -d(j, 1));
                add(v, Y(n, j), -d(i, n));
                assign(L, Y(i, j), Y(1, n), v);
            }
    rep.lines.push_back(L);

    L = {"mu'(Y1i,Y1N) = -Y1i for N>i>1"};
    for (int i = 1; i <= n; ++i)
        if (n > i && i > 1)
            assign(L, Y(1, i), Y(1, n), Value{{Y(1, i), -1}});
    rep.lines.push_back(L);

    L = {"mu'(Y1N,YkN) = YkN for k<N<1"};
    for (int k = 1; k <= n; ++k)
        if (k < n && n < 1)
            assign(L, Y(1, n), Y(k, n), Value{{Y(k, n), 1}});
    rep.lines.push_back(L);

    L = {"mu'(Y11,Y1N) = mu'(Y1N,YNN) = -(Y11 - YNN)"};
    {
        Value v;
        add(v, Y(1, 1), -1);
        add(v, Y(n, n), 1);
        assign(L, Y(1, 1), Y(1, n), v);
        assign(L, Y(1, n), Y(n, n), v);
    }
    rep.lines.push_back(L);

    L = {"mu'(Y1i,Y1k) = d(i,1) YNk for k,i<N; k>1"};
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            if (k < n && i < n && k > 1) {
                Value v;
                add(v, Y(n, k), d(i, 1));
                assign(L, Y(1, i), Y(1, k), v);
            }
    rep.lines.push_back(L);

    L = {"mu'(YiN,YkN) = -d(k,N) Yi1 for k,i>1; i<N"};
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            if (k > 1 && i > 1 && i < n) {
                Value v;
                add(v, Y(i, 1), -d(k, n));
                assign(L, Y(i, n), Y(k, n), v);
            }
    rep.lines.push_back(L);

    L = {"mu'(Y1i,YkN) = d(i,1) Yk1 - d(k,N) YNi - 2 d(i,k) (Y11 - YNN) for i<N; k>1"};
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            if (i < n && k > 1) {
                Value v;
                add(v, Y(k, 1), d(i, 1));
                add(v, Y(n, i), -d(k, n));
                add(v, Y(1, 1), -2 * d(i, k));
                add(v, Y(n, n), 2 * d(i, k));
                assign(L, Y(1, i), Y(k, n), v);
            }
    rep.lines.push_back(L);

    LieSuperAlgebra::Builder b("mu.prime", basis);
    for (const auto& [ab, v] : table) {
        LinComb lc;
        for (const auto& [k, c] : v)
            lc.emplace_back(k, Poly(c));
        b.set(ab.first, ab.second, lc);
    }
    LieSuperAlgebra mu = b.build();

    if (report) {
        rep.jacobi = verify_jacobi(mu);
        LieSuperAlgebra gl = make_gl(n, "E");
        auto gb = gl.basis();
        auto E = [&](int i, int j) { return TensorElement::basis_vector(gb, Y(i, j)); };
        TensorElement s = wedge(E(1, 1) - E(n, n), E(1, n));
        for (int k = 2; k < n; ++k)
            s += Poly(2) * wedge(E(1, k), E(k, n));
        LieSuperAlgebra dual = dual_algebra(cobracket_from_r(gl, -Poly(1) * s), "gl.dual.jordan");
        std::vector<int> direct, transposed;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                direct.push_back(Y(i, j));
                transposed.push_back(Y(j, i));
            }
        if (tables_match(mu, dual, direct))
            rep.jordan_match = "direct";
        else if (tables_match(mu, dual, transposed))
            rep.jordan_match = "transposed";

        // standard r of sl(N) pushed into gl(N) through H_k = E_kk - E_k+1,k+1, at h = 1
        auto slb = make_sl(n).basis();
        std::vector<TensorElement> embed;
        for (int i = 0; i < slb->size(); ++i) {
            const auto& nm = slb->name(i);
            bool cartan = false;
            for (int k = 1; k < n && !cartan; ++k)
                if (nm == sl_h_name(n, k)) {
                    embed.push_back(E(k, k) - E(k + 1, k + 1));
                    cartan = true;
                }
            if (!cartan)
                for (int a = 1; a <= n; ++a)
                    for (int c = 1; c <= n; ++c)
                        if (a != c && nm == sl_e_name(n, a, c))
                            embed.push_back(E(a, c));
        }
        TensorElement rstd(gb, 2);
        const TensorElement rdj = make_rdj(n, Param::intern("h"));
        for (const auto& [idx, c] : rdj.terms())
            rstd += substitute(c, Assignment{{Param::intern("h"), Rational(1)}}) *
                    tensor_product(embed[static_cast<std::size_t>(idx[0])], embed[static_cast<std::size_t>(idx[1])]);
        LieSuperAlgebra stdual = dual_algebra(cobracket_from_r(gl, rstd), "gl.dual.std");
        Poly t = Poly::param(Param::intern("t_pencil"));
        rep.std_compatible_direct = verify_jacobi(pencil(mu, transported(stdual, direct, basis), Poly(1), t)).pass;
        rep.std_compatible_transposed =
            verify_jacobi(pencil(mu, transported(stdual, transposed, basis), Poly(1), t)).pass;
        *report = std::move(rep);
    }
    return mu;
}

MuPrimeReport mu_prime_report(int n)
{
    MuPrimeReport rep;
    make_mu_prime(n, &rep);
    return rep;
}

// ---------------------------------------------------------------- registry

namespace {

Param P(const char* name)
{
    return Param::intern(name);
}

CatalogEntry algebra_entry(std::string name, std::string desc, LieSuperAlgebra A)
{
    CatalogEntry e;
    e.name = name;
    e.kind = CatalogEntry::Kind::Algebra;
    e.description = std::move(desc);
    e.algebra = A.renamed(std::move(name));
    return e;
}

CatalogEntry tensor_entry(std::string name, std::string desc, LieSuperAlgebra host, TensorElement t)
{
    CatalogEntry e;
    e.name = std::move(name);
    e.kind = CatalogEntry::Kind::Tensor;
    e.description = std::move(desc);
    e.algebra = std::move(host);
    e.tensor = std::move(t);
    return e;
}

const std::vector<std::pair<std::string, std::function<CatalogEntry()>>>& registry()
{
    static const std::vector<std::pair<std::string, std::function<CatalogEntry()>>> reg = {
        {"sl2", [] { return algebra_entry("sl2", "sl(2) on H12, E12, E21", make_sl(2)); }},
        {"sl3", [] { return algebra_entry("sl3", "sl(3) in the matrix-unit basis", make_sl(3)); }},
        {"sl4", [] { return algebra_entry("sl4", "sl(4) in the matrix-unit basis", make_sl(4)); }},
        {"gl3", [] { return algebra_entry("gl3", "gl(3) on matrix units E_ij", make_gl(3)); }},
        {"borel", [] { return algebra_entry("borel", "Borel subalgebra {h, x | [h,x] = 2x}", make_borel()); }},
        {"osp12", [] { return algebra_entry("osp12", "osp(1|2) on h, Xp, Xm, vp, vm", make_osp12().algebra); }},
        {"double.g1", [] { return algebra_entry("double.g1", "first Borel pair of the double", make_double_pieces(P("theta")).g1); }},
        {"double.g2", [] { return algebra_entry("double.g2", "second Borel pair of the double", make_double_pieces(P("theta")).g2); }},
        {"double.g1dual", [] { return algebra_entry("double.g1dual", "dual bracket g1*", make_double_pieces(P("theta")).g1dual); }},
        {"double.g2dual", [] { return algebra_entry("double.g2dual", "dual bracket g2*", make_double_pieces(P("theta")).g2dual); }},
        {"double.pencil",
         [] {
             auto d = make_double_pieces(P("theta"));
             return algebra_entry("double.pencil", "alpha1 g1 + alpha2 g2",
                                  pencil(d.g1, d.g2, Poly::param(P("alpha1")), Poly::param(P("alpha2"))));
         }},
        {"sl2.dual.std", [] { return algebra_entry("sl2.dual.std", "standard dual of sl(2)", make_dual_standard(2, P("h"))); }},
        {"sl2.dual.jordan", [] { return algebra_entry("sl2.dual.jordan", "jordanian dual of sl(2)", make_dual_jordan(2, P("xi"))); }},
        {"sl3.dual.std", [] { return algebra_entry("sl3.dual.std", "standard dual of sl(3)", make_dual_standard(3, P("h"))); }},
        {"sl3.dual.jordan", [] { return algebra_entry("sl3.dual.jordan", "jordanian dual of sl(3)", make_dual_jordan(3, P("xi"))); }},
        {"r.dj", [] { return tensor_entry("r.dj", "Drinfeld-Jimbo r-matrix of sl(3)", make_sl(3), make_rdj(3, P("h"))); }},
        {"r.jordan", [] { return tensor_entry("r.jordan", "jordanian r-matrix of sl(3)", make_sl(3), make_rjordan(3, P("xi"))); }},
        {"r.full", [] { return tensor_entry("r.full", "two-parameter r-matrix of sl(3)", make_sl(3), make_rfull(3, P("h"), P("xi"))); }},
        {"r.double", [] { return tensor_entry("r.double", "constant r-matrix of the double", make_double_pieces(P("theta")).g1, make_double_pieces(P("theta")).r); }},
        {"r.borel",
         [] {
             auto B = make_borel();
             auto b = B.basis();
             return tensor_entry("r.borel", "h ^ x on the Borel subalgebra", B,
                                 wedge(TensorElement::basis_vector(b, "h"), TensorElement::basis_vector(b, "x")));
         }},
        {"mu.prime", [] { return algebra_entry("mu.prime", "first-order bracket mu' on gl(3), literal tables", make_mu_prime(3)); }},
        {"mu1star", [] { return algebra_entry("mu1star", "osp(1|2) dual bracket mu1*", make_osp12().mu1); }},
        {"mu2star", [] { return algebra_entry("mu2star", "osp(1|2) dual bracket mu2*", make_osp12().mu2); }},
        {"psi",
         [] {
             auto o = make_osp12();
             CatalogEntry e;
             e.name = "psi";
             e.kind = CatalogEntry::Kind::Cochain1;
             e.description = "printed 1-cochain psi on the osp(1|2) dual basis";
             e.algebra = o.mu1.renamed("mu1star");
             e.cochain = o.psi;
             return e;
         }},
    };
    return reg;
}

} // namespace

std::vector<std::string> catalog_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
        out.push_back(name);
    return out;
}

CatalogEntry catalog_get(const std::string& name)
{
    for (const auto& [n, fn] : registry())
        if (n == name)
            return fn();
    throw DefinitionError("unknown catalog entry " + name);
}

} // namespace wb
