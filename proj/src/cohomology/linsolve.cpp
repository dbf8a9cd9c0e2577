#include "cohomology/linsolve.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "errors.hpp"

namespace wb {

namespace {

Poly monic(const Poly& p)
{
    Rational inv = 1 / p.leading().coef;
    return p * inv;
}

bool contains(const std::vector<Poly>& v, const Poly& p)
{
    return std::find(v.begin(), v.end(), p) != v.end();
}

std::tuple<int, std::size_t, unsigned> pivot_score(const Poly& p)
{
    int kind = p.is_constant() ? 0 : (p.is_monomial() ? 1 : 2);
    return {kind, p.terms().size(), p.total_degree()};
}

void strip_content(std::vector<Poly>& row, Assumptions& as)
{
    Monomial g;
    bool first = true;
    for (const auto& e : row) {
        if (e.is_zero())
            continue;
        g = first ? e.monomial_content() : gcd(g, e.monomial_content());
        first = false;
        if (g.is_one())
            return;
    }
    if (first || g.is_one())
        return;
    as.add(Poly::term(g, 1));
    for (auto& e : row)
        if (!e.is_zero())
            e = e.divided_by(g);
}

} // namespace

void Assumptions::add(const Poly& p)
{
    if (p.is_zero())
        throw StructuralError("cannot assume 0 != 0");
    if (p.is_constant())
        return;
    Monomial m = p.monomial_content();
    for (const auto& [v, e] : m.factors()) {
        Poly q = Poly::param(v);
        if (!contains(conds_, q))
            conds_.push_back(q);
    }
    Poly rest = p.divided_by(m);
    if (rest.is_constant())
        return;
    rest = monic(rest);
    if (!contains(conds_, rest))
        conds_.push_back(rest);
}

void Assumptions::merge(const Assumptions& o)
{
    for (const auto& c : o.conds_)
        if (!contains(conds_, c))
            conds_.push_back(c);
}

std::vector<std::string> Assumptions::render() const
{
    std::vector<std::string> out;
    for (const auto& c : conds_)
        out.push_back(c.to_string() + " != 0");
    return out;
}

Elimination eliminate(PolyMatrix m, int search_cols)
{
    Elimination E;
    int nrows = static_cast<int>(m.size());
    int ncols = nrows ? static_cast<int>(m[0].size()) : 0;
    search_cols = std::min(search_cols, ncols);
    int r = 0;
    for (int col = 0; col < search_cols && r < nrows; ++col) {
        int best = -1;
        std::tuple<int, std::size_t, unsigned> score{};
        for (int i = r; i < nrows; ++i) {
            const Poly& e = m[i][col];
            if (e.is_zero())
                continue;
            auto s = pivot_score(e);
            if (best < 0 || s < score) {
                best = i;
                score = s;
            }
        }
        if (best < 0)
            continue;
        std::swap(m[r], m[best]);
        auto& prow = m[r];
        if (prow[col].is_constant()) {
            Rational inv = 1 / prow[col].constant_term();
            for (auto& e : prow)
                if (!e.is_zero())
                    e *= inv;
        } else {
            E.assumptions.add(prow[col]);
        }
        const Poly p = prow[col];
        bool unit = p == Poly(1);
        std::vector<int> support;
        for (int j = 0; j < ncols; ++j)
            if (!prow[j].is_zero())
                support.push_back(j);
        for (int i = 0; i < nrows; ++i) {
            if (i == r || m[i][col].is_zero())
                continue;
            Poly a = m[i][col];
            auto& row = m[i];
            if (!unit)
                for (auto& e : row)
                    if (!e.is_zero())
                        e = p * e;
            for (int j : support)
                row[j] -= a * prow[j];
            if (!unit)
                strip_content(row, E.assumptions);
        }
        E.pivot_cols.push_back(col);
        ++r;
    }
    E.rank = r;
    E.rows = std::move(m);
    return E;
}

int rational_rank(std::vector<std::vector<Rational>> m)
{
    int nrows = static_cast<int>(m.size());
    int ncols = nrows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < nrows; ++i) {
            if (m[i][col] == 0)
                continue;
            Rational f = m[i][col] / m[r][col];
            for (int j = col; j < ncols; ++j)
                if (m[r][j] != 0)
                    m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

int rank_at(const PolyMatrix& m, const Assignment& point)
{
    std::vector<std::vector<Rational>> q;
    q.reserve(m.size());
    for (const auto& row : m) {
        std::vector<Rational> qr;
        qr.reserve(row.size());
        for (const auto& e : row)
            qr.push_back(e.is_zero() ? Rational(0) : evaluate(e, point));
        q.push_back(std::move(qr));
    }
    return rational_rank(std::move(q));
}

std::vector<Assignment> sample_points(const std::vector<Param>& params, int count, unsigned seed)
{
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> num(1, 89), den(1, 11), sgn(0, 1);
    std::vector<Assignment> pts;
    for (int k = 0; k < count; ++k) {
        Assignment a;
        for (Param p : params)
            a[p] = make_rational(sgn(gen) ? num(gen) : -num(gen), den(gen));
        pts.push_back(std::move(a));
    }
    return pts;
}

std::vector<Param> matrix_parameters(const PolyMatrix& m)
{
    std::vector<Param> ps;
    for (const auto& row : m)
        for (const auto& e : row)
            for (Param p : e.variables())
                if (std::find(ps.begin(), ps.end(), p) == ps.end())
                    ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    return ps;
}

SolveResult solve(const PolyMatrix& a, const std::vector<Poly>& b)
{
    if (a.size() != b.size())
        throw UsageError("solve: right-hand side has the wrong length");
    int ncols = a.empty() ? 0 : static_cast<int>(a[0].size());
    PolyMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i)
        aug[i].push_back(b[i]);
    if (aug.empty()) {
        SolveResult empty;
        empty.consistent = true;
        return empty;
    }

    Elimination E = eliminate(aug, ncols);
    SolveResult R;
    R.rank_a = E.rank;
    R.rank_aug = E.rank;
    R.assumptions = E.assumptions;
    for (int k = E.rank; k < static_cast<int>(E.rows.size()); ++k)
        if (!E.rows[k][ncols].is_zero()) {
            R.rank_aug = E.rank + 1;
            R.witness_row = k;
            break;
        }
    R.consistent = !R.witness_row;

    if (R.consistent) {
        Monomial lm;
        for (int k = 0; k < E.rank; ++k)
            lm = lcm(lm, E.rows[k][E.pivot_cols[k]].monomial_content());
        Poly L = Poly::term(lm, 1);
        for (int k = 0; k < E.rank; ++k) {
            const Poly& p = E.rows[k][E.pivot_cols[k]];
            Poly q = p.divided_by(p.monomial_content());
            if (!q.is_constant() && !divide_exact(L, q))
                L = L * monic(q);
        }
        R.denominator = L;
        R.numerators.assign(static_cast<std::size_t>(ncols), Poly());
        for (int k = 0; k < E.rank; ++k) {
            auto quot = divide_exact(L, E.rows[k][E.pivot_cols[k]]);
            if (!quot)
                throw StructuralError("solve: pivot does not divide the common denominator");
            R.numerators[static_cast<std::size_t>(E.pivot_cols[k])] = E.rows[k][ncols] * *quot;
        }
    }

    auto params = matrix_parameters(aug);
    if (!params.empty())
        for (const auto& pt : sample_points(params, 2))
            if (rank_at(a, pt) != R.rank_a || rank_at(aug, pt) != R.rank_aug)
                R.generic_check = false;
    return R;
}

RankResult generic_rank(const PolyMatrix& m)
{
    RankResult R;
    if (m.empty())
        return R;
    Elimination E = eliminate(m, static_cast<int>(m[0].size()));
    R.rank = E.rank;
    R.assumptions = E.assumptions;
    auto params = matrix_parameters(m);
    if (!params.empty())
        for (const auto& pt : sample_points(params, 2))
            if (rank_at(m, pt) != R.rank)
                R.generic_check = false;
    return R;
}

} // namespace wb
