#include "scalar/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace wb {

Rational make_rational(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Param p, unsigned e)
{
    if (e > 0)
        factors_.emplace_back(p, e);
}

unsigned Monomial::degree_in(Param p) const
{
    for (const auto& [q, e] : factors_)
        if (q == p)
            return e;
    return 0;
}

unsigned Monomial::total_degree() const
{
    unsigned d = 0;
    for (const auto& f : factors_)
        d += f.second;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
            r.factors_.push_back(*i++);
        else if (i == a.factors_.end() || j->first < i->first)
            r.factors_.push_back(*j++);
        else {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

std::optional<Monomial> divide(const Monomial& a, const Monomial& b)
{
    Monomial r;
    auto i = a.factors_.begin();
    for (const auto& [p, e] : b.factors_) {
        while (i != a.factors_.end() && i->first < p)
            r.factors_.push_back(*i++);
        if (i == a.factors_.end() || i->first != p || i->second < e)
            return std::nullopt;
        if (i->second > e)
            r.factors_.emplace_back(p, i->second - e);
        ++i;
    }
    while (i != a.factors_.end())
        r.factors_.push_back(*i++);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (const auto& [p, e] : a.factors_) {
        unsigned f = b.degree_in(p);
        if (f > 0)
            r.factors_.emplace_back(p, std::min(e, f));
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    auto g = gcd(a, b);
    return *divide(a * b, g);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    auto i = a.factors_.begin(), j = b.factors_.begin();
    for (;;) {
        bool ea = i == a.factors_.end(), eb = j == b.factors_.end();
        if (ea && eb)
            return std::strong_ordering::equal;
        if (ea)
            return std::strong_ordering::less;
        if (eb)
            return std::strong_ordering::greater;
        if (i->first != j->first)
            return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
        if (i->second != j->second)
            return i->second <=> j->second;
        ++i;
        ++j;
    }
}

Monomial Monomial::without(Param p) const
{
    Monomial r;
    for (const auto& f : factors_)
        if (f.first != p)
            r.factors_.push_back(f);
    return r;
}

namespace {

std::vector<std::pair<std::string, unsigned>> named_factors(const Monomial& m)
{
    std::vector<std::pair<std::string, unsigned>> v;
    for (const auto& [p, e] : m.factors())
        v.emplace_back(p.name(), e);
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

std::string Monomial::to_string() const
{
    std::string s;
    for (const auto& [n, e] : named_factors(*this)) {
        if (!s.empty())
            s += '*';
        s += n;
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

// --------------------------------------------------------- TruncationOrder

bool TruncationOrder::is_graded(Param p) const
{
    return std::find(graded.begin(), graded.end(), p) != graded.end();
}

unsigned TruncationOrder::degree_of(const Monomial& m) const
{
    unsigned d = 0;
    for (const auto& [p, e] : m.factors())
        if (is_graded(p))
            d += e;
    return d;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c)
{
    if (c != 0)
        terms_.push_back({Monomial{}, c});
}

Poly Poly::param(Param p, unsigned e)
{
    Poly r;
    r.terms_.push_back({Monomial(p, e), Rational(1)});
    return r;
}

Poly Poly::term(const Monomial& m, const Rational& c)
{
    Poly r;
    if (c != 0)
        r.terms_.push_back({m, c});
    return r;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    Poly r;
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_term() const
{
    if (!terms_.empty() && terms_.front().mono.is_one())
        return terms_.front().coef;
    return 0;
}

unsigned Poly::total_degree() const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.total_degree());
    return d;
}

unsigned Poly::degree_in(Param p) const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree_in(p));
    return d;
}

std::optional<unsigned> Poly::min_degree(const TruncationOrder& t) const
{
    std::optional<unsigned> d;
    for (const auto& term : terms_) {
        unsigned k = t.degree_of(term.mono);
        if (!d || k < *d)
            d = k;
    }
    return d;
}

std::vector<Param> Poly::variables() const
{
    std::vector<Param> v;
    for (const auto& t : terms_)
        for (const auto& f : t.mono.factors())
            if (std::find(v.begin(), v.end(), f.first) == v.end())
                v.push_back(f.first);
    std::sort(v.begin(), v.end());
    return v;
}

void Poly::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coef == 0; });
    terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.terms_.empty())
        return *this;
    if (&o == this)
        return *this *= Rational(2);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->mono < j->mono))
            out.push_back(std::move(*i++));
        else if (i == terms_.end() || j->mono < i->mono)
            out.push_back(*j++);
        else {
            Rational c = i->coef + j->coef;
            if (c != 0)
                out.push_back({std::move(i->mono), std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    return *this += -o;
}

Poly operator-(Poly a)
{
    for (auto& t : a.terms_)
        t.coef = -t.coef;
    return a;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    else
        for (auto& t : terms_)
            t.coef *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    if (a.is_zero() || b.is_zero())
        return r;
    if (a.is_constant())
        return b * a.terms_[0].coef;
    if (b.is_constant())
        return a * b.terms_[0].coef;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            r.terms_.push_back({s.mono * t.mono, s.coef * t.coef});
    r.normalize();
    return r;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly Poly::coefficient(Param p, unsigned e) const
{
    Poly r;
    for (const auto& t : terms_)
        if (t.mono.degree_in(p) == e)
            r.terms_.push_back({t.mono.without(p), t.coef});
    r.normalize();
    return r;
}

Poly Poly::homogeneous_part(const TruncationOrder& t, unsigned d) const
{
    Poly r;
    for (const auto& term : terms_)
        if (t.degree_of(term.mono) == d)
            r.terms_.push_back(term);
    return r;
}

Monomial Poly::monomial_content() const
{
    if (terms_.empty())
        return {};
    Monomial g = terms_.front().mono;
    for (const auto& t : terms_)
        g = gcd(g, t.mono);
    return g;
}

Poly Poly::divided_by(const Monomial& m) const
{
    Poly r;
    for (const auto& t : terms_) {
        auto q = divide(t.mono, m);
        if (!q)
            throw UsageError("monomial " + m.to_string() + " does not divide " + to_string());
        r.terms_.push_back({*q, t.coef});
    }
    // division by a monomial preserves the relative order
    return r;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        auto da = a->mono.total_degree(), db = b->mono.total_degree();
        if (da != db)
            return da < db;
        return named_factors(a->mono) < named_factors(b->mono);
    });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->coef;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        if (t->mono.is_one())
            os << c.get_str();
        else if (c == 1)
            os << t->mono.to_string();
        else
            os << c.get_str() << '*' << t->mono.to_string();
    }
    return os.str();
}

Poly pow(const Poly& p, unsigned e)
{
    Poly r(1);
    for (unsigned i = 0; i < e; ++i)
        r *= p;
    return r;
}

Poly substitute(const Poly& p, const Assignment& a)
{
    std::vector<Poly::Term> out;
    for (const auto& t : p.terms()) {
        Rational c = t.coef;
        Monomial rest;
        for (const auto& [q, e] : t.mono.factors()) {
            auto it = a.find(q);
            if (it == a.end()) {
                rest = rest * Monomial(q, e);
                continue;
            }
            Rational v = 1;
            for (unsigned k = 0; k < e; ++k)
                v *= it->second;
            c *= v;
        }
        out.push_back({rest, c});
    }
    return Poly::from_terms(std::move(out));
}

Poly substitute(const Poly& p, const std::map<std::string, Rational>& a)
{
    Assignment byParam;
    for (const auto& [name, v] : a) {
        auto q = Param::find(name);
        if (!q)
            throw DefinitionError("unknown parameter '" + name + "'");
        byParam.emplace(*q, v);
    }
    return substitute(p, byParam);
}

Poly truncate(const Poly& p, const TruncationOrder& t)
{
    std::vector<Poly::Term> kept;
    for (const auto& term : p.terms())
        if (t.degree_of(term.mono) <= t.degree)
            kept.push_back(term);
    return Poly::from_terms(std::move(kept));
}

Poly multiply_truncated(const Poly& a, const Poly& b, const TruncationOrder& t)
{
    Poly r;
    if (a.is_zero() || b.is_zero())
        return r;
    std::vector<Poly::Term> raw;
    for (const auto& s : a.terms()) {
        unsigned ds = t.degree_of(s.mono);
        if (ds > t.degree)
            continue;
        for (const auto& u : b.terms())
            if (ds + t.degree_of(u.mono) <= t.degree)
                raw.push_back({s.mono * u.mono, s.coef * u.coef});
    }
    return Poly::from_terms(std::move(raw));
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw UsageError("division by the zero polynomial");
    if (b.is_constant())
        return a * (1 / b.constant_term());
    Poly q, r = a;
    const auto& lb = b.leading();
    while (!r.is_zero()) {
        const auto& lr = r.leading();
        auto m = divide(lr.mono, lb.mono);
        if (!m)
            return std::nullopt;
        Poly t = Poly::term(*m, lr.coef / lb.coef);
        q += t;
        r -= t * b;
    }
    return q;
}

Rational evaluate(const Poly& p, const Assignment& a)
{
    Poly v = substitute(p, a);
    if (!v.is_constant())
        throw UsageError("evaluate: parameters left unassigned in " + v.to_string());
    return v.constant_term();
}

} // namespace wb
