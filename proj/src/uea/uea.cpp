#include "uea/uea.hpp"

#include <functional>
#include <sstream>

#include "catalog/catalog.hpp"
#include "errors.hpp"

namespace wb {

namespace {

void accumulate(UTerms& acc, const PBWMonomial& m, const Poly& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = acc.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            acc.erase(it);
    }
}

template <class Map, class Key>
void accumulate_key(Map& acc, const Key& k, const Poly& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = acc.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            acc.erase(it);
    }
}

std::string coef_text(const Poly& c)
{
    if (c.is_monomial() || c.is_constant())
        return c.to_string();
    return "(" + c.to_string() + ")";
}

void require_same(const EnginePtr& a, const EnginePtr& b)
{
    if (a != b && !(a->algebra() == b->algebra()))
        throw UsageError("enveloping-algebra elements over different algebras");
}

} // namespace

// ------------------------------------------------------------------ engine

UEAEngine::UEAEngine(LieSuperAlgebra algebra) : algebra_(std::move(algebra))
{
    if (algebra_.parity() != 0)
        throw UsageError("enveloping algebra of an odd cochain table");
}

PBWMonomial UEAEngine::generator(int g) const
{
    PBWMonomial m = one();
    m[static_cast<std::size_t>(g)] = 1;
    return m;
}

int UEAEngine::parity(const PBWMonomial& m) const
{
    int p = 0;
    for (int i = 0; i < dim(); ++i)
        p += static_cast<int>(m[static_cast<std::size_t>(i)]) * algebra_.basis()->parity(i);
    return p & 1;
}

unsigned UEAEngine::degree(const PBWMonomial& m) const
{
    unsigned d = 0;
    for (unsigned e : m)
        d += e;
    return d;
}

UTerms UEAEngine::mul_gen(const PBWMonomial& m, int g)
{
    {
        std::lock_guard lock(mutex_);
        auto it = gen_cache_.find({m, g});
        if (it != gen_cache_.end())
            return it->second;
    }
    UTerms r = mul_gen_uncached(m, g);
    std::lock_guard lock(mutex_);
    gen_cache_.try_emplace({m, g}, r);
    return r;
}

UTerms UEAEngine::mul_gen_uncached(const PBWMonomial& m, int g)
{
    const auto& B = *algebra_.basis();
    int last = -1;
    for (int i = dim() - 1; i >= 0; --i)
        if (m[static_cast<std::size_t>(i)]) {
            last = i;
            break;
        }
    auto gi = static_cast<std::size_t>(g);
    if (last < g || (last == g && B.parity(g) == 0)) {
        PBWMonomial r = m;
        ++r[gi];
        return {{r, Poly(1)}};
    }
    UTerms out;
    if (last == g) {
        // x·x = ½[x, x] for odd x
        PBWMonomial m0 = m;
        --m0[gi];
        for (const auto& [k, c] : algebra_.bracket(g, g)) {
            Poly half = c * make_rational(1, 2);
            for (const auto& [mm, cc] : mul_gen(m0, k))
                accumulate(out, mm, half * cc);
        }
        return out;
    }
    // m = m0·x_l with l > g: x_l g = (−1)^{|l||g|} g x_l + [x_l, g]
    PBWMonomial m0 = m;
    --m0[static_cast<std::size_t>(last)];
    Poly s(sign_of(B.parity(last) * B.parity(g)));
    for (const auto& [mm, cc] : mul_gen(m0, g))
        for (const auto& [m2, c2] : mul_gen(mm, last))
            accumulate(out, m2, s * cc * c2);
    for (const auto& [k, c] : algebra_.bracket(last, g))
        for (const auto& [mm, cc] : mul_gen(m0, k))
            accumulate(out, mm, c * cc);
    return out;
}

UTerms UEAEngine::multiply(const PBWMonomial& a, const PBWMonomial& b)
{
    {
        std::lock_guard lock(mutex_);
        auto it = mono_cache_.find({a, b});
        if (it != mono_cache_.end())
            return it->second;
    }
    UTerms cur{{a, Poly(1)}};
    for (int g = 0; g < dim(); ++g)
        for (unsigned e = 0; e < b[static_cast<std::size_t>(g)]; ++e) {
            UTerms next;
            for (const auto& [m, c] : cur)
                for (const auto& [m2, c2] : mul_gen(m, g))
                    accumulate(next, m2, c * c2);
            cur = std::move(next);
        }
    std::lock_guard lock(mutex_);
    mono_cache_.try_emplace({a, b}, cur);
    return cur;
}

std::string UEAEngine::render(const PBWMonomial& m) const
{
    std::string s;
    for (int i = 0; i < dim(); ++i) {
        unsigned e = m[static_cast<std::size_t>(i)];
        if (!e)
            continue;
        if (!s.empty())
            s += "*";
        s += algebra_.basis()->name(i);
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

EnginePtr make_engine(const LieSuperAlgebra& algebra)
{
    static std::mutex mu;
    static std::map<std::string, EnginePtr> engines;
    std::string key = algebra.name();
    for (const auto& n : algebra.basis()->names())
        key += "|" + n + ":" + std::to_string(algebra.basis()->parity(algebra.basis()->index(n)));
    for (const auto& l : bracket_lines(algebra))
        key += "|" + l;
    std::lock_guard lock(mu);
    auto& e = engines[key];
    if (!e)
        e = std::make_shared<UEAEngine>(algebra);
    return e;
}

TruncationOrder xi_order(int d)
{
    return TruncationOrder{static_cast<unsigned>(d), {Param::intern("xi")}};
}

// -------------------------------------------------------------- UEAElement

UEAElement::UEAElement(EnginePtr engine, TruncationOrder order)
    : engine_(std::move(engine)), order_(std::move(order))
{
}

UEAElement UEAElement::scalar(EnginePtr engine, TruncationOrder order, const Poly& c)
{
    UEAElement u(engine, order);
    u.add(engine->one(), c);
    return u;
}

UEAElement UEAElement::generator(EnginePtr engine, TruncationOrder order, int g)
{
    UEAElement u(engine, order);
    u.add(engine->generator(g), Poly(1));
    return u;
}

UEAElement UEAElement::generator(EnginePtr engine, TruncationOrder order, const std::string& name)
{
    int g = engine->algebra().basis()->index(name);
    return generator(std::move(engine), std::move(order), g);
}

void UEAElement::add(const PBWMonomial& m, const Poly& c)
{
    accumulate(terms_, m, truncate(c, order_));
}

UEAElement& UEAElement::operator+=(const UEAElement& o)
{
    require_same(engine_, o.engine_);
    for (const auto& [m, c] : o.terms_)
        accumulate(terms_, m, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o)
{
    require_same(engine_, o.engine_);
    for (const auto& [m, c] : o.terms_)
        accumulate(terms_, m, -c);
    return *this;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b)
{
    require_same(a.engine_, b.engine_);
    UEAElement r(a.engine_, a.order_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Poly c = multiply_truncated(ca, cb, a.order_);
            if (c.is_zero())
                continue;
            for (const auto& [m, cm] : a.engine_->multiply(ma, mb))
                accumulate(r.terms_, m, cm.is_constant() ? c * cm.constant_term() : multiply_truncated(c, cm, a.order_));
        }
    return r;
}

UEAElement operator*(const Poly& c, const UEAElement& a)
{
    UEAElement r(a.engine_, a.order_);
    for (const auto& [m, v] : a.terms_)
        accumulate(r.terms_, m, multiply_truncated(c, v, a.order_));
    return r;
}

bool UEAElement::positive_degree() const
{
    for (const auto& [m, c] : terms_) {
        auto d = c.min_degree(order_);
        if (!d || *d == 0)
            return false;
    }
    return true;
}

std::string UEAElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << coef_text(c) << " * " << engine_->render(m);
    }
    return os.str();
}

// --------------------------------------------------------------- TensorUEA

TensorUEA::TensorUEA(EnginePtr engine, int rank, TruncationOrder order)
    : engine_(std::move(engine)), rank_(rank), order_(std::move(order))
{
    if (rank < 1 || rank > 3)
        throw UsageError("tensor rank must be 1, 2 or 3");
}

TensorUEA TensorUEA::one(EnginePtr engine, int rank, TruncationOrder order)
{
    TensorUEA t(engine, rank, order);
    t.add(Key(static_cast<std::size_t>(rank), engine->one()), Poly(1));
    return t;
}

TensorUEA TensorUEA::pure(const std::vector<UEAElement>& factors)
{
    if (factors.empty())
        throw UsageError("empty tensor product");
    const auto& eng = factors[0].engine();
    TensorUEA t(eng, static_cast<int>(factors.size()), factors[0].order());
    std::map<Key, Poly> cur{{Key{}, Poly(1)}};
    for (const auto& f : factors) {
        require_same(eng, f.engine());
        std::map<Key, Poly> next;
        for (const auto& [k, c] : cur)
            for (const auto& [m, v] : f.terms()) {
                // (a⊗…)·(1⊗…⊗m) needs no sign: m moves past nothing
                Key k2 = k;
                k2.push_back(m);
                accumulate_key(next, k2, multiply_truncated(c, v, t.order_));
            }
        cur = std::move(next);
    }
    t.terms_ = std::move(cur);
    return t;
}

void TensorUEA::add(const Key& k, const Poly& c)
{
    if (static_cast<int>(k.size()) != rank_)
        throw UsageError("tensor key of the wrong rank");
    accumulate_key(terms_, k, truncate(c, order_));
}

TensorUEA& TensorUEA::operator+=(const TensorUEA& o)
{
    require_same(engine_, o.engine_);
    if (rank_ != o.rank_)
        throw UsageError("tensor rank mismatch");
    for (const auto& [k, c] : o.terms_)
        accumulate_key(terms_, k, c);
    return *this;
}

TensorUEA& TensorUEA::operator-=(const TensorUEA& o)
{
    require_same(engine_, o.engine_);
    if (rank_ != o.rank_)
        throw UsageError("tensor rank mismatch");
    for (const auto& [k, c] : o.terms_)
        accumulate_key(terms_, k, -c);
    return *this;
}

TensorUEA operator*(const TensorUEA& a, const TensorUEA& b)
{
    require_same(a.engine_, b.engine_);
    if (a.rank_ != b.rank_)
        throw UsageError("tensor rank mismatch");
    auto& eng = *a.engine_;
    auto r = static_cast<std::size_t>(a.rank_);
    TensorUEA out(a.engine_, a.rank_, a.order_);
    std::vector<UTerms> slots(r);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Poly c = multiply_truncated(ca, cb, a.order_);
            if (c.is_zero())
                continue;
            int s = 0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i + 1; j < r; ++j)
                    s += eng.parity(ka[j]) * eng.parity(kb[i]);
            if (s & 1)
                c = -c;
            bool zero = false;
            for (std::size_t i = 0; i < r && !zero; ++i) {
                slots[i] = eng.multiply(ka[i], kb[i]);
                zero = slots[i].empty();
            }
            if (zero)
                continue;
            TensorUEA::Key key(r);
            std::function<void(std::size_t, const Poly&)> rec = [&](std::size_t i, const Poly& acc) {
                if (i == r) {
                    accumulate_key(out.terms_, key, acc);
                    return;
                }
                for (const auto& [m, v] : slots[i]) {
                    key[i] = m;
                    rec(i + 1, v.is_constant() ? acc * v.constant_term() : multiply_truncated(acc, v, a.order_));
                }
            };
            rec(0, c);
        }
    return out;
}

TensorUEA operator*(const Poly& c, const TensorUEA& a)
{
    TensorUEA r(a.engine_, a.rank_, a.order_);
    for (const auto& [k, v] : a.terms_)
        accumulate_key(r.terms_, k, multiply_truncated(c, v, a.order_));
    return r;
}

bool TensorUEA::positive_degree() const
{
    for (const auto& [k, c] : terms_) {
        auto d = c.min_degree(order_);
        if (!d || *d == 0)
            return false;
    }
    return true;
}

std::optional<unsigned> TensorUEA::min_degree() const
{
    std::optional<unsigned> best;
    for (const auto& [k, c] : terms_) {
        auto d = c.min_degree(order_);
        if (d && (!best || *d < *best))
            best = d;
    }
    return best;
}

std::string TensorUEA::to_string(std::size_t max_terms) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    std::size_t n = 0;
    for (const auto& [k, c] : terms_) {
        if (max_terms && n == max_terms) {
            os << " + ... (" << terms_.size() - n << " more)";
            break;
        }
        if (n++)
            os << " + ";
        os << coef_text(c) << " * ";
        for (std::size_t i = 0; i < k.size(); ++i)
            os << (i ? " (x) " : "") << engine_->render(k[i]);
    }
    return os.str();
}

// ---------------------------------------------------------------- rewriting

UTerms pbw_normalize_word(const LieSuperAlgebra& A, const std::vector<int>& word, RewriteStrategy s)
{
    const auto& B = *A.basis();
    std::map<std::vector<int>, Poly> work{{word, Poly(1)}};
    UTerms done;
    auto bad = [&](const std::vector<int>& w, std::size_t p) {
        return w[p] > w[p + 1] || (w[p] == w[p + 1] && B.parity(w[p]) == 1);
    };
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const auto& w = node.key();
        const Poly& c = node.mapped();
        std::optional<std::size_t> pos;
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (bad(w, p)) {
                pos = p;
                if (s == RewriteStrategy::Leftmost)
                    break;
            }
        if (!pos) {
            PBWMonomial m(static_cast<std::size_t>(A.dim()), 0u);
            for (int g : w)
                ++m[static_cast<std::size_t>(g)];
            accumulate(done, m, c);
            continue;
        }
        std::size_t p = *pos;
        int a = w[p], b = w[p + 1];
        auto splice = [&](const std::vector<int>& mid, const Poly& coef) {
            std::vector<int> nw(w.begin(), w.begin() + static_cast<long>(p));
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(p) + 2, w.end());
            accumulate_key(work, nw, coef);
        };
        if (a == b) {
            for (const auto& [k, v] : A.bracket(a, a))
                splice({k}, c * v * make_rational(1, 2));
        } else {
            splice({b, a}, Poly(sign_of(B.parity(a) * B.parity(b))) * c);
            for (const auto& [k, v] : A.bracket(a, b))
                splice({k}, c * v);
        }
    }
    return done;
}

UEAElement pbw_normalize(EnginePtr engine, TruncationOrder order, const std::vector<int>& word)
{
    UEAElement u = UEAElement::scalar(engine, order, Poly(1));
    for (int g : word)
        u = u * UEAElement::generator(engine, order, g);
    return u;
}

// ------------------------------------------------------------- exp and log

namespace {

template <class T>
T exp_impl(const T& u)
{
    if (!u.positive_degree())
        throw UnsupportedInput("exp needs an argument of positive deformation degree");
    T result = u.one();
    T power = u.one();
    for (long k = 1;; ++k) {
        power = Poly(make_rational(1, k)) * (power * u);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

template <class T>
T log_impl(const T& u)
{
    if (!u.positive_degree())
        throw UnsupportedInput("log(1+u) needs u of positive deformation degree");
    T result = Poly(0) * u;
    T power = u.one();
    for (long k = 1;; ++k) {
        power = power * u;
        if (power.is_zero())
            break;
        result += Poly(make_rational(k % 2 ? 1 : -1, k)) * power;
    }
    return result;
}

} // namespace

UEAElement exp_trunc(const UEAElement& u)
{
    return exp_impl(u);
}

UEAElement log_trunc(const UEAElement& u)
{
    return log_impl(u);
}

TensorUEA exp_trunc(const TensorUEA& u)
{
    return exp_impl(u);
}

TensorUEA log_trunc(const TensorUEA& u)
{
    return log_impl(u);
}

TensorUEA inverse(const TensorUEA& f)
{
    TensorUEA g = f - f.one();
    if (!g.positive_degree())
        throw UnsupportedInput("inverse needs F = 1 + (positive-degree part)");
    TensorUEA result = f.one();
    TensorUEA power = f.one();
    TensorUEA ng = Poly(-1) * g;
    for (;;) {
        power = power * ng;
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

// -------------------------------------------------------------- coproducts

namespace {

struct Split {
    PBWMonomial left, right;
    Rational coef;
};

std::vector<Split> split_monomial(const UEAEngine& eng, const PBWMonomial& m)
{
    const auto& B = *eng.algebra().basis();
    std::vector<Split> parts{{eng.one(), eng.one(), Rational(1)}};
    for (int g = 0; g < eng.dim(); ++g) {
        unsigned e = m[static_cast<std::size_t>(g)];
        if (!e)
            continue;
        std::vector<Split> next;
        for (const auto& p : parts) {
            Rational binom = 1;
            for (unsigned k = 0; k <= e; ++k) {
                if (k > 0)
                    binom = binom * Rational(e - k + 1) / Rational(k);
                Split q = p;
                q.left[static_cast<std::size_t>(g)] += k;
                q.right[static_cast<std::size_t>(g)] += e - k;
                // (L⊗R)(g^k⊗g^{e−k}) moves g^k past R
                if ((eng.parity(p.right) * static_cast<int>(k) * B.parity(g)) & 1)
                    q.coef = -q.coef * binom;
                else
                    q.coef = q.coef * binom;
                next.push_back(std::move(q));
            }
        }
        parts = std::move(next);
    }
    return parts;
}

} // namespace

TensorUEA coproduct(const UEAElement& u)
{
    TensorUEA t(u.engine(), 2, u.order());
    for (const auto& [m, c] : u.terms())
        for (const auto& s : split_monomial(*u.engine(), m))
            t.add({s.left, s.right}, c * s.coef);
    return t;
}

TensorUEA delta_left(const TensorUEA& f)
{
    if (f.rank() != 2)
        throw UsageError("delta_left needs a rank-2 tensor");
    TensorUEA t(f.engine(), 3, f.order());
    for (const auto& [k, c] : f.terms())
        for (const auto& s : split_monomial(*f.engine(), k[0]))
            t.add({s.left, s.right, k[1]}, c * s.coef);
    return t;
}

TensorUEA delta_right(const TensorUEA& f)
{
    if (f.rank() != 2)
        throw UsageError("delta_right needs a rank-2 tensor");
    TensorUEA t(f.engine(), 3, f.order());
    for (const auto& [k, c] : f.terms())
        for (const auto& s : split_monomial(*f.engine(), k[1]))
            t.add({k[0], s.left, s.right}, c * s.coef);
    return t;
}

TensorUEA leg(const TensorUEA& f, int i, int j)
{
    if (f.rank() != 2 || i < 0 || j > 2 || i >= j)
        throw UsageError("leg needs a rank-2 tensor and legs i < j in 0..2");
    TensorUEA t(f.engine(), 3, f.order());
    for (const auto& [k, c] : f.terms()) {
        TensorUEA::Key key(3, f.engine()->one());
        key[static_cast<std::size_t>(i)] = k[0];
        key[static_cast<std::size_t>(j)] = k[1];
        t.add(key, c);
    }
    return t;
}

TensorUEA flip(const TensorUEA& f)
{
    if (f.rank() != 2)
        throw UsageError("flip needs a rank-2 tensor");
    TensorUEA t(f.engine(), 2, f.order());
    const auto& eng = *f.engine();
    for (const auto& [k, c] : f.terms())
        t.add({k[1], k[0]}, Poly(sign_of(eng.parity(k[0]) * eng.parity(k[1]))) * c);
    return t;
}

UEAElement counit_left(const TensorUEA& f)
{
    UEAElement u(f.engine(), f.order());
    for (const auto& [k, c] : f.terms())
        if (k[0] == f.engine()->one())
            u.add(k[1], c);
    return u;
}

UEAElement counit_right(const TensorUEA& f)
{
    UEAElement u(f.engine(), f.order());
    for (const auto& [k, c] : f.terms())
        if (k[1] == f.engine()->one())
            u.add(k[0], c);
    return u;
}

// ------------------------------------------------------------------ twists

namespace {

Poly xi()
{
    return Poly::param(Param::intern("xi"));
}

struct SlPieces {
    EnginePtr eng;
    TruncationOrder order;
    UEAElement sigma, emsigma, h;
    int n;

    UEAElement E(int i, int j) const { return UEAElement::generator(eng, order, sl_e_name(n, i, j)); }
};

SlPieces sl_pieces(int n, int d)
{
    if (n < 3)
        throw UsageError("the extended twist needs N >= 3");
    if (d < 1)
        throw UsageError("truncation order must be at least 1");
    auto eng = make_engine(make_sl(n));
    auto order = xi_order(d);
    auto e1n = UEAElement::generator(eng, order, sl_e_name(n, 1, n));
    UEAElement sigma = Poly(make_rational(1, 2)) * log_trunc(Poly(2) * xi() * e1n);
    UEAElement emsigma = exp_trunc(Poly(-1) * sigma);
    UEAElement h(eng, order);
    for (int k = 1; k < n; ++k)
        h += UEAElement::generator(eng, order, sl_h_name(n, k));
    return {eng, order, sigma, emsigma, h, n};
}

} // namespace

TensorUEA build_jordanian_twist(int d)
{
    if (d < 1)
        throw UsageError("truncation order must be at least 1");
    auto eng = make_engine(make_borel());
    auto order = xi_order(d);
    auto h = UEAElement::generator(eng, order, "h");
    auto x = UEAElement::generator(eng, order, "x");
    UEAElement ln = log_trunc(Poly(2) * xi() * x);
    return exp_trunc(Poly(make_rational(1, 2)) * TensorUEA::pure({h, ln}));
}

TensorUEA build_extended_twist(int n, int d)
{
    SlPieces p = sl_pieces(n, d);
    TensorUEA a(p.eng, 2, p.order);
    for (int i = 2; i < n; ++i)
        a += TensorUEA::pure({p.E(1, i), p.E(i, n) * p.emsigma});
    a = Poly(2) * xi() * a;
    return exp_trunc(a) * exp_trunc(TensorUEA::pure({p.h, p.sigma}));
}

TensorUEA twist_from_tensor(EnginePtr engine, const TensorElement& t, TruncationOrder order)
{
    if (t.degree() != 2 || !same_basis(t.basis(), engine->algebra().basis()))
        throw UsageError("twist needs a degree-2 tensor over the algebra");
    TensorUEA f = TensorUEA::one(engine, 2, order);
    for (const auto& [idx, c] : t.terms())
        f.add({engine->generator(idx[0]), engine->generator(idx[1])}, c);
    return f;
}

TensorUEA twist_cocycle_check(const TensorUEA& f)
{
    return leg(f, 0, 1) * delta_left(f) - leg(f, 1, 2) * delta_right(f);
}

TensorUEA universal_R(const TensorUEA& f)
{
    return flip(f) * inverse(f);
}

TensorUEA qybe_check(const TensorUEA& r)
{
    TensorUEA r12 = leg(r, 0, 1), r13 = leg(r, 0, 2), r23 = leg(r, 1, 2);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

TensorElement classical_limit(const TensorUEA& r)
{
    if (r.rank() != 2)
        throw UsageError("classical limit needs a rank-2 tensor");
    const auto& eng = *r.engine();
    TensorElement out(eng.algebra().basis(), 2);
    auto single = [&](const PBWMonomial& m) -> int {
        if (eng.degree(m) != 1)
            return -1;
        for (int i = 0; i < eng.dim(); ++i)
            if (m[static_cast<std::size_t>(i)])
                return i;
        return -1;
    };
    for (const auto& [k, c] : r.terms()) {
        Poly p = c.homogeneous_part(r.order(), 1);
        if (p.is_zero())
            continue;
        int a = single(k[0]), b = single(k[1]);
        if (a < 0 || b < 0)
            throw StructuralError("classical limit: first order contains " + eng.render(k[0]) + " (x) " +
                                  eng.render(k[1]));
        out.add({a, b, 0}, p);
    }
    return out;
}

FactoredCompare factored_R_compare(int n, int d)
{
    SlPieces p = sl_pieces(n, d);
    TensorUEA rf = TensorUEA::one(p.eng, 2, p.order);
    for (int j = 2; j < n; ++j)
        rf = rf * exp_trunc(Poly(2) * xi() * TensorUEA::pure({p.E(j, n) * p.emsigma, p.E(1, j)}));
    rf = rf * exp_trunc(TensorUEA::pure({p.sigma, p.h}));
    rf = rf * exp_trunc(Poly(-1) * TensorUEA::pure({p.h, p.sigma}));
    for (int j = 2; j < n; ++j)
        rf = rf * exp_trunc(Poly(-2) * xi() * TensorUEA::pure({p.E(1, j), p.E(j, n) * p.emsigma}));

    TensorUEA diff = rf - universal_R(build_extended_twist(n, d));
    FactoredCompare res;
    if (diff.is_zero())
        return res;
    res.equal = false;
    res.failing_order = diff.min_degree();
    for (const auto& [k, c] : diff.terms())
        if (c.min_degree(diff.order()) == res.failing_order) {
            TensorUEA one_term(diff.engine(), 2, diff.order());
            one_term.add(k, c);
            res.sample = one_term.to_string();
            break;
        }
    return res;
}

} // namespace wb
