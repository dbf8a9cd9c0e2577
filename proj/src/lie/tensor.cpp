#include "lie/tensor.hpp"

#include <sstream>

#include "errors.hpp"

namespace wb {

std::shared_ptr<const GradedBasis> GradedBasis::make(std::vector<Entry> entries)
{
    auto b = std::make_shared<GradedBasis>();
    for (auto& [name, parity] : entries) {
        if (name.empty())
            throw DefinitionError("empty generator name");
        if (b->index_.count(name))
            throw DefinitionError("generator '" + name + "' declared twice");
        b->index_.emplace(name, static_cast<int>(b->names_.size()));
        b->names_.push_back(std::move(name));
        b->parities_.push_back(parity);
    }
    return b;
}

std::optional<int> GradedBasis::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int GradedBasis::index(const std::string& name) const
{
    auto i = find(name);
    if (!i)
        throw DefinitionError("unknown identifier " + name);
    return *i;
}

bool same_basis(const BasisPtr& a, const BasisPtr& b)
{
    return a == b || (a && b && *a == *b);
}

// ----------------------------------------------------------- TensorElement

TensorElement::TensorElement(BasisPtr basis, int degree) : basis_(std::move(basis)), degree_(degree)
{
    if (degree < 1 || degree > 3)
        throw UsageError("tensor degree must be 1, 2 or 3");
}

TensorElement TensorElement::basis_vector(BasisPtr basis, int i)
{
    TensorElement t(std::move(basis), 1);
    t.add({i, 0, 0}, Poly(1));
    return t;
}

TensorElement TensorElement::basis_vector(BasisPtr basis, const std::string& name)
{
    int i = basis->index(name);
    return basis_vector(std::move(basis), i);
}

Poly TensorElement::coeff(const Index& idx) const
{
    auto it = terms_.find(idx);
    return it == terms_.end() ? Poly() : it->second;
}

int TensorElement::parity_of(const Index& idx) const
{
    int p = 0;
    for (int s = 0; s < degree_; ++s)
        p += basis_->parity(idx[s]);
    return p & 1;
}

void TensorElement::add(const Index& idx, const Poly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void TensorElement::check_compatible(const TensorElement& o) const
{
    if (degree_ != o.degree_)
        throw UsageError("tensor degree mismatch");
    if (!same_basis(basis_, o.basis_))
        throw UsageError("tensors live over different bases");
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    if (!basis_) {
        *this = o;
        return *this;
    }
    if (!o.basis_)
        return *this;
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_)
        add(idx, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    return *this += -o;
}

TensorElement& TensorElement::operator*=(const Poly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b)
{
    if (a.degree_ != b.degree_)
        return false;
    if (a.basis_ && b.basis_ && !same_basis(a.basis_, b.basis_))
        return false;
    return a.terms_ == b.terms_;
}

namespace {

std::string coefficient_prefix(const Poly& c, bool& negative)
{
    negative = false;
    Poly p = c;
    if (p.is_monomial() && p.terms()[0].coef < 0) {
        negative = true;
        p = -p;
    }
    if (p == Poly(1))
        return "";
    if (p.is_monomial())
        return p.to_string() + " ";
    return "(" + p.to_string() + ") ";
}

} // namespace

std::string TensorElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        bool neg;
        std::string prefix = coefficient_prefix(c, neg);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        os << prefix;
        for (int s = 0; s < degree_; ++s) {
            if (s)
                os << " (x) ";
            os << basis_->name(idx[s]);
        }
    }
    return os.str();
}

TensorElement tensor_product(const TensorElement& x, const TensorElement& y)
{
    if (!same_basis(x.basis(), y.basis()))
        throw UsageError("tensor product of elements over different bases");
    int d = x.degree() + y.degree();
    if (d > 3)
        throw UsageError("tensor degree above 3 is not supported");
    TensorElement r(x.basis(), d);
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            TensorElement::Index idx{0, 0, 0};
            for (int s = 0; s < x.degree(); ++s)
                idx[s] = a[s];
            for (int s = 0; s < y.degree(); ++s)
                idx[x.degree() + s] = b[s];
            r.add(idx, ca * cb);
        }
    return r;
}

TensorElement wedge(const TensorElement& x, const TensorElement& y)
{
    if (x.degree() != 1 || y.degree() != 1)
        throw UsageError("wedge needs two degree-1 elements");
    return tensor_product(x, y) - flip(tensor_product(x, y));
}

TensorElement flip(const TensorElement& t)
{
    if (t.degree() != 2)
        throw UsageError("flip needs a degree-2 tensor");
    TensorElement r(t.basis(), 2);
    const auto& B = *t.basis();
    for (const auto& [idx, c] : t.terms()) {
        int s = sign_of(B.parity(idx[0]) * B.parity(idx[1]));
        r.add({idx[1], idx[0], 0}, s * c);
    }
    return r;
}

TensorElement symmetric_part(const TensorElement& t)
{
    return (t + flip(t)) * Poly(make_rational(1, 2));
}

TensorElement antisymmetric_part(const TensorElement& t)
{
    return (t - flip(t)) * Poly(make_rational(1, 2));
}

TensorElement cyclic_shift(const TensorElement& t)
{
    if (t.degree() != 3)
        throw UsageError("cyclic shift needs a degree-3 tensor");
    TensorElement r(t.basis(), 3);
    const auto& B = *t.basis();
    for (const auto& [idx, c] : t.terms()) {
        int s = sign_of(B.parity(idx[2]) * (B.parity(idx[0]) + B.parity(idx[1])));
        r.add({idx[2], idx[0], idx[1]}, s * c);
    }
    return r;
}

TensorElement substitute(const TensorElement& t, const Assignment& a)
{
    return t.map_coefficients([&](const Poly& c) { return substitute(c, a); });
}

TensorElement substitute(const TensorElement& t, const std::map<std::string, Rational>& a)
{
    return t.map_coefficients([&](const Poly& c) { return substitute(c, a); });
}

TensorElement truncate(const TensorElement& t, const TruncationOrder& o)
{
    return t.map_coefficients([&](const Poly& c) { return truncate(c, o); });
}

TensorElement coefficient(const TensorElement& t, Param p, unsigned e)
{
    return t.map_coefficients([&](const Poly& c) { return c.coefficient(p, e); });
}

std::optional<Poly> proportionality(const TensorElement& a, const TensorElement& b)
{
    if (a.degree() != b.degree() || !same_basis(a.basis(), b.basis()))
        throw UsageError("proportionality needs tensors of the same shape");
    if (b.is_zero())
        return a.is_zero() ? std::optional<Poly>(Poly()) : std::nullopt;
    const auto& [idx, cb] = *b.terms().begin();
    auto c = divide_exact(a.coeff(idx), cb);
    if (!c)
        return std::nullopt;
    if (a == *c * b)
        return c;
    return std::nullopt;
}

} // namespace wb
