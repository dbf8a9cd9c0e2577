#include <set>

#include "catalog/catalog.hpp"
#include "dsl/session.hpp"

namespace wb::dsl {

namespace {

void collect(const Poly& c, std::set<std::string>& out)
{
    for (Param p : c.variables())
        out.insert(p.name());
}

std::string algebra_block(const LieSuperAlgebra& A)
{
    const auto& B = *A.basis();
    std::string s = "algebra " + A.name() + " {\n  basis";
    for (int i = 0; i < B.size(); ++i)
        s += " " + B.name(i) + (B.parity(i) ? ":odd" : ":even");
    s += ";\n";
    for (const auto& l : bracket_lines(A))
        s += "  " + l + "\n";
    return s + "}\n";
}

std::string params_line(const std::set<std::string>& ps)
{
    if (ps.empty())
        return "";
    std::string s = "param";
    for (const auto& p : ps)
        s += " " + p;
    return s + ";\n";
}

} // namespace

std::string export_entry(const std::string& name)
{
    auto e = catalog_get(name);
    const auto& A = *e.algebra;
    std::set<std::string> ps;
    for (Param p : A.parameters())
        ps.insert(p.name());
    std::string body;
    switch (e.kind) {
    case CatalogEntry::Kind::Algebra:
        body = algebra_block(A);
        break;
    case CatalogEntry::Kind::Tensor:
        for (const auto& [idx, c] : e.tensor->terms())
            collect(c, ps);
        body = algebra_block(A) + "tensor " + name + " = " + e.tensor->to_string() + " on " + A.name() + ";\n";
        break;
    case CatalogEntry::Kind::Cochain1: {
        const auto& psi = *e.cochain;
        body = algebra_block(A) + "cochain " + name + " on " + A.name() + " {\n";
        for (int i = 0; i < A.dim(); ++i) {
            for (const auto& [idx, c] : psi.image(i).terms())
                collect(c, ps);
            body += "  " + A.basis()->name(i) + " -> " + psi.image(i).to_string() + ";\n";
        }
        body += "}\n";
        break;
    }
    }
    return "# " + e.description + "\n" + params_line(ps) + body;
}

} // namespace wb::dsl
