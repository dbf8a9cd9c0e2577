#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "dsl/session.hpp"

namespace wb::dsl {

namespace {

std::string seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

} // namespace

std::string render_text(const Report& r)
{
    std::ostringstream os;
    int pass = 0, fail = 0, unsup = 0;
    os << "order " << r.order << "\n";
    for (const auto& a : r.assumptions)
        os << "assume " << a << "\n";
    for (const auto& c : r.checks) {
        std::string tag = status_name(c.status);
        for (auto& ch : tag)
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        os << "[" << tag << "] " << c.check;
        if (r.timings)
            os << "  (" << seconds(c.seconds) << ")";
        os << "\n";
        for (const auto& d : c.details)
            os << "    " << d << "\n";
        for (const auto& a : c.assumptions)
            os << "    assuming " << a << "\n";
        if (!c.witness.empty())
            os << "    witness: " << c.witness << "\n";
        (c.status == Status::Pass ? pass : c.status == Status::Fail ? fail : unsup)++;
    }
    os << r.checks.size() << " checks: " << pass << " pass, " << fail << " fail, " << unsup << " unsupported\n";
    return os.str();
}

std::string render_structured(const Report& r)
{
    using nlohmann::json;
    json j;
    j["order"] = r.order;
    j["assumptions"] = r.assumptions;
    json checks = json::array();
    int counts[3] = {0, 0, 0};
    for (const auto& c : r.checks) {
        json e;
        e["check"] = c.check;
        e["status"] = status_name(c.status);
        e["witness"] = c.witness;
        e["details"] = c.details;
        e["assumptions"] = c.assumptions;
        if (r.timings)
            e["seconds"] = c.seconds;
        checks.push_back(std::move(e));
        counts[static_cast<int>(c.status)]++;
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"total", r.checks.size()}, {"pass", counts[0]}, {"fail", counts[1]}, {"unsupported", counts[2]}};
    j["all_passed"] = r.all_passed();
    return j.dump(2) + "\n";
}

} // namespace wb::dsl
