#include "workbench/workbench.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "catalog/catalog.hpp"
#include "dsl/session.hpp"
#include "suite/suite.hpp"

struct wb_session {
    wb::dsl::Session session;
    std::string error;
};

struct wb_report {
    wb::dsl::Report report;
};

namespace {

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p)
        std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
wb_status guard(wb_session* s, F&& f)
{
    if (!s)
        return WB_ERR_USAGE;
    try {
        s->error.clear();
        return f();
    } catch (const wb::dsl::SourceError& e) {
        s->error = e.what();
        return WB_ERR_PARSE;
    } catch (const wb::DefinitionError& e) {
        s->error = e.what();
        return WB_ERR_PARSE;
    } catch (const wb::UnsupportedInput& e) {
        s->error = e.what();
        return WB_ERR_UNSUPPORTED;
    } catch (const wb::UsageError& e) {
        s->error = e.what();
        return WB_ERR_USAGE;
    } catch (const std::exception& e) {
        s->error = e.what();
        return WB_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* wb_version(void)
{
    return "0.1.0";
}

const char* wb_status_string(wb_status s)
{
    switch (s) {
    case WB_OK:
        return "ok";
    case WB_ERR_PARSE:
        return "parse or definition error";
    case WB_ERR_USAGE:
        return "usage error";
    case WB_ERR_IO:
        return "i/o error";
    case WB_ERR_UNSUPPORTED:
        return "unsupported input";
    case WB_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void wb_string_free(char* s)
{
    std::free(s);
}

wb_session* wb_session_create(void)
{
    try {
        return new wb_session{};
    } catch (...) {
        return nullptr;
    }
}

void wb_session_destroy(wb_session* s)
{
    delete s;
}

wb_status wb_session_set_order(wb_session* s, int order)
{
    return guard(s, [&] {
        if (order < 1 || order > 8) {
            s->error = "order must be between 1 and 8";
            return WB_ERR_USAGE;
        }
        s->session.options().order = order;
        return WB_OK;
    });
}

wb_status wb_session_set_timings(wb_session* s, int enabled)
{
    return guard(s, [&] {
        s->session.options().timings = enabled != 0;
        return WB_OK;
    });
}

wb_status wb_session_add_assumption(wb_session* s, const char* assumption)
{
    return guard(s, [&] {
        if (!assumption || !*assumption) {
            s->error = "empty assumption";
            return WB_ERR_USAGE;
        }
        s->session.options().assumptions.emplace_back(assumption);
        return WB_OK;
    });
}

wb_status wb_session_load_source(wb_session* s, const char* text)
{
    return guard(s, [&] {
        if (!text) {
            s->error = "null source";
            return WB_ERR_USAGE;
        }
        s->session.load_text(text);
        return WB_OK;
    });
}

wb_status wb_session_load_file(wb_session* s, const char* path)
{
    return guard(s, [&] {
        std::ifstream in(path ? path : "");
        if (!in) {
            s->error = std::string("cannot read ") + (path ? path : "(null)");
            return WB_ERR_IO;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        s->session.load_text(ss.str());
        return WB_OK;
    });
}

const char* wb_session_last_error(const wb_session* s)
{
    return s ? s->error.c_str() : "null session";
}

wb_status wb_session_run(wb_session* s, wb_report** out)
{
    return guard(s, [&] {
        if (!out)
            return WB_ERR_USAGE;
        *out = new wb_report{s->session.run()};
        return WB_OK;
    });
}

wb_status wb_paper_suite(int order, wb_report** out)
{
    if (!out || order < 1 || order > 8)
        return WB_ERR_USAGE;
    try {
        *out = new wb_report{wb::suite::paper_suite(order)};
        return WB_OK;
    } catch (...) {
        return WB_ERR_INTERNAL;
    }
}

size_t wb_report_check_count(const wb_report* r)
{
    return r ? r->report.checks.size() : 0;
}

int wb_report_all_passed(const wb_report* r)
{
    return r && r->report.all_passed() ? 1 : 0;
}

int wb_report_check_status(const wb_report* r, size_t i)
{
    if (!r || i >= r->report.checks.size())
        return -1;
    return static_cast<int>(r->report.checks[i].status);
}

char* wb_report_render(const wb_report* r, wb_format format)
{
    if (!r)
        return nullptr;
    return dup(format == WB_FORMAT_STRUCTURED ? wb::dsl::render_structured(r->report)
                                              : wb::dsl::render_text(r->report));
}

void wb_report_destroy(wb_report* r)
{
    delete r;
}

char* wb_catalog_list(void)
{
    try {
        std::string s;
        for (const auto& n : wb::catalog_names()) {
            auto e = wb::catalog_get(n);
            const char* kind = e.kind == wb::CatalogEntry::Kind::Algebra  ? "algebra"
                               : e.kind == wb::CatalogEntry::Kind::Tensor ? "tensor"
                                                                          : "cochain";
            s += n + "\t" + kind + "\t" + e.description + "\n";
        }
        return dup(s);
    } catch (...) {
        return nullptr;
    }
}

char* wb_catalog_export(const char* name)
{
    try {
        return name ? dup(wb::dsl::export_entry(name)) : nullptr;
    } catch (...) {
        return nullptr;
    }
}

} // extern "C"
