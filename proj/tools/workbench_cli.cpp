// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "workbench/workbench.h"

namespace {

int emit(wb_report* rep, const std::string& format, const std::string& out)
{
    char* text = wb_report_render(rep, format == "structured" ? WB_FORMAT_STRUCTURED : WB_FORMAT_TEXT);
    int code = wb_report_all_passed(rep) ? 0 : 1;
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            code = 2;
        } else {
            f << text;
        }
    } else {
        std::cout << text;
    }
    wb_string_free(text);
    wb_report_destroy(rep);
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lie bialgebra and twist workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wb_version()));

    std::string file, format = "text", out;
    int order = 3;
    std::vector<std::string> assume;
    bool timings = false;
    auto* run = app.add_subcommand("run", "load a definition file and run its checks");
    run->add_option("FILE", file, "definition file")->required();
    run->add_option("--order", order, "default truncation order for twists")->check(CLI::Range(1, 8));
    run->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "structured"}));
    run->add_option("--assume", assume, "assumptions noted in the report, e.g. h!=0")->delimiter(',');
    run->add_option("--out", out, "write the report here instead of stdout");
    run->add_flag("--timings", timings, "include wall times in the report");

    auto* cat = app.add_subcommand("catalog", "list catalog entries");
    std::string export_name;
    cat->add_option("--export", export_name, "print the DSL form of one entry");

    int suite_order = 3;
    std::string suite_format = "text";
    auto* suite = app.add_subcommand("paper-suite", "run the bundled acceptance battery");
    suite->add_option("--order", suite_order, "twist order")->check(CLI::Range(1, 8));
    suite->add_option("--format", suite_format, "report format")->check(CLI::IsMember({"text", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*run) {
        wb_session* s = wb_session_create();
        if (!s)
            return 2;
        wb_session_set_order(s, order);
        wb_session_set_timings(s, timings ? 1 : 0);
        for (const auto& a : assume)
            wb_session_add_assumption(s, a.c_str());
        if (wb_session_load_file(s, file.c_str()) != WB_OK) {
            std::cerr << file << ":" << wb_session_last_error(s) << "\n";
            wb_session_destroy(s);
            return 2;
        }
        wb_report* rep = nullptr;
        wb_status st = wb_session_run(s, &rep);
        if (st != WB_OK) {
            std::cerr << wb_session_last_error(s) << "\n";
            wb_session_destroy(s);
            return 2;
        }
        wb_session_destroy(s);
        return emit(rep, format, out);
    }
    if (*cat) {
        char* text = export_name.empty() ? wb_catalog_list() : wb_catalog_export(export_name.c_str());
        if (!text) {
            std::cerr << "unknown catalog entry " << export_name << "\n";
            return 2;
        }
        std::cout << text;
        wb_string_free(text);
        return 0;
    }
    wb_report* rep = nullptr;
    if (wb_paper_suite(suite_order, &rep) != WB_OK)
        return 2;
    return emit(rep, suite_format, "");
}
