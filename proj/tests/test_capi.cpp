#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <workbench/workbench.h>

namespace {

std::string take(char* s)
{
    std::string r = s ? s : "";
    wb_string_free(s);
    return r;
}

} // namespace

TEST_CASE("session lifecycle")
{
    wb_session* s = wb_session_create();
    REQUIRE(s);
    CHECK(wb_session_set_order(s, 2) == WB_OK);
    CHECK(wb_session_set_order(s, 0) == WB_ERR_USAGE);
    CHECK(wb_session_load_source(s, "check jacobi sl3;\ncheck jacobi mu.prime;") == WB_OK);
    wb_report* r = nullptr;
    REQUIRE(wb_session_run(s, &r) == WB_OK);
    CHECK(wb_report_check_count(r) == 2);
    CHECK(wb_report_check_status(r, 0) == 0);
    CHECK(wb_report_check_status(r, 1) == 1);
    CHECK(wb_report_check_status(r, 7) == -1);
    CHECK_FALSE(wb_report_all_passed(r));
    auto text = take(wb_report_render(r, WB_FORMAT_TEXT));
    CHECK(text.find("[PASS] check jacobi sl3;") != std::string::npos);
    auto js = take(wb_report_render(r, WB_FORMAT_STRUCTURED));
    CHECK(js.front() == '{');
    wb_report_destroy(r);
    wb_session_destroy(s);
}

TEST_CASE("errors")
{
    wb_session* s = wb_session_create();
    CHECK(wb_session_load_source(s, "algebra A { basis x:even;\n  bracket [x,y] = x; }") == WB_ERR_PARSE);
    CHECK(std::string(wb_session_last_error(s)).find("2:3") != std::string::npos);
    CHECK(wb_session_load_file(s, "/nonexistent/file.wb") == WB_ERR_IO);
    CHECK(wb_session_load_source(s, nullptr) == WB_ERR_USAGE);
    CHECK(wb_session_run(s, nullptr) == WB_ERR_USAGE);
    wb_session_destroy(s);
    wb_session_destroy(nullptr);
    wb_report_destroy(nullptr);
    CHECK(std::string(wb_status_string(WB_ERR_UNSUPPORTED)).size() > 0);
    CHECK(std::string(wb_version()).size() > 0);
}

TEST_CASE("catalog")
{
    auto list = take(wb_catalog_list());
    for (const char* n : {"osp12", "r.jordan", "psi", "sl3.dual.jordan"})
        CHECK(list.find(n) != std::string::npos);
    auto ex = take(wb_catalog_export("r.borel"));
    CHECK(ex.find("tensor r.borel") != std::string::npos);
    CHECK(wb_catalog_export("nope") == nullptr);
}

TEST_CASE("acceptance battery")
{
    wb_report* r = nullptr;
    REQUIRE(wb_paper_suite(3, &r) == WB_OK);
    CHECK(wb_report_check_count(r) == 11);
    wb_report_destroy(r);
}
