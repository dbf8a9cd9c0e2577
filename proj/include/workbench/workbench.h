/* C interface to the Lie bialgebra workbench. All strings returned by the
 * library are owned by the caller and freed with wb_string_free. */
#ifndef WORKBENCH_H
#define WORKBENCH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WB_API __declspec(dllexport)
#else
#define WB_API __attribute__((visibility("default")))
#endif

typedef enum wb_status {
    WB_OK = 0,
    WB_ERR_PARSE = 1,      /* syntax error, unknown name, re-declaration */
    WB_ERR_USAGE = 2,      /* bad argument or handle */
    WB_ERR_IO = 3,
    WB_ERR_UNSUPPORTED = 4,
    WB_ERR_INTERNAL = 5
} wb_status;

typedef enum wb_format { WB_FORMAT_TEXT = 0, WB_FORMAT_STRUCTURED = 1 } wb_format;

typedef struct wb_session wb_session;
typedef struct wb_report wb_report;

WB_API const char* wb_version(void);
WB_API const char* wb_status_string(wb_status s);
WB_API void wb_string_free(char* s);

WB_API wb_session* wb_session_create(void);
WB_API void wb_session_destroy(wb_session* s);
/* Default truncation order for twist checks without "order D". */
WB_API wb_status wb_session_set_order(wb_session* s, int order);
WB_API wb_status wb_session_set_timings(wb_session* s, int enabled);
/* Noted in reports, e.g. "h != 0". */
WB_API wb_status wb_session_add_assumption(wb_session* s, const char* assumption);
WB_API wb_status wb_session_load_source(wb_session* s, const char* text);
WB_API wb_status wb_session_load_file(wb_session* s, const char* path);
/* Message of the last failed call on this session ("line:col: ..." for parse errors). */
WB_API const char* wb_session_last_error(const wb_session* s);
WB_API wb_status wb_session_run(wb_session* s, wb_report** out);

/* The bundled acceptance battery at the given order. */
WB_API wb_status wb_paper_suite(int order, wb_report** out);

WB_API size_t wb_report_check_count(const wb_report* r);
WB_API int wb_report_all_passed(const wb_report* r);
/* 0 pass, 1 fail, 2 unsupported, -1 bad index. */
WB_API int wb_report_check_status(const wb_report* r, size_t i);
WB_API char* wb_report_render(const wb_report* r, wb_format format);
WB_API void wb_report_destroy(wb_report* r);

/* Newline-separated "name<TAB>kind<TAB>description" lines. */
WB_API char* wb_catalog_list(void);
/* DSL text for a catalog entry, or NULL if unknown. */
WB_API char* wb_catalog_export(const char* name);

#ifdef __cplusplus
}
#endif

#endif
