#ifndef DK_DK_H
#define DK_DK_H

#include <stddef.h>

#if defined(_WIN32)
#define DK_API __declspec(dllexport)
#else
#define DK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dk_job dk_job;
typedef struct dk_result dk_result;
typedef struct dk_options dk_options;

typedef enum dk_status {
  DK_STATUS_OK = 0,
  DK_STATUS_INVALID_ARGUMENT = 1,
  DK_STATUS_PARSE_ERROR = 2,
  DK_STATUS_INTERNAL = 3
} dk_status;

/* Same numbering as the CLI exit codes. */
typedef enum dk_verdict {
  DK_VERDICT_OK = 0,
  DK_VERDICT_NEGATIVE = 1,
  DK_VERDICT_ERROR = 2
} dk_verdict;

DK_API const char* dk_version(void);

/* Message of the last failing call on this thread, "" if none. */
DK_API const char* dk_last_error(void);
/* Position of the last parse error on this thread (1-based, 0 if none). */
DK_API int dk_last_error_line(void);
DK_API int dk_last_error_column(void);

DK_API dk_options* dk_options_new(void);
DK_API void dk_options_free(dk_options* options);
DK_API dk_status dk_options_set_strict(dk_options* options, int strict);
DK_API dk_status dk_options_set_max_degree(dk_options* options, int max_degree);
/* Comma separated rationals, e.g. "-1,1/2,3". */
DK_API dk_status dk_options_set_grid(dk_options* options, const char* values);

DK_API dk_status dk_job_parse(const char* source, dk_job** out);
DK_API void dk_job_free(dk_job* job);
DK_API size_t dk_job_command_count(const dk_job* job);

/* options may be NULL for defaults. */
DK_API dk_status dk_job_run(const dk_job* job, const dk_options* options, dk_result** out);
/* Parse and run; a parse failure yields an error certificate, not a status. */
DK_API dk_status dk_run_source(const char* source, const dk_options* options, dk_result** out);

DK_API void dk_result_free(dk_result* result);
DK_API dk_verdict dk_result_verdict(const dk_result* result);
DK_API size_t dk_result_count(const dk_result* result);
DK_API dk_verdict dk_result_verdict_at(const dk_result* result, size_t index);
/* Strings stay owned by the result. */
DK_API const char* dk_result_json(const dk_result* result);
DK_API const char* dk_result_text(const dk_result* result);

/* Canonical source text. Free with dk_string_free. */
DK_API dk_status dk_format(const char* source, char** out);
DK_API void dk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
