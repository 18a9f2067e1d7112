#include "dk/dk.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "dsl/parser.hpp"
#include "dsl/runner.hpp"

struct dk_options {
  dk::dsl::RunOptions opts;
};

struct dk_job {
  dk::dsl::Job job;
};

struct dk_result {
  std::vector<dk::dsl::Certificate> certs;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;
thread_local int last_line = 0;
thread_local int last_col = 0;

dk_status set_error(dk_status s, const std::string& msg, int line = 0, int col = 0) {
  last_error = msg;
  last_line = line;
  last_col = col;
  return s;
}

dk_status ok() { return set_error(DK_STATUS_OK, ""); }

template <class F>
dk_status guarded(F&& f) {
  try {
    return f();
  } catch (const dk::dsl::ParseFailure& e) {
    return set_error(DK_STATUS_PARSE_ERROR, e.what(), e.line(), e.column());
  } catch (const std::exception& e) {
    return set_error(DK_STATUS_INTERNAL, e.what());
  } catch (...) {
    return set_error(DK_STATUS_INTERNAL, "unknown failure");
  }
}

dk_result* make_result(std::vector<dk::dsl::Certificate> certs) {
  auto* r = new dk_result{std::move(certs), {}, {}};
  r->json = dk::dsl::render_json(r->certs);
  r->text = dk::dsl::render_text(r->certs);
  return r;
}

dk::dsl::RunOptions options_or_default(const dk_options* o) { return o ? o->opts : dk::dsl::RunOptions{}; }

}  // namespace

extern "C" {

const char* dk_version(void) { return "0.1.0"; }
const char* dk_last_error(void) { return last_error.c_str(); }
int dk_last_error_line(void) { return last_line; }
int dk_last_error_column(void) { return last_col; }

dk_options* dk_options_new(void) { return new dk_options{}; }
void dk_options_free(dk_options* options) { delete options; }

dk_status dk_options_set_strict(dk_options* options, int strict) {
  if (!options) return set_error(DK_STATUS_INVALID_ARGUMENT, "null options");
  options->opts.strict = strict != 0;
  return ok();
}

dk_status dk_options_set_max_degree(dk_options* options, int max_degree) {
  if (!options || max_degree < 1) return set_error(DK_STATUS_INVALID_ARGUMENT, "max degree must be positive");
  options->opts.limits.max_degree = max_degree;
  return ok();
}

dk_status dk_options_set_grid(dk_options* options, const char* values) {
  if (!options || !values) return set_error(DK_STATUS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<dk::Rational> grid;
    std::stringstream ss(values);
    std::string item;
    while (std::getline(ss, item, ',')) {
      dk::Rational q;
      if (q.set_str(item, 10) != 0) return set_error(DK_STATUS_INVALID_ARGUMENT, "bad grid value '" + item + "'");
      q.canonicalize();
      grid.push_back(q);
    }
    if (grid.empty()) return set_error(DK_STATUS_INVALID_ARGUMENT, "empty grid");
    options->opts.grid.values = std::move(grid);
    return ok();
  });
}

dk_status dk_job_parse(const char* source, dk_job** out) {
  if (!source || !out) return set_error(DK_STATUS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new dk_job{dk::dsl::parse(source)};
    return ok();
  });
}

void dk_job_free(dk_job* job) { delete job; }

size_t dk_job_command_count(const dk_job* job) { return job ? job->job.command_count() : 0; }

dk_status dk_job_run(const dk_job* job, const dk_options* options, dk_result** out) {
  if (!job || !out) return set_error(DK_STATUS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = make_result(dk::dsl::run(job->job, options_or_default(options)));
    return ok();
  });
}

dk_status dk_run_source(const char* source, const dk_options* options, dk_result** out) {
  if (!source || !out) return set_error(DK_STATUS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    try {
      dk::dsl::Job job = dk::dsl::parse(source);
      *out = make_result(dk::dsl::run(job, options_or_default(options)));
    } catch (const dk::dsl::ParseFailure& e) {
      *out = make_result({dk::dsl::parse_error_certificate(e.what(), e.line(), e.column(), e.expected())});
    }
    return ok();
  });
}

void dk_result_free(dk_result* result) { delete result; }

dk_verdict dk_result_verdict(const dk_result* result) {
  if (!result) return DK_VERDICT_ERROR;
  return static_cast<dk_verdict>(dk::dsl::overall(result->certs));
}

size_t dk_result_count(const dk_result* result) { return result ? result->certs.size() : 0; }

dk_verdict dk_result_verdict_at(const dk_result* result, size_t index) {
  if (!result || index >= result->certs.size()) return DK_VERDICT_ERROR;
  return static_cast<dk_verdict>(result->certs[index].verdict);
}

const char* dk_result_json(const dk_result* result) { return result ? result->json.c_str() : ""; }
const char* dk_result_text(const dk_result* result) { return result ? result->text.c_str() : ""; }

dk_status dk_format(const char* source, char** out) {
  if (!source || !out) return set_error(DK_STATUS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string s = dk::dsl::format(dk::dsl::parse(source));
    *out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(*out, s.c_str(), s.size() + 1);
    return ok();
  });
}

void dk_string_free(char* s) { std::free(s); }

}  // extern "C"
