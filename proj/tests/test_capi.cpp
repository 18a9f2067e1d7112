// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "dk/dk.h"

namespace {

struct Result {
  dk_result* r = nullptr;
  ~Result() { dk_result_free(r); }
};

nlohmann::json json_of(const dk_result* r) { return nlohmann::json::parse(dk_result_json(r)); }

}  // namespace

TEST_CASE("version and empty error state") {
  CHECK(std::string(dk_version()).size() > 0);
  CHECK(dk_last_error() != nullptr);
}

TEST_CASE("parse reports line and column") {
  dk_job* job = nullptr;
  CHECK(dk_job_parse("chart x,y;\np = x $ y", &job) == DK_STATUS_PARSE_ERROR);
  CHECK(job == nullptr);
  CHECK(dk_last_error_line() == 2);
  CHECK(dk_last_error_column() == 7);
  CHECK(std::string(dk_last_error()).find("line 2") != std::string::npos);

  CHECK(dk_job_parse("chart x,y; pi = x*Dx^^Dy; check_poisson pi; divisor pi", &job) == DK_STATUS_OK);
  CHECK(dk_job_command_count(job) == 2);
  CHECK(dk_last_error_line() == 0);
  dk_job_free(job);
}

TEST_CASE("run verdicts and certificates") {
  dk_job* job = nullptr;
  REQUIRE(dk_job_parse("chart x,y,z,w; check_poisson x*Dx^^Dy + Dz^^Dw + Dx^^Dw; lift x^2*Dx^^Dy to log(x)", &job) ==
          DK_STATUS_OK);
  Result res;
  REQUIRE(dk_job_run(job, nullptr, &res.r) == DK_STATUS_OK);
  dk_job_free(job);
  CHECK(dk_result_count(res.r) == 2);
  CHECK(dk_result_verdict_at(res.r, 0) == DK_VERDICT_NEGATIVE);
  CHECK(dk_result_verdict_at(res.r, 1) == DK_VERDICT_OK);
  CHECK(dk_result_verdict(res.r) == DK_VERDICT_NEGATIVE);
  auto j = json_of(res.r);
  REQUIRE(j.is_array());
  CHECK(j[0]["payload"]["jacobiator"] == "-2*Dx^^Dy^^Dw");
  CHECK(j[1]["payload"]["lifted"] == "x*e1^^e2");
  std::string text = dk_result_text(res.r);
  CHECK(text.find("check_poisson") != std::string::npos);
}

TEST_CASE("run_source turns parse failures into certificates") {
  Result res;
  REQUIRE(dk_run_source("chart x; lift", nullptr, &res.r) == DK_STATUS_OK);
  CHECK(dk_result_verdict(res.r) == DK_VERDICT_ERROR);
  auto j = json_of(res.r);
  CHECK(j["command"] == "parse");
  CHECK(j["payload"]["line"] == 1);
}

TEST_CASE("options") {
  dk_options* o = dk_options_new();
  CHECK(dk_options_set_grid(o, "1,2/3,-5") == DK_STATUS_OK);
  CHECK(dk_options_set_grid(o, "1,,2") == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_options_set_grid(o, "1,a") == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_options_set_max_degree(o, 0) == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_options_set_max_degree(o, 8) == DK_STATUS_OK);

  Result capped;
  REQUIRE(dk_run_source("chart x,y; divisor x^9*Dx^^Dy", o, &capped.r) == DK_STATUS_OK);
  CHECK(dk_result_verdict(capped.r) == DK_VERDICT_ERROR);
  CHECK(json_of(capped.r)["payload"]["error"] == "LimitExceeded");

  // a sampled certificate is heuristic, strict mode rejects it
  const char* sampled = "chart x,y,z; divisor x*z*Dx^^Dy + x*Dy^^Dz";
  Result lax;
  REQUIRE(dk_run_source(sampled, o, &lax.r) == DK_STATUS_OK);
  CHECK(dk_result_verdict(lax.r) == DK_VERDICT_OK);
  CHECK(dk_options_set_strict(o, 1) == DK_STATUS_OK);
  Result strict;
  REQUIRE(dk_run_source(sampled, o, &strict.r) == DK_STATUS_OK);
  CHECK(dk_result_verdict(strict.r) == DK_VERDICT_NEGATIVE);
  dk_options_free(o);

  // the line part vanishes at y = z = 1: a grid through 1 sees it, a coarse one does not
  const char* vanishing = "chart x,y,z; divisor x*(z - 1)*Dx^^Dy + x*(y - 1)*Dy^^Dz";
  dk_options* g = dk_options_new();
  REQUIRE(dk_options_set_grid(g, "2,3") == DK_STATUS_OK);
  Result miss;
  REQUIRE(dk_run_source(vanishing, g, &miss.r) == DK_STATUS_OK);
  CHECK(dk_result_verdict(miss.r) == DK_VERDICT_OK);
  REQUIRE(dk_options_set_grid(g, "2,1") == DK_STATUS_OK);
  Result hit;
  REQUIRE(dk_run_source(vanishing, g, &hit.r) == DK_STATUS_OK);
  CHECK(dk_result_verdict(hit.r) == DK_VERDICT_NEGATIVE);
  dk_options_free(g);
}

TEST_CASE("format is canonical and idempotent") {
  char* once = nullptr;
  REQUIRE(dk_format("chart x,y ;p=x *Dx^^ Dy;check_poisson   p", &once) == DK_STATUS_OK);
  char* twice = nullptr;
  REQUIRE(dk_format(once, &twice) == DK_STATUS_OK);
  CHECK(std::string(once) == std::string(twice));
  CHECK(std::string(once).find("x*Dx^^Dy") != std::string::npos);
  dk_string_free(once);
  dk_string_free(twice);
  char* bad = nullptr;
  CHECK(dk_format("chart x; p = (", &bad) == DK_STATUS_PARSE_ERROR);
  CHECK(bad == nullptr);
}

TEST_CASE("null arguments") {
  dk_job* job = nullptr;
  dk_result* res = nullptr;
  char* s = nullptr;
  CHECK(dk_job_parse(nullptr, &job) == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_job_parse("chart x;", nullptr) == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_job_run(nullptr, nullptr, &res) == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_run_source(nullptr, nullptr, &res) == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_format(nullptr, &s) == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_options_set_strict(nullptr, 1) == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_options_set_grid(nullptr, "1") == DK_STATUS_INVALID_ARGUMENT);
  CHECK(dk_result_count(nullptr) == 0);
  CHECK(dk_result_verdict(nullptr) == DK_VERDICT_ERROR);
  CHECK(dk_job_command_count(nullptr) == 0);
  CHECK(std::string(dk_last_error()).size() > 0);
  dk_job_free(nullptr);
  dk_result_free(nullptr);
  dk_options_free(nullptr);
  dk_string_free(nullptr);
}
