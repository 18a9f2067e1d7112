#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "core/poisson.hpp"
#include "dsl/ast.hpp"
#include "dsl/evaluator.hpp"

namespace dk::dsl {

enum class Verdict { Ok = 0, Negative = 1, Error = 2 };

struct RunOptions {
  SampleGrid grid;
  bool strict = false;  // heuristic certificates become negative
  Limits limits;
};

struct Certificate {
  Verdict verdict;
  nlohmann::ordered_json json;
};

std::vector<Certificate> run(const Job& job, const RunOptions& options);

/// Certificate for a source that did not parse.
Certificate parse_error_certificate(const std::string& message, int line, int column,
                                    const std::vector<std::string>& expected);

Verdict overall(const std::vector<Certificate>& certs);
/// One object for a single certificate, an array otherwise; two-space indent.
std::string render_json(const std::vector<Certificate>& certs);
std::string render_text(const std::vector<Certificate>& certs);

std::string verdict_name(Verdict v);

}  // namespace dk::dsl
