#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"
#include "dsl/ast.hpp"

namespace dk::dsl {

class ParseFailure : public Error {
 public:
  ParseFailure(int line, int col, std::string message, std::vector<std::string> expected = {});
  int line() const { return line_; }
  int column() const { return col_; }
  const std::string& detail() const { return detail_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_, col_;
  std::string detail_;
  std::vector<std::string> expected_;
};

/// Parses and resolves names. Throws ParseFailure.
Job parse(std::string_view source);

/// Parses a single expression (no name checks).
ExprPtr parse_expression(std::string_view source);

/// Canonical source text; parse(format(job)) reproduces the job.
std::string format(const Job& job);
std::string format_expr(const Expr& e);
std::string format_stmt(const Stmt& s);

const std::vector<std::string>& command_names();
const std::vector<std::string>& frame_kinds();

}  // namespace dk::dsl
