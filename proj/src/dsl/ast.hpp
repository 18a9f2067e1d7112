#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/poly.hpp"

namespace dk::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Name, Neg, Add, Sub, Mul, Div, Pow, Wedge, Call, Set };
  Kind kind;
  Rational value;  // Number
  std::string name;  // Name, Call
  std::vector<ExprPtr> args;  // operands, call arguments, set members
  bool semicolons = false;  // Call arguments were separated by ';'
  int line = 0, col = 0;
};

struct Clause {
  std::string keyword;
  std::vector<ExprPtr> values;  // empty for flags
};

struct Stmt {
  enum class Kind { Chart, Assign, Frame, Command };
  Kind kind;
  std::vector<std::string> vars;  // Chart
  std::string name;               // Assign/Frame target, Command name
  std::string mode;               // modify lower|upper
  ExprPtr expr;                   // Assign/Frame value
  std::vector<ExprPtr> args;      // Command arguments
  std::vector<Clause> clauses;
  int line = 0, col = 0;
};

struct Job {
  std::vector<Stmt> stmts;
  std::size_t command_count() const {
    std::size_t n = 0;
    for (const auto& s : stmts) n += s.kind == Stmt::Kind::Command;
    return n;
  }
};

}  // namespace dk::dsl
