#pragma once

#include <map>
#include <optional>
#include <variant>

#include "core/frame.hpp"
#include "dsl/ast.hpp"

namespace dk::dsl {

/// Coordinate forms with polynomial coefficients, as written in sources.
using PolyForm = Exterior<Poly, CoordFormTag>;
using Value = std::variant<Poly, Multivector, PolyForm, CoframeForm>;

std::string value_to_string(const Value& v);

struct Limits {
  int max_degree = 64;
};

/// Evaluates expressions against a chart and the definitions seen so far.
/// Inside a frame context, coordinate forms dx_i are rewritten in the
/// frame's coframe and e<k> tokens become available.
class Evaluator {
 public:
  Evaluator(Chart chart, Limits limits) : chart_(std::move(chart)), limits_(limits) {}

  const Chart& chart() const { return chart_; }
  void define_value(const std::string& name, ExprPtr e) { values_[name] = std::move(e); }
  void define_frame(const std::string& name, ExprPtr e) {
    frame_exprs_[name] = std::move(e);
    frames_.erase(name);
  }

  Value eval(const Expr& e, const AnchorFrame* ctx = nullptr);
  Poly eval_poly(const Expr& e);
  /// Degree-checked multivector (degree < 0 means any).
  Multivector eval_multivector(const Expr& e, int degree = -1);
  CoframeForm eval_coframe(const Expr& e, const AnchorFrame& frame);
  AnchorFrame eval_frame(const Expr& e);
  std::size_t eval_variable(const Expr& e);
  long eval_integer(const Expr& e);

  void check_limits(const Value& v) const;

 private:
  Value binary(const Expr& e, const AnchorFrame* ctx);

  Chart chart_;
  Limits limits_;
  std::map<std::string, ExprPtr> values_;
  std::map<std::string, ExprPtr> frame_exprs_;
  std::map<std::string, AnchorFrame> frames_;
};

}  // namespace dk::dsl
