#include "dsl/evaluator.hpp"

#include <algorithm>

#include "core/calculus.hpp"

namespace dk::dsl {

std::string value_to_string(const Value& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

namespace {

[[noreturn]] void type_error(const Expr& e, const std::string& msg) {
  fail(ErrorCode::DegreeMismatch, msg + " (line " + std::to_string(e.line) + ", column " + std::to_string(e.col) + ")");
}

const char* kind_name(const Value& v) {
  switch (v.index()) {
    case 0: return "polynomial";
    case 1: return "multivector";
    case 2: return "coordinate form";
    default: return "frame form";
  }
}

template <class X>
X scale(const X& x, const Poly& p) {
  return x.scaled(p);
}

}  // namespace

Value Evaluator::eval(const Expr& e, const AnchorFrame* ctx) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Poly::constant(chart_, e.value);
    case Expr::Kind::Name: {
      if (auto idx = chart_.index_of(e.name)) return Poly::variable(chart_, *idx);
      if (auto it = values_.find(e.name); it != values_.end()) return eval(*it->second, ctx);
      const std::string rest = e.name.substr(1);
      if (e.name[0] == 'D') {
        if (auto idx = chart_.index_of(rest)) return Multivector::basis(chart_, {static_cast<int>(*idx)}, Poly::constant(chart_, 1));
      }
      if (e.name[0] == 'd') {
        if (auto idx = chart_.index_of(rest)) {
          if (!ctx) return PolyForm::basis(chart_, {static_cast<int>(*idx)}, Poly::constant(chart_, 1));
          CoframeForm w(chart_, 1);
          for (std::size_t j = 0; j < ctx->rank(); ++j) w.add({static_cast<int>(j)}, ctx->anchor()[*idx][j]);
          return w;
        }
      }
      if (e.name[0] == 'e' && e.name.size() > 1 && std::all_of(rest.begin(), rest.end(), ::isdigit)) {
        if (!ctx) fail(ErrorCode::BadParams, "'" + e.name + "' needs a frame context");
        std::size_t k = std::stoul(rest);
        if (k < 1 || k > ctx->rank()) fail(ErrorCode::BadParams, "'" + e.name + "' exceeds the frame rank");
        return CoframeForm::basis(chart_, {static_cast<int>(k - 1)}, Poly::constant(chart_, 1));
      }
      fail(ErrorCode::UnknownVariable, "unknown name '" + e.name + "'");
    }
    case Expr::Kind::Neg:
      return std::visit([](const auto& x) -> Value { return -x; }, eval(*e.args[0], ctx));
    case Expr::Kind::Call:
    case Expr::Kind::Set:
      type_error(e, "not a value");
    default:
      return binary(e, ctx);
  }
}

Value Evaluator::binary(const Expr& e, const AnchorFrame* ctx) {
  Value a = eval(*e.args[0], ctx);
  if (e.kind == Expr::Kind::Pow) {
    const Poly* base = std::get_if<Poly>(&a);
    if (!base) type_error(e, "only polynomials can be raised to a power");
    Rational k = e.args[1]->value;
    if (k < 0 || k.get_den() != 1) type_error(e, "exponent must be a nonnegative integer");
    if (k > limits_.max_degree || (base->total_degree() > 0 && k * base->total_degree() > limits_.max_degree))
      fail(ErrorCode::LimitExceeded, "power exceeds the degree limit " + std::to_string(limits_.max_degree));
    return base->pow(static_cast<unsigned>(k.get_num().get_ui()));
  }
  Value b = eval(*e.args[1], ctx);
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      if (a.index() != b.index()) {
        bool a0 = std::visit([](const auto& x) { return x.is_zero(); }, a);
        bool b0 = std::visit([](const auto& x) { return x.is_zero(); }, b);
        if (b0) return a;
        if (a0) return e.kind == Expr::Kind::Add ? b : std::visit([](const auto& x) -> Value { return -x; }, b);
        type_error(e, std::string("cannot add a ") + kind_name(a) + " and a " + kind_name(b));
      }
      return std::visit(
          [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, Poly>) {
              return e.kind == Expr::Kind::Add ? x + y : x - y;
            } else {
              if (x.degree() != y.degree() && !x.is_zero() && !y.is_zero())
                type_error(e, "cannot add elements of degree " + std::to_string(x.degree()) + " and " +
                                  std::to_string(y.degree()));
              return e.kind == Expr::Kind::Add ? x + y : x - y;
            }
          },
          a);
    }
    case Expr::Kind::Mul:
    case Expr::Kind::Wedge: {
      if (auto* p = std::get_if<Poly>(&a)) {
        return std::visit([&](const auto& y) -> Value {
          using T = std::decay_t<decltype(y)>;
          if constexpr (std::is_same_v<T, Poly>) return *p * y;
          else return scale(y, *p);
        }, b);
      }
      if (auto* p = std::get_if<Poly>(&b)) {
        return std::visit([&](const auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Poly>) return x * *p;
          else return scale(x, *p);
        }, a);
      }
      if (e.kind == Expr::Kind::Mul) type_error(e, "use ^^ to multiply graded elements");
      if (a.index() != b.index()) type_error(e, std::string("cannot wedge a ") + kind_name(a) + " and a " + kind_name(b));
      return std::visit(
          [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Poly>) return x;
            else return wedge(x, std::get<T>(b));
          },
          a);
    }
    case Expr::Kind::Div: {
      const Poly* d = std::get_if<Poly>(&b);
      if (!d) type_error(e, "can only divide by a polynomial");
      if (d->is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
      auto div = [&](const Poly& c) {
        if (d->is_constant()) return c * (1 / d->constant_term());
        auto q = exact_divide(c, *d);
        if (!q) fail(ErrorCode::NotDivisible, c.to_string() + " is not divisible by " + d->to_string());
        return *q;
      };
      return std::visit([&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Poly>) return div(x);
        else return x.map_coefficients(div);
      }, a);
    }
    default:
      type_error(e, "unsupported operation");
  }
}

void Evaluator::check_limits(const Value& v) const {
  auto check = [&](const Poly& p) {
    if (p.total_degree() > limits_.max_degree)
      fail(ErrorCode::LimitExceeded, "degree " + std::to_string(p.total_degree()) + " exceeds the limit " +
                                         std::to_string(limits_.max_degree));
  };
  std::visit([&](const auto& x) {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Poly>) check(x);
    else for (const auto& [i, c] : x.components()) check(c);
  }, v);
}

Poly Evaluator::eval_poly(const Expr& e) {
  Value v = eval(e);
  check_limits(v);
  if (auto* p = std::get_if<Poly>(&v)) return *p;
  type_error(e, std::string("expected a polynomial, got a ") + kind_name(v));
}

Multivector Evaluator::eval_multivector(const Expr& e, int degree) {
  Value v = eval(e);
  check_limits(v);
  Multivector m(chart_, std::max(degree, 0));
  if (auto* p = std::get_if<Poly>(&v)) {
    if (!p->is_zero()) {
      if (degree > 0) type_error(e, "expected a multivector of degree " + std::to_string(degree) + ", got a polynomial");
      m = Multivector::scalar(*p);
    }
  } else if (auto* mv = std::get_if<Multivector>(&v)) {
    m = *mv;
  } else {
    type_error(e, std::string("expected a multivector, got a ") + kind_name(v));
  }
  if (degree >= 0 && m.degree() != degree && !m.is_zero())
    type_error(e, "expected a multivector of degree " + std::to_string(degree) + ", got degree " + std::to_string(m.degree()));
  if (m.is_zero() && degree >= 0) return Multivector(chart_, degree);
  return m;
}

CoframeForm Evaluator::eval_coframe(const Expr& e, const AnchorFrame& frame) {
  Value v = eval(e, &frame);
  check_limits(v);
  if (auto* p = std::get_if<Poly>(&v)) return CoframeForm::scalar(*p);
  if (auto* w = std::get_if<CoframeForm>(&v)) return *w;
  type_error(e, std::string("expected a form, got a ") + kind_name(v));
}

std::size_t Evaluator::eval_variable(const Expr& e) {
  if (e.kind != Expr::Kind::Name) type_error(e, "expected a chart variable");
  return chart_.require_index(e.name);
}

long Evaluator::eval_integer(const Expr& e) {
  if (e.kind != Expr::Kind::Number || e.value.get_den() != 1) type_error(e, "expected an integer");
  if (e.value > limits_.max_degree) fail(ErrorCode::LimitExceeded, "integer parameter exceeds the degree limit");
  return e.value.get_num().get_si();
}

AnchorFrame Evaluator::eval_frame(const Expr& e) {
  if (e.kind == Expr::Kind::Name) {
    auto it = frames_.find(e.name);
    if (it != frames_.end()) return it->second;
    auto def = frame_exprs_.find(e.name);
    if (def == frame_exprs_.end()) fail(ErrorCode::UnknownVariable, "unknown frame '" + e.name + "'");
    AnchorFrame f = eval_frame(*def->second);
    frames_.emplace(e.name, f);
    return f;
  }
  if (e.kind != Expr::Kind::Call) type_error(e, "expected a frame");
  const std::string& k = e.name;
  auto indices = [&](const Expr& set) {
    std::vector<std::size_t> out;
    for (const auto& m : set.args) {
      long i = eval_integer(*m);
      if (i < 1) fail(ErrorCode::BadParams, "generator indices start at 1");
      out.push_back(static_cast<std::size_t>(i - 1));
    }
    return out;
  };
  if (k == "lower" || k == "upper") {
    AnchorFrame base = eval_frame(*e.args[0]);
    DivisorIdeal ideal = DivisorIdeal::make(eval_poly(*e.args[2]));
    return k == "lower" ? lower_modify(base, indices(*e.args[1]), ideal) : upper_modify(base, indices(*e.args[1]), ideal);
  }
  if (k == "fiber") return fiber_product(eval_frame(*e.args[0]), eval_frame(*e.args[1]));
  CatalogSpec spec{k, {}, 0, {}};
  if (k == "custom") {
    for (const auto& a : e.args) spec.custom.push_back(eval_multivector(*a, 1));
    return AnchorFrame::make(chart_, spec.custom, FrameLabel{"custom", {}, 0, "custom"});
  }
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (k == "bk" && i == 1) spec.k = static_cast<int>(eval_integer(*e.args[1]));
    else spec.vars.push_back(eval_variable(*e.args[i]));
  }
  return catalog(chart_, spec);
}

}  // namespace dk::dsl
