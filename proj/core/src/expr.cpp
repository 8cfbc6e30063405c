#include "sparsehalf/expr.hpp"

#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

using Node = Expr::Node;

Interval interval_of(const Node* n, std::span<const Interval> box) {
  switch (n->op) {
    case ExprOp::Var: return box[n->var];
    case ExprOp::Const: return n->enclosure;
    case ExprOp::Add: return interval_of(n->a.get(), box) + interval_of(n->b.get(), box);
    case ExprOp::Sub: return interval_of(n->a.get(), box) - interval_of(n->b.get(), box);
    case ExprOp::Mul: return interval_of(n->a.get(), box) * interval_of(n->b.get(), box);
    case ExprOp::Div: return interval_of(n->a.get(), box) / interval_of(n->b.get(), box);
    case ExprOp::Neg: return -interval_of(n->a.get(), box);
    case ExprOp::Sqr: return sqr(interval_of(n->a.get(), box));
    case ExprOp::ClampNonneg: return clamp_nonneg(interval_of(n->a.get(), box));
  }
  return Interval::entire();
}

IntervalGradient gradient_of(const Node* n, std::span<const Interval> box) {
  IntervalGradient r;
  const Interval zero = Interval::point(0.0);
  r.grad = {zero, zero};
  switch (n->op) {
    case ExprOp::Var:
      r.value = box[n->var];
      r.grad[n->var] = Interval::point(1.0);
      return r;
    case ExprOp::Const:
      r.value = n->enclosure;
      return r;
    case ExprOp::Neg: {
      IntervalGradient a = gradient_of(n->a.get(), box);
      r.value = -a.value;
      for (int i = 0; i < 2; ++i) r.grad[i] = -a.grad[i];
      return r;
    }
    case ExprOp::Sqr: {
      IntervalGradient a = gradient_of(n->a.get(), box);
      r.value = sqr(a.value);
      const Interval twice = Interval::point(2.0) * a.value;
      for (int i = 0; i < 2; ++i) r.grad[i] = twice * a.grad[i];
      return r;
    }
    case ExprOp::ClampNonneg: {
      // max(u, 0) is Lipschitz; its derivative lies in hull(0, u') a.e.
      IntervalGradient a = gradient_of(n->a.get(), box);
      r.value = clamp_nonneg(a.value);
      for (int i = 0; i < 2; ++i) {
        if (a.value.lo >= 0.0)
          r.grad[i] = a.grad[i];
        else if (a.value.hi < 0.0)
          r.grad[i] = zero;
        else
          r.grad[i] = hull(a.grad[i], zero);
      }
      return r;
    }
    default: break;
  }
  IntervalGradient a = gradient_of(n->a.get(), box);
  IntervalGradient b = gradient_of(n->b.get(), box);
  switch (n->op) {
    case ExprOp::Add:
      r.value = a.value + b.value;
      for (int i = 0; i < 2; ++i) r.grad[i] = a.grad[i] + b.grad[i];
      break;
    case ExprOp::Sub:
      r.value = a.value - b.value;
      for (int i = 0; i < 2; ++i) r.grad[i] = a.grad[i] - b.grad[i];
      break;
    case ExprOp::Mul:
      r.value = a.value * b.value;
      for (int i = 0; i < 2; ++i) r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
      break;
    case ExprOp::Div:
      r.value = a.value / b.value;
      for (int i = 0; i < 2; ++i) r.grad[i] = (a.grad[i] - r.value * b.grad[i]) / b.value;
      break;
    default: break;
  }
  return r;
}

double double_of(const Node* n, std::span<const double> p) {
  switch (n->op) {
    case ExprOp::Var: return p[n->var];
    case ExprOp::Const: return n->value.convert_to<double>();
    case ExprOp::Add: return double_of(n->a.get(), p) + double_of(n->b.get(), p);
    case ExprOp::Sub: return double_of(n->a.get(), p) - double_of(n->b.get(), p);
    case ExprOp::Mul: return double_of(n->a.get(), p) * double_of(n->b.get(), p);
    case ExprOp::Div: return double_of(n->a.get(), p) / double_of(n->b.get(), p);
    case ExprOp::Neg: return -double_of(n->a.get(), p);
    case ExprOp::Sqr: {
      const double v = double_of(n->a.get(), p);
      return v * v;
    }
    case ExprOp::ClampNonneg: {
      const double v = double_of(n->a.get(), p);
      return v < 0.0 ? 0.0 : v;
    }
  }
  return 0.0;
}

std::string str_of(const Node* n) {
  switch (n->op) {
    case ExprOp::Var: return "v" + std::to_string(n->var);
    case ExprOp::Const: return to_string(n->value);
    case ExprOp::Add: return "(" + str_of(n->a.get()) + " + " + str_of(n->b.get()) + ")";
    case ExprOp::Sub: return "(" + str_of(n->a.get()) + " - " + str_of(n->b.get()) + ")";
    case ExprOp::Mul: return "(" + str_of(n->a.get()) + " * " + str_of(n->b.get()) + ")";
    case ExprOp::Div: return "(" + str_of(n->a.get()) + " / " + str_of(n->b.get()) + ")";
    case ExprOp::Neg: return "-" + str_of(n->a.get());
    case ExprOp::Sqr: return "sqr(" + str_of(n->a.get()) + ")";
    case ExprOp::ClampNonneg: return "clamp0(" + str_of(n->a.get()) + ")";
  }
  return "?";
}

const Node* require(const Expr& e) {
  if (!e) throw PreconditionError("empty expression");
  return e.root();
}

}  // namespace

Expr Expr::var(std::size_t index) {
  if (index > 1) throw PreconditionError("expressions support two variables");
  auto n = std::make_shared<Node>();
  n->op = ExprOp::Var;
  n->var = index;
  return Expr(std::move(n));
}

Expr Expr::constant(const Rational& q) {
  auto n = std::make_shared<Node>();
  n->op = ExprOp::Const;
  n->value = q;
  n->enclosure = Interval::enclose(q);
  return Expr(std::move(n));
}

Expr Expr::binary(ExprOp op, const Expr& a, const Expr& b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = a.root_;
  n->b = b.root_;
  return Expr(std::move(n));
}

Expr Expr::unary(ExprOp op, const Expr& a) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = a.root_;
  return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(ExprOp::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(ExprOp::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(ExprOp::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(ExprOp::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(ExprOp::Neg, a); }
Expr sqr(const Expr& a) { return Expr::unary(ExprOp::Sqr, a); }
Expr clamp_nonneg(const Expr& a) { return Expr::unary(ExprOp::ClampNonneg, a); }

std::string Expr::str() const { return root_ ? str_of(root_.get()) : std::string(); }

Interval eval_interval(const Expr& e, std::span<const Interval> box) { return interval_of(require(e), box); }

IntervalGradient eval_gradient(const Expr& e, std::span<const Interval> box) {
  return gradient_of(require(e), box);
}

double eval_double(const Expr& e, std::span<const double> point) { return double_of(require(e), point); }

Interval enclose(const Expr& e, std::span<const Interval> box) {
  const IntervalGradient full = eval_gradient(e, box);
  std::array<Interval, 2> mid{};
  for (std::size_t i = 0; i < box.size(); ++i) mid[i] = Interval::point(box[i].mid());
  Interval mv = eval_interval(e, std::span<const Interval>(mid.data(), box.size()));
  for (std::size_t i = 0; i < box.size(); ++i) mv = mv + full.grad[i] * (box[i] - mid[i]);
  if (mv.is_entire() || full.value.is_entire()) return full.value;
  return intersect(full.value, mv);
}

}  // namespace sparsehalf
