#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>

#include "sparsehalf/interval.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

enum class ExprOp { Var, Const, Add, Sub, Mul, Div, Neg, Sqr, ClampNonneg };

/// Immutable expression tree over at most two variables.
class Expr {
 public:
  struct Node {
    ExprOp op;
    std::size_t var = 0;
    Rational value;     // Const
    Interval enclosure; // Const, outward
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };

  Expr() = default;
  static Expr var(std::size_t index);
  static Expr constant(const Rational& q);
  static Expr constant(std::int64_t v) { return constant(Rational(v)); }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr sqr(const Expr& a);
  friend Expr clamp_nonneg(const Expr& a);

  const Node* root() const { return root_.get(); }
  explicit operator bool() const { return root_ != nullptr; }
  std::string str() const;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : root_(std::move(n)) {}
  static Expr binary(ExprOp op, const Expr& a, const Expr& b);
  static Expr unary(ExprOp op, const Expr& a);
  std::shared_ptr<const Node> root_;
};

inline Expr operator+(const Expr& a, std::int64_t b) { return a + Expr::constant(b); }
inline Expr operator+(std::int64_t a, const Expr& b) { return Expr::constant(a) + b; }
inline Expr operator-(const Expr& a, std::int64_t b) { return a - Expr::constant(b); }
inline Expr operator-(std::int64_t a, const Expr& b) { return Expr::constant(a) - b; }
inline Expr operator*(std::int64_t a, const Expr& b) { return Expr::constant(a) * b; }
inline Expr operator/(const Expr& a, std::int64_t b) { return a / Expr::constant(b); }
inline Expr operator/(std::int64_t a, const Expr& b) { return Expr::constant(a) / b; }

/// Value together with enclosures of the partial derivatives.
struct IntervalGradient {
  Interval value;
  std::array<Interval, 2> grad{};
};

/// Natural interval extension over the box.
Interval eval_interval(const Expr& e, std::span<const Interval> box);

/// Natural extension of f and its gradient over the box.
IntervalGradient eval_gradient(const Expr& e, std::span<const Interval> box);

/// Plain binary64 evaluation (no enclosure guarantee).
double eval_double(const Expr& e, std::span<const double> point);

/// Natural extension intersected with the mean-value form
/// f(mid) + sum_i g_i (box_i - mid_i).
Interval enclose(const Expr& e, std::span<const Interval> box);

}  // namespace sparsehalf
