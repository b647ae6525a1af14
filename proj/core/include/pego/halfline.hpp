#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "pego/types.hpp"

namespace pego {

/// Closed-form or sampled model of f : R+ -> C, zero-extended to t < 0.
/// Value type; copies share immutable nodes.
class HalfLineFunction {
 public:
  struct Exponential {
    double a;  // e^{-a t}, a > 0
  };
  struct Indicator {
    double a, b;  // 1_(a,b), 0 <= a < b
  };
  struct PolyBump {
    double delta;      // support (0, delta)
    double amplitude;  // g(s) = amplitude * (s (delta - s))^2 on (0, delta)
  };
  struct Sampled {
    TimeGrid grid;
    std::vector<Complex> values;  // at the grid midpoints
  };
  struct Translate {
    std::shared_ptr<const HalfLineFunction> base;
    double s;  // T_{-s} f (t) = f(t - s), s >= 0
  };
  struct Modulate {
    std::shared_ptr<const HalfLineFunction> base;
    double omega;  // e^{i omega t} f(t)
  };
  struct Scale {
    std::shared_ptr<const HalfLineFunction> base;
    Complex c;
  };
  struct Damp {
    std::shared_ptr<const HalfLineFunction> base;
    double rate;  // f(t) e^{-rate t}; image of the order-x weighting
  };
  struct Sum {
    std::vector<HalfLineFunction> terms;
  };

  using Node = std::variant<Exponential, Indicator, PolyBump, Sampled, Translate, Modulate, Scale, Damp, Sum>;

  static HalfLineFunction exponential(double a);
  static HalfLineFunction indicator(double a, double b);
  static HalfLineFunction poly_bump(double delta);                    // amplitude 30/delta^5 (unit analytic mass)
  static HalfLineFunction poly_bump(double delta, double amplitude);
  static HalfLineFunction sampled(TimeGrid grid, std::vector<Complex> values);
  static HalfLineFunction translate(HalfLineFunction base, double s);
  static HalfLineFunction modulate(HalfLineFunction base, double omega);
  static HalfLineFunction scale(HalfLineFunction base, Complex c);
  static HalfLineFunction damp(HalfLineFunction base, double rate);
  static HalfLineFunction sum(std::vector<HalfLineFunction> terms);
  static HalfLineFunction zero();  // scale(exponential(1), 0)

  /// Evaluate at t; exactly 0 for every t < 0.
  Complex operator()(double t) const;

  const Node& node() const { return *node_; }

  /// Support hull [lo, hi]; hi may be +infinity for decaying kinds.
  struct Support {
    double lo, hi;
  };
  Support support() const;

  /// Largest |omega| applied by modulate combinators (0 if none); feeds the
  /// aliasing term of the quadrature error model.
  double max_modulation() const;

  /// Upper bound on the spectral tail mass  int_{|y|>Y} |L{f}(x+iy)|^2 dy
  /// from per-kind decay constants. +infinity when no closed form applies
  /// (sampled kinds, or modulation shifted past Y).
  double spectral_tail_mass_bound(Order order, double y_cut) const;

 private:
  explicit HalfLineFunction(Node node) : node_(std::make_shared<Node>(std::move(node))) {}
  std::shared_ptr<const Node> node_;
};

/// Finite family sharing one order and one grid.
struct PegoFamily {
  std::vector<HalfLineFunction> members;
  Order order;
  TimeGrid grid;
  Label label = Label::Unknown;

  PegoFamily(std::vector<HalfLineFunction> members_, Order order_, TimeGrid grid_, Label label_ = Label::Unknown)
      : members(std::move(members_)), order(order_), grid(grid_), label(label_) {
    if (members.empty()) throw_error(ErrorCode::Config, "family must have at least one member");
  }
};

/// f  |->  f_x = f(t) e^{-x t}.
HalfLineFunction weight(const HalfLineFunction& f, Order order);

/// Weighted samples w_j = f(t_j) e^{-x t_j}; throws Evaluation naming the
/// node on any non-finite value.
std::vector<Complex> sample_weighted(const HalfLineFunction& f, Order order, const TimeGrid& grid);

/// Midpoint-rule  int_0^{t_max} e^{-2xt} |f|^2 dt.
double weighted_l2_norm_sq(const HalfLineFunction& f, Order order, const TimeGrid& grid);

struct PegoNorms {
  double l1;  // int |f_x|
  double l2;  // (int |f_x|^2)^{1/2}
};

/// Truncated L1/L2 norms of f_x; both finite means f is accepted as a
/// Laplace-Pego function of this order at this grid resolution.
PegoNorms verify_pego(const HalfLineFunction& f, Order order, const TimeGrid& grid);

/// Documented bound for the midpoint + truncation error of
/// weighted_l2_norm_sq on closed-form kinds (conservative for combinators).
double norm_sq_error_bound(const HalfLineFunction& f, Order order, const TimeGrid& grid);

}  // namespace pego
