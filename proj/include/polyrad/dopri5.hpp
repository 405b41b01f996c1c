#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace polyrad {

/// Right-hand side: f(r, y, dydr) with y and dydr of the system dimension.
using OdeRhs = std::function<void(double, const double*, double*)>;

struct Dopri5Options {
  double rtol = 1e-9;
  double atol = 1e-9;
  double h_initial = 0;          ///< 0 picks a conservative default
  double h_max = 0;              ///< 0 = unlimited
  bool adaptive = true;          ///< false: fixed steps of h_initial
  double underflow_factor = 1e-13;  ///< step underflow guard, h < factor * max(|r|, 1e-8)
  std::size_t max_rejects_per_step = 60;
};

/// Embedded Dormand-Prince 5(4) stepper with PI step-size control and a
/// quartic dense-output interpolant on the last accepted step. The caller
/// drives it step by step, which keeps event location (bisection on the
/// dense output) in the caller's hands.
class Dopri5 {
 public:
  enum class Status { ok, step_underflow };

  Dopri5(int dim, OdeRhs rhs, Dopri5Options opts = {});

  void start(double r0, const std::vector<double>& y0);

  /// Advances one accepted step, never stepping past r_limit.
  /// After an ok return, the dense interpolant covers [prev_r(), r()].
  Status advance(double r_limit);

  double r() const { return r_; }
  double prev_r() const { return r_prev_; }
  const std::vector<double>& y() const { return y_; }
  const std::vector<double>& y_prev() const { return y_prev_; }

  /// Dense-output value of component comp at radius rq in [prev_r(), r()].
  double dense(int comp, double rq) const;

  /// f(r, y) component at the current state (FSAL stage, no extra eval).
  double derivative(int comp) const { return k_[6][static_cast<std::size_t>(comp)]; }

  std::size_t rhs_evaluations() const { return n_evals_; }
  std::size_t accepted_steps() const { return n_accepted_; }
  std::size_t rejected_steps() const { return n_rejected_; }

 private:
  double error_norm(const std::vector<double>& y_new, const std::vector<double>& err) const;

  int dim_;
  OdeRhs rhs_;
  Dopri5Options opts_;

  double r_ = 0, r_prev_ = 0, h_ = 0, h_last_ = 0;
  double fac_old_ = 1e-4;
  bool last_rejected_ = false;
  bool started_ = false;

  std::vector<double> y_, y_prev_, y_stage_, err_;
  std::vector<double> k_[7];
  std::vector<double> rcont_[5];  // dense-output coefficients for the last step

  std::size_t n_evals_ = 0, n_accepted_ = 0, n_rejected_ = 0;
};

}  // namespace polyrad
