#include "polyrad/dopri5.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyrad {

namespace {

// Dormand-Prince 5(4) tableau (Hairer-Norsett-Wanner, DOPRI5).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;

constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;

// Difference between the 5th-order weights and the embedded 4th-order ones.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

// Dense-output coefficients.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

// PI controller constants (Lund stabilization).
constexpr double pi_beta = 0.04;
constexpr double pi_expo = 0.2 - pi_beta * 0.75;
constexpr double safety = 0.9;
constexpr double fac_min = 0.2, fac_max = 10.0;

}  // namespace

Dopri5::Dopri5(int dim, OdeRhs rhs, Dopri5Options opts)
    : dim_(dim), rhs_(std::move(rhs)), opts_(opts) {
  if (dim < 1) throw std::invalid_argument("Dopri5: dimension must be >= 1");
  const auto d = static_cast<std::size_t>(dim);
  y_.resize(d);
  y_prev_.resize(d);
  y_stage_.resize(d);
  err_.resize(d);
  for (auto& k : k_) k.resize(d);
  for (auto& rc : rcont_) rc.resize(d);
}

void Dopri5::start(double r0, const std::vector<double>& y0) {
  if (y0.size() != static_cast<std::size_t>(dim_)) throw std::invalid_argument("Dopri5: bad state size");
  for (double v : y0)
    if (!std::isfinite(v)) throw std::invalid_argument("Dopri5: non-finite initial state");
  r_ = r_prev_ = r0;
  y_ = y_prev_ = y0;
  h_ = opts_.h_initial > 0 ? opts_.h_initial : 1e-6 * std::max(std::abs(r0), 1.0);
  if (opts_.h_max > 0) h_ = std::min(h_, opts_.h_max);
  rhs_(r_, y_.data(), k_[6].data());  // primes the FSAL stage
  ++n_evals_;
  fac_old_ = 1e-4;
  last_rejected_ = false;
  started_ = true;
}

double Dopri5::error_norm(const std::vector<double>& y_new, const std::vector<double>& err) const {
  double acc = 0;
  for (int i = 0; i < dim_; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const double sc = opts_.atol + opts_.rtol * std::max(std::abs(y_prev_[u]), std::abs(y_new[u]));
    const double q = err[u] / sc;
    acc += q * q;
  }
  return std::sqrt(acc / dim_);
}

Dopri5::Status Dopri5::advance(double r_limit) {
  if (!started_) throw std::logic_error("Dopri5: advance before start");
  const auto d = static_cast<std::size_t>(dim_);

  // FSAL: k1 is k7 of the last accepted step. It belongs to (r_, y_), which
  // does not move on a rejection, so it is fixed before the retry loop --
  // the trial evaluations below overwrite k_[6].
  k_[0] = k_[6];

  std::size_t rejects = 0;
  for (;;) {
    double h = h_;
    if (opts_.h_max > 0) h = std::min(h, opts_.h_max);
    if (r_ + h > r_limit) h = r_limit - r_;
    const double h_floor = opts_.underflow_factor * std::max(std::abs(r_), 1e-8);
    if (!(h > h_floor) || r_ + h == r_) {
      k_[6] = k_[0];  // keep derivative() consistent with (r_, y_)
      return Status::step_underflow;
    }

    auto stage = [&](double c, std::initializer_list<std::pair<int, double>> terms, int out) {
      for (std::size_t i = 0; i < d; ++i) {
        double acc = 0;
        for (const auto& [ki, aij] : terms) acc += aij * k_[static_cast<std::size_t>(ki)][i];
        y_stage_[i] = y_[i] + h * acc;
      }
      rhs_(r_ + c * h, y_stage_.data(), k_[static_cast<std::size_t>(out)].data());
      ++n_evals_;
    };

    stage(c2, {{0, a21}}, 1);
    stage(c3, {{0, a31}, {1, a32}}, 2);
    stage(c4, {{0, a41}, {1, a42}, {2, a43}}, 3);
    stage(c5, {{0, a51}, {1, a52}, {2, a53}, {3, a54}}, 4);
    stage(1.0, {{0, a61}, {1, a62}, {2, a63}, {3, a64}, {4, a65}}, 5);

    // 5th-order solution, then the FSAL evaluation at it.
    std::vector<double>& y_new = y_stage_;
    for (std::size_t i = 0; i < d; ++i)
      y_new[i] = y_[i] + h * (b1 * k_[0][i] + b3 * k_[2][i] + b4 * k_[3][i] + b5 * k_[4][i] +
                              b6 * k_[5][i]);
    rhs_(r_ + h, y_new.data(), k_[6].data());
    ++n_evals_;

    for (std::size_t i = 0; i < d; ++i)
      err_[i] = h * (e1 * k_[0][i] + e3 * k_[2][i] + e4 * k_[3][i] + e5 * k_[4][i] +
                     e6 * k_[5][i] + e7 * k_[6][i]);

    double err = opts_.adaptive ? error_norm(y_new, err_) : 0.0;
    if (!std::isfinite(err)) err = 1e10;

    if (err <= 1.0) {
      // Accept: record dense-output coefficients, then shift the state.
      for (std::size_t i = 0; i < d; ++i) {
        const double ydiff = y_new[i] - y_[i];
        const double bspl = h * k_[0][i] - ydiff;
        rcont_[0][i] = y_[i];
        rcont_[1][i] = ydiff;
        rcont_[2][i] = bspl;
        rcont_[3][i] = ydiff - h * k_[6][i] - bspl;
        rcont_[4][i] = h * (d1 * k_[0][i] + d3 * k_[2][i] + d4 * k_[3][i] + d5 * k_[4][i] +
                            d6 * k_[5][i] + d7 * k_[6][i]);
      }
      r_prev_ = r_;
      y_prev_ = y_;
      r_ = r_ + h;
      std::swap(y_, y_stage_);
      h_last_ = h;
      ++n_accepted_;

      if (opts_.adaptive) {
        const double fac11 = std::pow(std::max(err, 1e-32), pi_expo);
        double fac = fac11 / std::pow(fac_old_, pi_beta);
        fac = std::clamp(fac / safety, 1.0 / fac_max, 1.0 / fac_min);
        double h_new = h / fac;
        if (last_rejected_) h_new = std::min(h_new, h);
        fac_old_ = std::max(err, 1e-4);
        h_ = h_new;
      } else {
        h_ = opts_.h_initial;
      }
      last_rejected_ = false;
      return Status::ok;
    }

    // Reject and shrink.
    ++n_rejected_;
    last_rejected_ = true;
    const double fac11 = std::pow(err, pi_expo);
    h_ = h / std::min(1.0 / fac_min, fac11 / safety);
    if (++rejects > opts_.max_rejects_per_step) {
      k_[6] = k_[0];
      return Status::step_underflow;
    }
  }
}

double Dopri5::dense(int comp, double rq) const {
  const auto i = static_cast<std::size_t>(comp);
  if (h_last_ == 0) return y_[i];
  const double theta = (rq - r_prev_) / h_last_;
  const double theta1 = 1.0 - theta;
  return rcont_[0][i] +
         theta * (rcont_[1][i] +
                  theta1 * (rcont_[2][i] + theta * (rcont_[3][i] + theta1 * rcont_[4][i])));
}

}  // namespace polyrad
