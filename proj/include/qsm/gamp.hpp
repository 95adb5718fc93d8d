#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qsm/linear_operator.hpp"

namespace qsm {

// ---------------------------------------------------------------------------
// Parameters

/// Laplace prior rate on the coefficients, p(v) = lambda/2 exp(-lambda |v|).
struct LaplaceChannelParams {
  double lambda = 1.0;
};

/// Single zero-mean Gaussian noise component.
struct AwgnParams {
  double tau0 = 1.0;
};

/// Two zero-mean Gaussian components; tau[0] <= tau[1], xi sums to one.
struct GmNoiseParams {
  std::array<double, 2> xi{0.95, 0.05};
  std::array<double, 2> tau{1.0, 100.0};
  bool weights_frozen = true;

  void validate() const;
};

using NoiseParams = std::variant<AwgnParams, GmNoiseParams>;

// ---------------------------------------------------------------------------
// Scalar channels

struct Estimate {
  double mean;
  double var;
};

/// Elementwise soft threshold at lambda * tau_r. Returns the scalar variance
/// tau_r * (surviving fraction), floored at 1e-12 * tau_r.
double laplace_denoise(std::span<const double> r, double tau_r, double lambda, std::span<double> vhat);

/// Laplace rate maximising the likelihood of `vhat`: N / (sum |v| + 1e-12).
/// Returns nullopt when every entry is zero (caller keeps its previous value).
std::optional<double> estimate_lambda(std::span<const double> vhat);

/// Posterior of z ~ N(p, tau_p) given y = z + N(0, tau0).
Estimate awgn_output(double p, double tau_p, double y, double tau0);

/// Per-component pieces of the two-Gaussian output posterior.
struct Gm2Posterior {
  std::array<double, 2> resp;  // normalised responsibilities
  std::array<double, 2> mean;
  std::array<double, 2> var;
  Estimate total;
};

/// Posterior of z ~ N(p, tau_p) given y = z + u, u ~ sum_s xi_s N(0, tau_s).
Gm2Posterior gm2_posterior(double p, double tau_p, double y, const GmNoiseParams& params);
inline Estimate gm2_output(double p, double tau_p, double y, const GmNoiseParams& params) {
  return gm2_posterior(p, tau_p, y, params).total;
}

/// mean((y - zhat)^2 + tau_z), floored at 1e-12.
double estimate_tau_awgn(std::span<const double> y, std::span<const double> zhat, std::span<const double> tau_z);

struct TauGmEstimate {
  std::array<double, 2> tau;
  /// Component whose total responsibility fell below 1e-8 * M and was left unchanged.
  std::array<bool, 2> starved{false, false};
  std::array<double, 2> xi;  // responsibility averages, used when weights are free
};

/// Responsibility-weighted variance update for both components; re-sorts so tau[0] <= tau[1].
TauGmEstimate estimate_tau_gm(std::span<const double> y, std::span<const double> p, double tau_p,
                              const GmNoiseParams& params);

/// old + rate * (new - old); rate must lie in (0, 1].
double damp(double old_value, double new_value, double rate);
void damp(std::span<double> old_values, std::span<const double> new_values, double rate);

inline constexpr double kMixtureWeightFloor = 1e-4;

// ---------------------------------------------------------------------------
// Solver

struct GampConfig {
  double alpha = 0.01;  // damping on the coefficient estimate
  double beta = 0.1;    // damping on the estimated parameters
  int max_iter = 50;
  double tol = 1e-4;
  bool estimate_lambda = true;
  bool estimate_noise = true;
  double divergence_factor = 1e3;
  /// Optional projection applied to the damped coefficient estimate each iteration.
  std::function<void(std::vector<double>&)> project;
};

struct GampState {
  std::vector<double> vhat;
  double tau_v = 1.0;
  std::vector<double> shat;  // output-side dual, empty = zeros
  LaplaceChannelParams prior;
  NoiseParams noise = AwgnParams{};
};

struct GampTraceEntry {
  int iter = 0;
  double residual_norm = 0.0;
  double tau_v = 0.0;
  double lambda = 0.0;
  NoiseParams noise;
  double rel_change = 0.0;
};

nlohmann::json to_json(const GampTraceEntry& e);
nlohmann::json to_json(const NoiseParams& n);

struct GampResult {
  GampState state;
  std::vector<GampTraceEntry> trace;
  int iterations = 0;
  bool converged = false;
  bool diverged = false;
  std::string diagnostic;
};

/// Scalar-variance GAMP with MAP Laplace input, AWGN or two-Gaussian output,
/// damping and per-iteration parameter re-estimation.
GampResult gamp_solve(const LinearOperator& B, std::span<const double> y, GampState init, const GampConfig& config);

}  // namespace qsm
