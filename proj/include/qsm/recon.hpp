#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsm/dipole.hpp"
#include "qsm/gamp.hpp"
#include "qsm/wavelet3d.hpp"

namespace qsm {

enum class MaskPolicy { final_only, during_optimization };
std::string to_string(MaskPolicy p);
MaskPolicy parse_mask_policy(const std::string& s);

struct ReconConfig {
  WaveletBasis basis = WaveletBasis::db1;
  std::size_t levels = 0;  // 0 = default_levels(dims)
  double alpha = 0.01;
  double beta = 0.1;
  int outer_max = 20;
  int inner_max = 50;
  double zeta = 1e-3;
  MaskPolicy mask_policy = MaskPolicy::final_only;
  bool weight_normalization = true;

  double inner_tol = 1e-4;
  int ls_iterations = 30;

  void validate() const;
  nlohmann::json to_json() const;
  /// Every field above the blank line is required; a missing one raises
  /// InvalidInput naming it.
  static ReconConfig from_json(const nlohmann::json& j);
};

ReconConfig read_recon_config(const std::filesystem::path& path);

struct StageReport {
  std::string name;
  std::vector<double> rel_changes;  // one per outer iteration
  std::vector<int> inner_iterations;
  bool converged = false;
  double lambda = 0.0;
  NoiseParams noise;
  std::vector<double> chi_init;  // expansion point of the first outer iteration
  std::vector<double> chi;       // unmasked stage output
  std::vector<std::vector<GampTraceEntry>> traces;

  nlohmann::json to_json() const;
};

struct ReconReport {
  std::string method;
  std::vector<double> chi;  // returned volume (masked per policy)
  std::vector<double> ls_chi;
  std::vector<StageReport> stages;
  std::optional<std::array<double, 2>> xi_two_step;
  double wall_time_s = 0.0;
  bool diverged = false;
  std::string diagnostic;

  nlohmann::json to_json() const;
};

/// Weighted-LS CG solution at chi = 0 with Tikhonov weight 1e-3 ||J||_F^2 / N.
std::vector<double> ls_init(const EchoSet& echoes, std::shared_ptr<const KSpaceDipole> kernel, int iterations = 30);

/// Fraction of |residual| within 3 sqrt(tau0) and its complement, both clamped.
std::array<double, 2> estimate_gm_weights(std::span<const double> residual, double tau0);

/// Two-stage reconstruction: AWGN stage, two-step weights, frozen GM stage.
/// `mask` may be empty (no masking).
ReconReport reconstruct_amp_pe(const EchoSet& echoes, const ReconConfig& config, std::span<const double> mask = {});
/// AWGN stage only.
ReconReport reconstruct_amp_awgn(const EchoSet& echoes, const ReconConfig& config, std::span<const double> mask = {});
/// Same as amp-pe but the mixture weights are re-estimated every iteration.
ReconReport reconstruct_amp_free_weights(const EchoSet& echoes, const ReconConfig& config,
                                         std::span<const double> mask = {});

/// Per-voxel weighted LS field (ppm) from echo phases: sum W^2 s phi / sum W^2 s^2.
std::vector<double> field_from_echoes(const EchoSet& echoes);

inline constexpr double kDefaultTkdThreshold = 0.15;

/// Truncated k-space division; delta must lie in (0, 2/3].
std::vector<double> tkd_baseline(std::span<const double> field_ppm, const KSpaceDipole& kernel,
                                 double delta = kDefaultTkdThreshold);

}  // namespace qsm
