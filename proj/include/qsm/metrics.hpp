#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace qsm {

using Dims3 = std::array<std::size_t, 3>;

/// 100 * ||(x_hat - x) * mask|| / ||x * mask||. Empty mask = every voxel.
double nrmse(std::span<const double> x_hat, std::span<const double> x, std::span<const double> mask = {});

struct Roi {
  std::string name;
  std::vector<double> mask;
};

/// Per-ROI NRMSE; with `detrend`, x_hat is first shifted so its ROI mean
/// matches the truth's ("mean-detrend").
std::map<std::string, double> roi_nrmse(std::span<const double> x_hat, std::span<const double> x,
                                        const std::vector<Roi>& rois, bool detrend);

/// Normalised 1D Gaussian taps, `size` odd.
std::vector<double> gaussian_taps(double sigma, std::size_t size);

/// Dense Laplacian-of-Gaussian kernel (size^3, x-fastest), zero-sum.
std::vector<double> log_kernel(double sigma = 1.5, std::size_t size = 15);

/// Local SSIM averaged over `mask`; Gaussian window sigma 1.5 truncated to
/// 11^3, edges replicated. `dynamic_range` defaults to the 1st-99th
/// percentile spread of the truth inside the mask.
double ssim3d(std::span<const double> x_hat, std::span<const double> x, const Dims3& dims,
              std::span<const double> mask = {}, std::optional<double> dynamic_range = std::nullopt);

/// LoG-filtered NRMSE (15^3, sigma 1.5, edges replicated) over `mask`.
double hfen(std::span<const double> x_hat, std::span<const double> x, const Dims3& dims,
            std::span<const double> mask = {});

/// LoG response of a volume (separable evaluation).
std::vector<double> log_filter(std::span<const double> v, const Dims3& dims, double sigma = 1.5,
                               std::size_t size = 15);

struct MetricReport {
  double nrmse_percent = 0.0;
  std::map<std::string, double> roi_nrmse_percent;
  double ssim = 0.0;
  double hfen_percent = 0.0;

  nlohmann::json to_json() const;
  /// One-row table: NRMSE, detrend NRMSE per ROI, SSIM, HFEN.
  std::string table_row(const std::string& method) const;
  static std::string table_header(const std::vector<std::string>& roi_names);
};

MetricReport evaluate(std::span<const double> x_hat, std::span<const double> x, const Dims3& dims,
                      std::span<const double> mask, const std::vector<Roi>& rois);

/// Published reference scores on the challenge simulation, kept for
/// documentation and table output only (not reproducible from this repository).
struct ReferenceRow {
  const char* method;
  double nrmse, tissue, blood, dgm, ssim, hfen;
};
inline constexpr ReferenceRow kPublishedSim2Snr1[] = {
    {"L1-QSM", 31.97, 34.18, 65.77, 18.37, 0.769, 32.00},
    {"MEDI", 35.13, 33.35, 81.75, 20.60, 0.775, 25.28},
    {"AMP-PE (db1)", 31.34, 34.02, 65.99, 18.94, 0.802, 30.92},
    {"AMP-PE (db2)", 32.43, 35.88, 67.20, 20.42, 0.790, 32.87},
};

}  // namespace qsm
