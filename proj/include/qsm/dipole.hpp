#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

#include "qsm/fft.hpp"
#include "qsm/grid.hpp"
#include "qsm/linear_operator.hpp"

namespace qsm {

/// Proton gyromagnetic ratio, Hz/T.
inline constexpr double kProtonGamma = 42.577478e6;

using ComplexImage = std::vector<std::complex<double>>;
/// One complex image per echo.
using EchoMeasurements = std::vector<ComplexImage>;

/// Frequency-domain dipole kernel D(k) = 1/3 - (k.b0)^2 / |k|^2, D(0) = 0.
///
/// `values` covers the full unshifted FFT grid (x-fastest). Convolution runs
/// through a real FFT with the kernel symmetrised over k -> -k, which equals
/// the real part of the full complex convolution.
class KSpaceDipole {
 public:
  explicit KSpaceDipole(const Grid& grid);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }

  /// real(IFFT(D * FFT(chi))).
  void convolve(std::span<const double> chi, std::span<double> out) const;

 private:
  Grid grid_;
  std::vector<double> values_;
  std::vector<double> half_;  // symmetrised, over the r2c half spectrum
  std::shared_ptr<const RealFft3> fft_;
};

KSpaceDipole dipole_kernel(const Grid& grid);

/// Tissue field in ppm for a susceptibility map in ppm.
std::vector<double> field_from_chi(std::span<const double> chi, const KSpaceDipole& kernel);

struct EchoProtocol {
  double b0_tesla = 3.0;
  double gamma_hz_per_t = kProtonGamma;
  std::vector<double> echo_times_s;

  std::size_t echoes() const { return echo_times_s.size(); }
  /// Throws InvalidInput unless b0 > 0 and echo times are positive and strictly increasing.
  void validate() const;
};

/// Radians of phase per ppm of field at echo `e`: 2 pi gamma t_e B0 1e-6.
double phase_scale(const EchoProtocol& protocol, std::size_t echo);

/// Multi-echo local-field input: unwrapped or wrapped phases plus magnitude weights.
struct EchoSet {
  Grid grid;
  EchoProtocol protocol;
  std::vector<std::vector<double>> phases;   // rad, per echo
  std::vector<std::vector<double>> weights;  // magnitude W_e, per echo

  void validate() const;
  /// W_e exp(i phi_e).
  EchoMeasurements measurements() const;
  /// Copy with every weight divided by the global max weight.
  EchoSet normalized() const;
  /// Phases from the argument and weights from the modulus of complex echoes.
  static EchoSet from_measurements(const Grid& grid, const EchoProtocol& protocol, const EchoMeasurements& data);
};

/// Directory layout: protocol.json, echo<e>_phase.qvol.{json,raw}, echo<e>_mag.qvol.{json,raw}.
EchoSet read_echo_set(const std::filesystem::path& dir);
void write_echo_set(const EchoSet& echoes, const std::filesystem::path& dir);

EchoProtocol read_protocol(const std::filesystem::path& json_path);
void write_protocol(const EchoProtocol& protocol, const std::filesystem::path& json_path);

/// W_e exp(i A_e chi) for every echo, noise free.
EchoMeasurements forward_measurements(std::span<const double> chi, const EchoProtocol& protocol,
                                      const std::vector<std::vector<double>>& weights,
                                      const KSpaceDipole& kernel);

/// g(chi_r) = W_e exp(i A_e chi_r) (i A_e chi_r - 1).
EchoMeasurements g_offset(std::span<const double> chi_r, const EchoProtocol& protocol,
                          const std::vector<std::vector<double>>& weights, const KSpaceDipole& kernel);

/// First-order expansion of the multi-echo phasor model about chi_r.
///
/// Maps chi (ppm) to realified i W_e exp(i A_e chi_r) A_e chi. Output layout
/// is [echo 0 real | echo 0 imag | echo 1 real | ...], each block N long.
/// The Frobenius norm is a Hutchinson estimate, or the closed form when
/// `hutchinson_probes` is 0.
class LinearizedModel final : public LinearOperator {
 public:
  LinearizedModel(std::span<const double> chi_r, const EchoSet& echoes, std::shared_ptr<const KSpaceDipole> kernel,
                  int hutchinson_probes = 8, std::uint64_t seed = 0x5eed);

  std::size_t rows() const override { return 2 * scales_.size() * n_; }
  std::size_t cols() const override { return n_; }
  void apply(std::span<const double> chi, std::span<double> out) const override;
  void adjoint(std::span<const double> w, std::span<double> out) const override;
  double frob_norm_sq() const override { return frob_sq_; }

  using LinearOperator::adjoint;
  using LinearOperator::apply;

  /// Realified W_e exp(i phi_e) + g(chi_r).
  const std::vector<double>& rhs() const { return rhs_; }
  /// Realified W_e exp(i phi_e).
  const std::vector<double>& measured() const { return measured_; }
  /// Realified W_e exp(i phi_e) - W_e exp(i A_e chi_r): the model misfit at chi_r.
  std::vector<double> residual_at_expansion() const;
  double frob_norm_sq_estimate() const { return frob_sq_; }
  /// Closed form for the circulant dipole: sum_e scale_e^2 sum_n W_en^2 mean(D^2).
  double frob_norm_sq_exact() const;

 private:
  std::size_t n_;
  std::shared_ptr<const KSpaceDipole> kernel_;
  std::vector<double> scales_;
  std::vector<std::vector<double>> coef_re_, coef_im_;  // i W_e exp(i A_e chi_r)
  std::vector<double> rhs_;
  std::vector<double> at_expansion_;  // realified W_e exp(i A_e chi_r)
  std::vector<double> measured_;      // realified W_e exp(i phi_e)
  double frob_sq_ = 0.0;
};

LinearizedModel linearize(std::span<const double> chi_r, const EchoSet& echoes,
                          std::shared_ptr<const KSpaceDipole> kernel);

/// Stacks complex echoes into [re | im] blocks per echo.
std::vector<double> realify(const EchoMeasurements& m);
EchoMeasurements complexify(std::span<const double> v, std::size_t echoes, std::size_t n);

struct NoiseSpec {
  double sigma = 0.0;
  double outlier_frac = 0.0;
  double outlier_sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Adds i.i.d. Gaussian noise to every real and imaginary component. A
/// Bernoulli(outlier_frac) subset draws with outlier_sigma instead of sigma.
/// `outlier_flags`, when given, receives one flag per realified component.
EchoMeasurements add_noise(const EchoMeasurements& m, const NoiseSpec& noise,
                           std::vector<std::uint8_t>* outlier_flags = nullptr);

/// Moments and histogram of the entries of A_e = scale_e F* D F.
struct OperatorEntryStats {
  std::size_t unknowns = 0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  /// max over rows of |row mean| / ||row||_2.
  double max_rel_row_mean = 0.0;
  double jarque_bera = 0.0;
  double jarque_bera_p = 1.0;
  std::size_t normality_sample = 0;
  std::vector<double> bin_edges;  // bins + 1
  std::vector<std::size_t> bin_counts;
};

inline constexpr std::size_t kMaxDensifyUnknowns = 12 * 12 * 12;

/// Densifies the echo-`echo` operator; refuses grids above kMaxDensifyUnknowns.
OperatorEntryStats operator_entry_stats(const Grid& grid, const EchoProtocol& protocol, std::size_t echo = 0,
                                        std::size_t bins = 64, std::size_t normality_sample = 1000);

}  // namespace qsm
