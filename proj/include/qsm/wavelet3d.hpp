#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qsm/linear_operator.hpp"

namespace qsm {

enum class WaveletBasis { db1, db2, db4, db6 };

std::string to_string(WaveletBasis b);
WaveletBasis parse_basis(const std::string& s);

/// Orthonormal Daubechies scaling (low-pass reconstruction) filter.
std::span<const double> scaling_filter(WaveletBasis b);
/// Quadrature mirror: g[j] = (-1)^j h[L-1-j].
std::vector<double> wavelet_filter(WaveletBasis b);

/// min(3, floor(log2(min dim)) - 2), at least 1.
std::size_t default_levels(const std::array<std::size_t, 3>& dims);

/// Single-level periodic analysis of one line: first half approximation,
/// second half detail. `in.size()` must be even.
void dwt_line_forward(std::span<const double> in, std::span<double> out, WaveletBasis basis);
void dwt_line_inverse(std::span<const double> in, std::span<double> out, WaveletBasis basis);

/// Multi-level 3D coefficients in the usual in-place (Mallat) layout: after
/// each level the low-pass octant occupies the leading half of every axis.
struct WaveletCoeffs {
  WaveletBasis basis = WaveletBasis::db1;
  std::size_t levels = 1;
  std::array<std::size_t, 3> dims{1, 1, 1};
  std::vector<double> data;

  /// Subband `band` (bit 0: x high-pass, bit 1: y, bit 2: z) at `level`
  /// (1 = finest). The all-low band 0 exists only at the coarsest level.
  std::vector<double> band(std::size_t level, unsigned band) const;
  void validate() const;
};

/// Throws InvalidInput when a dim is not divisible by 2^levels.
WaveletCoeffs analyze(std::span<const double> volume, const std::array<std::size_t, 3>& dims, WaveletBasis basis,
                      std::size_t levels);
std::vector<double> synthesize(const WaveletCoeffs& c);

/// Coefficient vector -> volume. Orthonormal, so ||S||_F^2 = N and S^T = analysis.
class WaveletSynthesis final : public LinearOperator {
 public:
  WaveletSynthesis(const std::array<std::size_t, 3>& dims, WaveletBasis basis, std::size_t levels);

  std::size_t rows() const override { return n_; }
  std::size_t cols() const override { return n_; }
  void apply(std::span<const double> coeffs, std::span<double> volume) const override;
  void adjoint(std::span<const double> volume, std::span<double> coeffs) const override;
  double frob_norm_sq() const override { return static_cast<double>(n_); }

  using LinearOperator::adjoint;
  using LinearOperator::apply;

  WaveletBasis basis() const { return basis_; }
  std::size_t levels() const { return levels_; }

 private:
  std::array<std::size_t, 3> dims_;
  WaveletBasis basis_;
  std::size_t levels_;
  std::size_t n_;
};

}  // namespace qsm
