#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace qsm {

/// Real-to-half-complex 3D FFT over an x-fastest grid, backed by FFTW.
///
/// The half spectrum keeps nx/2 + 1 bins along x; spectrum index is
/// kx + (nx/2 + 1) * (ky + ny * kz). Plans are built once at construction;
/// forward/inverse allocate their own work buffers so one instance may be
/// shared between threads.
class RealFft3 {
 public:
  explicit RealFft3(std::array<std::size_t, 3> dims);
  ~RealFft3();
  RealFft3(const RealFft3&) = delete;
  RealFft3& operator=(const RealFft3&) = delete;

  std::size_t size() const { return dims_[0] * dims_[1] * dims_[2]; }
  std::size_t spectrum_size() const { return (dims_[0] / 2 + 1) * dims_[1] * dims_[2]; }
  const std::array<std::size_t, 3>& dims() const { return dims_; }

  void forward(std::span<const double> in, std::span<std::complex<double>> out) const;
  /// Unnormalised FFTW inverse divided by N, so inverse(forward(x)) == x.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out) const;

 private:
  struct Plans;
  std::array<std::size_t, 3> dims_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace qsm
