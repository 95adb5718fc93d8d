#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsm {

/// Raised for malformed inputs: bad geometry, mismatched dims, broken files.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sampling geometry shared by every volume of one acquisition.
///
/// Arrays are stored x-fastest: index = x + nx * (y + ny * z).
struct Grid {
  std::array<std::size_t, 3> dims{1, 1, 1};
  std::array<double, 3> voxel_size_mm{1.0, 1.0, 1.0};
  std::array<double, 3> b0_dir{0.0, 0.0, 1.0};

  std::size_t size() const { return dims[0] * dims[1] * dims[2]; }

  std::size_t index(std::size_t x, std::size_t y, std::size_t z) const {
    return x + dims[0] * (y + dims[1] * z);
  }

  bool same_shape(const Grid& other) const { return dims == other.dims; }

  /// Throws InvalidInput unless dims >= 1, voxel sizes > 0 and |b0_dir| = 1.
  void validate() const;
};

Grid make_grid(std::size_t nx, std::size_t ny, std::size_t nz,
               std::array<double, 3> voxel_size_mm = {1.0, 1.0, 1.0},
               std::array<double, 3> b0_dir = {0.0, 0.0, 1.0});

void require_same_shape(const Grid& a, const Grid& b, const std::string& what);

}  // namespace qsm
