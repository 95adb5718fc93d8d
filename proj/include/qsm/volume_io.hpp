#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsm/grid.hpp"

namespace qsm {

enum class DType { real32, complex64 };
enum class FieldKind { susceptibility_ppm, field_ppm, phase_rad, magnitude, mask };

std::string to_string(DType t);
std::string to_string(FieldKind k);
DType parse_dtype(const std::string& s);
FieldKind parse_field_kind(const std::string& s);

struct VolumeHeader {
  Grid grid;
  DType dtype = DType::real32;
  FieldKind field_kind = FieldKind::susceptibility_ppm;

  /// Scalars per voxel (2 for complex64).
  std::size_t components() const { return dtype == DType::complex64 ? 2 : 1; }
};

/// On-disk container. Payload values are held at storage precision so that a
/// write/read cycle is exact; numerical code works on double copies.
struct Volume {
  VolumeHeader header;
  std::vector<float> data;  // x-fastest, complex64 interleaved (re, im)

  const Grid& grid() const { return header.grid; }

  /// Checks payload length and the mask {0,1} rule.
  void validate() const;

  std::vector<double> real_values() const;
};

Volume make_real_volume(const Grid& grid, FieldKind kind, std::span<const double> values);

/// `path` may be the stem ("chi.qvol") or either file of the pair.
Volume read_qvol(const std::filesystem::path& path);
void write_qvol(const Volume& v, const std::filesystem::path& path);

std::filesystem::path qvol_header_path(const std::filesystem::path& path);
std::filesystem::path qvol_payload_path(const std::filesystem::path& path);

enum class Axis { x, y, z };
Axis parse_axis(const std::string& s);

struct SliceImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major
};

/// Default display window for susceptibility maps, ppm.
inline constexpr std::pair<double, double> kDefaultChiWindow{-0.1, 0.2};

/// Linear map of [lo, hi] to [0, 255], clamped, rounded half-up.
SliceImage render_slice(const Volume& v, Axis axis, std::size_t index, std::pair<double, double> window);

/// Renders and writes an 8-bit grayscale PNG.
void export_slice(const Volume& v, Axis axis, std::size_t index, std::pair<double, double> window,
                  const std::filesystem::path& png_path);

}  // namespace qsm
