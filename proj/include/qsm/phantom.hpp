#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsm/grid.hpp"

namespace qsm {

enum class ShapeRole {
  brain,       // contributes to the mask
  structure,   // tissue inside the brain
  background,  // sources outside the brain (residual background fields)
};

struct Ellipsoid {
  std::array<double, 3> center_mm{};
  std::array<double, 3> semi_axes_mm{};
  double chi_ppm = 0.0;
  ShapeRole role = ShapeRole::structure;

  double volume_mm3() const;
};

/// Voxel (x, y, z) sits at (x, y, z) * voxel_size_mm. Shapes are painted in
/// order, later ones overwriting earlier ones.
struct PhantomSpec {
  Grid grid;
  std::vector<Ellipsoid> shapes;
};

struct Phantom {
  Grid grid;
  std::vector<double> chi;   // ppm
  std::vector<double> mask;  // union of brain shapes, {0, 1}
};

/// Throws InvalidInput when a shape's bounding box leaves the grid.
Phantom make_phantom(const PhantomSpec& spec);

/// "healthy", "hemorrhage" (adds a 1.6 ppm sphere) or "calcification" (adds a -2.0 ppm sphere).
PhantomSpec preset_phantom(const std::string& name, const Grid& grid);

/// {"dims", "voxel_size_mm", "b0_dir", "preset"?, "shapes"?: [{center_mm, semi_axes_mm, chi_ppm, role}]}
PhantomSpec parse_phantom_spec(const nlohmann::json& j);
PhantomSpec read_phantom_spec(const std::filesystem::path& path);

std::string to_string(ShapeRole r);
ShapeRole parse_shape_role(const std::string& s);

}  // namespace qsm
