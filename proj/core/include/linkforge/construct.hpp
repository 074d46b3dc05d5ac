#pragma once

// Screw carving, cylindrical extension, the freezing families and the
// gallery of named constructions.

#include <functional>
#include <map>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "linkforge/bonds.hpp"
#include "linkforge/numerics.hpp"

namespace linkforge {

struct CylindricalExtension {
  Linkage linkage;
  std::vector<int> c_indices;    // joints that were helical
  std::vector<double> pitches;   // aligned with c_indices
};

// H -> C with the same axes; all other joints unchanged.
CylindricalExtension cylindrical_extension(const Linkage& L);

// Sampled chart of an algebraically constrained subset of the closure set,
// tracked from `base` along several seeded kernel directions. `dim` is the
// tangent dimension of the constrained system at the base point.
struct K0Chart {
  std::vector<CurveSample> paths;
  int dim = 0;
  uint64_t seed = 0;
};

K0Chart sample_k0(const Linkage& L, const Configuration& base,
                  const std::vector<std::vector<double>>& angle_rows,
                  const std::vector<std::vector<double>>& translation_rows, int n_paths = 4,
                  int steps = 8, double steplen = 0.05, uint64_t seed = 0);

struct AnnihilationError : std::runtime_error {
  int row;
  int path;
  int sample;
  double deviation;
  AnnihilationError(const std::string& what, int row_, int path_, int sample_, double dev)
      : std::runtime_error(what), row(row_), path(path_), sample(sample_), deviation(dev) {}
};

struct CarvingInput {
  Linkage linkage;               // contains C-joints at c_indices
  std::vector<int> c_indices;    // columns of A refer to these joints in order
  Eigen::MatrixXi A;             // integer relations between the angle functions
  std::vector<double> pitches;   // aligned with c_indices, all nonzero
  K0Chart chart;
  double check_tol = 1e-7;
};

struct CarvingResult {
  Linkage linkage;  // C-joints replaced by H-joints with the given pitches
  int bound;        // d - m + rank(A)
  int a_rank;
  int k0_dim;
};

// Verifies on the sampled chart that every row of A annihilates both the
// unwrapped angle vector and (s_k / g_k), then installs the H-joints and
// reports the mobility lower bound d - m + rank(A).
CarvingResult carve(const CarvingInput& in);

enum class FreezeKind { Rotations, Translations };

// Freeze the rotation (value = t, may be infinity for the initial position)
// or translation (value = s) parameters of the listed C-joints. Frozen
// translations produce R-joints, frozen rotations P-joints; downstream axes
// are moved by the partial motion at the frozen values.
Linkage freeze_family(const Linkage& L, FreezeKind which,
                      const std::vector<std::pair<int, double>>& values);

// Second factorization of the motion polynomial (a u + b + h2)(u + h1):
// returns lines (h3, h4) such that
// (u - h1)(a u + b - h2)(u - h3)(a u + b - h4) is a real polynomial times 1.
std::pair<Line, Line> bennett_completion(const Line& h1, const Line& h2, double a, double b);

struct CarveRecipe {
  Linkage cylindrical;
  std::vector<int> c_indices;
  Eigen::MatrixXi A;
  std::vector<double> pitches;
  // constraint rows (over all joints) that cut K0 out of the closure set
  std::vector<std::vector<double>> k0_angle_rows;
  std::vector<std::vector<double>> k0_translation_rows;
};

struct GalleryEntry {
  std::string name;
  Linkage linkage;
  std::optional<ConfigCurve> curve;     // where a rational parametrization is known
  std::optional<CarveRecipe> recipe;    // for entries obtained by screw carving
  std::map<std::string, double> params;
};

GalleryEntry gallery(const std::string& name, const std::map<std::string, double>& params = {});
std::vector<std::string> gallery_names();

// Helpers for gallery entries whose reference motions are not rational.
// p4h: the full configuration along the coupling a2 = a3 = a4 = a5 = psi.
Configuration p4h_configuration(const GalleryEntry& p4h, double psi);
// line_symmetric_6C: a configuration on the symmetric component, found by
// a seeded Newton solve of the symmetry conditions.
Configuration line_symmetric_6c_configuration(const GalleryEntry& entry, uint64_t seed);

// Builds the carving input for a gallery recipe by sampling K0.
CarvingInput carving_input_from_recipe(const CarveRecipe& recipe, int n_paths = 4, int steps = 8,
                                       double steplen = 0.05, uint64_t seed = 0);

}  // namespace linkforge
