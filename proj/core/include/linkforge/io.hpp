#pragma once

// Linkage document ingestion and report serialization.
//
// Documents are JSON:
//   {
//     "joints": [
//       {"kind": "R", "axis": {"p": [x,y,z], "q": [x,y,z]}},
//       {"kind": "P", "direction": [x,y,z]},
//       {"kind": "C", "axis": {...}},
//       {"kind": "H", "axis": {...}, "pitch": g},
//       ...
//     ],
//     "curve":  {"param": "u", "joints": [{"t0": [...], "t1": [...]} | {"s_num": [...], "s_den": [...]} | null, ...]},
//     "carve":  {"A": [[...]], "g": [...], "c_indices": [...], "k0_angle_rows": [[...]], "k0_translation_rows": [[...]]},
//     "name":   "<gallery name>", "params": {...}
//   }
// A document with "name" is expanded from the gallery; explicit fields win
// over nothing (they are ignored except "carve").
// Axes are renormalized onto the line conditions on load; adjustments above
// tolerance are reported, not rejected.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linkforge/bonds.hpp"
#include "linkforge/classify.hpp"
#include "linkforge/construct.hpp"

namespace linkforge::io {

using ordered_json = nlohmann::ordered_json;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bonds request without usable curve data (missing block or joints other
// than R/P).
struct CurveDocError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CarveSpec {
  Eigen::MatrixXi A;
  std::vector<double> pitches;
  std::vector<int> c_indices;  // defaults to all C-joints in order
  std::vector<std::vector<double>> k0_angle_rows;
  std::vector<std::vector<double>> k0_translation_rows;
};

struct LinkageDoc {
  Linkage linkage;
  std::optional<ConfigCurve> curve;
  std::optional<CarveSpec> carve;
  std::optional<std::string> gallery_name;
  std::map<std::string, double> gallery_params;
  std::vector<std::string> warnings;
};

LinkageDoc parse_linkage_doc(const std::string& text);
LinkageDoc load_linkage_doc(const std::string& path);

ordered_json linkage_to_json(const Linkage& L);
ordered_json curve_to_json(const ConfigCurve& c);
ordered_json carve_spec_to_json(const CarveSpec& spec);
ordered_json doc_to_json(const LinkageDoc& doc);

ordered_json mobility_to_json(const TangentReport& rep);
ordered_json label_to_json(const ClassLabel& label);
ordered_json diagram_to_json(const BondDiagram& d);

// 17 significant digits, used for CSV/SVG emission.
std::string format_double(double v);

std::string dump(const ordered_json& j);
void write_file(const std::string& path, const std::string& content);

}  // namespace linkforge::io
