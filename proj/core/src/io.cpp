#include "linkforge/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace linkforge::io {

namespace {

using nlohmann::json;

Vec3 vec3_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
    throw SchemaError(what + ": expected an array of three numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Poly poly_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw SchemaError(what + ": expected a coefficient array");
  Poly p;
  for (const auto& c : j) {
    if (!c.is_number()) throw SchemaError(what + ": coefficients must be numbers");
    p.push_back(c.get<double>());
  }
  return p;
}

Line axis_from(const json& j, const std::string& what, std::vector<std::string>& warnings) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q"))
    throw SchemaError(what + ": expected {\"p\": [...], \"q\": [...]}");
  Line ln(vec3_from(j["p"], what + ".p"), vec3_from(j["q"], what + ".q"));
  if (ln.dir.norm() == 0.0) throw SchemaError(what + ": zero direction");
  double adjusted = ln.renormalize();
  if (adjusted > 1e-9)
    warnings.push_back(what + ": axis renormalized onto the line conditions (adjustment " +
                       std::to_string(adjusted) + ")");
  return ln;
}

Linkage joints_from(const json& j, std::vector<std::string>& warnings) {
  if (!j.is_array() || j.empty()) throw SchemaError("joints: expected a non-empty array");
  Linkage L;
  int idx = 0;
  for (const auto& je : j) {
    std::string where = "joints[" + std::to_string(idx) + "]";
    if (!je.is_object() || !je.contains("kind") || !je["kind"].is_string())
      throw SchemaError(where + ": expected an object with a \"kind\"");
    std::string kind = je["kind"].get<std::string>();
    if (kind == "R") {
      if (!je.contains("axis")) throw SchemaError(where + ": R-joint needs an axis");
      L.joints.push_back(Joint::revolute(axis_from(je["axis"], where + ".axis", warnings)));
    } else if (kind == "P") {
      if (!je.contains("direction")) throw SchemaError(where + ": P-joint needs a direction");
      Vec3 d = vec3_from(je["direction"], where + ".direction");
      if (d.norm() == 0.0) throw SchemaError(where + ": zero direction");
      if (std::abs(d.norm() - 1.0) > 1e-9)
        warnings.push_back(where + ": direction normalized to unit length");
      L.joints.push_back(Joint::prismatic(d));
    } else if (kind == "C") {
      if (!je.contains("axis")) throw SchemaError(where + ": C-joint needs an axis");
      L.joints.push_back(Joint::cylindrical(axis_from(je["axis"], where + ".axis", warnings)));
    } else if (kind == "H") {
      if (!je.contains("axis") || !je.contains("pitch"))
        throw SchemaError(where + ": H-joint needs an axis and a pitch");
      if (!je["pitch"].is_number() || je["pitch"].get<double>() == 0.0)
        throw SchemaError(where + ": pitch must be a nonzero number");
      L.joints.push_back(
          Joint::helical(axis_from(je["axis"], where + ".axis", warnings), je["pitch"].get<double>()));
    } else {
      throw SchemaError(where + ": unknown joint kind '" + kind + "'");
    }
    ++idx;
  }
  if (L.size() < 3) throw SchemaError("joints: a closed linkage needs at least three joints");
  return L;
}

ConfigCurve curve_from(const json& j, const Linkage& L) {
  if (!j.is_object() || !j.contains("joints") || !j["joints"].is_array())
    throw SchemaError("curve: expected {\"joints\": [...]}");
  if (static_cast<int>(j["joints"].size()) != L.size())
    throw SchemaError("curve: one entry per joint required");
  ConfigCurve cc;
  cc.linkage = L;
  int idx = 0;
  for (const auto& je : j["joints"]) {
    std::string where = "curve.joints[" + std::to_string(idx) + "]";
    JointKind kind = L.joints[idx].kind;
    if (kind == JointKind::Revolute) {
      if (!je.is_object() || !je.contains("t0") || !je.contains("t1"))
        throw SchemaError(where + ": R-joint curve needs t0 and t1");
      cc.joints.push_back({poly_from(je["t0"], where + ".t0"), poly_from(je["t1"], where + ".t1")});
    } else if (kind == JointKind::Prismatic) {
      if (!je.is_object() || !je.contains("s_num") || !je.contains("s_den"))
        throw SchemaError(where + ": P-joint curve needs s_num and s_den");
      cc.joints.push_back(
          {poly_from(je["s_num"], where + ".s_num"), poly_from(je["s_den"], where + ".s_den")});
    } else {
      throw CurveDocError(where + ": curves support R and P joints only");
    }
    ++idx;
  }
  return cc;
}

CarveSpec carve_from(const json& j, const Linkage& L) {
  if (!j.is_object() || !j.contains("A") || !j.contains("g"))
    throw SchemaError("carve: expected {\"A\": [[...]], \"g\": [...]}");
  CarveSpec spec;
  if (j.contains("c_indices")) {
    for (const auto& v : j["c_indices"]) spec.c_indices.push_back(v.get<int>());
  } else {
    for (int k = 0; k < L.size(); ++k)
      if (L.joints[k].kind == JointKind::Cylindrical) spec.c_indices.push_back(k);
  }
  int m = static_cast<int>(spec.c_indices.size());
  if (m == 0) throw SchemaError("carve: no C-joints");
  const auto& A = j["A"];
  if (!A.is_array() || A.empty()) throw SchemaError("carve: A must be a non-empty matrix");
  spec.A.resize(static_cast<int>(A.size()), m);
  for (int r = 0; r < spec.A.rows(); ++r) {
    if (!A[r].is_array() || static_cast<int>(A[r].size()) != m)
      throw SchemaError("carve: A rows must have one entry per C-joint");
    for (int c = 0; c < m; ++c) {
      if (!A[r][c].is_number_integer()) throw SchemaError("carve: A must have integer entries");
      spec.A(r, c) = A[r][c].get<int>();
    }
  }
  for (const auto& g : j["g"]) {
    if (!g.is_number() || g.get<double>() == 0.0)
      throw SchemaError("carve: pitches must be nonzero numbers");
    spec.pitches.push_back(g.get<double>());
  }
  if (static_cast<int>(spec.pitches.size()) != m)
    throw SchemaError("carve: one pitch per C-joint required");
  auto rows_from = [&](const char* key) {
    std::vector<std::vector<double>> rows;
    if (!j.contains(key)) return rows;
    for (const auto& row : j[key]) {
      if (!row.is_array() || static_cast<int>(row.size()) != L.size())
        throw SchemaError(std::string("carve.") + key + ": rows need one entry per joint");
      rows.push_back(row.get<std::vector<double>>());
    }
    return rows;
  };
  spec.k0_angle_rows = rows_from("k0_angle_rows");
  spec.k0_translation_rows = rows_from("k0_translation_rows");
  return spec;
}

}  // namespace

LinkageDoc parse_linkage_doc(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("document root must be an object");

  LinkageDoc doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("name: expected a string");
    doc.gallery_name = j["name"].get<std::string>();
    if (j.contains("params")) {
      if (!j["params"].is_object()) throw SchemaError("params: expected an object");
      for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
        if (!it.value().is_number()) throw SchemaError("params: values must be numbers");
        doc.gallery_params[it.key()] = it.value().get<double>();
      }
    }
    GalleryEntry e;
    try {
      e = gallery(*doc.gallery_name, doc.gallery_params);
    } catch (const std::invalid_argument& err) {
      throw SchemaError(err.what());
    }
    doc.linkage = e.linkage;
    doc.curve = e.curve;
    if (e.recipe) {
      CarveSpec spec;
      spec.A = e.recipe->A;
      spec.pitches = e.recipe->pitches;
      spec.c_indices = e.recipe->c_indices;
      spec.k0_angle_rows = e.recipe->k0_angle_rows;
      spec.k0_translation_rows = e.recipe->k0_translation_rows;
      doc.carve = spec;
    }
  } else {
    if (!j.contains("joints")) throw SchemaError("document needs \"joints\" or a gallery \"name\"");
    doc.linkage = joints_from(j["joints"], doc.warnings);
    if (j.contains("curve")) doc.curve = curve_from(j["curve"], doc.linkage);
  }
  if (j.contains("carve")) doc.carve = carve_from(j["carve"], doc.linkage);
  return doc;
}

LinkageDoc load_linkage_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_linkage_doc(ss.str());
}

ordered_json linkage_to_json(const Linkage& L) {
  ordered_json joints = ordered_json::array();
  for (const auto& j : L.joints) {
    ordered_json je;
    je["kind"] = std::string(1, joint_kind_char(j.kind));
    if (j.kind == JointKind::Prismatic) {
      je["direction"] = {j.direction.x(), j.direction.y(), j.direction.z()};
    } else {
      je["axis"] = {{"p", {j.axis.dir.x(), j.axis.dir.y(), j.axis.dir.z()}},
                    {"q", {j.axis.moment.x(), j.axis.moment.y(), j.axis.moment.z()}}};
      if (j.kind == JointKind::Helical) je["pitch"] = j.pitch;
    }
    joints.push_back(je);
  }
  ordered_json out;
  out["joints"] = joints;
  return out;
}

ordered_json curve_to_json(const ConfigCurve& c) {
  ordered_json joints = ordered_json::array();
  for (int k = 0; k < c.linkage.size(); ++k) {
    ordered_json je;
    if (c.linkage.joints[k].kind == JointKind::Revolute) {
      je["t0"] = c.joints[k].a;
      je["t1"] = c.joints[k].b;
    } else {
      je["s_num"] = c.joints[k].a;
      je["s_den"] = c.joints[k].b;
    }
    joints.push_back(je);
  }
  ordered_json out;
  out["param"] = "u";
  out["joints"] = joints;
  return out;
}

ordered_json carve_spec_to_json(const CarveSpec& spec) {
  ordered_json out;
  ordered_json A = ordered_json::array();
  for (int r = 0; r < spec.A.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < spec.A.cols(); ++c) row.push_back(spec.A(r, c));
    A.push_back(row);
  }
  out["A"] = A;
  out["g"] = spec.pitches;
  out["c_indices"] = spec.c_indices;
  if (!spec.k0_angle_rows.empty()) out["k0_angle_rows"] = spec.k0_angle_rows;
  if (!spec.k0_translation_rows.empty()) out["k0_translation_rows"] = spec.k0_translation_rows;
  return out;
}

ordered_json doc_to_json(const LinkageDoc& doc) {
  ordered_json out = linkage_to_json(doc.linkage);
  if (doc.curve) out["curve"] = curve_to_json(*doc.curve);
  if (doc.carve) out["carve"] = carve_spec_to_json(*doc.carve);
  return out;
}

ordered_json mobility_to_json(const TangentReport& rep) {
  ordered_json out;
  out["dof"] = rep.dof;
  out["rank"] = rep.rank;
  out["mobility"] = rep.mobility;
  std::vector<double> sv(rep.singular_values.data(),
                         rep.singular_values.data() + rep.singular_values.size());
  out["singular_values"] = sv;
  out["rank_tol"] = rep.rank_tol;
  out["rank_stable"] = rep.rank_stable;
  out["seed"] = rep.seed;
  out["refined"] = rep.refined;
  if (rep.refined) out["rank_at_input"] = rep.rank_at_input;
  out["warnings"] = rep.warnings;
  return out;
}

ordered_json label_to_json(const ClassLabel& label) {
  ordered_json out;
  out["label"] = to_string(label.kind);
  ordered_json w;
  if (!label.witness.parallel_pairs.empty()) {
    ordered_json pp = ordered_json::array();
    for (auto [a, b] : label.witness.parallel_pairs) pp.push_back({a, b});
    w["parallel_pairs"] = pp;
  }
  if (label.witness.common_point) {
    w["common_point"] = {label.witness.common_point->x(), label.witness.common_point->y(),
                         label.witness.common_point->z()};
    w["concurrency_rms"] = label.witness.concurrency_rms;
  }
  if (!label.witness.offsets.empty()) {
    w["offset_triples"] = label.witness.offset_triples;
    w["offsets"] = label.witness.offsets;
  }
  w["cyclic_shift"] = label.witness.cyclic_shift;
  if (!label.witness.degeneracy.empty()) w["degeneracy"] = label.witness.degeneracy;
  if (!label.witness.notes.empty()) w["notes"] = label.witness.notes;
  out["witness"] = w;
  if (label.mobility) out["mobility"] = mobility_to_json(*label.mobility);
  return out;
}

ordered_json diagram_to_json(const BondDiagram& d) {
  ordered_json out;
  out["n_joints"] = d.n_joints;
  ordered_json bonds = ordered_json::array();
  for (const auto& b : d.bonds) {
    ordered_json bj;
    bj["u"] = {b.u.real(), b.u.imag()};
    bj["at_infinity"] = b.at_infinity;
    bj["attached"] = b.attached;
    ordered_json coords = ordered_json::array();
    for (int k = 0; k < d.n_joints; ++k) {
      if (b.coordinate_infinite(k)) {
        coords.push_back("inf");
      } else {
        auto v = b.coordinate(k);
        coords.push_back({v.real(), v.imag()});
      }
    }
    bj["coords"] = coords;
    bonds.push_back(bj);
  }
  out["bonds"] = bonds;
  ordered_json conns = ordered_json::array();
  for (auto [a, b] : d.connections) conns.push_back({a, b});
  out["connections"] = conns;
  // the linkage graph: link k joins joints k and k+1
  ordered_json links = ordered_json::array();
  for (int k = 0; k < d.n_joints; ++k) links.push_back({k, (k + 1) % d.n_joints});
  out["links"] = links;
  out["moving_unattached"] = d.moving_unattached;
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace linkforge::io
