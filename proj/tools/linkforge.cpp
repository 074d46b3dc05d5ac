// linkforge: analyze, classify, trace, bond and carve closed linkages
// described by JSON documents or gallery names.
//
// Exit codes: 0 success, 2 schema error, 3 numeric failure, 4 unsupported
// joint census, 5 immobile input, 6 unusable curve data, 7 failed
// annihilation check.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "linkforge/classify.hpp"
#include "linkforge/construct.hpp"
#include "linkforge/io.hpp"
#include "linkforge/numerics.hpp"

namespace {

using namespace linkforge;
using io::ordered_json;

constexpr int kExitSchema = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitCensus = 4;
constexpr int kExitImmobile = 5;
constexpr int kExitCurve = 6;
constexpr int kExitAnnihilation = 7;

struct ImmobileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

uint64_t effective_seed(uint64_t flag_seed) {
  // the environment variable overrides the flag
  if (const char* env = std::getenv("LINKFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw io::SchemaError("LINKFORGE_SEED must be an unsigned integer");
    }
  }
  return flag_seed;
}

void emit(const ordered_json& report) { std::cout << io::dump(report); }

ordered_json error_body(const std::string& kind, const std::string& what) {
  ordered_json e;
  e["error"] = kind;
  e["what"] = what;
  return e;
}

int cmd_analyze(const std::string& input, double tol, uint64_t seed, int steps) {
  io::LinkageDoc doc = io::load_linkage_doc(input);
  TangentReport rep;
  Configuration at = initial_configuration(doc.linkage);
  rep = mobility_estimate(doc.linkage, at, tol, seed);
  if (steps > 4 && rep.mobility > 0) {
    // user asked for a farther generic point
    Configuration far = generic_point(doc.linkage, seed, steps);
    rep = mobility_estimate(doc.linkage, far, tol, seed);
  }
  ordered_json out;
  out["command"] = "analyze";
  out["input"] = input;
  out["seed"] = seed;
  out["mobility"] = io::mobility_to_json(rep);
  out["warnings"] = doc.warnings;
  emit(out);
  return 0;
}

int cmd_classify(const std::string& input, double tol, uint64_t seed) {
  io::LinkageDoc doc = io::load_linkage_doc(input);
  ClassLabel label = classify(doc.linkage, tol, seed);
  ordered_json out;
  out["command"] = "classify";
  out["input"] = input;
  out["seed"] = seed;
  out.update(io::label_to_json(label));
  out["warnings"] = doc.warnings;
  emit(out);
  return 0;
}

int cmd_bonds(const std::string& input, double tol) {
  io::LinkageDoc doc = io::load_linkage_doc(input);
  if (!doc.curve) throw io::CurveDocError("bonds: the document carries no curve block");
  for (const auto& j : doc.linkage.joints)
    if (j.kind != JointKind::Revolute && j.kind != JointKind::Prismatic)
      throw io::CurveDocError("bonds: only R/P joints are supported");
  BondDiagram d = bond_diagram(*doc.curve, tol);
  ordered_json out;
  out["command"] = "bonds";
  out["input"] = input;
  out.update(io::diagram_to_json(d));
  out["warnings"] = doc.warnings;
  emit(out);
  return 0;
}

int cmd_trace(const std::string& input, int link, const std::vector<double>& point, int steps,
              double steplen, const std::string& format, const std::string& output,
              const std::vector<double>& dir_flag, uint64_t seed) {
  io::LinkageDoc doc = io::load_linkage_doc(input);
  const Linkage& L = doc.linkage;

  TangentReport rep = mobility_estimate(L, initial_configuration(L), 1e-8, seed);
  if (rep.mobility < 1) throw ImmobileError("trace: the linkage is immobile (mobility 0)");

  TrackOptions opts;
  opts.steps = steps;
  opts.steplen = steplen;
  opts.seed = seed;
  CurveSample sample = track_curve(L, initial_configuration(L), Eigen::VectorXd(), opts);
  Point3 x(point[0], point[1], point[2]);
  std::vector<Point3> pts = trace_point(L, sample, link, x);

  std::string body;
  if (format == "csv") {
    std::string header = "step";
    for (int k = 0; k < L.size(); ++k) {
      char kind = joint_kind_char(L.joints[k].kind);
      std::string idx = std::to_string(k);
      if (kind == 'R') header += ",t0_" + idx + ",t1_" + idx;
      if (kind == 'P') header += ",s_" + idx;
      if (kind == 'C') header += ",s_" + idx + ",t0_" + idx + ",t1_" + idx;
      if (kind == 'H') header += ",alpha_" + idx;
    }
    header += ",x,y,z\n";
    body = header;
    for (size_t i = 0; i < pts.size(); ++i) {
      body += std::to_string(i);
      const Configuration& c = sample.configurations[i];
      for (int k = 0; k < L.size(); ++k) {
        const JointConfig& jc = c.joints[k];
        switch (L.joints[k].kind) {
          case JointKind::Revolute:
            body += "," + io::format_double(jc.t0) + "," + io::format_double(jc.t1);
            break;
          case JointKind::Prismatic: body += "," + io::format_double(jc.s); break;
          case JointKind::Cylindrical:
            body += "," + io::format_double(jc.s) + "," + io::format_double(jc.t0) + "," +
                    io::format_double(jc.t1);
            break;
          case JointKind::Helical: body += "," + io::format_double(jc.alpha); break;
        }
      }
      body += "," + io::format_double(pts[i].x()) + "," + io::format_double(pts[i].y()) + "," +
              io::format_double(pts[i].z()) + "\n";
    }
  } else {
    // svg projection onto the plane orthogonal to --dir (defaults to the
    // common axis direction when all R/H axes are parallel, else z)
    Vec3 dir(0, 0, 1);
    if (dir_flag.size() == 3) {
      dir = Vec3(dir_flag[0], dir_flag[1], dir_flag[2]);
      if (dir.norm() == 0) throw io::SchemaError("trace: zero projection direction");
      dir.normalize();
    } else {
      bool parallel = true;
      std::optional<Vec3> common;
      for (const auto& j : L.joints) {
        if (j.kind == JointKind::Prismatic) continue;
        if (!common) common = j.axis.dir;
        if (common->cross(j.axis.dir).norm() > 1e-9) parallel = false;
      }
      if (parallel && common) dir = *common;
    }
    Vec3 e1 = dir.cross(std::abs(dir.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0)).normalized();
    Vec3 e2 = dir.cross(e1);
    double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
    std::vector<std::pair<double, double>> uv;
    for (const auto& p : pts) {
      double u = p.dot(e1), v = p.dot(e2);
      uv.push_back({u, v});
      minx = std::min(minx, u);
      maxx = std::max(maxx, u);
      miny = std::min(miny, v);
      maxy = std::max(maxy, v);
    }
    double margin = 0.05 * std::max(maxx - minx, maxy - miny) + 1e-9;
    body = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + io::format_double(minx - margin) +
           " " + io::format_double(miny - margin) + " " +
           io::format_double(maxx - minx + 2 * margin) + " " +
           io::format_double(maxy - miny + 2 * margin) + "\">\n<polyline fill=\"none\" " +
           "stroke=\"black\" stroke-width=\"" + io::format_double(0.004 * (maxx - minx + 2 * margin)) +
           "\" points=\"";
    for (size_t i = 0; i < uv.size(); ++i) {
      if (i) body += " ";
      body += io::format_double(uv[i].first) + "," + io::format_double(uv[i].second);
    }
    body += "\"/>\n</svg>\n";
  }
  io::write_file(output, body);

  double worst = 0;
  for (double r : sample.residual_norms) worst = std::max(worst, r);
  ordered_json out;
  out["command"] = "trace";
  out["input"] = input;
  out["seed"] = seed;
  out["link"] = link;
  out["points"] = pts.size();
  out["format"] = format;
  out["output"] = output;
  out["residual_max"] = worst;
  out["warnings"] = doc.warnings;
  emit(out);
  return 0;
}

int cmd_carve(const std::string& input, int samples, uint64_t seed, bool verify,
              const std::string& output) {
  io::LinkageDoc doc = io::load_linkage_doc(input);
  if (!doc.carve) throw io::SchemaError("carve: the document carries no carve block");
  CarveRecipe recipe;
  recipe.cylindrical = doc.linkage;
  recipe.c_indices = doc.carve->c_indices;
  recipe.A = doc.carve->A;
  recipe.pitches = doc.carve->pitches;
  recipe.k0_angle_rows = doc.carve->k0_angle_rows;
  recipe.k0_translation_rows = doc.carve->k0_translation_rows;
  CarvingInput in = carving_input_from_recipe(recipe, 4, std::max(2, samples / 4), 0.05, seed);
  CarvingResult res = carve(in);

  io::LinkageDoc out_doc;
  out_doc.linkage = res.linkage;
  ordered_json out;
  out["command"] = "carve";
  out["input"] = input;
  out["seed"] = seed;
  out["m"] = static_cast<int>(in.c_indices.size());
  out["k0_dim"] = res.k0_dim;
  out["a_rank"] = res.a_rank;
  out["bound"] = res.bound;
  out["linkage"] = io::doc_to_json(out_doc);
  if (verify) {
    TangentReport rep =
        mobility_estimate(res.linkage, initial_configuration(res.linkage), 1e-8, seed);
    out["mobility"] = io::mobility_to_json(rep);
  }
  out["warnings"] = doc.warnings;
  if (!output.empty()) io::write_file(output, io::dump(io::doc_to_json(out_doc)));
  emit(out);
  return 0;
}

int cmd_examples(const std::string& emit_name, const std::string& output, bool carve_doc,
                 const std::map<std::string, double>& params) {
  if (emit_name.empty()) {
    ordered_json out;
    out["command"] = "examples";
    out["gallery"] = gallery_names();
    emit(out);
    return 0;
  }
  GalleryEntry e = gallery(emit_name, params);
  io::LinkageDoc doc;
  if (carve_doc) {
    if (!e.recipe) throw io::SchemaError("examples: '" + emit_name + "' has no carving recipe");
    doc.linkage = e.recipe->cylindrical;
    io::CarveSpec spec;
    spec.A = e.recipe->A;
    spec.pitches = e.recipe->pitches;
    spec.c_indices = e.recipe->c_indices;
    spec.k0_angle_rows = e.recipe->k0_angle_rows;
    spec.k0_translation_rows = e.recipe->k0_translation_rows;
    doc.carve = spec;
  } else {
    doc.linkage = e.linkage;
    doc.curve = e.curve;
  }
  std::string text = io::dump(io::doc_to_json(doc));
  if (output.empty()) {
    std::cout << text;
  } else {
    io::write_file(output, text);
    ordered_json out;
    out["command"] = "examples";
    out["emitted"] = emit_name;
    out["output"] = output;
    emit(out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-linkage analysis on dual quaternions"};
  app.require_subcommand(1);

  std::string input, output, format = "csv", emit_name, examples_out;
  double tol = 1e-8, steplen = 0.05;
  uint64_t seed = 0;
  int steps = 50, link = 1, samples = 32;
  std::vector<double> point = {0, 0, 0}, dir_flag;
  bool verify = false, carve_doc = false;
  std::vector<std::string> param_args;

  auto* analyze = app.add_subcommand("analyze", "numerical mobility report");
  analyze->add_option("input", input, "linkage document")->required();
  analyze->add_option("--tol", tol, "rank tolerance");
  analyze->add_option("--seed", seed, "random seed");
  analyze->add_option("--steps", steps, "tracking steps to the generic point");

  auto* classify_cmd = app.add_subcommand("classify", "4/5-linkage classification");
  classify_cmd->add_option("input", input, "linkage document")->required();
  classify_cmd->add_option("--seed", seed, "random seed");

  auto* bonds_cmd = app.add_subcommand("bonds", "bond set and diagram of a curve");
  bonds_cmd->add_option("input", input, "linkage document with a curve block")->required();

  auto* trace = app.add_subcommand("trace", "trace a point along the tracked motion");
  trace->add_option("input", input, "linkage document")->required();
  trace->add_option("--link", link, "link index (partial product m_1..m_k)");
  trace->add_option("--point", point, "traced point x,y,z")->expected(3);
  trace->add_option("--steps", steps, "number of tracked steps");
  trace->add_option("--steplen", steplen, "step length");
  trace->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  trace->add_option("--out", output, "output file");
  trace->add_option("--dir", dir_flag, "svg projection direction")->expected(3);
  trace->add_option("--seed", seed, "random seed");

  auto* carve_cmd = app.add_subcommand("carve", "screw carving of a C-joint linkage");
  carve_cmd->add_option("input", input, "linkage document with a carve block")->required();
  carve_cmd->add_option("--samples", samples, "number of chart samples");
  carve_cmd->add_option("--seed", seed, "random seed");
  carve_cmd->add_flag("--verify", verify, "run the mobility estimate on the result");
  carve_cmd->add_option("--out", output, "write the carved linkage document here");


  auto* examples = app.add_subcommand("examples", "list or emit gallery linkages");
  examples->add_option("--emit", emit_name, "gallery entry to emit as a document");
  examples->add_option("--out", examples_out, "output file (stdout when omitted)");
  examples->add_flag("--carve-doc", carve_doc, "emit the carving input document instead");
  examples->add_option("--param", param_args, "gallery parameter as name=value (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    seed = effective_seed(seed);
    if (*analyze) return cmd_analyze(input, tol, seed, steps);
    if (*classify_cmd) return cmd_classify(input, 1e-7, seed);
    if (*bonds_cmd) return cmd_bonds(input, 1e-9);
    if (*trace) {
      if (output.empty()) output = format == "svg" ? "trace.svg" : "trace.csv";
      return cmd_trace(input, link, point, steps, steplen, format, output, dir_flag, seed);
    }
    if (*carve_cmd) return cmd_carve(input, samples, seed, verify, output);
    if (*examples) {
      std::map<std::string, double> params;
      for (const auto& kv : param_args) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw io::SchemaError("--param expects name=value, got '" + kv + "'");
        try {
          params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::logic_error&) {
          throw io::SchemaError("--param value is not a number in '" + kv + "'");
        }
      }
      return cmd_examples(emit_name, examples_out, carve_doc, params);
    }
  } catch (const io::SchemaError& e) {
    std::cerr << io::dump(error_body("schema", e.what()));
    return kExitSchema;
  } catch (const io::CurveDocError& e) {
    std::cerr << io::dump(error_body("curve_input", e.what()));
    return kExitCurve;
  } catch (const CensusError& e) {
    std::cerr << io::dump(error_body("census", e.what()));
    return kExitCensus;
  } catch (const ImmobileError& e) {
    std::cerr << io::dump(error_body("immobile", e.what()));
    return kExitImmobile;
  } catch (const AnnihilationError& e) {
    ordered_json body = error_body("annihilation", e.what());
    body["row"] = e.row;
    body["path"] = e.path;
    body["sample"] = e.sample;
    body["deviation"] = e.deviation;
    std::cerr << io::dump(body);
    return kExitAnnihilation;
  } catch (const CurveClosureError& e) {
    ordered_json body = error_body("numeric", e.what());
    body["worst_residual"] = e.worst_residual;
    std::cerr << io::dump(body);
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << io::dump(error_body("schema", e.what()));
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << io::dump(error_body("numeric", e.what()));
    return kExitNumeric;
  }
  return 0;
}
