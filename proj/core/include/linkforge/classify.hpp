#pragma once

// Degeneracy detection and the executable classification of mobile 4- and
// 5-linkages, cross-checked against numerical mobility.

#include <optional>
#include <string>
#include <vector>

#include "linkforge/geometry.hpp"
#include "linkforge/linkage.hpp"
#include "linkforge/numerics.hpp"

namespace linkforge {

enum class LinkageClass {
  Degenerate,
  PlanarAllParallel,
  SphericalConcurrent,
  Bennett,
  Goldberg,
  PrrrrTwoParallelPairs,
  H5AllParallel,
  H5OnePTwoPairs,
  NotClassifiedMobile,
  PresumedRigid,
};

std::string to_string(LinkageClass c);

struct Witness {
  std::vector<std::pair<int, int>> parallel_pairs;
  std::optional<Vec3> common_point;
  double concurrency_rms = -1;
  // offsets[i] = o(h_{t}, h_{t+1}, h_{t+2}) for t = offset_triples[i]
  std::vector<int> offset_triples;
  std::vector<double> offsets;
  int cyclic_shift = 0;
  std::string degeneracy;
  std::vector<std::string> notes;
};

struct ClassLabel {
  LinkageClass kind = LinkageClass::PresumedRigid;
  Witness witness;
  std::optional<TangentReport> mobility;
};

struct CensusError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Geometric label and numerical mobility disagree; both sides are reported.
struct CrossCheckError : std::runtime_error {
  LinkageClass label;
  int mobility;
  CrossCheckError(const std::string& what, LinkageClass l, int m)
      : std::runtime_error(what), label(l), mobility(m) {}
};

// First degeneracy among neighbouring joints, with the simplification hint
// (RR->R, HH->H or C, HR->C, PP->P, HP->C).
std::optional<std::string> detect_degenerate(const Linkage& L, double tol = 1e-7);

ClassLabel classify_5R(const Linkage& L, double tol = 1e-7, uint64_t seed = 0);
ClassLabel classify_5_RP(const Linkage& L, double tol = 1e-7, uint64_t seed = 0);
ClassLabel classify_5_RPH(const Linkage& L, double tol = 1e-7, uint64_t seed = 0);
// 4-linkages with R/P joints; also handles the CRP 3-linkage predicate.
ClassLabel facts_4(const Linkage& L, double tol = 1e-7, uint64_t seed = 0);

// Routes to the matching classifier by joint census; CensusError otherwise.
ClassLabel classify(const Linkage& L, double tol = 1e-7, uint64_t seed = 0);

}  // namespace linkforge
