#pragma once

#include <string>
#include <vector>

#include "embed.hpp"

namespace ptl {

struct WitnessSpec {
  int k = 0;
  long long target_n() const { return 88LL * k + 24; }
  long long target_e() const { return 200LL * k + 50; }
};

struct WitnessCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct WitnessReport {
  WitnessSpec spec;
  int n = 0, e = 0, f = 0;
  int diamonds = 0, triangles = 0, pentagons = 0;
  std::vector<WitnessCheck> checks;
  bool pass() const;
};

// Plane graph with 88k + 24 vertices and 200k + 50 edges in which every
// triangular block is a diamond and every other face is a pentagon. The
// outer face is a pentagon. Throws std::runtime_error if the assembled graph
// fails verify_witness.
PlaneGraph build_witness(int k);

// Checks: planarity, vertex count, edge count, K4-free, Theta5-free,
// block census (diamonds only), boundary census (every diamond boundary
// edge borders a 5-face), discharging equality (c(G) = 0 and every block
// certificate 0).
WitnessReport verify_witness(const PlaneGraph& pg, const WitnessSpec& spec);

}  // namespace ptl
