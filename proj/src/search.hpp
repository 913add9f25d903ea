#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "patterns.hpp"

namespace ptl {

class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct SearchLimits {
  int max_n = 10;
  bool long_run = false;  // permits one extra vertex beyond max_n
  int cap() const { return long_run ? max_n + 1 : max_n; }
};

struct SearchReport {
  int n = 0;
  std::string family;
  int ex = 0;
  // graph6 of canonical labelings, sorted; the disconnected flag is set
  // when the optimum is only attained by a disjoint union.
  std::vector<std::string> witnesses;
  bool disconnected = false;
  long long examined = 0;   // connected family-free planar graphs on n vertices
  double elapsed = 0;       // seconds; not part of the deterministic output
};

// Per-level results of one worker's share of the generation tree.
struct LevelResult {
  int n = 0;
  int ex = -1;  // -1: no connected graph survived at this level
  std::vector<std::string> witnesses;
  long long examined = 0;
};
std::vector<LevelResult> search_levels(int max_n, const FamilySpec& fam, const Partition& part = {});
// Max-then-union with canonical dedup; independent of the worker split.
std::vector<LevelResult> merge_levels(const std::vector<std::vector<LevelResult>>& parts);
// Combines per-level connected optima into the report for n, including the
// disjoint-union pass.
SearchReport finish_report(int n, const FamilySpec& fam, const std::vector<LevelResult>& levels);

SearchReport max_edges(int n, const FamilySpec& fam, const SearchLimits& limits = {});

// Slow independent path: every isomorphism class on n vertices (built edge
// by edge with post-hoc dedup), filtered by planarity and the generic
// subgraph matcher.
int naive_max_edges(int n, const FamilySpec& fam);

struct BoundRow {
  int n = 0;
  int ex = 0;
  long long bound = 0;  // floor(25 (n - 2) / 11)
  long long slack = 0;  // bound - ex
  bool flagged = false; // negative slack
  bool witness_only = false;  // ex is the edge count of a constructed witness
  bool disconnected = false;
  long long examined = 0;
  std::vector<std::string> witnesses;  // empty for witness-only rows
};

// Produces merged per-level results for levels 0..max_n; lets the caller
// run the partitions on its own workers.
using LevelSearch = std::function<std::vector<LevelResult>(int max_n, const FamilySpec& fam)>;

long long turan_bound(int n);
// Rows for lo..hi. n beyond the exhaustive cap is only accepted for the
// K4+Theta5 family at n = 88k + 24 (k <= 3), where the row records the
// verified construction as a lower bound; otherwise BoundExceeded.
std::vector<BoundRow> bound_table(int lo, int hi, const FamilySpec& fam, const SearchLimits& limits = {},
                                  const LevelSearch& search = {});
BoundRow bound_row(const SearchReport& r);

}  // namespace ptl
