#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "patterns.hpp"
#include "rational.hpp"

namespace ptl {

// f(e) = 1/l1 + 1/l2 over the faces on both sides of e (one face counted
// twice for a bridge).
Rational edge_contribution(const PlaneGraph& pg, int u, int v);
Rational block_contribution(const PlaneGraph& pg, const TriangularBlock& b);
// 25 f(B) - 14 e(B)
Rational block_certificate(const PlaneGraph& pg, const TriangularBlock& b);

struct EdgeRow {
  Edge edge;
  int len1 = 0, len2 = 0;
  Rational f;
  int block = -1;
};

struct BlockRow {
  BlockClass cls;
  std::string signature;
  std::vector<int> vertices;
  int edges = 0;
  Rational f;
  Rational certificate;
};

struct DischargeLedger {
  std::vector<EdgeRow> edges;
  std::vector<BlockRow> blocks;
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
  Rational f_total;        // sum of f(e); equals the face count
  Rational c_total;        // 25 f(G) - 14 e(G)
  // Exact identities checked while assembling the ledger.
  bool edges_partitioned = false;   // sum e(B) = e(G)
  bool faces_partitioned = false;   // sum f(B) = f(G) = face count
  bool faces_normalized = false;    // each face receives exactly 1
  bool certificates_add_up = false; // c(G) = sum c(B)
  bool euler = false;               // n - e + f = 2

  bool identities_hold() const {
    return edges_partitioned && faces_partitioned && faces_normalized && certificates_add_up && euler;
  }
};

DischargeLedger build_ledger(const PlaneGraph& pg);

enum class Verdict { Pass, Fail, Precondition, Report };
std::string to_string(Verdict v);

struct CertificateResult {
  DischargeLedger ledger;
  Verdict verdict = Verdict::Fail;
  std::vector<std::string> violations;  // precondition problems
  FreenessResult freeness;              // K4/theta-5 witness, if any
  int low_degree_vertex = -1;           // a vertex of degree < 3, if any
};

// Checks the per-block certificate signs on a {K4, theta-5}-free plane graph
// with minimum degree >= 3. Precondition violations are reported with the
// offending witness; the ledger is always filled.
CertificateResult certificate_check(const PlaneGraph& pg);

struct ReductionStep {
  int vertex;  // label in the input graph
  int degree;  // degree at deletion time, at most 2
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::vector<int> survivors;  // input labels of the 3-core, sorted
  Graph core;                  // induced on survivors (relabeled 0..n'-1)
  int removed_edges() const {
    int s = 0;
    for (auto& st : steps) s += st.degree;
    return s;
  }
};

// Deletes vertices of current degree <= 2, smallest label first, until none
// is left.
ReductionTrace reduce_min_degree(const Graph& g);
// Same, deleting in the caller's priority order (earlier = preferred).
ReductionTrace reduce_min_degree(const Graph& g, const std::vector<int>& priority);

struct CoreBlock {
  int vertices = 0;
  int edges = 0;
  int size_class = 0;     // 2, 3, 4, or 5 for "5 or more"
  long long value = 0;    // 25 n'' - 11 e'' - 25
  long long constant = 0; // 14, 17, 20, 25 by size class
};

struct BlockCountBound {
  int n = 0, e = 0;
  long long value = 0;  // 25 n - 11 e
  ReductionTrace trace;
  bool core_empty = false;
  long long empty_branch = 0;  // n + 37, used when the core is empty
  int b2 = 0, b3 = 0, b4 = 0, b5 = 0;
  std::vector<CoreBlock> blocks;
  long long core_value = 0;   // 25 n' - 11 e'
  long long lower_bound = 0;  // 25 b5 + 20 b4 + 17 b3 + 14 b2 + 25
  // Individual links of the inequality chain on this instance.
  bool reduction_link = false;   // 25n-11e >= 25n'-11e' + (n-n')
  bool block_constants = false;  // every block meets its size-class constant
  bool core_link = false;        // 25n'-11e' >= lower_bound
  bool chain_link = false;       // 25n-11e >= lower_bound + (n-n'), or >= n+37 if empty
  Verdict verdict = Verdict::Report;  // Pass/Fail only when n >= 25
  std::vector<std::string> violations;
};

long long size_class_constant(int size_class);
BlockCountBound bound_chain(const Graph& g);

}  // namespace ptl
