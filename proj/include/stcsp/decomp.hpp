#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stcsp/graph.hpp"
#include "stcsp/spectral.hpp"

namespace stcsp {

/// Knobs for the decomposition stack. `theorem_valid` reports whether the
/// asymptotic premise inequalities hold; desk-scale callers override fields
/// and run anyway.
struct DecompParams {
  double delta = 0.05;
  double lambda_star = 0.6;
  double cap_k = 2.0;   // K
  double eps = 0.2;     // expander threshold
  double gamma = 0.05;  // size floor parameter
  double c0 = 2.0;      // degree multiplier
  double alpha = 0.1;   // pre-deletion fraction
  double d_guess = 0.0; // degree guess; 0 = unset
  double tol = 1e-9;

  bool theorem_valid() const;
  void validate() const;
};

struct ScheduleResult {
  DecompParams params;
  std::vector<std::string> warnings;
};

/// gamma = 32 delta^{1/10} K^2, C0 = delta^{-1/10}, eps = delta^{0.81},
/// alpha = 2 delta^{1/10}.
ScheduleResult parameter_schedule(double delta, double cap_k);

struct BisectionStep {
  int size_before = 0;
  int kept = 0;
  int shed = 0;
  double lambda2_laplacian = 0.0;
  double cut_weight = 0.0;
  double phi = 0.0;
};

struct BisectionResult {
  enum class Kind { LargeExpander, BalancedCut } kind;
  VertexSet s_prime;  // the kept / larger side (original vertex ids of the input graph)
  VertexSet t_prime;  // complement within the input vertex set
  double boundary_weight = 0.0;
  std::vector<BisectionStep> steps;
};

/// Either a large induced expander or a balanced low-boundary cut; the
/// returned clause is re-checked post hoc and a violation is an internal
/// error.
BisectionResult rank_bisection(const Graph& g0, double eps, double tol = 1e-9,
                               const SpectralOptions& sopts = {});

struct RefinementRound {
  std::vector<int> block_sizes;
  double partition_boundary_weight = 0.0;  // total weight crossing the partition
  double round_increment = 0.0;            // growth over the previous round
};

struct FindLowRankTrace {
  std::vector<RefinementRound> rounds;
  bool size_floor_waived = false;
  double d_prime = 0.0;  // max degree used in the boundary bounds
};

struct FindLowRankResult {
  std::optional<VertexSet> set;  // empty = NotFound
  Partition final_partition;     // diagnostics when NotFound
  FindLowRankTrace trace;
};

/// Repeated bisection refinement until some block induces an expander
/// (threshold rank <= 1 at eps). The returned set satisfies the size floor
/// gamma*n/(4K^2) (waived when |v_ell| is already below it) and the boundary
/// bound 2 sqrt(eps) d' n, both verified before return.
FindLowRankResult find_low_rank_set(const Graph& g, const VertexSet& v_ell,
                                    const DecompParams& params, const SpectralOptions& sopts = {});

struct SetStats {
  int size = 0;
  double lambda2_laplacian = 0.0;   // of the induced normalized Laplacian
  double boundary_weight = 0.0;     // in G[V']
  int induced_edges = 0;
  double induced_edge_weight = 0.0;
};

struct DecompOutput {
  std::vector<VertexSet> sets;
  std::vector<SetStats> stats;
  VertexSet leftover;
  bool incomplete = false;  // inner NotFound terminated the loop early
  std::vector<FindLowRankTrace> traces;
};

/// Peels induced expanders off v_prime while at least 2*gamma*n vertices
/// remain.
DecompOutput low_rank_decomp(const Graph& g, const VertexSet& v_prime, const DecompParams& params,
                             const SpectralOptions& sopts = {});

/// Greedy-by-degree partial vertex cover with redundancy pruning: returns a
/// set covering at least t edges.
VertexSet partial_vertex_cover(const Graph& g, int t);

struct FindLowThreshOptions {
  int degree_stride = 0;          // 0 = automatic (1 up to 64, geometric beyond)
  double coverage_floor = -1.0;   // -1 = default 1 - 2 delta^{1/11}, clamped to [0,1)
  bool proof_t_formula = false;   // use (d_av - 2 d0 (1-delta)) n / 2 instead of the listing's
  double accept_rank_factor = 2.0;
};

struct DegreeGuessLog {
  int d0 = 0;
  bool skipped_cover = false;
  int cover_size = 0;
  int v_prime_size = 0;
  int union_size = 0;
  int rank = -1;
  int num_sets = 0;
  bool accepted = false;
};

struct FindLowThreshResult {
  VertexSet v_double_prime;
  DecompOutput decomp;
  int measured_rank = 0;
  int rank_borderline = 0;
  double induced_edge_weight = 0.0;
  int accepted_d0 = -1;
  bool no_accept = false;  // best-by-coverage fallback was returned
  std::vector<DegreeGuessLog> log;
};

/// Degree-guess loop: partial vertex cover preprocessing, high-degree
/// removal, decomposition, and acceptance by measured threshold rank and
/// coverage.
FindLowThreshResult find_low_thresh(const Graph& g, double delta,
                                    const std::optional<DecompParams>& overrides = std::nullopt,
                                    const FindLowThreshOptions& opts = {},
                                    const SpectralOptions& sopts = {});

}  // namespace stcsp
