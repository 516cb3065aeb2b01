#pragma once

#include <cstdint>
#include <vector>

#include "stcsp/graph.hpp"

namespace stcsp {

/// Eigenpairs of the normalized adjacency D^{-1/2} A D^{-1/2}, sorted by
/// descending eigenvalue. Vertices of degree zero are excluded from the
/// normalization and carry eigenvalue 0.
struct Spectrum {
  std::vector<double> eigenvalues;           // descending
  std::vector<std::vector<double>> vectors;  // vectors[i] matches eigenvalues[i]; may be empty
  double tol = 0.0;                          // residual bound achieved
};

struct SpectralOptions {
  int dense_cap = 2000;    // dense solve up to this many vertices
  std::uint64_t seed = 1;  // start vectors for the iterative path
  int max_lanczos_dim = 0; // 0 = automatic
};

/// The m algebraically largest eigenvalues (with eigenvectors).
Spectrum spectrum_top(const Graph& g, int m, double tol = 1e-9, const SpectralOptions& opts = {});

/// The m algebraically smallest eigenvalues (with eigenvectors).
Spectrum spectrum_bottom(const Graph& g, int m, double tol = 1e-9, const SpectralOptions& opts = {});

struct ThresholdRank {
  int rank = 0;        // #{lambda >= 1 - eps - tol}; borderline included
  int borderline = 0;  // #{1 - eps - tol <= lambda < 1 - eps}
};

/// Number of normalized-adjacency eigenvalues >= 1 - eps, with a tolerance
/// guard around the threshold.
ThresholdRank threshold_rank(const Graph& g, double eps, double tol = 1e-9,
                             const SpectralOptions& opts = {});

/// Number of normalized-adjacency eigenvalues <= tau (tau < 0).
int negative_threshold_rank(const Graph& g, double tau, const SpectralOptions& opts = {});

/// Second-smallest normalized Laplacian eigenvalue, 1 - lambda_2(A_norm).
double laplacian_lambda2(const Graph& g, const SpectralOptions& opts = {});

/// Sweep cut over the second eigenvector; output satisfies
/// expansion(g, S) <= sqrt(2 lambda_2(L)) + tol. A disconnected input yields
/// a union of components with expansion 0.
VertexSet cheeger_sweep(const Graph& g, const SpectralOptions& opts = {});

struct DominationReport {
  std::vector<double> gaps;  // lambda_i(after) - lambda_i(before), descending index
  double min_gap = 0.0;
  bool pass = false;
};

/// Full-spectrum comparison of g against with_self_loops(g, f): every
/// eigenvalue of the looped graph must dominate the original.
DominationReport verify_spectral_domination(const Graph& g,
                                            const std::vector<std::pair<int, int>>& f,
                                            double tol = 1e-8, const SpectralOptions& opts = {});

namespace detail {
/// Dense symmetric eigensolve (tridiagonalization + implicit-shift QL).
/// Returns eigenvalues ascending; vectors as columns of `vecs` when requested.
void symmetric_eigen(std::vector<double>& a, int n, std::vector<double>& eigenvalues,
                     std::vector<double>* vecs);
/// Row-major dense normalized adjacency.
std::vector<double> normalized_adjacency_dense(const Graph& g);
/// Sweep cut given the second eigenvector of the normalized adjacency.
VertexSet sweep_cut_from_vector(const Graph& g, const std::vector<double>& x2);
}  // namespace detail

}  // namespace stcsp
