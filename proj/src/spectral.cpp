#include "stcsp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace stcsp {
namespace detail {

// Householder reduction of a symmetric matrix (row-major, size n*n) to
// tridiagonal form, followed by implicit-shift QL. Classic dense kernel;
// eigenvalues come back ascending in `d`. When `vecs` is non-null it holds
// the orthonormal eigenvectors as columns (vecs[i*n + j] = component i of
// eigenvector j).
void symmetric_eigen(std::vector<double>& a, int n, std::vector<double>& d,
                     std::vector<double>* vecs) {
  d.assign(n, 0.0);
  std::vector<double> e(n, 0.0);
  bool want_vecs = vecs != nullptr;
  if (n == 0) return;
  if (n == 1) {
    d[0] = a[0];
    if (want_vecs) *vecs = {1.0};
    return;
  }

  auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

  // Householder tridiagonalization (Numerical-Recipes style tred2).
  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (want_vecs) A(j, i) = A(i, j) / h;
          double gg = 0.0;
          for (int k = 0; k <= j; ++k) gg += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) gg += A(k, j) * A(i, k);
          e[j] = gg / h;
          f += e[j] * A(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          double fj = A(i, j);
          double ej = e[j] -= hh * fj;
          for (int k = 0; k <= j; ++k) A(j, k) -= fj * e[k] + ej * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (want_vecs) {
      int l = i - 1;
      if (d[i] != 0.0) {
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
          for (int k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
        }
      }
      d[i] = A(i, i);
      A(i, i) = 1.0;
      for (int j = 0; j <= l; ++j) A(j, i) = A(i, j) = 0.0;
    } else {
      d[i] = A(i, i);
    }
  }

  // Implicit-shift QL on the tridiagonal (tqli).
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-300 || std::fabs(e[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter == 50) throw std::runtime_error("eigensolver: QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (want_vecs) {
            for (int k = 0; k < n; ++k) {
              double fk = A(k, i + 1);
              A(k, i + 1) = s * A(k, i) + c * fk;
              A(k, i) = c * A(k, i) - s * fk;
            }
          }
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  // Sort ascending, permuting vectors along.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });
  std::vector<double> ds(n);
  for (int i = 0; i < n; ++i) ds[i] = d[order[i]];
  if (want_vecs) {
    std::vector<double> V(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) V[static_cast<size_t>(i) * n + j] = A(i, order[j]);
    *vecs = std::move(V);
  }
  d = std::move(ds);
}

std::vector<double> normalized_adjacency_dense(const Graph& g) {
  int n = g.n;
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  std::vector<double> is(n, 0.0);
  for (int v = 0; v < n; ++v) is[v] = g.deg[v] > 0 ? 1.0 / std::sqrt(g.deg[v]) : 0.0;
  for (const auto& e : g.edges) {
    double x = e.w * is[e.u] * is[e.v];
    a[static_cast<size_t>(e.u) * n + e.v] = x;
    a[static_cast<size_t>(e.v) * n + e.u] = x;
  }
  for (int v = 0; v < n; ++v)
    if (g.loops[v] > 0 && g.deg[v] > 0) a[static_cast<size_t>(v) * n + v] = g.loops[v] / g.deg[v];
  return a;
}

namespace {

void normalized_matvec(const Graph& g, const std::vector<double>& is, const std::vector<double>& x,
                       std::vector<double>& y) {
  int n = g.n;
  y.assign(n, 0.0);
  for (int u = 0; u < n; ++u) {
    double xu = x[u] * is[u];
    if (g.loops[u] > 0 && g.deg[u] > 0) y[u] += g.loops[u] * is[u] * xu;
    for (auto [v, w] : g.adj[u]) y[v] += w * is[v] * xu;
  }
}

// Lanczos with full reorthogonalization; returns the `m` extreme eigenpairs
// from the `largest` (or smallest) end.
Spectrum lanczos_extreme(const Graph& g, int m, bool largest, double tol,
                         const SpectralOptions& opts) {
  int n = g.n;
  std::vector<double> is(n, 0.0);
  for (int v = 0; v < n; ++v) is[v] = g.deg[v] > 0 ? 1.0 / std::sqrt(g.deg[v]) : 0.0;

  int dim_cap = opts.max_lanczos_dim > 0 ? opts.max_lanczos_dim : std::min(n, std::max(4 * m + 40, 80));
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> nd;
  std::vector<std::vector<double>> V;
  std::vector<double> alpha, beta;
  std::vector<double> v(n), w(n);
  for (int i = 0; i < n; ++i) v[i] = nd(rng);
  double nrm = 0;
  for (double x : v) nrm += x * x;
  nrm = std::sqrt(nrm);
  for (double& x : v) x /= nrm;
  V.push_back(v);

  Spectrum out;
  for (int j = 0; j < dim_cap; ++j) {
    normalized_matvec(g, is, V[j], w);
    double a = 0;
    for (int i = 0; i < n; ++i) a += w[i] * V[j][i];
    alpha.push_back(a);
    for (int i = 0; i < n; ++i) w[i] -= a * V[j][i];
    if (j > 0)
      for (int i = 0; i < n; ++i) w[i] -= beta[j - 1] * V[j - 1][i];
    // full reorthogonalization, twice for safety
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : V) {
        double c = 0;
        for (int i = 0; i < n; ++i) c += w[i] * q[i];
        for (int i = 0; i < n; ++i) w[i] -= c * q[i];
      }
    }
    double b = 0;
    for (double x : w) b += x * x;
    b = std::sqrt(b);

    int k = j + 1;
    bool last = (b < 1e-14) || (k == dim_cap) || (k == n);
    bool check = last || (k >= m + 2 && k % 8 == 0);
    if (check) {
      // Solve the tridiagonal Rayleigh-Ritz problem.
      std::vector<double> T(static_cast<size_t>(k) * k, 0.0);
      for (int i = 0; i < k; ++i) T[static_cast<size_t>(i) * k + i] = alpha[i];
      for (int i = 0; i + 1 < k; ++i) {
        T[static_cast<size_t>(i) * k + i + 1] = beta[i];
        T[static_cast<size_t>(i + 1) * k + i] = beta[i];
      }
      std::vector<double> ev, Z;
      symmetric_eigen(T, k, ev, &Z);
      // Ritz residual of the wanted end: |b * Z[k-1, idx]|.
      bool converged = true;
      int mm = std::min(m, k);
      for (int t = 0; t < mm; ++t) {
        int col = largest ? (k - 1 - t) : t;
        double resid = std::fabs(b * Z[static_cast<size_t>(k - 1) * k + col]);
        if (resid > tol) converged = false;
      }
      if (converged || last) {
        if (!converged && last && b >= 1e-12 && k < n) {
          double worst = 0;
          for (int t = 0; t < mm; ++t) {
            int col = largest ? (k - 1 - t) : t;
            worst = std::max(worst, std::fabs(b * Z[static_cast<size_t>(k - 1) * k + col]));
          }
          throw std::runtime_error("lanczos failed to converge; best residual " + std::to_string(worst));
        }
        out.eigenvalues.resize(mm);
        out.vectors.assign(mm, std::vector<double>(n, 0.0));
        for (int t = 0; t < mm; ++t) {
          int col = largest ? (k - 1 - t) : t;
          out.eigenvalues[t] = ev[col];
          for (int row = 0; row < k; ++row) {
            double z = Z[static_cast<size_t>(row) * k + col];
            for (int i = 0; i < n; ++i) out.vectors[t][i] += z * V[row][i];
          }
        }
        out.tol = tol;
        return out;
      }
    }
    if (b < 1e-14) {
      // Invariant subspace hit; restart with a fresh random direction.
      for (int i = 0; i < n; ++i) w[i] = nd(rng);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : V) {
          double c = 0;
          for (int i = 0; i < n; ++i) c += w[i] * q[i];
          for (int i = 0; i < n; ++i) w[i] -= c * q[i];
        }
      }
      b = 0;
      for (double x : w) b += x * x;
      b = std::sqrt(b);
      if (b < 1e-14) throw std::runtime_error("lanczos: degenerate restart");
    }
    beta.push_back(b);
    for (int i = 0; i < n; ++i) w[i] /= b;
    V.push_back(w);
  }
  throw std::runtime_error("lanczos: iteration cap exceeded");
}

Spectrum dense_extreme(const Graph& g, int m, bool largest, double tol) {
  auto a = detail::normalized_adjacency_dense(g);
  std::vector<double> ev, Z;
  detail::symmetric_eigen(a, g.n, ev, &Z);
  int n = g.n;
  Spectrum out;
  out.tol = tol;
  out.eigenvalues.resize(m);
  out.vectors.assign(m, std::vector<double>(n));
  for (int t = 0; t < m; ++t) {
    int col = largest ? (n - 1 - t) : t;
    out.eigenvalues[t] = ev[col];
    for (int i = 0; i < n; ++i) out.vectors[t][i] = Z[static_cast<size_t>(i) * n + col];
  }
  return out;
}

void check_residuals(const Graph& g, Spectrum& s, double tol) {
  int n = g.n;
  std::vector<double> is(n, 0.0);
  for (int v = 0; v < n; ++v) is[v] = g.deg[v] > 0 ? 1.0 / std::sqrt(g.deg[v]) : 0.0;
  double worst = 0;
  std::vector<double> y;
  for (size_t t = 0; t < s.vectors.size(); ++t) {
    normalized_matvec(g, is, s.vectors[t], y);
    double r2 = 0, x2 = 0;
    for (int i = 0; i < n; ++i) {
      double r = y[i] - s.eigenvalues[t] * s.vectors[t][i];
      r2 += r * r;
      x2 += s.vectors[t][i] * s.vectors[t][i];
    }
    worst = std::max(worst, std::sqrt(r2) / std::max(1e-300, std::sqrt(x2)));
  }
  if (worst > std::max(tol, 1e-8))
    throw std::runtime_error("eigensolver residual " + std::to_string(worst) + " exceeds tolerance");
  s.tol = std::max(worst, 1e-15);
}

std::vector<double> all_eigenvalues(const Graph& g, const SpectralOptions& opts) {
  if (g.n <= opts.dense_cap) {
    auto a = detail::normalized_adjacency_dense(g);
    std::vector<double> ev;
    detail::symmetric_eigen(a, g.n, ev, nullptr);
    return ev;  // ascending
  }
  throw std::runtime_error("full spectrum requested beyond dense cap");
}

}  // namespace
}  // namespace detail

Spectrum spectrum_top(const Graph& g, int m, double tol, const SpectralOptions& opts) {
  if (m < 1 || m > g.n) throw std::invalid_argument("spectrum_top: bad count");
  if (!(tol > 0)) throw std::invalid_argument("spectrum_top: tol must be positive");
  if (g.edge_count() == 0 && *std::max_element(g.loops.begin(), g.loops.end()) == 0.0)
    throw std::invalid_argument("spectrum_top: graph has no edges or loops");
  Spectrum s = (g.n <= opts.dense_cap) ? detail::dense_extreme(g, m, true, tol)
                                       : detail::lanczos_extreme(g, m, true, tol, opts);
  detail::check_residuals(g, s, tol);
  return s;
}

Spectrum spectrum_bottom(const Graph& g, int m, double tol, const SpectralOptions& opts) {
  if (m < 1 || m > g.n) throw std::invalid_argument("spectrum_bottom: bad count");
  Spectrum s = (g.n <= opts.dense_cap) ? detail::dense_extreme(g, m, false, tol)
                                       : detail::lanczos_extreme(g, m, false, tol, opts);
  detail::check_residuals(g, s, tol);
  return s;
}

ThresholdRank threshold_rank(const Graph& g, double eps, double tol, const SpectralOptions& opts) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("threshold_rank: eps must be in (0,1)");
  if (g.n == 0) throw std::invalid_argument("threshold_rank: empty graph");
  ThresholdRank out;
  double thr = 1.0 - eps;
  if (g.n <= opts.dense_cap) {
    auto ev = detail::all_eigenvalues(g, opts);
    for (double l : ev) {
      if (l >= thr - tol) {
        ++out.rank;
        if (l < thr) ++out.borderline;
      }
    }
    return out;
  }
  // Iterative path: grow the computed top until it drops below the threshold.
  int m = std::min(g.n, 8);
  for (;;) {
    Spectrum s = spectrum_top(g, m, tol, opts);
    if (s.eigenvalues.back() < thr - tol || m == g.n) {
      for (double l : s.eigenvalues)
        if (l >= thr - tol) {
          ++out.rank;
          if (l < thr) ++out.borderline;
        }
      return out;
    }
    m = std::min(g.n, 2 * m);
  }
}

int negative_threshold_rank(const Graph& g, double tau, const SpectralOptions& opts) {
  if (!(tau < 0)) throw std::invalid_argument("negative_threshold_rank: tau must be negative");
  if (g.n <= opts.dense_cap) {
    auto ev = detail::all_eigenvalues(g, opts);
    int c = 0;
    for (double l : ev)
      if (l <= tau) ++c;
    return c;
  }
  int m = std::min(g.n, 8);
  for (;;) {
    Spectrum s = spectrum_bottom(g, m, 1e-9, opts);
    if (s.eigenvalues.back() > tau || m == g.n) {
      int c = 0;
      for (double l : s.eigenvalues)
        if (l <= tau) ++c;
      return c;
    }
    m = std::min(g.n, 2 * m);
  }
}

double laplacian_lambda2(const Graph& g, const SpectralOptions& opts) {
  if (g.n < 2) throw std::invalid_argument("laplacian_lambda2: need at least two vertices");
  Spectrum s = spectrum_top(g, 2, 1e-10, opts);
  return 1.0 - s.eigenvalues[1];
}

VertexSet cheeger_sweep(const Graph& g, const SpectralOptions& opts) {
  if (g.n < 2) throw std::invalid_argument("cheeger_sweep: need at least two vertices");
  auto comps = connected_components(g);
  {
    // Two components of positive volume give a zero-expansion cut directly.
    const VertexSet* best = nullptr;
    double best_vol = 0;
    int positive = 0;
    for (const auto& c : comps) {
      double vol = 0;
      for (int v : c.members) vol += g.deg[v];
      if (vol <= 0) continue;
      ++positive;
      if (!best || vol < best_vol) {
        best = &c;
        best_vol = vol;
      }
    }
    if (positive >= 2) return *best;
  }

  Spectrum s = spectrum_top(g, 2, 1e-10, opts);
  return detail::sweep_cut_from_vector(g, s.vectors[1]);
}

VertexSet detail::sweep_cut_from_vector(const Graph& g, const std::vector<double>& x) {
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  std::vector<double> key(g.n);
  for (int i = 0; i < g.n; ++i) key[i] = g.deg[i] > 0 ? x[i] / std::sqrt(g.deg[i]) : 0.0;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (key[a] != key[b]) return key[a] < key[b];
    return a < b;
  });

  double total_vol = g.volume();
  std::vector<char> in(g.n, 0);
  double vol = 0, cut = 0;
  double best_phi = std::numeric_limits<double>::infinity();
  double best_balance = std::numeric_limits<double>::infinity();
  int best_prefix = -1;
  for (int p = 0; p + 1 < g.n; ++p) {
    int u = order[p];
    in[u] = 1;
    vol += g.deg[u];
    for (auto [v, w] : g.adj[u]) cut += in[v] ? -w : w;
    double mn = std::min(vol, total_vol - vol);
    if (mn <= 0) continue;
    double phi = cut / mn;
    double balance = std::fabs(vol - total_vol / 2);
    if (phi < best_phi - 1e-12 ||
        (phi <= best_phi + 1e-12 && balance < best_balance)) {
      best_phi = phi;
      best_balance = balance;
      best_prefix = p;
    }
  }
  if (best_prefix < 0) throw std::runtime_error("sweep: no valid prefix cut");
  std::vector<int> members(order.begin(), order.begin() + best_prefix + 1);
  return VertexSet::of(g.n, std::move(members));
}

DominationReport verify_spectral_domination(const Graph& g,
                                            const std::vector<std::pair<int, int>>& f,
                                            double tol, const SpectralOptions& opts) {
  if (g.n > opts.dense_cap)
    throw std::invalid_argument("verify_spectral_domination: graph exceeds dense cap");
  Graph h = with_self_loops(g, f);
  auto before = detail::all_eigenvalues(g, opts);   // ascending
  auto after = detail::all_eigenvalues(h, opts);    // ascending
  DominationReport rep;
  rep.gaps.resize(g.n);
  rep.min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.n; ++i) {
    // compare i-th largest
    double gap = after[g.n - 1 - i] - before[g.n - 1 - i];
    rep.gaps[i] = gap;
    rep.min_gap = std::min(rep.min_gap, gap);
  }
  rep.pass = rep.min_gap >= -tol;
  return rep;
}

}  // namespace stcsp
