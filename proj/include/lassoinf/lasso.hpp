#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "lassoinf/dataset.hpp"
#include "lassoinf/errors.hpp"

namespace lassoinf {

/// sign(z) * max(|z| - gamma, 0)
template <typename Scalar>
constexpr Scalar soft_threshold(Scalar z, Scalar gamma) {
  if (z > gamma) return z - gamma;
  if (z < -gamma) return z + gamma;
  return Scalar(0);
}

template <typename Scalar>
struct LassoOptions {
  Scalar tol = Scalar(1e-7);  // max coefficient change over a full sweep
  int max_iter = 10000;       // sweeps, counting active-set sweeps
  bool record_objective = false;
};

template <typename Scalar>
struct RankedCoefficient {
  Index column;
  Scalar magnitude;

  friend bool operator==(const RankedCoefficient&, const RankedCoefficient&) = default;
};

template <typename Scalar>
struct LassoFit {
  VectorX<Scalar> beta;
  Scalar intercept{0};
  Scalar lambda{0};
  VectorX<Scalar> weights;
  int iterations = 0;
  bool converged = false;
  // Nonzero penalized coefficients, largest |beta| first.
  std::vector<RankedCoefficient<Scalar>> ranked;
  // Objective after each sweep; filled when LassoOptions::record_objective.
  std::vector<Scalar> objective_trace;

  /// |beta_(k)| for 1-based rank k, zero when fewer than k are selected.
  Scalar ranked_magnitude(std::size_t k) const {
    return k >= 1 && k <= ranked.size() ? ranked[k - 1].magnitude : Scalar(0);
  }
};

/// Orders the nonzero coefficients by decreasing magnitude, ties to the lower
/// column index. Columns with weight zero are unpenalized (forced) and never
/// ranked; an empty weight vector means all columns are penalized.
template <typename Scalar>
std::vector<RankedCoefficient<Scalar>> rank_coefficients(const VectorX<Scalar>& beta,
                                                         const VectorX<Scalar>& weights = {}) {
  std::vector<RankedCoefficient<Scalar>> ranked;
  for (Index j = 0; j < beta.size(); ++j) {
    if (beta(j) == Scalar(0)) continue;
    if (weights.size() > 0 && weights(j) == Scalar(0)) continue;
    ranked.push_back({j, std::abs(beta(j))});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.magnitude > b.magnitude; });
  return ranked;
}

/// 1/2 ||y - X beta||^2 + lambda * sum_j w_j |beta_j|
template <typename Scalar>
Scalar lasso_objective(const Eigen::Ref<const MatrixX<Scalar>>& X,
                       const Eigen::Ref<const VectorX<Scalar>>& y,
                       const Eigen::Ref<const VectorX<Scalar>>& beta, Scalar lambda,
                       const Eigen::Ref<const VectorX<Scalar>>& weights) {
  const Scalar rss = (y - X * beta).squaredNorm();
  return Scalar(0.5) * rss + lambda * (weights.array() * beta.array().abs()).sum();
}

namespace detail {

template <typename Scalar>
void check_weights(const VectorX<Scalar>& weights, Index p) {
  if (weights.size() != p)
    throw ConfigError("expected " + std::to_string(p) + " penalty weights, got " +
                      std::to_string(weights.size()));
  for (Index j = 0; j < p; ++j) {
    if (!(weights(j) >= Scalar(0)) || !std::isfinite(weights(j)))
      throw ConfigError("penalty weight " + std::to_string(j) + " must be finite and >= 0");
  }
}

/// Active-set step on the current support. With the support's signs held
/// fixed the objective is the quadratic minimized by
///   X_A'X_A b = X_A'y - t_A sign(beta_A).
/// If that minimizer flips a sign, moves toward it only until the first
/// penalized coordinate reaches zero, drops it and solves again. If X_A is
/// rank deficient, moves along a null direction of X_A (fit unchanged, penalty
/// non-increasing) until a penalized coordinate reaches zero. Every step stays
/// on a face where the objective is convex quadratic, so it never increases.
/// `support` must list exactly the nonzero entries of beta. Returns false,
/// leaving beta and r untouched, when no step is possible.
template <typename Scalar>
bool solve_on_support(const Eigen::Ref<const MatrixX<Scalar>>& X, const Eigen::Ref<const VectorX<Scalar>>& y,
                      const VectorX<Scalar>& threshold, std::vector<Index> support, VectorX<Scalar>& beta,
                      VectorX<Scalar>& r) {
  if (support.empty()) return false;
  VectorX<Scalar> next = beta;
  auto sign_of = [](Scalar v) { return v > Scalar(0) ? Scalar(1) : Scalar(-1); };

  // Gram matrix and X'y of the initial support; later supports are subsets.
  const std::vector<Index> initial = support;
  std::vector<Index> slot(support.size());
  for (std::size_t a = 0; a < slot.size(); ++a) slot[a] = static_cast<Index>(a);
  const MatrixX<Scalar> X0 = X(Eigen::all, initial);
  MatrixX<Scalar> gram0 = MatrixX<Scalar>::Zero(X0.cols(), X0.cols());
  gram0.template selfadjointView<Eigen::Lower>().rankUpdate(X0.transpose());
  gram0.template triangularView<Eigen::StrictlyUpper>() = gram0.transpose();
  const VectorX<Scalar> xty0 = X0.transpose() * y;
  Eigen::LDLT<MatrixX<Scalar>> ldlt;

  while (!support.empty()) {
    const auto k = static_cast<Index>(support.size());
    bool singular = k >= X.rows();
    MatrixX<Scalar> gram;
    if (!singular) {
      gram = gram0(slot, slot);
      ldlt.compute(gram);
      const auto d = ldlt.vectorD().cwiseAbs();
      singular = ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
                 !(d.minCoeff() > Scalar(1e-12) * d.maxCoeff());
    }

    if (singular) {
      const MatrixX<Scalar> Xa = X0(Eigen::all, slot);
      // Null space of X_A from a pivoted QR: X_A P = Q [R11 R12; 0 ~0] gives
      // kernel vectors P [-R11^{-1} R12; I].
      Eigen::ColPivHouseholderQR<MatrixX<Scalar>> qr(Xa);
      qr.setThreshold(Scalar(1e-10));
      const Index rank = qr.rank();
      if (rank >= k) return false;
      const auto R = qr.matrixR();
      const MatrixX<Scalar> R11 = R.topLeftCorner(rank, rank).template triangularView<Eigen::Upper>();
      const MatrixX<Scalar> coupling =
          R11.template triangularView<Eigen::Upper>().solve(R.topRightCorner(rank, k - rank));
      MatrixX<Scalar> kernel(k, k - rank);
      const auto& perm = qr.colsPermutation().indices();
      kernel.setZero();
      for (Index c = 0; c < k - rank; ++c) {
        for (Index a = 0; a < rank; ++a) kernel(perm(a), c) = -coupling(a, c);
        kernel(perm(rank + c), c) = Scalar(1);
      }

      std::vector<bool> dropped(static_cast<std::size_t>(k), false);
      bool moved = false;
      for (Index c = 0; c < kernel.cols(); ++c) {
        VectorX<Scalar> dir = kernel.col(c);
        Scalar slope(0);
        for (Index a = 0; a < k; ++a)
          slope += threshold(support[static_cast<std::size_t>(a)]) * sign_of(next(support[static_cast<std::size_t>(a)])) * dir(a);
        if (slope > Scalar(0)) dir = -dir;
        // First penalized coordinate driven to zero along d.
        auto first_zero = [&](const VectorX<Scalar>& d, Scalar& step) {
          Index blocking = -1;
          for (Index a = 0; a < k; ++a) {
            const Index j = support[static_cast<std::size_t>(a)];
            if (dropped[static_cast<std::size_t>(a)] || threshold(j) <= Scalar(0) || next(j) * d(a) >= Scalar(0))
              continue;
            const Scalar t = -next(j) / d(a);
            if (blocking < 0 || t < step) {
              step = t;
              blocking = a;
            }
          }
          return blocking;
        };
        Scalar step(0);
        Index blocking = first_zero(dir, step);
        if (blocking < 0 && slope == Scalar(0)) {
          dir = -dir;
          blocking = first_zero(dir, step);
        }
        if (blocking < 0) continue;
        for (Index a = 0; a < k; ++a)
          if (!dropped[static_cast<std::size_t>(a)]) next(support[static_cast<std::size_t>(a)]) += step * dir(a);
        next(support[static_cast<std::size_t>(blocking)]) = Scalar(0);
        dropped[static_cast<std::size_t>(blocking)] = true;
        moved = true;
        // Keep the remaining kernel vectors inside the reduced support.
        for (Index c2 = c + 1; c2 < kernel.cols(); ++c2)
          kernel.col(c2) -= (kernel(blocking, c2) / dir(blocking)) * dir;
      }
      if (!moved) return false;
      std::vector<Index> kept;
      std::vector<Index> kept_slot;
      for (Index a = 0; a < k; ++a) {
        if (dropped[static_cast<std::size_t>(a)]) continue;
        kept.push_back(support[static_cast<std::size_t>(a)]);
        kept_slot.push_back(slot[static_cast<std::size_t>(a)]);
      }
      support = std::move(kept);
      slot = std::move(kept_slot);
      continue;
    }

    VectorX<Scalar> rhs = xty0(slot);
    for (Index a = 0; a < k; ++a) {
      const Index j = support[static_cast<std::size_t>(a)];
      rhs(a) -= threshold(j) * sign_of(next(j));
    }
    const VectorX<Scalar> sol = ldlt.solve(rhs);
    if (!sol.allFinite() || ((gram * sol) - rhs).template lpNorm<Eigen::Infinity>() >
                                Scalar(1e-8) * (Scalar(1) + rhs.template lpNorm<Eigen::Infinity>()))
      return false;

    // Largest step in (0, 1] that keeps every penalized sign.
    Scalar step(1);
    Index blocking = -1;
    for (Index a = 0; a < k; ++a) {
      const Index j = support[static_cast<std::size_t>(a)];
      if (threshold(j) <= Scalar(0)) continue;
      const Scalar cur = next(j);
      if (sol(a) != Scalar(0) && (sol(a) > Scalar(0)) == (cur > Scalar(0))) continue;
      const Scalar t = cur / (cur - sol(a));
      if (blocking < 0 || t < step) {
        step = t;
        blocking = a;
      }
    }
    for (Index a = 0; a < k; ++a) {
      const Index j = support[static_cast<std::size_t>(a)];
      next(j) += step * (sol(a) - next(j));
    }
    if (blocking < 0) break;
    next(support[static_cast<std::size_t>(blocking)]) = Scalar(0);
    support.erase(support.begin() + blocking);
    slot.erase(slot.begin() + blocking);
  }
  // Coordinates outside the initial support are zero in both beta and next.
  r = y;
  r.noalias() -= X0 * next(initial);
  beta = std::move(next);
  return true;
}

}  // namespace detail

namespace detail {

// Carried along a lambda path: column norms and the gradient X'r seen by the
// last full sweep, used to screen columns at the next lambda.
template <typename Scalar>
struct PathState {
  VectorX<Scalar> col_sq;
  VectorX<Scalar> grad;
  Scalar prev_lambda{0};
  bool has_grad = false;
};

template <typename Scalar>
void check_fit_args(const Eigen::Ref<const MatrixX<Scalar>>& X, const Eigen::Ref<const VectorX<Scalar>>& y,
                    Scalar lambda, const VectorX<Scalar>& weights, const LassoOptions<Scalar>& options) {
  if (y.size() != X.rows()) throw ConfigError("response length does not match design rows");
  if (!(lambda >= Scalar(0)) || !std::isfinite(lambda))
    throw ConfigError("lambda must be finite and >= 0");
  if (!(options.tol > Scalar(0))) throw ConfigError("tolerance must be positive");
  if (options.max_iter < 1) throw ConfigError("max_iter must be at least 1");
  check_weights(weights, X.cols());
}

template <typename Scalar>
LassoFit<Scalar> fit_lasso_impl(const Eigen::Ref<const MatrixX<Scalar>>& X,
                                const Eigen::Ref<const VectorX<Scalar>>& y, Scalar lambda,
                                const VectorX<Scalar>& weights, const LassoOptions<Scalar>& options,
                                VectorX<Scalar> start, PathState<Scalar>& state) {
  const Index n = X.rows();
  const Index p = X.cols();
  LassoFit<Scalar> fit;
  fit.lambda = lambda;
  fit.weights = weights;
  fit.beta = std::move(start);

  const VectorX<Scalar>& col_sq = state.col_sq;
  VectorX<Scalar>& grad = state.grad;
  grad.resize(p);
  const VectorX<Scalar> threshold = lambda * weights;
  VectorX<Scalar> r = y;
  for (Index j = 0; j < p; ++j)
    if (fit.beta(j) != Scalar(0)) r.noalias() -= fit.beta(j) * X.col(j);

  auto update = [&](Index j) -> Scalar {
    if (col_sq(j) <= Scalar(0)) return Scalar(0);
    const Scalar old = fit.beta(j);
    const Scalar g = X.col(j).dot(r);
    grad(j) = g;
    const Scalar next = soft_threshold(g + col_sq(j) * old, threshold(j)) / col_sq(j);
    if (next == old) return Scalar(0);
    r.noalias() -= (next - old) * X.col(j);
    fit.beta(j) = next;
    return std::abs(next - old);
  };
  auto record = [&] {
    if (options.record_objective)
      fit.objective_trace.push_back(Scalar(0.5) * r.squaredNorm() +
                                    (threshold.array() * fit.beta.array().abs()).sum());
  };

  // Working set: all columns, or the strong set when a previous gradient is
  // available. Only a sweep over every column can declare convergence.
  std::vector<Index> working;
  auto add_nonzero = [&](std::vector<Index>& set) {
    std::vector<bool> in(static_cast<std::size_t>(p), false);
    for (Index j : set) in[static_cast<std::size_t>(j)] = true;
    for (Index j = 0; j < p; ++j)
      if (fit.beta(j) != Scalar(0) && !in[static_cast<std::size_t>(j)]) set.push_back(j);
    std::sort(set.begin(), set.end());
  };
  bool full = !state.has_grad;
  if (!full) {
    const Scalar cut = Scalar(2) * lambda - state.prev_lambda;
    for (Index j = 0; j < p; ++j)
      if (fit.beta(j) != Scalar(0) || weights(j) == Scalar(0) || std::abs(grad(j)) >= weights(j) * cut)
        working.push_back(j);
    full = static_cast<Index>(working.size()) == p;
  }

  constexpr int kSupportRetry = 8;
  std::vector<Index> active;
  active.reserve(static_cast<std::size_t>(std::min(n, p)) + 8);
  int sweeps = 0;
  while (sweeps < options.max_iter) {
    Scalar max_change(0);
    if (full) {
      for (Index j = 0; j < p; ++j) max_change = std::max(max_change, update(j));
    } else {
      for (Index j : working) max_change = std::max(max_change, update(j));
    }
    ++sweeps;
    record();
    if (max_change < options.tol) {
      if (full) {
        fit.converged = true;
        break;
      }
      full = true;
      continue;
    }
    if (full && state.has_grad) {
      add_nonzero(working);
      full = static_cast<Index>(working.size()) == p;
    }
    active.clear();
    for (Index j = 0; j < p; ++j)
      if (fit.beta(j) != Scalar(0)) active.push_back(j);
    if (solve_on_support<Scalar>(X, y, threshold, active, fit.beta, r)) continue;
    for (int inner = 1; sweeps < options.max_iter; ++inner) {
      max_change = Scalar(0);
      for (Index j : active) max_change = std::max(max_change, update(j));
      ++sweeps;
      record();
      if (max_change < options.tol) break;
      if (inner % kSupportRetry == 0) {
        std::erase_if(active, [&](Index j) { return fit.beta(j) == Scalar(0); });
        if (solve_on_support<Scalar>(X, y, threshold, active, fit.beta, r)) break;
      }
    }
  }

  state.prev_lambda = lambda;
  state.has_grad = fit.converged;
  fit.iterations = sweeps;
  fit.intercept = y.mean();
  for (Index j = 0; j < p; ++j)
    if (fit.beta(j) != Scalar(0)) fit.intercept -= X.col(j).mean() * fit.beta(j);
  fit.ranked = rank_coefficients(fit.beta, weights);
  return fit;
}

}  // namespace detail

/// Cyclic coordinate descent for the weighted Lasso
///   min 1/2 ||y - X beta||^2 + lambda * sum_j w_j |beta_j|
/// A full sweep over every column is followed by an active-set solve on the
/// current support or, if that system is singular, by sweeps restricted to the
/// nonzero set. The fit is converged once a full sweep moves no
/// coefficient by tol or more. Columns with zero norm stay at zero.
template <typename Scalar>
LassoFit<Scalar> fit_lasso(const Eigen::Ref<const MatrixX<Scalar>>& X,
                           const Eigen::Ref<const VectorX<Scalar>>& y, Scalar lambda,
                           const VectorX<Scalar>& weights, const LassoOptions<Scalar>& options = {},
                           const VectorX<Scalar>* warm_start = nullptr) {
  detail::check_fit_args<Scalar>(X, y, lambda, weights, options);
  VectorX<Scalar> start = warm_start ? *warm_start : VectorX<Scalar>::Zero(X.cols());
  if (start.size() != X.cols()) throw ConfigError("warm start has wrong length");
  detail::PathState<Scalar> state;
  state.col_sq = X.colwise().squaredNorm().transpose();
  return detail::fit_lasso_impl<Scalar>(X, y, lambda, weights, options, std::move(start), state);
}

template <typename Scalar>
LassoFit<Scalar> fit_lasso(const BasicDataset<Scalar>& data, Scalar lambda,
                           const VectorX<Scalar>& weights, const LassoOptions<Scalar>& options = {}) {
  return fit_lasso<Scalar>(data.X, data.y, lambda, weights, options);
}

template <typename Scalar>
LassoFit<Scalar> fit_lasso(const BasicDataset<Scalar>& data, Scalar lambda,
                           const LassoOptions<Scalar>& options = {}) {
  return fit_lasso<Scalar>(data.X, data.y, lambda, VectorX<Scalar>::Ones(data.X.cols()), options);
}

/// Coefficients along a descending lambda grid, each fit warm-started from the
/// previous one. Column l of `beta` belongs to grid[l].
template <typename Scalar>
struct LassoPath {
  MatrixX<Scalar> beta;
  std::vector<int> iterations;
  int nonconverged = 0;
};

template <typename Scalar>
LassoPath<Scalar> fit_lasso_path(const Eigen::Ref<const MatrixX<Scalar>>& X,
                                 const Eigen::Ref<const VectorX<Scalar>>& y,
                                 const std::vector<Scalar>& grid, const VectorX<Scalar>& weights,
                                 const LassoOptions<Scalar>& options = {}) {
  LassoPath<Scalar> path;
  path.beta.resize(X.cols(), static_cast<Index>(grid.size()));
  VectorX<Scalar> warm = VectorX<Scalar>::Zero(X.cols());
  // Screening assumes the grid decreases; otherwise every fit sweeps all columns.
  const bool decreasing = std::is_sorted(grid.rbegin(), grid.rend());
  detail::PathState<Scalar> state;
  state.col_sq = X.colwise().squaredNorm().transpose();
  for (std::size_t l = 0; l < grid.size(); ++l) {
    detail::check_fit_args<Scalar>(X, y, grid[l], weights, options);
    if (!decreasing) state.has_grad = false;
    LassoFit<Scalar> fit = detail::fit_lasso_impl<Scalar>(X, y, grid[l], weights, options, warm, state);
    path.iterations.push_back(fit.iterations);
    if (!fit.converged) ++path.nonconverged;
    path.beta.col(static_cast<Index>(l)) = fit.beta;
    warm = std::move(fit.beta);
  }
  return path;
}

/// Smallest lambda at which every penalized coefficient is zero. Unpenalized
/// (zero-weight) columns are first regressed out of y by least squares; with
/// none present this is max_j |X_j' y| / w_j.
template <typename Scalar>
Scalar lambda_max(const Eigen::Ref<const MatrixX<Scalar>>& X,
                  const Eigen::Ref<const VectorX<Scalar>>& y, const VectorX<Scalar>& weights) {
  detail::check_weights(weights, X.cols());
  std::vector<Index> forced;
  std::vector<Index> penalized;
  for (Index j = 0; j < X.cols(); ++j) (weights(j) > Scalar(0) ? penalized : forced).push_back(j);
  if (penalized.empty()) throw ConfigError("every column has weight zero; nothing to penalize");

  VectorX<Scalar> r = y;
  if (!forced.empty()) {
    MatrixX<Scalar> Xf(X.rows(), static_cast<Index>(forced.size()));
    for (std::size_t k = 0; k < forced.size(); ++k) Xf.col(static_cast<Index>(k)) = X.col(forced[k]);
    const VectorX<Scalar> coef = Xf.completeOrthogonalDecomposition().solve(y);
    r -= Xf * coef;
  }
  Scalar best(0);
  for (Index j : penalized) best = std::max(best, std::abs(X.col(j).dot(r)) / weights(j));
  return best;
}

template <typename Scalar>
Scalar lambda_max(const BasicDataset<Scalar>& data, const VectorX<Scalar>& weights) {
  return lambda_max<Scalar>(data.X, data.y, weights);
}

/// `count` log-spaced values from lmax down to lmax * ratio.
template <typename Scalar>
std::vector<Scalar> lambda_grid(Scalar lmax, int count, Scalar ratio) {
  if (!(lmax > Scalar(0)) || !std::isfinite(lmax)) throw ConfigError("lambda grid needs lmax > 0");
  if (count < 2) throw ConfigError("lambda grid needs at least 2 values");
  if (!(ratio > Scalar(0) && ratio < Scalar(1))) throw ConfigError("lambda grid ratio must be in (0, 1)");
  std::vector<Scalar> grid(static_cast<std::size_t>(count));
  const Scalar step = std::log(ratio) / static_cast<Scalar>(count - 1);
  grid[0] = lmax;
  for (int i = 1; i < count; ++i) grid[static_cast<std::size_t>(i)] = lmax * std::exp(step * static_cast<Scalar>(i));
  return grid;
}

template <typename Scalar>
struct KktReport {
  bool pass = true;
  Scalar worst_violation{0};
  Index worst_column = -1;
  VectorX<Scalar> violation;
};

/// Checks the weighted-Lasso optimality conditions with r = y - X beta:
/// active columns need X_j'r = lambda w_j sign(beta_j), inactive ones
/// |X_j'r| <= lambda w_j, and unpenalized ones X_j'r = 0.
template <typename Scalar>
KktReport<Scalar> kkt_check(const LassoFit<Scalar>& fit, const Eigen::Ref<const MatrixX<Scalar>>& X,
                            const Eigen::Ref<const VectorX<Scalar>>& y, Scalar tol) {
  const VectorX<Scalar> r = y - X * fit.beta;
  const VectorX<Scalar> grad = X.transpose() * r;
  KktReport<Scalar> report;
  report.violation.resize(X.cols());
  for (Index j = 0; j < X.cols(); ++j) {
    const Scalar bound = fit.lambda * fit.weights(j);
    Scalar v;
    if (fit.weights(j) == Scalar(0)) {
      v = std::abs(grad(j));
    } else if (fit.beta(j) != Scalar(0)) {
      v = std::abs(grad(j) - bound * (fit.beta(j) > 0 ? Scalar(1) : Scalar(-1)));
    } else {
      v = std::max(Scalar(0), std::abs(grad(j)) - bound);
    }
    report.violation(j) = v;
    if (v > report.worst_violation || report.worst_column < 0) {
      report.worst_violation = v;
      report.worst_column = j;
    }
  }
  report.pass = report.worst_violation <= tol;
  return report;
}

template <typename Scalar>
KktReport<Scalar> kkt_check(const LassoFit<Scalar>& fit, const BasicDataset<Scalar>& data, Scalar tol) {
  return kkt_check<Scalar>(fit, data.X, data.y, tol);
}

/// Pearson correlation of each column with y; NaN where either side is constant.
template <typename Scalar>
VectorX<Scalar> marginal_correlation(const BasicDataset<Scalar>& data) {
  if (data.X.rows() < 3) throw DataError("marginal correlation needs at least 3 observations");
  const VectorX<Scalar> yc = data.y.array() - data.y.mean();
  const Scalar y_norm = yc.norm();
  VectorX<Scalar> out(data.X.cols());
  for (Index j = 0; j < data.X.cols(); ++j) {
    const auto col = data.X.col(j);
    if ((col.array() == col(0)).all() || y_norm == Scalar(0)) {
      out(j) = std::numeric_limits<Scalar>::quiet_NaN();
      continue;
    }
    const VectorX<Scalar> xc = col.array() - col.mean();
    out(j) = xc.dot(yc) / (xc.norm() * y_norm);
  }
  return out;
}

}  // namespace lassoinf
