#pragma once

#include <string>
#include <vector>

#include "ergo/action.hpp"

namespace ergo {

/// Certificate-side output of the local spectral gap computation.
/// lambda2 is the minimum of sum_{g in B_k} ||g.f - f||^2_{Y,2} over f with
/// zero Y-mean and unit Y-norm; kappa_upper = 1/sqrt(lambda2) bounds the
/// constant in the sum-of-norms inequality from above since a sum of
/// nonnegative terms dominates the square root of the sum of squares.
struct SpectralReport {
  double lambda2 = 0;
  double kappa_upper = 0;
  bool degenerate = false;  // zero-mean constraint forces f = 0 on Y
  bool no_gap = false;      // lambda2 vanishes: no certificate
  std::string method = "dense-eig";
  double residual = 0;
};

/// Dense generalized eigen-solve on finite-atom measure-preserving models.
/// Off-Y atom values are eliminated by a Schur complement, so the
/// minimization truly ranges over all of L^2(X).
SpectralReport local_spectral_gap(const ActionModel& action, const Set& domain, int k,
                                  int dense_cutoff = 2000, double iterative_tol = 1e-10);

/// lambda_2 of the normalized Laplacian of a simple graph given as a 0/1
/// adjacency matrix. Isolated vertices contribute zero rows.
double normalized_laplacian_lambda2(const std::vector<std::vector<int>>& adjacency);

}  // namespace ergo
