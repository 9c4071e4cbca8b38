#include "ergo/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace ergo {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// smallest eigenvalue and residual of a symmetric matrix
std::pair<double, double> min_eig_dense(const MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  double lambda = es.eigenvalues()(0);
  VectorXd v = es.eigenvectors().col(0);
  double res = (m * v - lambda * v).norm();
  return {lambda, res};
}

// shifted power iteration for the smallest eigenvalue; used past the dense
// cutoff where an O(n^3) solve is unwanted
std::pair<double, double> min_eig_iterative(const MatrixXd& m, double tol) {
  const int n = static_cast<int>(m.rows());
  double shift = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += std::abs(m(i, j));
    shift = std::max(shift, row);
  }
  MatrixXd sh = MatrixXd::Identity(n, n) * shift - m;
  VectorXd v = VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int i = 0; i < n; ++i) v(i) += 1e-3 * std::sin(static_cast<double>(i + 1));
  v.normalize();
  double mu = 0, res = std::numeric_limits<double>::max();
  for (int it = 0; it < 200000 && res > tol; ++it) {
    VectorXd w = sh * v;
    mu = v.dot(w);
    double norm = w.norm();
    if (norm == 0) break;  // m == shift*I
    v = w / norm;
    res = (sh * v - mu * v).norm();
  }
  double lambda = shift - mu;
  VectorXd check = m * v - lambda * v;
  return {lambda, check.norm()};
}

}  // namespace

double normalized_laplacian_lambda2(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n < 2) return 0;
  VectorXd deg(n);
  for (int i = 0; i < n; ++i) {
    double d = 0;
    for (int j = 0; j < n; ++j) d += adjacency[i][j];
    deg(i) = d;
  }
  MatrixXd l = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (deg(i) == 0) continue;
    l(i, i) = 1;
    for (int j = 0; j < n; ++j)
      if (adjacency[i][j] && deg(j) > 0)
        l(i, j) -= 1.0 / std::sqrt(deg(i) * deg(j));
  }
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(l);
  return std::max(0.0, es.eigenvalues()(1));
}

SpectralReport local_spectral_gap(const ActionModel& action, const Set& domain, int k,
                                  int dense_cutoff, double iterative_tol) {
  if (action.space().kind != Space::Kind::atoms)
    throw NotMeasurePreserving("local spectral gap needs a finite-atom model");
  if (!action.is_measure_preserving())
    throw NotMeasurePreserving("local spectral gap is defined for measure-preserving actions");

  const auto& space = action.space().atom_space;
  const int n = space.atom_count;
  const AtomSet& y = std::get<AtomSet>(domain);
  std::vector<int> y_atoms = y.atoms();
  const int ny = static_cast<int>(y_atoms.size());

  SpectralReport report;
  if (ny == 0) throw EmptyDomain("local spectral gap over an empty domain");
  if (ny == 1) {
    // zero Y-mean forces f = 0 on the single atom; the unit-norm constraint
    // is infeasible
    report.degenerate = true;
    report.no_gap = true;
    report.kappa_upper = std::numeric_limits<double>::infinity();
    return report;
  }

  // quadratic form sum_{g in B_k} sum_{x in Y} w_x (f(g^-1 x) - f(x))^2
  MatrixXd l = MatrixXd::Zero(n, n);
  auto ball = action.group().ball(k);
  for (const auto& [g, len] : ball) {
    if (g.is_identity()) continue;
    std::vector<int> inv_perm = action.element_permutation(action.group().inverse(g));
    for (int x : y_atoms) {
      double w = to_double(space.weights[x]);
      int j = inv_perm[x];
      l(x, x) += w;
      l(j, j) += w;
      l(x, j) -= w;
      l(j, x) -= w;
    }
  }

  // Schur-eliminate the off-Y coordinates: min over the free values is
  // attained at C z = -B^T y_vec
  std::vector<int> o_atoms;
  {
    std::vector<bool> in_y(n, false);
    for (int x : y_atoms) in_y[x] = true;
    for (int i = 0; i < n; ++i)
      if (!in_y[i]) o_atoms.push_back(i);
  }
  const int no = static_cast<int>(o_atoms.size());
  MatrixXd a(ny, ny), b(ny, no), c(no, no);
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < ny; ++j) a(i, j) = l(y_atoms[i], y_atoms[j]);
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < no; ++j) b(i, j) = l(y_atoms[i], o_atoms[j]);
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j) c(i, j) = l(o_atoms[i], o_atoms[j]);
  MatrixXd s = a;
  if (no > 0) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> ces(c);
    VectorXd ev = ces.eigenvalues();
    double cutoff = 1e-12 * std::max(1.0, ev.cwiseAbs().maxCoeff());
    VectorXd inv = ev;
    for (int i = 0; i < no; ++i) inv(i) = ev(i) > cutoff ? 1.0 / ev(i) : 0.0;
    MatrixXd pinv = ces.eigenvectors() * inv.asDiagonal() * ces.eigenvectors().transpose();
    s -= b * pinv * b.transpose();
  }
  s = 0.5 * (s + s.transpose());

  // substitute u = W^{1/2} f|_Y and project out the weighted constant
  VectorXd sqw(ny);
  for (int i = 0; i < ny; ++i) sqw(i) = std::sqrt(to_double(space.weights[y_atoms[i]]));
  MatrixXd t(ny, ny);
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < ny; ++j) t(i, j) = s(i, j) / (sqw(i) * sqw(j));
  VectorXd q = sqw.normalized();
  Eigen::HouseholderQR<MatrixXd> qr(q);
  MatrixXd full = qr.householderQ() * MatrixXd::Identity(ny, ny);
  MatrixXd v = full.rightCols(ny - 1);
  MatrixXd reduced = v.transpose() * t * v;
  reduced = 0.5 * (reduced + reduced.transpose());

  double lambda, residual;
  if (ny - 1 < dense_cutoff) {
    std::tie(lambda, residual) = min_eig_dense(reduced);
    report.method = "dense-eig";
  } else {
    std::tie(lambda, residual) = min_eig_iterative(reduced, iterative_tol);
    report.method = "iterative";
  }
  lambda = std::max(0.0, lambda);
  report.lambda2 = lambda;
  report.residual = residual;
  double scale = std::max(1.0, reduced.cwiseAbs().maxCoeff());
  if (lambda <= 1e-12 * scale) {
    report.no_gap = true;
    report.kappa_upper = std::numeric_limits<double>::infinity();
  } else {
    report.kappa_upper = 1.0 / std::sqrt(lambda);
  }
  return report;
}

}  // namespace ergo
