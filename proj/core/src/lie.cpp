#include "hopf/lie.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hopf {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

double inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return -0.5 * (a * b).trace().real();
}

std::vector<Eigen::MatrixXcd> su2_basis() {
  return {su2_matrix(kQuatI), su2_matrix(kQuatJ), su2_matrix(kQuatK)};
}

std::vector<Eigen::MatrixXcd> su3_basis() {
  std::vector<Eigen::Matrix3cd> lambda(8, Eigen::Matrix3cd::Zero());
  lambda[0](0, 1) = lambda[0](1, 0) = 1.0;
  lambda[1](0, 1) = -kI;
  lambda[1](1, 0) = kI;
  lambda[2](0, 0) = 1.0;
  lambda[2](1, 1) = -1.0;
  lambda[3](0, 2) = lambda[3](2, 0) = 1.0;
  lambda[4](0, 2) = -kI;
  lambda[4](2, 0) = kI;
  lambda[5](1, 2) = lambda[5](2, 1) = 1.0;
  lambda[6](1, 2) = -kI;
  lambda[6](2, 1) = kI;
  const double s = 1.0 / std::sqrt(3.0);
  lambda[7](0, 0) = s;
  lambda[7](1, 1) = s;
  lambda[7](2, 2) = -2.0 * s;
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& l : lambda) out.emplace_back(kI * l);
  return out;
}

}  // namespace

Eigen::Matrix2cd su2_matrix(const Quaternion& q) {
  const cd z{q.w, q.x};
  const cd w{q.y, q.z};
  Eigen::Matrix2cd m;
  m << z, w, -std::conj(w), std::conj(z);
  return m;
}

Quaternion quaternion_from_su2(const Eigen::Matrix2cd& m) {
  const cd z = m(0, 0);
  const cd w = m(0, 1);
  return {z.real(), z.imag(), w.real(), w.imag()};
}

HomogeneousPair::HomogeneousPair(std::string name, std::vector<Eigen::MatrixXcd> basis,
                                 std::vector<int> h_basis, bool symmetric)
    : name_(std::move(name)),
      matrix_size_(static_cast<int>(basis.front().rows())),
      symmetric_(symmetric),
      basis_(std::move(basis)),
      h_basis_(std::move(h_basis)) {
  const int n = dim_g();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (std::abs(inner(basis_[a], basis_[b]) - (a == b ? 1.0 : 0.0)) > 1e-13)
        throw std::logic_error("HomogeneousPair: basis is not orthonormal");

  structure_.resize(static_cast<size_t>(n) * n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Eigen::MatrixXcd comm = basis_[a] * basis_[b] - basis_[b] * basis_[a];
      for (int c = 0; c < n; ++c) structure_[(a * n + b) * n + c] = inner(basis_[c], comm);
    }
  }

  proj_h_ = Eigen::MatrixXd::Zero(n, n);
  for (int idx : h_basis_) proj_h_(idx, idx) = 1.0;
  proj_hperp_ = Eigen::MatrixXd::Identity(n, n) - proj_h_;

  // su2 and su3 are simple.
  std::vector<int> all(n);
  for (int a = 0; a < n; ++a) all[a] = a;
  blocks_.push_back(std::move(all));
}

HomogeneousPair HomogeneousPair::su2_u1() { return {"su2_u1", su2_basis(), {0}, true}; }

HomogeneousPair HomogeneousPair::su2_group() { return {"su2_group", su2_basis(), {}, true}; }

HomogeneousPair HomogeneousPair::su3_flag() { return {"su3_flag", su3_basis(), {2, 7}, false}; }

double HomogeneousPair::structure_constant(int a, int b, int c) const {
  const int n = dim_g();
  return structure_[(a * n + b) * n + c];
}

LieVector HomogeneousPair::bracket(const LieVector& x, const LieVector& y) const {
  const int n = dim_g();
  LieVector out = LieVector::Zero(n);
  for (int a = 0; a < n; ++a) {
    if (x[a] == 0.0) continue;
    for (int b = 0; b < n; ++b) {
      const double xy = x[a] * y[b];
      if (xy == 0.0) continue;
      for (int c = 0; c < n; ++c) out[c] += xy * structure_[(a * n + b) * n + c];
    }
  }
  return out;
}

Eigen::MatrixXcd HomogeneousPair::to_matrix(const LieVector& x) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(matrix_size_, matrix_size_);
  for (int a = 0; a < dim_g(); ++a) m += x[a] * basis_[a];
  return m;
}

LieVector HomogeneousPair::from_matrix(const Eigen::MatrixXcd& m) const {
  LieVector out(dim_g());
  for (int a = 0; a < dim_g(); ++a) out[a] = inner(basis_[a], m);
  return out;
}

bool HomogeneousPair::is_group_element(const GroupMatrix& g, double tol) const {
  if (g.rows() != matrix_size_ || g.cols() != matrix_size_) return false;
  const Eigen::MatrixXcd defect =
      g * g.adjoint() - Eigen::MatrixXcd::Identity(matrix_size_, matrix_size_);
  return defect.cwiseAbs().maxCoeff() <= tol && std::abs(g.determinant() - cd{1.0, 0.0}) <= tol;
}

LieVector HomogeneousPair::adjoint(const GroupMatrix& g, const LieVector& x) const {
  if (!is_group_element(g)) throw std::invalid_argument("adjoint: element is not in the group");
  return from_matrix(g * to_matrix(x) * g.adjoint());
}

GroupMatrix HomogeneousPair::exp(const LieVector& x) const { return to_matrix(x).exp(); }

double HomogeneousPair::subalgebra_residual() const {
  double worst = 0.0;
  const int n = dim_g();
  for (int a : h_basis_) {
    LieVector ea = LieVector::Unit(n, a);
    for (int b = 0; b < n; ++b) {
      const LieVector br = bracket(ea, LieVector::Unit(n, b));
      const bool b_in_h = proj_h_(b, b) == 1.0;
      const LieVector leak = b_in_h ? project_hperp(br) : project_h(br);
      worst = std::max(worst, leak.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double HomogeneousPair::symmetric_residual() const {
  double worst = 0.0;
  const int n = dim_g();
  for (int a = 0; a < n; ++a) {
    if (proj_h_(a, a) == 1.0) continue;
    for (int b = 0; b < n; ++b) {
      if (proj_h_(b, b) == 1.0) continue;
      const LieVector br = bracket(LieVector::Unit(n, a), LieVector::Unit(n, b));
      worst = std::max(worst, project_hperp(br).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace hopf
