#pragma once

#include "hopf/quaternion.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace hopf {

/// Coefficients of a Lie algebra element in an orthonormal basis of g.
using LieVector = Eigen::VectorXd;
/// Element of G in its defining (matrix) representation.
using GroupMatrix = Eigen::MatrixXcd;

/// A compact group G with closed subgroup H, realized by matrices.
///
/// The inner product on g is <X, Y> = -1/2 Re tr(XY), for which the chosen basis
/// is orthonormal: {i, j, k} for su2 and {i lambda_a} (Gell-Mann) for su3. Energies
/// therefore carry this normalization; other bi-invariant metrics rescale them.
class HomogeneousPair {
 public:
  /// SU2 / U1 = CP1, symmetric.
  static HomogeneousPair su2_u1();
  /// SU2 / {1}: the group-valued Skyrme model.
  static HomogeneousPair su2_group();
  /// SU3 / T2: the complete flag manifold, not symmetric.
  static HomogeneousPair su3_flag();

  const std::string& name() const { return name_; }
  int dim_g() const { return static_cast<int>(basis_.size()); }
  int dim_h() const { return static_cast<int>(h_basis_.size()); }
  int matrix_size() const { return matrix_size_; }
  bool symmetric() const { return symmetric_; }
  const std::vector<int>& h_basis() const { return h_basis_; }
  /// Partition of basis indices into simple factors g_1, ..., g_N.
  const std::vector<std::vector<int>>& simple_blocks() const { return blocks_; }
  const std::vector<Eigen::MatrixXcd>& basis() const { return basis_; }

  /// c_abc with [e_a, e_b] = sum_c c_abc e_c.
  double structure_constant(int a, int b, int c) const;

  LieVector bracket(const LieVector& x, const LieVector& y) const;
  Eigen::MatrixXcd to_matrix(const LieVector& x) const;
  /// Orthogonal projection of an arbitrary matrix onto g, in coefficients.
  LieVector from_matrix(const Eigen::MatrixXcd& m) const;

  /// Ad_*(g) x = g x g^-1. Throws if g is not unitary within 1e-10.
  LieVector adjoint(const GroupMatrix& g, const LieVector& x) const;
  GroupMatrix exp(const LieVector& x) const;
  bool is_group_element(const GroupMatrix& g, double tol = 1e-10) const;

  const Eigen::MatrixXd& proj_h() const { return proj_h_; }
  const Eigen::MatrixXd& proj_hperp() const { return proj_hperp_; }
  LieVector project_h(const LieVector& x) const { return proj_h_ * x; }
  LieVector project_hperp(const LieVector& x) const { return proj_hperp_ * x; }

  /// Max violation of [h,h] in h, [h,h_perp] in h_perp and, when symmetric, [h_perp,h_perp] in h.
  double subalgebra_residual() const;
  double symmetric_residual() const;

 private:
  HomogeneousPair(std::string name, std::vector<Eigen::MatrixXcd> basis, std::vector<int> h_basis,
                  bool symmetric);

  std::string name_;
  int matrix_size_ = 0;
  bool symmetric_ = false;
  std::vector<Eigen::MatrixXcd> basis_;
  std::vector<int> h_basis_;
  std::vector<std::vector<int>> blocks_;
  std::vector<double> structure_;  // dim^3, index (a*dim + b)*dim + c
  Eigen::MatrixXd proj_h_;
  Eigen::MatrixXd proj_hperp_;
};

/// 2x2 complex matrix of a quaternion under z + w j -> [[z, w], [-conj(w), conj(z)]].
Eigen::Matrix2cd su2_matrix(const Quaternion& q);
Quaternion quaternion_from_su2(const Eigen::Matrix2cd& m);

}  // namespace hopf
