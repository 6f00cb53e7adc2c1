#pragma once

#include "hopf/grid.hpp"
#include "hopf/quaternion.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hopf {

class HomogeneousPair;

/// Number of geometric slots of a k-form in three dimensions: C(3, k).
int slot_count(int degree);

/// Axes of a slot as a sorted index set, e.g. degree 2 slot 1 is {0, 2}.
const std::vector<int>& slot_axes(int degree, int slot);

/// Slot holding the given sorted axis set, or -1.
int slot_of(int degree, const std::vector<int>& axes);

/// A V-valued discrete k-form on a periodic grid, stored site-collocated.
///
/// Layout: data[(site * slots + slot) * dim + component], sites x-fastest. The slot of
/// a k-form is a sorted k-subset of {0, 1, 2}; a k-form is its coefficient on
/// dx^{i1} ^ ... ^ dx^{ik} with i1 < ... < ik.
class LatticeField {
 public:
  LatticeField() = default;
  LatticeField(const Grid& grid, int degree, int dim);

  const Grid& grid() const { return grid_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }
  int slots() const { return slots_; }
  std::size_t sites() const { return grid_.sites(); }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  double* at(std::size_t site, int slot = 0) { return data_.data() + offset(site, slot); }
  const double* at(std::size_t site, int slot = 0) const { return data_.data() + offset(site, slot); }

  Vec3 vec3(std::size_t site, int slot = 0) const {
    const double* p = at(site, slot);
    return {p[0], p[1], p[2]};
  }
  void set_vec3(std::size_t site, int slot, const Vec3& v) {
    double* p = at(site, slot);
    p[0] = v.x();
    p[1] = v.y();
    p[2] = v.z();
  }

  bool finite() const;
  double max_abs() const;
  bool same_shape(const LatticeField& o) const;

  LatticeField& operator+=(const LatticeField& o);
  LatticeField& operator-=(const LatticeField& o);
  LatticeField& operator*=(double s);

 private:
  std::size_t offset(std::size_t site, int slot) const {
    return (site * static_cast<std::size_t>(slots_) + slot) * static_cast<std::size_t>(dim_);
  }

  Grid grid_{};
  int degree_ = 0;
  int dim_ = 1;
  int slots_ = 1;
  std::vector<double> data_;
};

LatticeField operator+(LatticeField a, const LatticeField& b);
LatticeField operator-(LatticeField a, const LatticeField& b);
LatticeField operator*(double s, LatticeField a);

/// Largest absolute component difference; throws on shape mismatch.
double max_abs_diff(const LatticeField& a, const LatticeField& b);

/// Bilinear map on values used by wedge.
struct BilinearProduct {
  std::string name;
  int left_dim = 0;
  int right_dim = 0;
  int out_dim = 0;
  std::function<void(const double*, const double*, double*)> apply;

  /// Hamilton product; operands of dimension 3 are imaginary, 4 are (w, x, y, z).
  /// The output always has four components, real part first.
  static BilinearProduct quaternion(int left_dim = 3, int right_dim = 3);
  /// su2 bracket [a, b] = 2 a x b.
  static BilinearProduct su2_bracket();
  static BilinearProduct cross();
  /// Generic Lie bracket in the coefficients of pair.
  static BilinearProduct lie_bracket(const HomogeneousPair& pair);
  /// Matrix product in the defining representation; output is the complex matrix
  /// flattened row-major as (re, im) pairs.
  static BilinearProduct matrix(const HomogeneousPair& pair);
  /// Scalar (dimension 1) on the left times a dim-vector on the right, or the reverse.
  static BilinearProduct scalar_left(int dim);
  static BilinearProduct scalar_right(int dim);
  /// Euclidean dot product, scalar output.
  static BilinearProduct dot(int dim);
};

/// Forward-difference exterior derivative with periodic wrap:
/// (d a)_I = sum_p (-1)^p D+_{I_p} a_{I \ I_p}. Throws for degree 3.
LatticeField d(const LatticeField& form);

/// (a ^ b)_I = sum over splits I = A u B, |A| = deg a, of sign(A, B) * product(a_A, b_B),
/// evaluated site-wise. For 1-forms this is a_mu b_nu - a_nu b_mu on the (mu, nu) slot.
LatticeField wedge(const LatticeField& a, const LatticeField& b, const BilinearProduct& product);

/// sum over sites, slots, components of a*b times h^3.
double l2_inner(const LatticeField& a, const LatticeField& b);
double l2_norm(const LatticeField& a);

/// sum over sites of the 3-form times h^3, one entry per component.
std::vector<double> integrate_3form(const LatticeField& form);

/// sum over sites of a 0-form scalar density times h^3.
double integrate_density(const LatticeField& density);

}  // namespace hopf
