#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nashtoric/lattice.hpp"

namespace nashtoric {

/// A rational polyhedral cone in R^d carrying both descriptions.
///
/// V-description: primitive extreme rays plus a basis of the lineality space
/// (empty for pointed cones). H-description: primitive normals n with
/// <n, x> >= 0; implicit equalities appear as a pair n, -n. Both are computed
/// by the double description method and stored sorted, so two cones built
/// from different descriptions of the same set compare equal.
class RationalCone {
 public:
  RationalCone() = default;

  /// cone(generators). An empty generator list gives the origin.
  static RationalCone from_generators(std::size_t dim, std::span<const LatticeVector> generators);
  /// { x : <n, x> >= 0 for every n in normals }.
  static RationalCone from_inequalities(std::size_t dim, std::span<const LatticeVector> normals);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const std::vector<LatticeVector>& lines() const noexcept { return lines_; }
  const std::vector<LatticeVector>& halfspaces() const noexcept { return halfspaces_; }

  bool is_pointed() const noexcept { return lines_.empty(); }
  bool is_full_dimensional() const noexcept { return !has_equalities_; }
  /// Number of linearly independent directions spanned by the cone.
  std::size_t cone_dimension() const;

  bool contains(const LatticeVector& x) const;
  bool contains(std::span<const Rational> x) const;
  /// Strict inequality on every halfspace normal.
  bool contains_in_interior(const LatticeVector& x) const;

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.lines_ == b.lines_ && a.halfspaces_ == b.halfspaces_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> lines_;
  std::vector<LatticeVector> halfspaces_;
  bool has_equalities_ = false;
};

/// Result of the double description method on { x : <a_i, x> >= 0 }.
struct DoubleDescription {
  std::vector<LatticeVector> rays;   // primitive, sorted
  std::vector<LatticeVector> lines;  // lineality basis
};

DoubleDescription double_description(std::size_t dim, std::span<const LatticeVector> constraints);

RationalCone dual_cone(const RationalCone& c);

bool is_pointed(const RationalCone& c);

/// An integer point strictly inside a full-dimensional cone. Throws
/// not_full_dimensional otherwise.
LatticeVector interior_point(const RationalCone& c);

/// A linear form strictly positive on every nonzero point of a pointed cone.
LatticeVector positive_grading(const RationalCone& c);

/// Placing triangulation into simplicial cones spanned by extreme rays,
/// pulling the lexicographically smallest ray of every face first.
std::vector<RationalCone> triangulate(const RationalCone& c);
/// The same triangulation as lists of d spanning rays.
std::vector<std::vector<LatticeVector>> triangulation_rays(const RationalCone& c);

/// All lattice points sum(l_i u_i) with 0 <= l_i < 1 for linearly independent
/// u_1..u_d; there are exactly |det(u)| of them. Sorted lexicographically.
std::vector<LatticeVector> parallelepiped_points(std::span<const LatticeVector> spanning);

struct HilbertBasis {
  RationalCone cone;
  std::vector<LatticeVector> elements;  // sorted lexicographically
};

/// Minimal generating set of the semigroup c ∩ Z^d for a pointed
/// full-dimensional cone.
HilbertBasis hilbert_basis(const RationalCone& c);

}  // namespace nashtoric
