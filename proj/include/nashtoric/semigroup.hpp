#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "nashtoric/cone.hpp"
#include "nashtoric/lattice.hpp"

namespace nashtoric {

/// A finitely generated semigroup Γ = <γ_1, ..., γ_n>_N in Z^d.
///
/// Construction enforces that cone(Γ) is pointed and that Γ generates Z^d as
/// a group. Values are immutable and cheap to copy; minimal generators and
/// the saturation flag are computed on first use and shared between copies.
/// Concurrent readers see either nothing cached or the final value.
class AffineSemigroup {
 public:
  /// Throws not_pointed / not_full_group / dimension_mismatch.
  AffineSemigroup(std::size_t dim, std::vector<LatticeVector> generators);

  /// The saturated semigroup cone ∩ Z^d with its Hilbert basis as minimal
  /// generators.
  static AffineSemigroup from_hilbert_basis(const HilbertBasis& basis);

  std::size_t dim() const noexcept;
  /// Input generators, nonzero, sorted and deduplicated.
  const std::vector<LatticeVector>& generators() const noexcept;
  const RationalCone& cone() const noexcept;
  /// Integer linear form positive on cone(Γ) \ {0}.
  const LatticeVector& grading() const noexcept;

  const std::vector<LatticeVector>& minimal_generators() const;
  bool is_saturated() const;

  /// Same minimal generating set.
  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
    return a.dim() == b.dim() && a.minimal_generators() == b.minimal_generators();
  }

 private:
  struct State;
  explicit AffineSemigroup(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// x ∈ Γ, by memoized descent along the grading.
bool membership(const AffineSemigroup& s, const LatticeVector& x);

/// The unique minimal generating set, sorted lexicographically.
std::vector<LatticeVector> minimal_generators(const AffineSemigroup& s);

/// cone(Γ) ∩ Z^d.
AffineSemigroup saturate(const AffineSemigroup& s);

bool is_saturated(const AffineSemigroup& s);

/// Γ is free on a basis of Z^d, i.e. X_Γ is nonsingular.
bool is_smooth(const AffineSemigroup& s);

struct SurfaceProfile {
  AffineSemigroup semigroup;
  /// Minimal generators in counterclockwise order, starting at the
  /// clockwise-most extreme ray; equal directions ordered by length.
  std::vector<LatticeVector> ordered_generators;

  /// det(γ_l, γ_{l+1}) for consecutive generators.
  std::vector<Integer> consecutive_determinants() const;
};

SurfaceProfile surface_profile(const AffineSemigroup& s);

/// Lattice points on the compact edges of conv(Γ \ {0}) for a saturated
/// semigroup in Z^2, computed from the cone alone. Throws not_saturated.
std::vector<LatticeVector> boundary_generators_crosscheck(const AffineSemigroup& s);

/// 2x2 determinant det(a b) of vectors in Z^2.
Integer det2(const LatticeVector& a, const LatticeVector& b);

}  // namespace nashtoric
