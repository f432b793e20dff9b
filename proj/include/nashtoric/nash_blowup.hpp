#pragma once

#include <span>
#include <vector>

#include "nashtoric/cone.hpp"
#include "nashtoric/lattice.hpp"
#include "nashtoric/semigroup.hpp"

namespace nashtoric {

/// Exponent set E of the logarithmic Jacobian ideal modulo p of X_Γ: the
/// sums of d minimal generators whose determinant does not vanish mod p.
struct MonomialIdealExponents {
  AffineSemigroup semigroup;
  Characteristic characteristic;
  /// E with every e ∈ e' + Γ (e' ≠ e) removed; sorted.
  std::vector<LatticeVector> exponents;
  /// Every qualifying sum, duplicates collapsed; sorted.
  std::vector<LatticeVector> raw_exponents;
};

MonomialIdealExponents log_jacobian_ideal(const AffineSemigroup& s, Characteristic ch);

/// conv(E) + cone(Γ).
struct NewtonPolyhedron {
  AffineSemigroup semigroup;
  Characteristic characteristic;
  std::vector<LatticeVector> exponents;
  RationalCone recession_cone;
  std::vector<LatticeVector> vertices;  // sorted, subset of exponents
};

/// Builds the polyhedron from the ideal's (minimalized) exponents.
NewtonPolyhedron newton_polyhedron(const MonomialIdealExponents& ideal);

/// Newton polyhedron of an arbitrary exponent set over a semigroup.
NewtonPolyhedron newton_polyhedron(const AffineSemigroup& s, Characteristic ch, std::vector<LatticeVector> exponents);

/// e is a vertex of conv(exponents) + recession iff some w with <w, u> >= 1
/// on the recession rays has <w, e' - e> >= 1 for every other exponent.
bool is_vertex(std::span<const LatticeVector> exponents, const RationalCone& recession, const LatticeVector& e);

/// One affine chart of the blowup: Γ + <e - v : e ∈ E>.
struct BlowupChart {
  LatticeVector vertex;
  AffineSemigroup chart_semigroup;
  bool normalized = false;
};

/// One chart per vertex, sorted by vertex. With `normalize` every chart
/// semigroup is replaced by its saturation.
std::vector<BlowupChart> blowup_charts(const NewtonPolyhedron& n, bool normalize);

/// A single chart whose semigroup equals the parent: the blowup did nothing.
bool is_trivial_step(const NewtonPolyhedron& n, std::span<const BlowupChart> charts);

}  // namespace nashtoric
