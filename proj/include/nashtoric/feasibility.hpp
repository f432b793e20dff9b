#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nashtoric/lattice.hpp"

namespace nashtoric {

/// The closed half-space { x : <normal, x> >= bound }.
struct HalfSpace {
  LatticeVector normal;
  Rational bound;
};

using RationalPoint = std::vector<Rational>;

/// Exact feasibility of a finite system of rational half-spaces in R^dim by
/// Fourier-Motzkin elimination. Returns a witness satisfying every
/// constraint, or nullopt when the system is infeasible.
std::optional<RationalPoint> rational_feasible(std::span<const HalfSpace> constraints, std::size_t dim);

bool satisfies(const HalfSpace& h, std::span<const Rational> x);

/// Exact membership x in conv(points) + cone(rays), decided by the
/// infeasibility of a separating-hyperplane system. Empty `points` means the
/// empty polyhedron.
bool polyhedron_contains(std::span<const LatticeVector> points, std::span<const LatticeVector> rays,
                         std::span<const Rational> x);
bool polyhedron_contains(std::span<const LatticeVector> points, std::span<const LatticeVector> rays,
                         const LatticeVector& x);

}  // namespace nashtoric
