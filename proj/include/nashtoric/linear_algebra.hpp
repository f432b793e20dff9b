#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nashtoric/lattice.hpp"

namespace nashtoric {

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

/// det(m) reduced into [0, p) when p > 0; the exact determinant when p == 0.
Integer det_mod(const IntMatrix& m, Characteristic ch);

std::size_t rank(const IntMatrix& m);

/// Adjugate matrix: adj(m) * m == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Floor division for arbitrary-precision integers.
Integer floor_div(const Integer& a, const Integer& b);

struct SmithForm {
  IntMatrix left;      // U, unimodular rows x rows
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular cols x cols
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: row echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows are kept at the bottom.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// True iff the integer span of `generators` is all of Z^dim.
bool group_is_full_lattice(std::span<const LatticeVector> generators, std::size_t dim);

/// Basis of the saturated lattice ker_Z(A) as the columns of an n x c matrix,
/// c = n - rank(A). The basis is the Hermite basis of the kernel lattice, with
/// columns sorted lexicographically and first nonzero entries positive.
IntMatrix kernel_basis(const IntMatrix& a);

}  // namespace nashtoric
