#include "nashtoric/feasibility.hpp"

#include <map>

namespace nashtoric {

namespace {

// Constraint <coeffs, x> >= bound over the first coeffs.dim() variables.
using System = std::map<LatticeVector, Rational>;

Rational ceil_rational(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer f = num / den;
  if (num % den != 0 && num > 0) f += 1;
  return Rational(f);
}

Rational floor_rational(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer f = num / den;
  if (num % den != 0 && num < 0) f -= 1;
  return Rational(f);
}

// Adds a constraint in primitive form, keeping only the tightest bound per
// direction. Returns false when the constraint reads 0 >= b with b > 0.
bool add_constraint(System& system, const LatticeVector& coeffs, const Rational& bound) {
  Integer g = coeffs.content();
  if (g == 0) return bound <= 0;
  LatticeVector key = coeffs.primitive();
  Rational b = bound / Rational(g);
  auto [it, inserted] = system.emplace(std::move(key), b);
  if (!inserted && it->second < b) it->second = b;
  return true;
}

LatticeVector truncated(const LatticeVector& v, std::size_t n) {
  return LatticeVector(std::vector<Integer>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)));
}

}  // namespace

bool satisfies(const HalfSpace& h, std::span<const Rational> x) { return dot(h.normal, x) >= h.bound; }

std::optional<RationalPoint> rational_feasible(std::span<const HalfSpace> constraints, std::size_t dim) {
  // levels[k] holds the system over variables 0..k-1.
  std::vector<System> levels(dim + 1);
  for (const auto& h : constraints) {
    if (h.normal.dim() != dim) throw Error(ErrorCode::dimension_mismatch, "constraint dimension mismatch");
    if (!add_constraint(levels[dim], h.normal, h.bound)) return std::nullopt;
  }

  for (std::size_t k = dim; k-- > 0;) {
    const System& current = levels[k + 1];
    System& next = levels[k];
    std::vector<const System::value_type*> pos, neg;
    for (const auto& entry : current) {
      const Integer& a = entry.first[k];
      if (a > 0) {
        pos.push_back(&entry);
      } else if (a < 0) {
        neg.push_back(&entry);
      } else if (!add_constraint(next, truncated(entry.first, k), entry.second)) {
        return std::nullopt;
      }
    }
    for (const auto* p : pos) {
      const Integer& ap = p->first[k];
      for (const auto* n : neg) {
        Integer an = -n->first[k];
        LatticeVector combined(k);
        for (std::size_t j = 0; j < k; ++j) combined[j] = an * p->first[j] + ap * n->first[j];
        Rational bound = Rational(an) * p->second + Rational(ap) * n->second;
        if (!add_constraint(next, combined, bound)) return std::nullopt;
      }
    }
  }

  // Back substitution: choose each variable inside the interval its level
  // allows, preferring integers.
  RationalPoint x(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::optional<Rational> lower, upper;
    for (const auto& [coeffs, bound] : levels[k + 1]) {
      const Integer& a = coeffs[k];
      if (a == 0) continue;
      Rational rhs = bound;
      for (std::size_t j = 0; j < k; ++j) {
        if (coeffs[j] != 0) rhs -= Rational(coeffs[j]) * x[j];
      }
      Rational limit = rhs / Rational(a);
      if (a > 0) {
        if (!lower || *lower < limit) lower = limit;
      } else if (!upper || limit < *upper) {
        upper = limit;
      }
    }
    if (lower && upper) {
      Rational c = ceil_rational(*lower);
      x[k] = (c <= *upper) ? c : *lower;
    } else if (lower) {
      x[k] = ceil_rational(*lower);
    } else if (upper) {
      x[k] = floor_rational(*upper);
    } else {
      x[k] = 0;
    }
  }
  for (const auto& h : constraints) {
    if (!satisfies(h, x)) {
      throw Error(ErrorCode::internal_invariant, "Fourier-Motzkin witness violates a constraint");
    }
  }
  return x;
}

bool polyhedron_contains(std::span<const LatticeVector> points, std::span<const LatticeVector> rays,
                         std::span<const Rational> x) {
  if (points.empty()) return false;
  const std::size_t d = x.size();
  require_dimension(points, d);
  require_dimension(rays, d);

  // Variables (w, c); x lies outside iff some (w, c) has <w, v> >= c on the
  // points, <w, r> >= 0 on the rays and <w, x> < c. Clearing denominators of x
  // keeps the normals integral.
  Integer den = 1;
  for (const auto& xi : x) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(xi));

  std::vector<HalfSpace> system;
  system.reserve(points.size() + rays.size() + 1);
  for (const auto& v : points) {
    LatticeVector n(d + 1);
    for (std::size_t i = 0; i < d; ++i) n[i] = v[i];
    n[d] = -1;
    system.push_back({std::move(n), 0});
  }
  for (const auto& r : rays) {
    LatticeVector n(d + 1);
    for (std::size_t i = 0; i < d; ++i) n[i] = r[i];
    system.push_back({std::move(n), 0});
  }
  // den * (c - <w, x>) >= 1
  LatticeVector n(d + 1);
  for (std::size_t i = 0; i < d; ++i) n[i] = -boost::multiprecision::numerator(x[i] * Rational(den));
  n[d] = den;
  system.push_back({std::move(n), 1});
  return !rational_feasible(system, d + 1).has_value();
}

bool polyhedron_contains(std::span<const LatticeVector> points, std::span<const LatticeVector> rays,
                         const LatticeVector& x) {
  std::vector<Rational> xr(x.begin(), x.end());
  return polyhedron_contains(points, rays, xr);
}

}  // namespace nashtoric
