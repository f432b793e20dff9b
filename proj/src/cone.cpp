#include "nashtoric/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "nashtoric/feasibility.hpp"
#include "nashtoric/linear_algebra.hpp"

namespace nashtoric {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }

  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  LatticeVector v;
  Bitset zero;  // processed constraints tight at v
};

LatticeVector combine(const Integer& a, const LatticeVector& x, const Integer& b, const LatticeVector& y) {
  LatticeVector out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = a * x[i] - b * y[i];
  return out.primitive();
}

// Canonical basis of the lattice spanned by `lines` (Hermite rows).
std::vector<LatticeVector> canonical_lines(const std::vector<LatticeVector>& lines, std::size_t dim) {
  if (lines.empty()) return {};
  IntMatrix h = hermite_normal_form(IntMatrix::from_rows(lines, dim));
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    LatticeVector r = h.row(i);
    if (!r.is_zero()) out.push_back(r.primitive());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DoubleDescription double_description(std::size_t dim, std::span<const LatticeVector> constraints) {
  require_dimension(constraints, dim);
  const std::size_t total = constraints.size();

  std::vector<LatticeVector> lines;
  for (std::size_t i = 0; i < dim; ++i) {
    LatticeVector e(dim);
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t idx = 0; idx < total; ++idx) {
    const LatticeVector& a = constraints[idx];
    if (a.is_zero()) {
      for (auto& r : rays) r.zero.set(idx);
      continue;
    }

    auto pivot = std::find_if(lines.begin(), lines.end(), [&](const LatticeVector& l) { return dot(a, l) != 0; });
    if (pivot != lines.end()) {
      // The line crossing the new hyperplane turns into a ray; everything
      // else is sheared into the hyperplane.
      LatticeVector l = *pivot;
      lines.erase(pivot);
      Integer al = dot(a, l);
      if (al < 0) {
        l = -l;
        al = -al;
      }
      for (auto& other : lines) {
        Integer b = dot(a, other);
        if (b != 0) other = combine(al, other, b, l);
      }
      for (auto& r : rays) {
        Integer b = dot(a, r.v);
        if (b != 0) r.v = combine(al, r.v, b, l);
        r.zero.set(idx);
      }
      Bitset z(total);
      for (std::size_t j = 0; j < idx; ++j) z.set(j);
      rays.push_back({std::move(l), std::move(z)});
      continue;
    }

    std::vector<Integer> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) value[i] = dot(a, rays[i].v);

    std::vector<Ray> next;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] > 0) {
        pos.push_back(i);
        next.push_back(rays[i]);
      } else if (value[i] == 0) {
        next.push_back(rays[i]);
        next.back().zero.set(idx);
      } else {
        neg.push_back(i);
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        Bitset common = rays[p].zero & rays[n].zero;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t != p && t != n && common.subset_of(rays[t].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{combine(value[p], rays[n].v, value[n], rays[p].v), common};
        r.zero.set(idx);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  DoubleDescription out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  canonicalize(out.rays);
  out.lines = canonical_lines(lines, dim);
  return out;
}

RationalCone RationalCone::from_generators(std::size_t dim, std::span<const LatticeVector> generators) {
  if (dim == 0) throw Error(ErrorCode::dimension_mismatch, "cone dimension must be positive");
  DoubleDescription dual = double_description(dim, generators);

  RationalCone c;
  c.dim_ = dim;
  c.has_equalities_ = !dual.lines.empty();
  c.halfspaces_ = dual.rays;
  for (const auto& l : dual.lines) {
    c.halfspaces_.push_back(l);
    c.halfspaces_.push_back(-l);
  }
  canonicalize(c.halfspaces_);

  DoubleDescription primal = double_description(dim, c.halfspaces_);
  c.rays_ = std::move(primal.rays);
  c.lines_ = std::move(primal.lines);
  return c;
}

RationalCone RationalCone::from_inequalities(std::size_t dim, std::span<const LatticeVector> normals) {
  if (dim == 0) throw Error(ErrorCode::dimension_mismatch, "cone dimension must be positive");
  DoubleDescription primal = double_description(dim, normals);
  std::vector<LatticeVector> generators = primal.rays;
  for (const auto& l : primal.lines) {
    generators.push_back(l);
    generators.push_back(-l);
  }
  return from_generators(dim, generators);
}

std::size_t RationalCone::cone_dimension() const {
  std::vector<LatticeVector> span = rays_;
  span.insert(span.end(), lines_.begin(), lines_.end());
  if (span.empty()) return 0;
  return rank(IntMatrix::from_rows(span, dim_));
}

bool RationalCone::contains(const LatticeVector& x) const {
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const LatticeVector& h) { return dot(h, x) >= 0; });
}

bool RationalCone::contains(std::span<const Rational> x) const {
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const LatticeVector& h) { return dot(h, x) >= 0; });
}

bool RationalCone::contains_in_interior(const LatticeVector& x) const {
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const LatticeVector& h) { return dot(h, x) > 0; });
}

RationalCone dual_cone(const RationalCone& c) { return RationalCone::from_generators(c.dim(), c.halfspaces()); }

bool is_pointed(const RationalCone& c) { return c.is_pointed(); }

LatticeVector interior_point(const RationalCone& c) {
  if (!c.is_full_dimensional()) throw Error(ErrorCode::not_full_dimensional, "interior_point: cone is not full-dimensional");
  LatticeVector w(c.dim());
  for (const auto& r : c.rays()) w += r;
  if (c.contains_in_interior(w)) return w;

  std::vector<HalfSpace> strict;
  for (const auto& h : c.halfspaces()) strict.push_back({h, 1});
  auto x = rational_feasible(strict, c.dim());
  if (!x) throw Error(ErrorCode::internal_invariant, "full-dimensional cone without interior point");
  Integer den = 1;
  for (const auto& xi : *x) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(xi));
  for (std::size_t i = 0; i < c.dim(); ++i) w[i] = boost::multiprecision::numerator((*x)[i] * Rational(den));
  return w;
}

LatticeVector positive_grading(const RationalCone& c) {
  if (!c.is_pointed()) throw Error(ErrorCode::not_pointed, "positive_grading: cone is not pointed");
  // Sum of the facet normals; equality pairs cancel.
  LatticeVector w(c.dim());
  for (const auto& h : c.halfspaces()) w += h;
  for (const auto& r : c.rays()) {
    if (dot(w, r) <= 0) return interior_point(dual_cone(c));
  }
  return w;
}

std::vector<std::vector<LatticeVector>> triangulation_rays(const RationalCone& c) {
  if (!c.is_pointed()) throw Error(ErrorCode::not_pointed, "triangulate: cone is not pointed");
  if (!c.is_full_dimensional()) throw Error(ErrorCode::not_full_dimensional, "triangulate: cone is not full-dimensional");

  const auto& rays = c.rays();
  const auto& facets = c.halfspaces();
  // tight[i][f]: ray i lies on facet f
  std::vector<std::vector<bool>> tight(rays.size(), std::vector<bool>(facets.size()));
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t f = 0; f < facets.size(); ++f) tight[i][f] = dot(facets[f], rays[i]) == 0;

  auto face_rank = [&](const std::vector<std::size_t>& face) {
    std::vector<LatticeVector> vs;
    for (std::size_t i : face) vs.push_back(rays[i]);
    return vs.empty() ? std::size_t{0} : rank(IntMatrix::from_rows(vs, c.dim()));
  };

  // Rays are sorted, so the smallest index is the lexicographically smallest ray.
  auto pull = [&](auto&& self, const std::vector<std::size_t>& face, std::size_t k) -> std::vector<std::vector<std::size_t>> {
    if (face.size() == k) return {face};
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (tight[apex][f]) continue;
      std::vector<std::size_t> sub;
      for (std::size_t i : face)
        if (tight[i][f]) sub.push_back(i);
      if (sub.size() + 1 >= k && face_rank(sub) == k - 1) subfaces.insert(std::move(sub));
    }
    std::vector<std::vector<std::size_t>> out;
    for (const auto& sub : subfaces) {
      for (auto piece : self(self, sub, k - 1)) {
        piece.insert(piece.begin(), apex);
        out.push_back(std::move(piece));
      }
    }
    return out;
  };

  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) all[i] = i;
  std::vector<std::vector<LatticeVector>> pieces;
  for (const auto& piece : pull(pull, all, c.dim())) {
    std::vector<LatticeVector> vs;
    for (std::size_t i : piece) vs.push_back(rays[i]);
    std::sort(vs.begin(), vs.end());
    pieces.push_back(std::move(vs));
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

std::vector<RationalCone> triangulate(const RationalCone& c) {
  std::vector<RationalCone> out;
  for (const auto& piece : triangulation_rays(c)) out.push_back(RationalCone::from_generators(c.dim(), piece));
  return out;
}

std::vector<LatticeVector> parallelepiped_points(std::span<const LatticeVector> spanning) {
  if (spanning.empty()) throw Error(ErrorCode::dimension_mismatch, "parallelepiped_points: no spanning vectors");
  const std::size_t d = spanning.front().dim();
  if (spanning.size() != d) throw Error(ErrorCode::dimension_mismatch, "parallelepiped_points: need exactly d vectors");
  IntMatrix u = IntMatrix::from_columns(spanning, d);
  Integer det_u = det(u);
  if (det_u == 0) throw Error(ErrorCode::linearly_dependent, "parallelepiped_points: vectors are linearly dependent");

  // Coordinates l = adj(u) x / det(u); require 0 <= l_i < 1.
  IntMatrix adj = adjugate(u);
  const Integer sign = det_u > 0 ? 1 : -1;
  const Integer volume = boost::multiprecision::abs(det_u);

  LatticeVector lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& v : spanning) {
      if (v[j] < 0) lo[j] += v[j];
      else hi[j] += v[j];
    }
  }

  std::vector<LatticeVector> out;
  LatticeVector x = lo;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < d && inside; ++i) {
      Integer num = 0;
      for (std::size_t j = 0; j < d; ++j) num += adj(i, j) * x[j];
      num *= sign;
      inside = num >= 0 && num < volume;
    }
    if (inside) out.push_back(x);

    std::size_t j = 0;
    while (j < d && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == d) break;
    x[j] += 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

HilbertBasis hilbert_basis(const RationalCone& c) {
  if (!c.is_pointed()) throw Error(ErrorCode::not_pointed, "hilbert_basis: cone is not pointed");
  if (!c.is_full_dimensional()) throw Error(ErrorCode::not_full_dimensional, "hilbert_basis: cone is not full-dimensional");

  std::vector<LatticeVector> candidates = c.rays();
  for (const auto& piece : triangulation_rays(c)) {
    for (auto& p : parallelepiped_points(piece)) {
      if (!p.is_zero()) candidates.push_back(std::move(p));
    }
  }
  canonicalize(candidates);

  const LatticeVector w = positive_grading(c);
  std::vector<std::pair<Integer, LatticeVector>> graded;
  graded.reserve(candidates.size());
  for (auto& g : candidates) graded.emplace_back(dot(w, g), std::move(g));
  std::sort(graded.begin(), graded.end());

  // A candidate is reducible iff it exceeds an irreducible element of smaller
  // degree in the cone order; every such element has already been confirmed.
  std::vector<LatticeVector> elements;
  for (const auto& [degree, g] : graded) {
    bool reducible = std::any_of(elements.begin(), elements.end(), [&](const LatticeVector& h) { return c.contains(g - h); });
    if (!reducible) elements.push_back(g);
  }
  std::sort(elements.begin(), elements.end());
  return HilbertBasis{c, std::move(elements)};
}

}  // namespace nashtoric
