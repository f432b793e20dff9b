#include "nashtoric/semigroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "nashtoric/linear_algebra.hpp"

namespace nashtoric {

struct AffineSemigroup::State {
  std::size_t dim = 0;
  std::vector<LatticeVector> generators;
  RationalCone cone;
  LatticeVector grading;

  mutable std::mutex mutex;
  mutable std::optional<std::vector<LatticeVector>> minimal_generators;
  mutable std::optional<bool> saturated;
};

namespace {

// Decides x ∈ <generators>_N for generators inside a pointed cone. Every
// step subtracts a generator and stays in the cone, so the degree under any
// positive grading strictly drops and the descent terminates.
class MembershipOracle {
 public:
  explicit MembershipOracle(const RationalCone& cone) : cone_(cone) {}

  void add_generator(const LatticeVector& g) {
    generators_.push_back(g);
    // Negative answers may change once the generator set grows.
    std::erase_if(memo_, [](const auto& entry) { return !entry.second; });
  }

  bool contains(const LatticeVector& x) {
    if (x.is_zero()) return true;
    if (!cone_.contains(x)) return false;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : generators_) {
      LatticeVector rest = x - g;
      if (cone_.contains(rest) && contains(rest)) {
        found = true;
        break;
      }
    }
    memo_.emplace(x, found);
    return found;
  }

 private:
  const RationalCone& cone_;
  std::vector<LatticeVector> generators_;
  std::map<LatticeVector, bool> memo_;
};

std::vector<LatticeVector> graded_order(std::vector<LatticeVector> points, const LatticeVector& grading) {
  std::vector<std::pair<Integer, LatticeVector>> keyed;
  keyed.reserve(points.size());
  for (auto& p : points) keyed.emplace_back(dot(grading, p), std::move(p));
  std::sort(keyed.begin(), keyed.end());
  std::vector<LatticeVector> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::vector<LatticeVector> compute_minimal_generators(const AffineSemigroup& s) {
  // Candidates in increasing degree: a candidate can only be a sum of
  // strictly smaller ones, all of which are already decided.
  MembershipOracle oracle(s.cone());
  std::vector<LatticeVector> minimal;
  for (const auto& g : graded_order(s.generators(), s.grading())) {
    if (oracle.contains(g)) continue;
    minimal.push_back(g);
    oracle.add_generator(g);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

bool ccw_before(const LatticeVector& a, const LatticeVector& b) {
  Integer cross = det2(a, b);
  if (cross != 0) return cross > 0;
  return dot(a, a) < dot(b, b);
}

}  // namespace

Integer det2(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != 2 || b.dim() != 2) throw Error(ErrorCode::dimension_mismatch, "det2 expects vectors in Z^2");
  return a[0] * b[1] - a[1] * b[0];
}

AffineSemigroup::AffineSemigroup(std::size_t dim, std::vector<LatticeVector> generators) {
  if (dim == 0) throw Error(ErrorCode::dimension_mismatch, "semigroup dimension must be positive");
  require_dimension(generators, dim);
  std::erase_if(generators, [](const LatticeVector& g) { return g.is_zero(); });
  canonicalize(generators);

  auto state = std::make_shared<State>();
  state->dim = dim;
  state->cone = RationalCone::from_generators(dim, generators);
  if (!state->cone.is_pointed()) {
    throw Error(ErrorCode::not_pointed, "cone of the semigroup contains a line");
  }
  if (!group_is_full_lattice(generators, dim)) {
    throw Error(ErrorCode::not_full_group, "generators do not span Z^" + std::to_string(dim) + " as a group");
  }
  state->grading = positive_grading(state->cone);
  state->generators = std::move(generators);
  state_ = std::move(state);
}

AffineSemigroup AffineSemigroup::from_hilbert_basis(const HilbertBasis& basis) {
  AffineSemigroup s(basis.cone.dim(), basis.elements);
  std::lock_guard lock(s.state_->mutex);
  s.state_->minimal_generators = basis.elements;
  s.state_->saturated = true;
  return s;
}

std::size_t AffineSemigroup::dim() const noexcept { return state_->dim; }
const std::vector<LatticeVector>& AffineSemigroup::generators() const noexcept { return state_->generators; }
const RationalCone& AffineSemigroup::cone() const noexcept { return state_->cone; }
const LatticeVector& AffineSemigroup::grading() const noexcept { return state_->grading; }

const std::vector<LatticeVector>& AffineSemigroup::minimal_generators() const {
  {
    std::lock_guard lock(state_->mutex);
    if (state_->minimal_generators) return *state_->minimal_generators;
  }
  auto computed = compute_minimal_generators(*this);
  std::lock_guard lock(state_->mutex);
  if (!state_->minimal_generators) state_->minimal_generators = std::move(computed);
  return *state_->minimal_generators;
}

bool AffineSemigroup::is_saturated() const {
  {
    std::lock_guard lock(state_->mutex);
    if (state_->saturated) return *state_->saturated;
  }
  HilbertBasis hb = hilbert_basis(cone());
  bool sat = minimal_generators() == hb.elements;
  std::lock_guard lock(state_->mutex);
  if (!state_->saturated) state_->saturated = sat;
  return *state_->saturated;
}

bool membership(const AffineSemigroup& s, const LatticeVector& x) {
  if (x.dim() != s.dim()) throw Error(ErrorCode::dimension_mismatch, "membership: point dimension mismatch");
  if (x.is_zero()) return true;
  if (!s.cone().contains(x)) return false;
  if (s.is_saturated()) return true;
  MembershipOracle oracle(s.cone());
  for (const auto& g : s.minimal_generators()) oracle.add_generator(g);
  return oracle.contains(x);
}

std::vector<LatticeVector> minimal_generators(const AffineSemigroup& s) { return s.minimal_generators(); }

AffineSemigroup saturate(const AffineSemigroup& s) {
  return AffineSemigroup::from_hilbert_basis(hilbert_basis(s.cone()));
}

bool is_saturated(const AffineSemigroup& s) { return s.is_saturated(); }

bool is_smooth(const AffineSemigroup& s) {
  const auto& gens = s.minimal_generators();
  if (gens.size() != s.dim()) return false;
  return boost::multiprecision::abs(det(IntMatrix::from_columns(gens, s.dim()))) == 1;
}

std::vector<Integer> SurfaceProfile::consecutive_determinants() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i + 1 < ordered_generators.size(); ++i)
    out.push_back(det2(ordered_generators[i], ordered_generators[i + 1]));
  return out;
}

SurfaceProfile surface_profile(const AffineSemigroup& s) {
  if (s.dim() != 2) throw Error(ErrorCode::dimension_mismatch, "surface_profile requires a semigroup in Z^2");
  std::vector<LatticeVector> ordered = s.minimal_generators();
  std::sort(ordered.begin(), ordered.end(), ccw_before);
  return SurfaceProfile{s, std::move(ordered)};
}

std::vector<LatticeVector> boundary_generators_crosscheck(const AffineSemigroup& s) {
  if (s.dim() != 2) throw Error(ErrorCode::dimension_mismatch, "boundary cross-check requires a semigroup in Z^2");
  if (!s.is_saturated()) throw Error(ErrorCode::not_saturated, "boundary cross-check requires a saturated semigroup");

  std::vector<LatticeVector> rays = s.cone().rays();
  std::sort(rays.begin(), rays.end(), ccw_before);
  const LatticeVector& first = rays.front();
  const LatticeVector& last = rays.back();

  // The compact boundary of conv(Γ \ {0}) lies in the triangle (0, first,
  // last); collect its nonzero lattice points.
  IntMatrix basis = IntMatrix::from_columns(std::vector<LatticeVector>{first, last}, 2);
  IntMatrix adj = adjugate(basis);
  Integer volume = det(basis);
  LatticeVector lo(2), hi(2);
  for (std::size_t j = 0; j < 2; ++j) {
    lo[j] = std::min({Integer(0), first[j], last[j]});
    hi[j] = std::max({Integer(0), first[j], last[j]});
  }
  std::vector<LatticeVector> points;
  for (Integer x = lo[0]; x <= hi[0]; ++x) {
    for (Integer y = lo[1]; y <= hi[1]; ++y) {
      LatticeVector p{x, y};
      if (p.is_zero()) continue;
      Integer l0 = adj(0, 0) * x + adj(0, 1) * y;
      Integer l1 = adj(1, 0) * x + adj(1, 1) * y;
      if (l0 >= 0 && l1 >= 0 && l0 + l1 <= volume) points.push_back(std::move(p));
    }
  }
  std::sort(points.begin(), points.end(), ccw_before);
  // Only the shortest point in each direction can be a hull vertex.
  std::vector<LatticeVector> shortest;
  for (auto& p : points) {
    if (!shortest.empty() && det2(shortest.back(), p) == 0) continue;
    shortest.push_back(std::move(p));
  }

  std::vector<LatticeVector> hull;
  for (const auto& c : shortest) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      if (det2(b - a, c - a) >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(c);
  }

  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    LatticeVector edge = hull[i + 1] - hull[i];
    Integer steps = edge.content();
    LatticeVector step = edge.primitive();
    LatticeVector p = hull[i];
    for (Integer k = 0; k < steps; ++k) {
      out.push_back(p);
      p += step;
    }
  }
  out.push_back(hull.back());
  canonicalize(out);
  return out;
}

}  // namespace nashtoric
