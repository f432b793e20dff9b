#include "nashtoric/nash_blowup.hpp"

#include <algorithm>

#include "nashtoric/feasibility.hpp"
#include "nashtoric/linear_algebra.hpp"

namespace nashtoric {

namespace {

// Calls visit(indices) for every strictly increasing k-subset of [0, n).
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<LatticeVector> minimalize(const AffineSemigroup& s, const std::vector<LatticeVector>& raw) {
  std::vector<std::pair<Integer, LatticeVector>> graded;
  for (const auto& e : raw) graded.emplace_back(dot(s.grading(), e), e);
  std::sort(graded.begin(), graded.end());

  // e ∈ e' + Γ forces deg e' < deg e, and a dropped e' is itself above a kept
  // one, so comparing against kept exponents suffices.
  std::vector<LatticeVector> kept;
  for (const auto& [degree, e] : graded) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const LatticeVector& k) { return membership(s, e - k); });
    if (!redundant) kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

MonomialIdealExponents log_jacobian_ideal(const AffineSemigroup& s, Characteristic ch) {
  const std::size_t d = s.dim();
  const auto& gens = s.minimal_generators();
  std::vector<LatticeVector> raw;
  std::vector<LatticeVector> chosen(d);
  for_each_subset(gens.size(), d, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < d; ++i) chosen[i] = gens[idx[i]];
    if (det_mod(IntMatrix::from_columns(chosen, d), ch) == 0) return;
    LatticeVector sum(d);
    for (const auto& g : chosen) sum += g;
    raw.push_back(std::move(sum));
  });
  canonicalize(raw);
  if (raw.empty()) {
    throw Error(ErrorCode::internal_invariant, "logarithmic Jacobian ideal is empty for a full-group semigroup");
  }
  auto exponents = minimalize(s, raw);
  return MonomialIdealExponents{s, ch, std::move(exponents), std::move(raw)};
}

bool is_vertex(std::span<const LatticeVector> exponents, const RationalCone& recession, const LatticeVector& e) {
  std::vector<HalfSpace> system;
  system.reserve(exponents.size() + recession.rays().size());
  for (const auto& other : exponents) {
    if (other != e) system.push_back({other - e, 1});
  }
  for (const auto& u : recession.rays()) system.push_back({u, 1});
  return rational_feasible(system, e.dim()).has_value();
}

NewtonPolyhedron newton_polyhedron(const AffineSemigroup& s, Characteristic ch, std::vector<LatticeVector> exponents) {
  if (exponents.empty()) throw Error(ErrorCode::malformed_input, "newton_polyhedron: empty exponent set");
  require_dimension(exponents, s.dim());
  canonicalize(exponents);
  std::vector<LatticeVector> vertices;
  for (const auto& e : exponents) {
    if (is_vertex(exponents, s.cone(), e)) vertices.push_back(e);
  }
  return NewtonPolyhedron{s, ch, std::move(exponents), s.cone(), std::move(vertices)};
}

NewtonPolyhedron newton_polyhedron(const MonomialIdealExponents& ideal) {
  return newton_polyhedron(ideal.semigroup, ideal.characteristic, ideal.exponents);
}

std::vector<BlowupChart> blowup_charts(const NewtonPolyhedron& n, bool normalize) {
  const std::size_t d = n.semigroup.dim();
  std::vector<BlowupChart> charts;
  for (const auto& v : n.vertices) {
    std::vector<LatticeVector> gens = n.semigroup.minimal_generators();
    for (const auto& e : n.exponents) {
      if (e != v) gens.push_back(e - v);
    }
    try {
      AffineSemigroup chart(d, std::move(gens));
      if (normalize) chart = saturate(chart);
      charts.push_back(BlowupChart{v, std::move(chart), normalize});
    } catch (const Error& err) {
      throw Error(ErrorCode::internal_invariant, "chart at vertex " + to_string(v) + " is invalid: " + err.what());
    }
  }
  return charts;
}

bool is_trivial_step(const NewtonPolyhedron& n, std::span<const BlowupChart> charts) {
  return charts.size() == 1 && charts.front().chart_semigroup.minimal_generators() == n.semigroup.minimal_generators();
}

}  // namespace nashtoric
