#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nashtoric/lattice.hpp"
#include "nashtoric/nash_blowup.hpp"
#include "nashtoric/semigroup.hpp"

namespace nashtoric {

enum class NodeStatus { smooth_leaf, expanded, trivial_stall, depth_capped };

std::string_view status_name(NodeStatus status);

struct ResolutionChild;

struct ResolutionNode {
  AffineSemigroup semigroup;
  std::size_t depth = 0;
  NodeStatus status = NodeStatus::smooth_leaf;
  /// Ordered by chart vertex.
  std::vector<ResolutionChild> children;
};

struct ResolutionChild {
  LatticeVector vertex;
  ResolutionNode node;
};

inline constexpr std::size_t kDefaultMaxDepth = 64;

struct ResolveOptions {
  bool normalize = true;
  std::size_t max_depth = kDefaultMaxDepth;
  /// Replace the root by its saturation before the first blowup.
  bool saturate_root = false;
  /// Expand sibling charts on worker threads. Output is identical either way.
  bool parallel = false;
};

struct ResolutionTree {
  ResolutionNode root;
  Characteristic characteristic;
  bool normalize = true;
  std::size_t max_depth = kDefaultMaxDepth;

  /// Largest node depth.
  std::size_t depth() const;
  bool contains_status(NodeStatus status) const;
  /// Every leaf is a smooth leaf.
  bool resolved() const;
  std::size_t node_count() const;
  std::vector<const ResolutionNode*> nodes_at_depth(std::size_t depth) const;
  std::vector<const ResolutionNode*> leaves() const;
};

/// Iterated (normalized) Nash blowups, depth first. Throws
/// malformed_input if max_depth is 0.
ResolutionTree resolve(const AffineSemigroup& s, Characteristic ch, const ResolveOptions& options = {});

/// Same statuses, depths, chart vertices and node semigroups throughout.
bool same_tree_shape(const ResolutionNode& a, const ResolutionNode& b);

struct CharacteristicEntry {
  Characteristic characteristic;
  std::vector<LatticeVector> exponents;
  std::vector<LatticeVector> vertices;
};

struct CharacteristicPair {
  Characteristic first;
  Characteristic second;
  bool equal_vertices = false;
};

struct CharacteristicComparison {
  std::vector<CharacteristicEntry> entries;
  std::vector<CharacteristicPair> pairs;  // every unordered pair, in input order

  bool all_equal() const;
};

CharacteristicComparison compare_characteristics(const AffineSemigroup& s, std::span<const Characteristic> chars);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::int64_t entry_bound = 50;
  std::vector<Characteristic> characteristics{Characteristic(0), Characteristic(2), Characteristic(3),
                                              Characteristic(5)};
  std::size_t max_depth = kDefaultMaxDepth;
  bool parallel = false;
};

struct SuiteCase {
  std::array<LatticeVector, 2> dual_cone_rays;
  std::vector<LatticeVector> generators;
  std::size_t depth = 0;
  bool terminated = false;      // no depth-capped or stalled node, in every characteristic
  bool leaves_smooth = false;   // every leaf smooth, in every characteristic
  bool identical = false;       // trees coincide across characteristics
};

struct SuiteSummary {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::int64_t entry_bound = 0;
  std::vector<Characteristic> characteristics;
  std::size_t terminated = 0;
  std::size_t leaves_smooth = 0;
  std::size_t identical = 0;
  std::size_t max_observed_depth = 0;
  std::vector<SuiteCase> cases;

  bool all_passed() const { return terminated == count && leaves_smooth == count && identical == count; }
};

/// `count` random pointed full-dimensional cones in R^2 given by two primitive
/// rays with coordinates in [1, entry_bound]; the generator is seeded so the
/// sequence is reproducible.
std::vector<std::array<LatticeVector, 2>> random_surface_cones(std::uint64_t seed, std::size_t count,
                                                               std::int64_t entry_bound);

SuiteSummary surface_termination_suite(const SuiteOptions& options);

}  // namespace nashtoric
