#include "nashtoric/resolution.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>

namespace nashtoric {

namespace {

// Sibling charts are expanded concurrently only near the root; deeper levels
// stay on the calling thread.
constexpr std::size_t kParallelDepthLimit = 2;

class Resolver {
 public:
  Resolver(Characteristic ch, const ResolveOptions& options) : ch_(ch), options_(options) {}

  ResolutionNode expand(const AffineSemigroup& s, std::size_t depth) const {
    ResolutionNode node{s, depth, NodeStatus::smooth_leaf, {}};
    if (is_smooth(s)) return node;

    NewtonPolyhedron polyhedron = newton_polyhedron(log_jacobian_ideal(s, ch_));
    std::vector<BlowupChart> charts = blowup_charts(polyhedron, options_.normalize);
    if (!options_.normalize && is_trivial_step(polyhedron, charts)) {
      node.status = NodeStatus::trivial_stall;
      return node;
    }
    if (depth >= options_.max_depth) {
      node.status = NodeStatus::depth_capped;
      return node;
    }

    node.status = NodeStatus::expanded;
    node.children.reserve(charts.size());
    if (options_.parallel && depth < kParallelDepthLimit && charts.size() > 1) {
      std::vector<std::future<ResolutionNode>> pending;
      for (const auto& chart : charts) {
        pending.push_back(std::async(std::launch::async, [this, &chart, depth] {
          return expand(chart.chart_semigroup, depth + 1);
        }));
      }
      for (std::size_t i = 0; i < charts.size(); ++i) {
        node.children.push_back(ResolutionChild{charts[i].vertex, pending[i].get()});
      }
    } else {
      for (const auto& chart : charts) {
        node.children.push_back(ResolutionChild{chart.vertex, expand(chart.chart_semigroup, depth + 1)});
      }
    }
    return node;
  }

 private:
  Characteristic ch_;
  ResolveOptions options_;
};

template <typename Visit>
void visit_nodes(const ResolutionNode& node, Visit&& visit) {
  visit(node);
  for (const auto& child : node.children) visit_nodes(child.node, visit);
}

}  // namespace

std::string_view status_name(NodeStatus status) {
  switch (status) {
    case NodeStatus::smooth_leaf: return "smooth-leaf";
    case NodeStatus::expanded: return "expanded";
    case NodeStatus::trivial_stall: return "trivial-stall";
    case NodeStatus::depth_capped: return "depth-capped";
  }
  return "unknown";
}

std::size_t ResolutionTree::depth() const {
  std::size_t deepest = 0;
  visit_nodes(root, [&](const ResolutionNode& n) { deepest = std::max(deepest, n.depth); });
  return deepest;
}

bool ResolutionTree::contains_status(NodeStatus status) const {
  bool found = false;
  visit_nodes(root, [&](const ResolutionNode& n) { found = found || n.status == status; });
  return found;
}

bool ResolutionTree::resolved() const {
  bool ok = true;
  visit_nodes(root, [&](const ResolutionNode& n) {
    if (n.children.empty() && n.status != NodeStatus::smooth_leaf) ok = false;
  });
  return ok;
}

std::size_t ResolutionTree::node_count() const {
  std::size_t count = 0;
  visit_nodes(root, [&](const ResolutionNode&) { ++count; });
  return count;
}

std::vector<const ResolutionNode*> ResolutionTree::nodes_at_depth(std::size_t level) const {
  std::vector<const ResolutionNode*> out;
  visit_nodes(root, [&](const ResolutionNode& n) {
    if (n.depth == level) out.push_back(&n);
  });
  return out;
}

std::vector<const ResolutionNode*> ResolutionTree::leaves() const {
  std::vector<const ResolutionNode*> out;
  visit_nodes(root, [&](const ResolutionNode& n) {
    if (n.children.empty()) out.push_back(&n);
  });
  return out;
}

ResolutionTree resolve(const AffineSemigroup& s, Characteristic ch, const ResolveOptions& options) {
  if (options.max_depth == 0) throw Error(ErrorCode::malformed_input, "max_depth must be at least 1");
  AffineSemigroup root = (options.normalize && options.saturate_root) ? saturate(s) : s;
  Resolver resolver(ch, options);
  return ResolutionTree{resolver.expand(root, 0), ch, options.normalize, options.max_depth};
}

bool same_tree_shape(const ResolutionNode& a, const ResolutionNode& b) {
  if (a.depth != b.depth || a.status != b.status || a.children.size() != b.children.size()) return false;
  if (a.semigroup.minimal_generators() != b.semigroup.minimal_generators()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (a.children[i].vertex != b.children[i].vertex) return false;
    if (!same_tree_shape(a.children[i].node, b.children[i].node)) return false;
  }
  return true;
}

bool CharacteristicComparison::all_equal() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const CharacteristicPair& p) { return p.equal_vertices; });
}

CharacteristicComparison compare_characteristics(const AffineSemigroup& s, std::span<const Characteristic> chars) {
  CharacteristicComparison report;
  for (const auto& ch : chars) {
    NewtonPolyhedron n = newton_polyhedron(log_jacobian_ideal(s, ch));
    report.entries.push_back(CharacteristicEntry{ch, n.exponents, n.vertices});
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < report.entries.size(); ++j) {
      report.pairs.push_back(CharacteristicPair{report.entries[i].characteristic, report.entries[j].characteristic,
                                                report.entries[i].vertices == report.entries[j].vertices});
    }
  }
  return report;
}

std::vector<std::array<LatticeVector, 2>> random_surface_cones(std::uint64_t seed, std::size_t count,
                                                               std::int64_t entry_bound) {
  if (entry_bound < 1) throw Error(ErrorCode::malformed_input, "entry_bound must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(1, entry_bound);
  auto primitive_ray = [&] {
    while (true) {
      std::int64_t x = coord(rng), y = coord(rng);
      if (std::gcd(x, y) == 1) return LatticeVector{x, y};
    }
  };
  std::vector<std::array<LatticeVector, 2>> cones;
  cones.reserve(count);
  while (cones.size() < count) {
    LatticeVector a = primitive_ray();
    LatticeVector b = primitive_ray();
    if (det2(a, b) == 0) continue;
    cones.push_back({std::move(a), std::move(b)});
  }
  return cones;
}

SuiteSummary surface_termination_suite(const SuiteOptions& options) {
  SuiteSummary summary;
  summary.seed = options.seed;
  summary.count = options.count;
  summary.entry_bound = options.entry_bound;
  summary.characteristics = options.characteristics;

  ResolveOptions resolve_options;
  resolve_options.normalize = true;
  resolve_options.saturate_root = true;
  resolve_options.max_depth = options.max_depth;
  resolve_options.parallel = options.parallel;

  for (auto& rays : random_surface_cones(options.seed, options.count, options.entry_bound)) {
    RationalCone cone = RationalCone::from_generators(2, rays);
    AffineSemigroup gamma = AffineSemigroup::from_hilbert_basis(hilbert_basis(cone));

    SuiteCase result{rays, gamma.minimal_generators(), 0, true, true, true};
    std::vector<ResolutionTree> trees;
    for (const auto& ch : options.characteristics) {
      trees.push_back(resolve(gamma, ch, resolve_options));
      const ResolutionTree& tree = trees.back();
      result.depth = std::max(result.depth, tree.depth());
      if (tree.contains_status(NodeStatus::depth_capped) || tree.contains_status(NodeStatus::trivial_stall)) {
        result.terminated = false;
      }
      if (!tree.resolved()) result.leaves_smooth = false;
      if (!same_tree_shape(trees.front().root, tree.root)) result.identical = false;
    }
    summary.terminated += result.terminated;
    summary.leaves_smooth += result.leaves_smooth;
    summary.identical += result.identical;
    summary.max_observed_depth = std::max(summary.max_observed_depth, result.depth);
    summary.cases.push_back(std::move(result));
  }
  return summary;
}

}  // namespace nashtoric
