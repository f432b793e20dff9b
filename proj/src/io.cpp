#include "nashtoric/io.hpp"

#include <limits>
#include <sstream>

namespace nashtoric {

namespace {

[[noreturn]] void malformed(const std::string& message) { throw Error(ErrorCode::malformed_input, message); }

Integer parse_integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
      malformed(what + ": \"" + s + "\" is not a decimal integer");
    }
    return Integer(s);
  }
  malformed(what + " must be an integer");
}

std::uint64_t parse_count(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    malformed(what + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

LatticeVector parse_vector(const Json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array()) malformed(what + " must be an array of integers");
  if (j.size() != dim) {
    throw Error(ErrorCode::dimension_mismatch,
                what + " has length " + std::to_string(j.size()) + ", expected " + std::to_string(dim));
  }
  LatticeVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = parse_integer(j[i], what);
  return v;
}

std::string join_vectors(std::span<const LatticeVector> vs, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += to_string(vs[i]);
  }
  return out;
}

}  // namespace

std::string_view source_name(SourceKind kind) {
  switch (kind) {
    case SourceKind::semigroup_generators: return "semigroup_generators";
    case SourceKind::dual_cone_rays: return "dual_cone_rays";
    case SourceKind::cone_rays: return "cone_rays";
  }
  return "unknown";
}

std::string_view format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::dot: return "dot";
    case OutputFormat::text: return "text";
  }
  return "unknown";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "dot") return OutputFormat::dot;
  if (name == "text") return OutputFormat::text;
  malformed("unknown format \"" + std::string(name) + "\" (expected json, dot or text)");
}

ProblemSpec parse_input(std::string_view document) {
  Json j;
  try {
    j = Json::parse(document);
  } catch (const Json::parse_error& e) {
    malformed(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_input_json(j);
}

ProblemSpec parse_input_json(const Json& j) {
  if (!j.is_object()) malformed("input must be a JSON object");
  ProblemSpec spec;

  if (!j.contains("dimension")) malformed("missing \"dimension\"");
  std::uint64_t dim = parse_count(j.at("dimension"), "dimension");
  if (dim == 0) malformed("dimension must be positive");
  spec.dimension = static_cast<std::size_t>(dim);

  if (j.contains("characteristic")) {
    spec.characteristic = Characteristic(parse_count(j.at("characteristic"), "characteristic"));
  }

  int sources = 0;
  for (SourceKind kind : {SourceKind::semigroup_generators, SourceKind::dual_cone_rays, SourceKind::cone_rays}) {
    const std::string key(source_name(kind));
    if (!j.contains(key)) continue;
    ++sources;
    spec.source = kind;
    const Json& list = j.at(key);
    if (!list.is_array()) malformed(key + " must be an array of vectors");
    spec.vectors.clear();
    for (std::size_t i = 0; i < list.size(); ++i) {
      spec.vectors.push_back(parse_vector(list[i], spec.dimension, key + "[" + std::to_string(i) + "]"));
    }
  }
  if (sources != 1) malformed("exactly one of semigroup_generators, dual_cone_rays, cone_rays is required");

  if (j.contains("normalize")) {
    if (!j.at("normalize").is_boolean()) malformed("normalize must be a boolean");
    spec.normalize = j.at("normalize").get<bool>();
  }
  if (j.contains("max_depth")) {
    std::uint64_t depth = parse_count(j.at("max_depth"), "max_depth");
    if (depth == 0) malformed("max_depth must be at least 1");
    spec.max_depth = static_cast<std::size_t>(depth);
  }
  if (j.contains("format")) {
    if (!j.at("format").is_string()) malformed("format must be a string");
    spec.format = parse_format(j.at("format").get<std::string>());
  }
  return spec;
}

AffineSemigroup build_semigroup(const ProblemSpec& spec) {
  const std::size_t d = spec.dimension;
  if (spec.source == SourceKind::semigroup_generators) return AffineSemigroup(d, spec.vectors);

  RationalCone given = RationalCone::from_generators(d, spec.vectors);
  RationalCone dual = spec.source == SourceKind::dual_cone_rays ? given : dual_cone(given);
  if (!dual.is_pointed()) throw Error(ErrorCode::not_pointed, "the dual cone is not pointed");
  if (!dual.is_full_dimensional()) {
    throw Error(ErrorCode::not_full_dimensional, "the dual cone is not full-dimensional");
  }
  return AffineSemigroup::from_hilbert_basis(hilbert_basis(dual));
}

Json to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return Json(value.convert_to<std::int64_t>());
  }
  return Json(value.str());
}

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

Json to_json(std::span<const LatticeVector> vs) {
  std::vector<LatticeVector> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const auto& v : sorted) out.push_back(to_json(v));
  return out;
}

Json to_json(const ProblemSpec& spec) {
  Json out = Json::object();
  out["dimension"] = spec.dimension;
  out["characteristic"] = spec.characteristic.value();
  out[std::string(source_name(spec.source))] = to_json(std::span<const LatticeVector>(spec.vectors));
  out["normalize"] = spec.normalize;
  out["max_depth"] = spec.max_depth;
  out["format"] = std::string(format_name(spec.format));
  return out;
}

Json to_json(const AffineSemigroup& s) {
  Json out = Json::object();
  out["dimension"] = s.dim();
  out["minimal_generators"] = to_json(std::span<const LatticeVector>(s.minimal_generators()));
  out["cone_rays"] = to_json(std::span<const LatticeVector>(s.cone().rays()));
  out["saturated"] = s.is_saturated();
  out["smooth"] = is_smooth(s);
  return out;
}

Json to_json(const MonomialIdealExponents& ideal) {
  Json out = Json::object();
  out["characteristic"] = ideal.characteristic.value();
  out["exponents"] = to_json(std::span<const LatticeVector>(ideal.exponents));
  out["raw_exponents"] = to_json(std::span<const LatticeVector>(ideal.raw_exponents));
  out["minimal_generators"] = to_json(std::span<const LatticeVector>(ideal.semigroup.minimal_generators()));
  return out;
}

Json to_json(const NewtonPolyhedron& n) {
  Json out = Json::object();
  out["characteristic"] = n.characteristic.value();
  out["exponents"] = to_json(std::span<const LatticeVector>(n.exponents));
  out["vertices"] = to_json(std::span<const LatticeVector>(n.vertices));
  out["recession_rays"] = to_json(std::span<const LatticeVector>(n.recession_cone.rays()));
  return out;
}

Json to_json(const NewtonPolyhedron& n, std::span<const BlowupChart> charts) {
  Json out = to_json(n);
  Json list = Json::array();
  for (const auto& chart : charts) {
    Json c = Json::object();
    c["vertex"] = to_json(chart.vertex);
    c["generators"] = to_json(std::span<const LatticeVector>(chart.chart_semigroup.minimal_generators()));
    c["normalized"] = chart.normalized;
    c["smooth"] = is_smooth(chart.chart_semigroup);
    list.push_back(std::move(c));
  }
  out["charts"] = std::move(list);
  bool normalized = !charts.empty() && charts.front().normalized;
  out["trivial"] = !normalized && is_trivial_step(n, charts);
  return out;
}

Json to_json(const ResolutionNode& node) {
  Json out = Json::object();
  out["depth"] = node.depth;
  out["status"] = std::string(status_name(node.status));
  out["generators"] = to_json(std::span<const LatticeVector>(node.semigroup.minimal_generators()));
  Json children = Json::array();
  for (const auto& child : node.children) {
    Json c = Json::object();
    c["vertex"] = to_json(child.vertex);
    c["node"] = to_json(child.node);
    children.push_back(std::move(c));
  }
  out["children"] = std::move(children);
  return out;
}

Json to_json(const ResolutionTree& tree) {
  Json out = Json::object();
  out["characteristic"] = tree.characteristic.value();
  out["normalize"] = tree.normalize;
  out["max_depth"] = tree.max_depth;
  out["depth"] = tree.depth();
  out["resolved"] = tree.resolved();
  out["root"] = to_json(tree.root);
  return out;
}

Json to_json(const CharacteristicComparison& report) {
  Json out = Json::object();
  if (report.entries.empty()) return out;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json entry = Json::object();
    entry["characteristic"] = e.characteristic.value();
    entry["exponents"] = to_json(std::span<const LatticeVector>(e.exponents));
    entry["vertices"] = to_json(std::span<const LatticeVector>(e.vertices));
    entries.push_back(std::move(entry));
  }
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    Json pair = Json::object();
    pair["first"] = p.first.value();
    pair["second"] = p.second.value();
    pair["equal_vertices"] = p.equal_vertices;
    pairs.push_back(std::move(pair));
  }
  out["entries"] = std::move(entries);
  out["pairs"] = std::move(pairs);
  out["all_equal"] = report.all_equal();
  return out;
}

Json to_json(const SuiteSummary& summary) {
  Json out = Json::object();
  out["seed"] = summary.seed;
  out["count"] = summary.count;
  out["entry_bound"] = summary.entry_bound;
  Json chars = Json::array();
  for (const auto& ch : summary.characteristics) chars.push_back(ch.value());
  out["characteristics"] = std::move(chars);
  out["terminated"] = summary.terminated;
  out["leaves_smooth"] = summary.leaves_smooth;
  out["identical"] = summary.identical;
  out["max_observed_depth"] = summary.max_observed_depth;
  out["all_passed"] = summary.all_passed();
  Json cases = Json::array();
  for (const auto& c : summary.cases) {
    Json entry = Json::object();
    entry["dual_cone_rays"] = Json::array({to_json(c.dual_cone_rays[0]), to_json(c.dual_cone_rays[1])});
    entry["generators"] = to_json(std::span<const LatticeVector>(c.generators));
    entry["depth"] = c.depth;
    entry["terminated"] = c.terminated;
    entry["leaves_smooth"] = c.leaves_smooth;
    entry["identical"] = c.identical;
    cases.push_back(std::move(entry));
  }
  out["cases"] = std::move(cases);
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::string to_dot(const ResolutionTree& tree) {
  std::ostringstream os;
  os << "digraph resolution {\n";
  os << "  label=\"characteristic " << tree.characteristic.value() << (tree.normalize ? ", normalized" : "")
     << "\";\n";
  std::size_t next_id = 0;
  auto emit = [&](auto&& self, const ResolutionNode& node) -> std::size_t {
    const std::size_t id = next_id++;
    os << "  n" << id << " [label=\"" << join_vectors(node.semigroup.minimal_generators(), " ") << "\\n"
       << status_name(node.status) << "\"";
    if (node.status == NodeStatus::smooth_leaf) os << ", shape=box";
    os << "];\n";
    for (const auto& child : node.children) {
      const std::size_t child_id = self(self, child.node);
      os << "  n" << id << " -> n" << child_id << " [label=\"" << to_string(child.vertex) << "\"];\n";
    }
    return id;
  };
  emit(emit, tree.root);
  os << "}\n";
  return os.str();
}

std::string exponent_monomial(const LatticeVector& e) {
  if (e.dim() == 1) return "t^" + e[0].str();
  return "t^" + to_string(e);
}

std::string to_text(const AffineSemigroup& s) {
  std::ostringstream os;
  os << "dimension           " << s.dim() << "\n";
  os << "minimal generators  " << join_vectors(s.minimal_generators()) << "\n";
  os << "cone rays           " << join_vectors(s.cone().rays()) << "\n";
  os << "saturated           " << (s.is_saturated() ? "yes" : "no") << "\n";
  os << "smooth              " << (is_smooth(s) ? "yes" : "no") << "\n";
  return os.str();
}

std::string to_text(std::span<const MonomialIdealExponents> ideals) {
  std::ostringstream os;
  os << "p      J_p\n";
  for (const auto& ideal : ideals) {
    std::string p = std::to_string(ideal.characteristic.value());
    os << p << std::string(p.size() < 7 ? 7 - p.size() : 1, ' ') << "<";
    for (std::size_t i = 0; i < ideal.exponents.size(); ++i) {
      if (i) os << ", ";
      os << exponent_monomial(ideal.exponents[i]);
    }
    os << ">\n";
  }
  return os.str();
}

std::string to_text(const NewtonPolyhedron& n) {
  std::ostringstream os;
  os << "characteristic  " << n.characteristic.value() << "\n";
  os << "exponents       " << join_vectors(n.exponents) << "\n";
  os << "vertices        " << join_vectors(n.vertices) << "\n";
  os << "recession rays  " << join_vectors(n.recession_cone.rays()) << "\n";
  return os.str();
}

std::string to_text(const NewtonPolyhedron& n, std::span<const BlowupChart> charts) {
  std::ostringstream os;
  os << to_text(n);
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const auto& chart = charts[i];
    os << "chart " << i + 1 << " at " << to_string(chart.vertex) << (chart.normalized ? " (normalized)" : "")
       << ": <" << join_vectors(chart.chart_semigroup.minimal_generators()) << ">"
       << (is_smooth(chart.chart_semigroup) ? " smooth" : " singular") << "\n";
  }
  bool normalized = !charts.empty() && charts.front().normalized;
  if (!normalized && is_trivial_step(n, charts)) os << "the blowup is trivial\n";
  return os.str();
}

std::string to_text(const ResolutionTree& tree) {
  std::ostringstream os;
  os << "characteristic " << tree.characteristic.value() << ", " << (tree.normalize ? "normalized" : "not normalized")
     << ", depth " << tree.depth() << ", " << (tree.resolved() ? "resolved" : "unresolved") << "\n";
  auto emit = [&](auto&& self, const ResolutionNode& node, const std::string& indent) -> void {
    os << indent << "[" << status_name(node.status) << "] <" << join_vectors(node.semigroup.minimal_generators())
       << ">\n";
    for (const auto& child : node.children) {
      os << indent << "  at " << to_string(child.vertex) << ":\n";
      self(self, child.node, indent + "    ");
    }
  };
  emit(emit, tree.root, "");
  return os.str();
}

std::string to_text(const CharacteristicComparison& report) {
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << "p = " << e.characteristic.value() << "\n";
    os << "  exponents  " << join_vectors(e.exponents) << "\n";
    os << "  vertices   " << join_vectors(e.vertices) << "\n";
  }
  for (const auto& p : report.pairs) {
    os << "N(J_" << p.first.value() << ") " << (p.equal_vertices ? "==" : "!=") << " N(J_" << p.second.value()
       << ")\n";
  }
  return os.str();
}

std::string to_text(const SuiteSummary& summary) {
  std::ostringstream os;
  os << "seed " << summary.seed << ", " << summary.count << " cones, entries <= " << summary.entry_bound
     << ", characteristics";
  for (const auto& ch : summary.characteristics) os << ' ' << ch.value();
  os << "\n";
  os << "terminated          " << summary.terminated << "/" << summary.count << "\n";
  os << "all leaves smooth   " << summary.leaves_smooth << "/" << summary.count << "\n";
  os << "identical trees     " << summary.identical << "/" << summary.count << "\n";
  os << "max observed depth  " << summary.max_observed_depth << "\n";
  return os.str();
}

}  // namespace nashtoric
