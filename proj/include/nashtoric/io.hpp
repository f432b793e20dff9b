#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nashtoric/lattice.hpp"
#include "nashtoric/nash_blowup.hpp"
#include "nashtoric/resolution.hpp"
#include "nashtoric/semigroup.hpp"

namespace nashtoric {

using Json = nlohmann::json;

enum class SourceKind { semigroup_generators, dual_cone_rays, cone_rays };
enum class OutputFormat { json, dot, text };

std::string_view source_name(SourceKind kind);
std::string_view format_name(OutputFormat format);
OutputFormat parse_format(std::string_view name);

/// A validated problem description.
///
/// Input document (UTF-8 JSON):
///   {"dimension": d, "characteristic": p,
///    exactly one of "semigroup_generators" | "dual_cone_rays" | "cone_rays": [[...], ...],
///    optional "normalize": bool, "max_depth": n, "format": "json"|"dot"|"text"}
/// Integers may be JSON numbers or decimal strings (for values beyond 64 bits).
struct ProblemSpec {
  std::size_t dimension = 0;
  Characteristic characteristic = Characteristic(0);
  SourceKind source = SourceKind::semigroup_generators;
  std::vector<LatticeVector> vectors;
  bool normalize = true;
  std::size_t max_depth = kDefaultMaxDepth;
  OutputFormat format = OutputFormat::json;
};

ProblemSpec parse_input(std::string_view document);
ProblemSpec parse_input_json(const Json& document);

/// Γ described by the spec: the generators themselves, or the Hilbert basis
/// of the dual cone / the dual of the cone.
AffineSemigroup build_semigroup(const ProblemSpec& spec);

// JSON encoders. Objects have sorted keys and vector lists are sorted, so
// Json::dump() is canonical.
Json to_json(const Integer& value);
Json to_json(const LatticeVector& v);
Json to_json(std::span<const LatticeVector> vs);
Json to_json(const ProblemSpec& spec);
Json to_json(const AffineSemigroup& s);
Json to_json(const MonomialIdealExponents& ideal);
Json to_json(const NewtonPolyhedron& n);
Json to_json(const NewtonPolyhedron& n, std::span<const BlowupChart> charts);
Json to_json(const ResolutionNode& node);
Json to_json(const ResolutionTree& tree);
Json to_json(const CharacteristicComparison& report);
Json to_json(const SuiteSummary& summary);

/// Canonical serialized form: no whitespace, sorted keys.
std::string canonical_dump(const Json& j);

/// Resolution tree as a directed graph; node labels list minimal generators,
/// edge labels the chart vertices.
std::string to_dot(const ResolutionTree& tree);

// Human-readable renderings.
std::string exponent_monomial(const LatticeVector& e);
std::string to_text(const AffineSemigroup& s);
std::string to_text(std::span<const MonomialIdealExponents> ideals);
std::string to_text(const NewtonPolyhedron& n);
std::string to_text(const NewtonPolyhedron& n, std::span<const BlowupChart> charts);
std::string to_text(const ResolutionTree& tree);
std::string to_text(const CharacteristicComparison& report);
std::string to_text(const SuiteSummary& summary);

}  // namespace nashtoric
