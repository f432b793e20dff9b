// nashtoric: Nash blowups of affine toric varieties in characteristic p.
//
// Exit codes: 0 ok, 1 internal error, 2 invalid input, 3 depth cap reached
// with singular leaves, 4 trivial blowup (non-normalized resolution only).

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nashtoric/io.hpp"
#include "nashtoric/nash_blowup.hpp"
#include "nashtoric/resolution.hpp"
#include "nashtoric/semigroup.hpp"

using namespace nashtoric;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDepthCap = 3;
constexpr int kExitStall = 4;

struct Flags {
  std::string input;
  std::optional<std::uint64_t> characteristic;
  std::vector<std::uint64_t> characteristics;
  bool no_normalize = false;
  std::optional<std::size_t> max_depth;
  std::optional<std::string> format;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::int64_t entry_bound = 50;
  bool saturate_root = false;
  bool parallel = false;
};

std::string read_document(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::malformed_input, "cannot read input file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Command-line flags take precedence over fields of the input document.
ProblemSpec load_spec(const Flags& flags) {
  ProblemSpec spec = parse_input(read_document(flags.input));
  if (flags.characteristic) spec.characteristic = Characteristic(*flags.characteristic);
  if (flags.no_normalize) spec.normalize = false;
  if (flags.max_depth) {
    if (*flags.max_depth == 0) throw Error(ErrorCode::malformed_input, "--max-depth must be at least 1");
    spec.max_depth = *flags.max_depth;
  }
  if (flags.format) spec.format = parse_format(*flags.format);
  return spec;
}

std::vector<Characteristic> characteristic_list(const Flags& flags, std::vector<Characteristic> fallback) {
  if (flags.characteristics.empty()) return fallback;
  std::vector<Characteristic> out;
  for (auto p : flags.characteristics) out.emplace_back(p);
  return out;
}

void require_not_dot(OutputFormat format, std::string_view command) {
  if (format == OutputFormat::dot) {
    throw Error(ErrorCode::malformed_input, "--format dot is only available for resolve (not " + std::string(command) + ")");
  }
}

void emit(OutputFormat format, const Json& json, const std::string& text) {
  if (format == OutputFormat::text) {
    std::cout << text;
  } else {
    std::cout << canonical_dump(json) << "\n";
  }
}

int run_command(const std::string& command, const Flags& flags) {
  if (command == "suite") {
    SuiteOptions options;
    options.seed = flags.seed;
    options.count = flags.count;
    options.entry_bound = flags.entry_bound;
    options.characteristics = characteristic_list(flags, options.characteristics);
    if (flags.max_depth) {
      if (*flags.max_depth == 0) throw Error(ErrorCode::malformed_input, "--max-depth must be at least 1");
      options.max_depth = *flags.max_depth;
    }
    options.parallel = flags.parallel;
    OutputFormat format = flags.format ? parse_format(*flags.format) : OutputFormat::json;
    require_not_dot(format, command);
    SuiteSummary summary = surface_termination_suite(options);
    emit(format, to_json(summary), to_text(summary));
    if (summary.terminated != summary.count) return kExitDepthCap;
    return summary.all_passed() ? kExitOk : kExitInternal;
  }

  ProblemSpec spec = load_spec(flags);
  AffineSemigroup gamma = build_semigroup(spec);
  if (command != "resolve") require_not_dot(spec.format, command);

  if (command == "check") {
    Json out = Json::object();
    out["valid"] = true;
    out["input"] = to_json(spec);
    out["semigroup"] = to_json(gamma);
    emit(spec.format, out, "valid\n" + to_text(gamma));
    return kExitOk;
  }
  if (command == "mingen") {
    emit(spec.format, to_json(gamma), to_text(gamma));
    return kExitOk;
  }
  if (command == "saturate") {
    AffineSemigroup saturation = saturate(gamma);
    emit(spec.format, to_json(saturation), to_text(saturation));
    return kExitOk;
  }
  if (command == "logjac") {
    std::vector<MonomialIdealExponents> ideals;
    for (const auto& ch : characteristic_list(flags, {spec.characteristic})) {
      ideals.push_back(log_jacobian_ideal(gamma, ch));
    }
    Json list = Json::array();
    for (const auto& ideal : ideals) list.push_back(to_json(ideal));
    Json out = Json::object();
    out["ideals"] = std::move(list);
    emit(spec.format, out, to_text(std::span<const MonomialIdealExponents>(ideals)));
    return kExitOk;
  }
  if (command == "newton") {
    NewtonPolyhedron n = newton_polyhedron(log_jacobian_ideal(gamma, spec.characteristic));
    emit(spec.format, to_json(n), to_text(n));
    return kExitOk;
  }
  if (command == "blowup") {
    NewtonPolyhedron n = newton_polyhedron(log_jacobian_ideal(gamma, spec.characteristic));
    std::vector<BlowupChart> charts = blowup_charts(n, spec.normalize);
    emit(spec.format, to_json(n, charts), to_text(n, charts));
    return kExitOk;
  }
  if (command == "resolve") {
    ResolveOptions options;
    options.normalize = spec.normalize;
    options.max_depth = spec.max_depth;
    options.saturate_root = flags.saturate_root;
    options.parallel = flags.parallel;
    ResolutionTree tree = resolve(gamma, spec.characteristic, options);
    if (spec.format == OutputFormat::dot) {
      std::cout << to_dot(tree);
    } else {
      emit(spec.format, to_json(tree), to_text(tree));
    }
    if (tree.contains_status(NodeStatus::trivial_stall)) return kExitStall;
    if (tree.contains_status(NodeStatus::depth_capped)) return kExitDepthCap;
    return kExitOk;
  }
  if (command == "compare") {
    auto chars = characteristic_list(flags, {Characteristic(0), Characteristic(2), Characteristic(3), Characteristic(5)});
    CharacteristicComparison report = compare_characteristics(gamma, chars);
    emit(spec.format, to_json(report), to_text(report));
    return kExitOk;
  }
  throw Error(ErrorCode::internal_invariant, "unhandled command " + command);
}

void report_error(const std::string& code, const std::string& message) {
  Json err = Json::object();
  err["error"] = code;
  err["message"] = message;
  std::cerr << canonical_dump(err) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash blowups of affine toric varieties in characteristic p"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Flags flags;
  app.add_option("--char", flags.characteristic, "characteristic p (0 or a prime); overrides the input");
  app.add_option("--chars", flags.characteristics, "characteristics for logjac/compare/suite, comma separated")
      ->delimiter(',')
      ->allow_extra_args(false);
  app.add_flag("--no-normalize", flags.no_normalize, "do not saturate the charts");
  app.add_option("--max-depth", flags.max_depth, "depth cap for resolve/suite (default 64)");
  app.add_option("--format", flags.format, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--seed", flags.seed, "suite: random seed (echoed in the output)");
  app.add_option("--count", flags.count, "suite: number of random cones");
  app.add_option("--entry-bound", flags.entry_bound, "suite: bound on ray coordinates")->check(CLI::PositiveNumber);
  app.add_flag("--saturate-root", flags.saturate_root, "resolve: saturate the input before the first blowup");
  app.add_flag("--parallel", flags.parallel, "expand sibling charts concurrently (output unchanged)");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"check", "validate the input"},
      {"mingen", "minimal generators of the semigroup"},
      {"saturate", "saturation cone(Γ) ∩ Z^d"},
      {"logjac", "logarithmic Jacobian ideal modulo p"},
      {"newton", "Newton polyhedron of the logarithmic Jacobian ideal"},
      {"blowup", "charts of one (normalized) Nash blowup"},
      {"resolve", "iterate Nash blowups to a resolution tree"},
      {"compare", "compare Newton polyhedra across characteristics"},
      {"suite", "random normal surface termination suite"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    if (name != "suite") sub->add_option("input", flags.input, "input JSON file (default: standard input)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report_error("E_USAGE", e.what());
    return kExitInvalid;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run_command(command, flags);
  } catch (const Error& e) {
    report_error(std::string(error_code_name(e.code())), e.what());
    return e.code() == ErrorCode::internal_invariant ? kExitInternal : kExitInvalid;
  } catch (const std::exception& e) {
    report_error("E_INTERNAL", e.what());
    return kExitInternal;
  }
}
