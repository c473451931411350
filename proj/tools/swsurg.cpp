// swsurg: basic-class bookkeeping for blow-ups and fiber sums of 4-manifolds.
//
// Exit codes: 0 success, 1 validation failure (invalid data or unmet
// hypothesis), 2 unsupported case, 3 parse error (input file or command
// line), 4 internal consistency failure.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "swsurg/errors.hpp"
#include "swsurg/floer.hpp"
#include "swsurg/manifold_file.hpp"
#include "swsurg/report.hpp"
#include "swsurg/surgery.hpp"

namespace {

using namespace swsurg;

enum ExitCode : int { kOk = 0, kValidation = 1, kUnsupported = 2, kParse = 3, kInternal = 4 };

void emit(const std::string& contents, const std::string& path) {
  if (path.empty())
    std::cout << contents;
  else
    write_file_atomically(path, contents);
}

struct SurfaceRef {
  std::string path;
  std::string surface;
};

SurfaceRef split_ref(const std::string& arg) {
  const auto colon = arg.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == arg.size())
    throw ParseError("expected FILE:SURFACE, got \"" + arg + "\"", "command line");
  return {arg.substr(0, colon), arg.substr(colon + 1)};
}

const SurfaceEmbedding& lookup_surface(const ManifoldFile& file, const std::string& name, const std::string& path) {
  auto it = file.surfaces.find(name);
  if (it == file.surfaces.end()) throw InvalidInput(path + " has no surface named \"" + name + "\"");
  return it->second;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

LatticeVector parse_class(const std::string& text) {
  std::vector<Integer> coords;
  for (const auto& item : split_csv(text)) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0)
      throw ParseError("\"" + item + "\" is not an integer", "--class");
    coords.push_back(v);
  }
  return LatticeVector(std::move(coords));
}

int cmd_validate(const std::string& path) {
  try {
    const ManifoldFile file = read_manifold_file(path);
    std::cout << "valid: " << file.manifold.name << "\n";
    for (const auto& w : validate(file.manifold).warnings) std::cout << "warning: " << w << "\n";
    return kOk;
  } catch (const ValidationError& e) {
    std::cout << "invalid:\n";
    for (const auto& f : e.failures()) std::cout << "  " << f << "\n";
    return kValidation;
  }
}

int cmd_blowup(const std::string& path, const std::string& on, std::optional<int> times, const std::string& out,
               const std::string& report_path) {
  const ManifoldFile input = read_manifold_file(path);
  ManifoldFile result;
  result.schema_version = input.schema_version;
  std::size_t added = 1;
  if (on.empty()) {
    if (times) throw InvalidInput("--times needs --on SURFACE");
    result.manifold = blow_up(input.manifold);
  } else {
    const SurfaceEmbedding& s = lookup_surface(input, on, path);
    if (!times) {
      const Integer self = self_intersection(input.manifold, s);
      if (self < 0) throw Unsupported("surface " + on + " has negative self-intersection " + self.get_str());
      if (!self.fits_sint_p()) throw Unsupported("self-intersection of " + on + " is too large");
      times = static_cast<int>(self.get_si());
    }
    if (*times < 0) throw InvalidInput("--times must be non-negative");
    auto [m, surface] = blow_up_on_surface(input.manifold, s, *times);
    result.manifold = std::move(m);
    result.surfaces[on] = std::move(surface);
    added = static_cast<std::size_t>(*times);
  }
  for (const auto& [name, s] : input.surfaces)
    if (name != on) result.surfaces[name] = extend_surface(s, added);

  const Style style = style_from_environment();
  const SurgeryReport report = blow_up_report({digest_of(path, input)}, result, on.empty() ? nullptr : &on);
  emit(serialize(result, style), out);
  if (!report_path.empty()) write_file_atomically(report_path, render_json(report.to_json(), style));
  return kOk;
}

int cmd_fibersum(const std::string& first, const std::string& second, const std::string& out,
                 const std::string& report_path, const std::string& surface_name) {
  const SurfaceRef r1 = split_ref(first);
  const SurfaceRef r2 = split_ref(second);
  const ManifoldFile f1 = read_manifold_file(r1.path);
  const ManifoldFile f2 = read_manifold_file(r2.path);
  SurfaceEmbedding s1 = lookup_surface(f1, r1.surface, r1.path);
  SurfaceEmbedding s2 = lookup_surface(f2, r2.surface, r2.path);

  std::vector<std::string> notes;
  auto ensure_dual = [&](const ManifoldFile& f, SurfaceEmbedding& s, const SurfaceRef& ref) {
    if (s.dual_class) return;
    s.dual_class = find_dual_class(f.manifold.lattice, s.surface_class);
    notes.push_back("dual class for " + ref.path + ":" + ref.surface + " computed as " + s.dual_class->to_string());
  };
  ensure_dual(f1, s1, r1);
  ensure_dual(f2, s2, r2);

  auto [side1, side2] = normalize_pair(f1.manifold, s1, f2.manifold, s2);
  if (side1.blow_ups > 0 || side2.blow_ups > 0)
    notes.push_back("normalized self-intersections by blowing up " + std::to_string(side1.blow_ups) + " and " +
                    std::to_string(side2.blow_ups) + " points on the surfaces");

  const FiberSumResult fs = fiber_sum(side1.manifold, side1.surface, side2.manifold, side2.surface);
  ManifoldFile result;
  result.manifold = fs.manifold;
  result.surfaces[surface_name] = fs.surface;

  SurgeryReport report = fiber_sum_report({digest_of(first, f1), digest_of(second, f2)}, fs, result, surface_name);
  report.notes.insert(report.notes.begin(), notes.begin(), notes.end());

  const Style style = style_from_environment();
  emit(serialize(result, style), out);
  if (!report_path.empty()) write_file_atomically(report_path, render_json(report.to_json(), style));

  if (fs.gluing.classes.empty() && !fs.gluing.undetermined.empty()) {
    std::cerr << "swsurg: only non-extremal pairs; " << fs.gluing.undetermined.size()
              << " pair(s) undetermined, no basic classes determined\n";
    return kUnsupported;
  }
  return kOk;
}

int cmd_moduli(int genus, long pairing) {
  std::cout << moduli_descriptor(genus, pairing).describe() << "\n";
  return kOk;
}

int cmd_dimension(const std::string& path, const std::string& cls) {
  const ManifoldFile file = read_manifold_file(path);
  std::cout << expected_dimension(file.manifold, parse_class(cls)).get_str() << "\n";
  return kOk;
}

int cmd_report(const std::string& path) {
  const ManifoldFile file = read_manifold_file(path);
  std::cout << render_json(describe_manifold(file), style_from_environment());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seiberg-Witten basic classes under blow-up and fiber sum"};
  app.require_subcommand(1);

  std::string file, file2, out, report, on, cls, surface_name = "S";
  std::optional<int> times;
  int genus = 0;
  long pairing = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check a manifold file against its invariants");
  validate_cmd->add_option("FILE", file)->required();

  auto* blowup_cmd = app.add_subcommand("blowup", "blow up a point, or points on a surface");
  blowup_cmd->add_option("FILE", file)->required();
  blowup_cmd->add_option("--on", on, "surface to blow up on (proper transform replaces it)");
  blowup_cmd->add_option("--times", times, "number of points (default: the surface's self-intersection)");
  blowup_cmd->add_option("-o,--output", out, "output manifold file (default stdout)");
  blowup_cmd->add_option("--report", report, "write a surgery report");

  auto* fibersum_cmd = app.add_subcommand("fibersum", "connected sum along surfaces of equal genus");
  fibersum_cmd->add_option("first", file, "FILE1:SURFACE1")->required();
  fibersum_cmd->add_option("second", file2, "FILE2:SURFACE2")->required();
  fibersum_cmd->add_option("-o,--output", out, "output manifold file (default stdout)");
  fibersum_cmd->add_option("--report", report, "write a surgery report");
  fibersum_cmd->add_option("--surface-name", surface_name, "name of the glued surface in the output")
      ->capture_default_str();

  auto* moduli_cmd = app.add_subcommand("moduli", "moduli descriptor on Sigma x S^1");
  moduli_cmd->add_option("--genus", genus)->required();
  moduli_cmd->add_option("--pairing", pairing, "c.Sigma (even)")->required();

  auto* dimension_cmd = app.add_subcommand("dimension", "expected dimension of a characteristic class");
  dimension_cmd->add_option("FILE", file)->required();
  dimension_cmd->add_option("--class", cls, "comma-separated coordinates")->required();

  auto* report_cmd = app.add_subcommand("report", "describe a manifold file");
  report_cmd->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*blowup_cmd) return cmd_blowup(file, on, times, out, report);
    if (*fibersum_cmd) return cmd_fibersum(file, file2, out, report, surface_name);
    if (*moduli_cmd) return cmd_moduli(genus, pairing);
    if (*dimension_cmd) return cmd_dimension(file, cls);
    if (*report_cmd) return cmd_report(file);
  } catch (const ParseError& e) {
    std::cerr << "swsurg: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "swsurg: " << e.what() << "\n";
    return kValidation;
  } catch (const InvalidInput& e) {
    std::cerr << "swsurg: invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const HypothesisNotMet& e) {
    std::cerr << "swsurg: hypothesis not met: " << e.what() << "\n";
    return kValidation;
  } catch (const Unsupported& e) {
    std::cerr << "swsurg: unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InternalConsistency& e) {
    std::cerr << "swsurg: internal consistency failure: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "swsurg: " << e.what() << "\n";
    return kInternal;
  }
  return kParse;
}
