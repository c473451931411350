#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "swsurg/manifold_file.hpp"
#include "swsurg/surgery.hpp"

namespace swsurg {

struct InputDigest {
  std::string label;   // "x0.mfd:S"
  std::string sha256;  // of the canonical serialization
};

InputDigest digest_of(const std::string& label, const ManifoldFile& file);

/// One audit row per output basic class.
struct ClassAudit {
  LatticeVector k;
  Integer sw;
  bool characteristic = false;
  bool square = false;
  std::optional<Integer> surface_pairing;
  std::optional<bool> theorem1;
  std::optional<bool> pullback;
  bool theorem1_required = false;

  bool passes() const;
};

ClassAudit audit_class(const FourManifold& x, const BasicClass& bc, const SurfaceEmbedding* surface,
                       const GluedLatticePresentation* presentation);

/// Operation summary: inputs, output file, basis provenance, class audits,
/// undetermined pairs and the conventions in force.
struct SurgeryReport {
  std::string operation;
  std::vector<InputDigest> inputs;
  ManifoldFile output;
  std::vector<std::string> provenance;  // role of each output basis vector
  std::vector<ClassAudit> audit;
  std::vector<UndeterminedPair> undetermined;
  std::vector<GluedClass> glued;  // empty except for fiber sums
  std::vector<std::string> notes;

  /// Throws InternalConsistency when some audit row fails.
  void require_all_pass() const;
  nlohmann::json to_json() const;
};

SurgeryReport blow_up_report(const std::vector<InputDigest>& inputs, const ManifoldFile& output,
                             const std::string* surface_name);

SurgeryReport fiber_sum_report(const std::vector<InputDigest>& inputs, const FiberSumResult& result,
                               const ManifoldFile& output, const std::string& surface_name);

/// Validation, inertia and per-surface audits of one manifold file.
nlohmann::json describe_manifold(const ManifoldFile& file);

}  // namespace swsurg
