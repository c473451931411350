#include "swsurg/report.hpp"

#include "swsurg/errors.hpp"
#include "swsurg/floer.hpp"

namespace swsurg {

using nlohmann::json;

InputDigest digest_of(const std::string& label, const ManifoldFile& file) {
  return {label, sha256_hex(serialize(file, Style::Canonical))};
}

bool ClassAudit::passes() const {
  if (!characteristic || !square) return false;
  if (theorem1_required && !theorem1.value_or(false)) return false;
  return pullback.value_or(true);
}

ClassAudit audit_class(const FourManifold& x, const BasicClass& bc, const SurfaceEmbedding* surface,
                       const GluedLatticePresentation* presentation) {
  ClassAudit a;
  a.k = bc.k;
  a.sw = bc.sw;
  a.characteristic = is_characteristic(x.lattice, bc.k);
  a.square = pair(x.lattice, bc.k, bc.k) == x.canonical_square();
  if (surface) {
    a.surface_pairing = pair(x.lattice, bc.k, surface->surface_class);
    if (self_intersection(x, *surface) == 0) a.theorem1 = theorem1_filter(x, *surface, bc.k, presentation);
  }
  if (presentation) a.pullback = pullback_condition(*presentation, bc.k);
  return a;
}

void SurgeryReport::require_all_pass() const {
  for (const auto& row : audit)
    if (!row.passes()) throw InternalConsistency(operation + ": output class " + row.k.to_string() + " fails its audit");
}

namespace {

json audit_to_json(const ClassAudit& a) {
  json j;
  j["class"] = vector_to_json(a.k);
  j["sw"] = integer_to_json(a.sw);
  j["characteristic"] = a.characteristic;
  j["square_condition"] = a.square;
  if (a.surface_pairing) j["surface_pairing"] = integer_to_json(*a.surface_pairing);
  if (a.theorem1) j["theorem1_filter"] = *a.theorem1;
  if (a.pullback) j["pullback"] = *a.pullback;
  j["pass"] = a.passes();
  return j;
}

}  // namespace

json SurgeryReport::to_json() const {
  json j;
  j["operation"] = operation;
  json in = json::array();
  for (const auto& d : inputs) in.push_back({{"label", d.label}, {"sha256", d.sha256}});
  j["inputs"] = std::move(in);
  j["output"] = swsurg::to_json(output);
  j["output_sha256"] = sha256_hex(serialize(output, Style::Canonical));

  json prov = json::array();
  for (std::size_t i = 0; i < provenance.size(); ++i) prov.push_back({{"index", i}, {"role", provenance[i]}});
  j["provenance"] = std::move(prov);

  json rows = json::array();
  for (const auto& a : audit) rows.push_back(audit_to_json(a));
  j["audit"] = std::move(rows);

  json glue = json::array();
  for (const auto& g : glued)
    glue.push_back({{"class", vector_to_json(g.basic.k)},
                    {"sources", {g.source1, g.source2}},
                    {"sign", g.sign},
                    {"sw_product", integer_to_json(g.basic.sw)},
                    {"sigma_coefficient_formula", integer_to_json(g.coefficient_formula)},
                    {"sigma_coefficient_square", integer_to_json(g.coefficient_square)}});
  j["glued"] = std::move(glue);

  json und = json::array();
  for (const auto& u : undetermined)
    und.push_back({{"sources", {u.source1, u.source2}}, {"pairing", integer_to_json(u.pairing)}, {"reason", u.reason}});
  j["undetermined"] = std::move(und);
  j["conventions"] = output.manifold.conventions;
  j["notes"] = notes;
  return j;
}

SurgeryReport blow_up_report(const std::vector<InputDigest>& inputs, const ManifoldFile& output,
                             const std::string* surface_name) {
  SurgeryReport r;
  r.operation = "blowup";
  r.inputs = inputs;
  r.output = output;
  r.provenance = output.manifold.basis_labels;
  const SurfaceEmbedding* surface = surface_name ? &output.surfaces.at(*surface_name) : nullptr;
  for (const auto& bc : output.manifold.basic_classes)
    r.audit.push_back(audit_class(output.manifold, bc, surface, nullptr));
  r.require_all_pass();
  return r;
}

SurgeryReport fiber_sum_report(const std::vector<InputDigest>& inputs, const FiberSumResult& result,
                               const ManifoldFile& output, const std::string& surface_name) {
  SurgeryReport r;
  r.operation = "fibersum";
  r.inputs = inputs;
  r.output = output;
  r.provenance = output.manifold.basis_labels;
  const SurfaceEmbedding& surface = output.surfaces.at(surface_name);
  for (const auto& bc : output.manifold.basic_classes) {
    ClassAudit a = audit_class(output.manifold, bc, &surface, &result.presentation);
    a.theorem1_required = true;
    r.audit.push_back(std::move(a));
  }
  r.glued = result.gluing.classes;
  r.undetermined = result.gluing.undetermined;
  if (!r.undetermined.empty())
    r.notes.push_back("basic class list is incomplete: " + std::to_string(r.undetermined.size()) +
                      " pair(s) with non-extremal surface pairing are undetermined, not vanishing");
  r.require_all_pass();
  return r;
}

json describe_manifold(const ManifoldFile& file) {
  const FourManifold& x = file.manifold;
  json j;
  j["name"] = x.name;
  j["chi"] = integer_to_json(x.chi);
  j["sigma"] = integer_to_json(x.sigma);
  j["b2"] = x.b2();
  const Signature sig = signature(x.lattice);
  j["b_plus"] = sig.positive;
  j["b_minus"] = sig.negative;
  j["unimodular"] = is_unimodular(x.lattice);
  j["even"] = [&] {
    for (std::size_t i = 0; i < x.b2(); ++i)
      if (mpz_odd_p(x.lattice.gram()(i, i).get_mpz_t())) return false;
    return true;
  }();
  j["two_chi_plus_three_sigma"] = integer_to_json(x.canonical_square());
  const ValidationReport v = validate(x);
  j["errors"] = v.errors;
  j["warnings"] = v.warnings;

  json classes = json::array();
  for (const auto& bc : x.basic_classes) {
    json c;
    c["class"] = vector_to_json(bc.k);
    c["sw"] = integer_to_json(bc.sw);
    c["characteristic"] = is_characteristic(x.lattice, bc.k);
    if (c["characteristic"].get<bool>()) c["expected_dimension"] = integer_to_json(expected_dimension(x, bc.k));
    classes.push_back(std::move(c));
  }
  j["basic_classes"] = std::move(classes);

  json surfaces = json::object();
  for (const auto& [name, s] : file.surfaces) {
    json js;
    const Integer self = self_intersection(x, s);
    js["genus"] = s.genus;
    js["self_intersection"] = integer_to_json(self);
    js["divisibility"] = integer_to_json(divisibility(x.lattice, s.surface_class));
    js["primitive"] = is_primitive(s.surface_class);
    js["has_dual"] = s.dual_class.has_value();
    json rows = json::array();
    for (const auto& bc : x.basic_classes) {
      json row;
      const Integer n = pair(x.lattice, bc.k, s.surface_class);
      row["class"] = vector_to_json(bc.k);
      row["surface_pairing"] = integer_to_json(n);
      if (self == 0) {
        row["theorem1_filter"] = theorem1_filter(x, s, bc.k);
        if (mpz_even_p(n.get_mpz_t()) && n.fits_slong_p())
          row["moduli"] = moduli_descriptor(s.genus, n.get_si()).describe();
      }
      rows.push_back(std::move(row));
    }
    js["classes"] = std::move(rows);
    surfaces[name] = std::move(js);
  }
  j["surfaces"] = std::move(surfaces);
  return j;
}

}  // namespace swsurg
