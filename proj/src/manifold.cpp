#include "swsurg/manifold.hpp"

#include <set>

#include "swsurg/errors.hpp"

namespace swsurg {

ValidationReport validate(const FourManifold& x) {
  ValidationReport report;
  const IntegerLattice& lattice = x.lattice;
  if (!lattice.gram().is_symmetric()) {
    report.errors.push_back("symmetry: gram matrix is not symmetric");
    return report;
  }

  const Integer expected_b2 = x.chi - 2;
  if (expected_b2 != Integer(static_cast<unsigned long>(lattice.rank())))
    report.errors.push_back("b2 mismatch: lattice rank " + std::to_string(lattice.rank()) +
                            " but chi - 2 = " + expected_b2.get_str());

  if (!is_unimodular(lattice)) report.errors.push_back("unimodular: |det gram| != 1");

  const Signature sig = signature(lattice);
  if (sig.null == 0 && Integer(sig.value()) != x.sigma)
    report.errors.push_back("signature: form has b+ - b- = " + std::to_string(sig.value()) +
                            " but sigma = " + x.sigma.get_str());
  if (sig.null == 0) {
    if (sig.positive <= 1) report.warnings.push_back("b+ not > 1: b+ = " + std::to_string(sig.positive));
    if (sig.positive % 2 == 0) report.warnings.push_back("b+ even: b+ = " + std::to_string(sig.positive));
  }

  if (sig.null == 0 && (static_cast<long>(lattice.rank()) - sig.value()) % 2 != 0)
    report.errors.push_back("parity: rank and signature differ mod 2");

  if (!x.basis_labels.empty() && x.basis_labels.size() != lattice.rank())
    report.errors.push_back("labels: " + std::to_string(x.basis_labels.size()) +
                            " basis labels for rank " + std::to_string(lattice.rank()));

  std::set<LatticeVector> seen;
  const Integer target = x.canonical_square();
  for (std::size_t i = 0; i < x.basic_classes.size(); ++i) {
    const BasicClass& bc = x.basic_classes[i];
    const std::string tag = "class " + std::to_string(i) + " ";
    if (bc.k.size() != lattice.rank()) {
      report.errors.push_back(tag + "dimension: length " + std::to_string(bc.k.size()));
      continue;
    }
    if (bc.sw == 0) report.errors.push_back(tag + "sw zero: basic classes carry a nonzero invariant");
    if (!is_characteristic(lattice, bc.k)) report.errors.push_back(tag + "characteristic: fails Wu criterion");
    const Integer sq = pair(lattice, bc.k, bc.k);
    if (sq != target)
      report.errors.push_back(tag + "square condition: k^2 = " + sq.get_str() + " but 2chi+3sigma = " +
                              target.get_str());
    if (!seen.insert(bc.k).second) report.errors.push_back(tag + "duplicate class " + bc.k.to_string());
  }
  return report;
}

ValidationReport validate_surface(const FourManifold& x, const SurfaceEmbedding& s) {
  ValidationReport report;
  const IntegerLattice& lattice = x.lattice;
  if (s.genus < 1) report.errors.push_back("genus: must be >= 1, got " + std::to_string(s.genus));
  if (s.surface_class.size() != lattice.rank()) {
    report.errors.push_back("dimension: surface class length mismatch");
    return report;
  }
  if (s.surface_class.is_zero() || divisibility(lattice, s.surface_class) == 0)
    report.errors.push_back("torsion: surface class pairs trivially with every class");
  if (s.dual_class) {
    if (s.dual_class->size() != lattice.rank()) {
      report.errors.push_back("dimension: dual class length mismatch");
    } else if (pair(lattice, *s.dual_class, s.surface_class) != 1) {
      report.errors.push_back("dual: D.S = " + pair(lattice, *s.dual_class, s.surface_class).get_str() +
                              ", expected 1");
    }
  }
  return report;
}

void require_valid(const FourManifold& x) {
  ValidationReport r = validate(x);
  if (!r.valid()) throw ValidationError(std::move(r.errors));
}

Integer expected_dimension(const FourManifold& x, const LatticeVector& c1) {
  if (!is_characteristic(x.lattice, c1)) throw InvalidInput("expected dimension needs a characteristic class");
  const Integer numerator = pair(x.lattice, c1, c1) - x.canonical_square();
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 4))
    throw InternalConsistency("c1^2 - 2chi - 3sigma = " + numerator.get_str() + " is not divisible by 4");
  return numerator / 4;
}

bool is_basic_candidate(const FourManifold& x, const LatticeVector& c1) {
  if (c1.size() != x.lattice.rank() || !is_characteristic(x.lattice, c1)) return false;
  return pair(x.lattice, c1, c1) == x.canonical_square();
}

Integer self_intersection(const FourManifold& x, const SurfaceEmbedding& s) {
  return pair(x.lattice, s.surface_class, s.surface_class);
}

}  // namespace swsurg
