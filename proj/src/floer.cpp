#include "swsurg/floer.hpp"

#include <cstdlib>

#include "swsurg/errors.hpp"

namespace swsurg {

std::string to_string(ModuliKind kind) {
  switch (kind) {
    case ModuliKind::Empty: return "Empty";
    case ModuliKind::SymmetricProduct: return "SymmetricProduct";
    case ModuliKind::JacobianReducible: return "JacobianReducible";
    case ModuliKind::PerturbedSymmetricProduct: return "PerturbedSymmetricProduct";
  }
  return "?";
}

std::string ModuliDescriptor::describe() const {
  switch (kind) {
    case ModuliKind::Empty:
      return "Empty k=" + std::to_string(k);
    case ModuliKind::SymmetricProduct:
      return "SymmetricProduct k=" + std::to_string(k) +
             (k == 0 ? " (point)" : " (s^" + std::to_string(k) + "(Sigma), complex dim " + std::to_string(k) + ")");
    case ModuliKind::PerturbedSymmetricProduct:
      return "PerturbedSymmetricProduct k=" + std::to_string(k) + " (s^" + std::to_string(k) +
             "(Sigma), complex dim " + std::to_string(complex_dimension) + "; unperturbed: Jacobian of degree " +
             std::to_string(genus - 1) + " line bundles, complex dim " + std::to_string(unperturbed_dimension) + ")";
    case ModuliKind::JacobianReducible:
      return "JacobianReducible (complex dim " + std::to_string(complex_dimension) + ")";
  }
  return "?";
}

Integer restriction_pairing(const FourManifold& x, const SurfaceEmbedding& s, const LatticeVector& c) {
  if (self_intersection(x, s) != 0) throw InvalidInput("restriction pairing needs a square-zero surface");
  return pair(x.lattice, c, s.surface_class);
}

bool pullback_condition(const GluedLatticePresentation& presentation, const LatticeVector& c) {
  for (std::size_t gamma = 0; gamma < 2 * static_cast<std::size_t>(presentation.genus); ++gamma)
    if (pair(presentation.lattice, c, presentation.unit(presentation.torus(gamma))) != 0) return false;
  return true;
}

ModuliDescriptor moduli_descriptor(int genus, long c_dot_sigma) {
  if (genus < 1) throw InvalidInput("genus must be >= 1");
  if (c_dot_sigma % 2 != 0) throw InvalidInput("c.S must be even, got " + std::to_string(c_dot_sigma));
  ModuliDescriptor d;
  d.genus = genus;
  d.k = ((2L * genus - 2) - std::labs(c_dot_sigma)) / 2;
  if (d.k < 0) {
    d.kind = ModuliKind::Empty;
    d.complex_dimension = 0;
  } else if (c_dot_sigma != 0) {
    d.kind = ModuliKind::SymmetricProduct;
    d.complex_dimension = d.k;
  } else {
    // k = g - 1 here.
    d.kind = ModuliKind::PerturbedSymmetricProduct;
    d.complex_dimension = d.k;
    d.unperturbed_kind = ModuliKind::JacobianReducible;
    d.unperturbed_dimension = genus;
  }
  return d;
}

long floer_total_rank_extremal(int genus, long k) {
  if (genus < 1) throw InvalidInput("genus must be >= 1");
  if (k > 0)
    throw Unsupported("homology of s^" + std::to_string(k) + "(Sigma) is not computed; only the extremal case k=0");
  return k == 0 ? 1 : 0;
}

}  // namespace swsurg
