#pragma once

#include <optional>
#include <string>

#include "swsurg/lattice.hpp"
#include "swsurg/manifold.hpp"
#include "swsurg/surgery.hpp"

namespace swsurg {

enum class ModuliKind { Empty, SymmetricProduct, JacobianReducible, PerturbedSymmetricProduct };

std::string to_string(ModuliKind kind);

/// Translation-invariant moduli on Sigma x S^1 for a class with c.S = 2m.
struct ModuliDescriptor {
  ModuliKind kind = ModuliKind::Empty;
  long k = 0;  // ((2g-2) - |c.S|) / 2
  int genus = 0;
  long complex_dimension = 0;
  // For c.S = 0 the perturbed picture is reported; this is the unperturbed one.
  std::optional<ModuliKind> unperturbed_kind;
  long unperturbed_dimension = 0;

  /// "SymmetricProduct k=0 (point)", "Empty", ...
  std::string describe() const;
};

/// c.S for a square-zero surface; callers halve it after checking parity.
Integer restriction_pairing(const FourManifold& x, const SurfaceEmbedding& s, const LatticeVector& c);

/// c.T_gamma = 0 for every torus generator of the glued lattice.
bool pullback_condition(const GluedLatticePresentation& presentation, const LatticeVector& c);

/// Throws InvalidInput for odd c_dot_sigma or genus < 1.
ModuliDescriptor moduli_descriptor(int genus, long c_dot_sigma);

/// Rank of the homology of the k-th symmetric product for k <= 0: 1 for the
/// point at k = 0 and 0 for the empty space. k > 0 throws Unsupported.
long floer_total_rank_extremal(int genus, long k = 0);

}  // namespace swsurg
