#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swsurg/lattice.hpp"

namespace swsurg {

struct BasicClass {
  LatticeVector k;
  Integer sw;  // torsion-summed Seiberg-Witten value, nonzero

  friend bool operator==(const BasicClass&, const BasicClass&) = default;
};

/// Homeomorphism-level data of a closed 4-manifold with b1 = 0 plus its
/// basic classes, in a fixed basis of H^2 modulo torsion.
struct FourManifold {
  std::string name;
  Integer chi;
  Integer sigma;
  IntegerLattice lattice;
  std::vector<BasicClass> basic_classes;
  bool simple_type = true;
  // Optional human-readable role of each basis vector ("e1", "E2", "Torus(a1)").
  std::vector<std::string> basis_labels;
  // Conventions applied while producing this manifold (e.g. blow-up sw carry-over).
  std::vector<std::string> conventions;

  std::size_t b2() const noexcept { return lattice.rank(); }
  /// 2 chi + 3 sigma, the square every basic class must have.
  Integer canonical_square() const { return 2 * chi + 3 * sigma; }
};

/// An embedded surface: its class, genus and optionally a class D with D.S = 1.
struct SurfaceEmbedding {
  LatticeVector surface_class;
  int genus = 1;
  std::optional<LatticeVector> dual_class;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool valid() const noexcept { return errors.empty(); }
};

/// Checks every FourManifold invariant. Errors: symmetry, b2 mismatch,
/// unimodular, signature, vector length, sw zero, characteristic, square
/// condition, duplicate class. Warnings: b+ not > 1, b+ even.
ValidationReport validate(const FourManifold& x);

/// Surface checks that do not depend on normalization: length, nonzero,
/// genus >= 1, and D.S = 1 when a dual is present.
ValidationReport validate_surface(const FourManifold& x, const SurfaceEmbedding& s);

/// Throws ValidationError listing the errors of validate().
void require_valid(const FourManifold& x);

/// (c1^2 - 2 chi - 3 sigma) / 4. Throws InvalidInput for non-characteristic
/// c1 and InternalConsistency if the quotient is not integral.
Integer expected_dimension(const FourManifold& x, const LatticeVector& c1);

/// Characteristic with expected dimension zero.
bool is_basic_candidate(const FourManifold& x, const LatticeVector& c1);

Integer self_intersection(const FourManifold& x, const SurfaceEmbedding& s);

}  // namespace swsurg
