#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swsurg/lattice.hpp"
#include "swsurg/manifold.hpp"

namespace swsurg {

// ------------------------------------------------------------------ blow-up

/// Recorded in FourManifold::conventions by blow_up.
inline constexpr const char* kBlowUpConvention =
    "blow-up convention: sw(K+E) = sw(K-E) = sw(K)";

/// Adds a <-1> summand spanned by a new last basis vector E and replaces each
/// basic class K by K+E and K-E. Requires a valid simple-type manifold.
FourManifold blow_up(const FourManifold& x);

/// Blows up `times` points on the surface; the surface becomes its proper
/// transform S - E_1 - ... - E_times. Existing surfaces of the caller are not
/// touched; use extend_surface for them.
std::pair<FourManifold, SurfaceEmbedding> blow_up_on_surface(const FourManifold& x, const SurfaceEmbedding& s,
                                                             int times);

/// Pads a surface's coordinates with zeros after `extra` blow-ups elsewhere.
SurfaceEmbedding extend_surface(const SurfaceEmbedding& s, std::size_t extra);

struct NormalizedSide {
  FourManifold manifold;
  SurfaceEmbedding surface;
  int blow_ups = 0;
};

/// Brings both surfaces to self-intersection zero by blowing up on them.
/// Negative self-intersection throws Unsupported.
std::pair<NormalizedSide, NormalizedSide> normalize_pair(const FourManifold& x1, const SurfaceEmbedding& s1,
                                                         const FourManifold& x2, const SurfaceEmbedding& s2);

// ------------------------------------------------------- pairing and cokernel

/// (a1, a2) lies in the pairing group: a1.S1 == a2.S2.
bool pairing_group_check(const FourManifold& x1, const SurfaceEmbedding& s1, const FourManifold& x2,
                         const SurfaceEmbedding& s2, const LatticeVector& a1, const LatticeVector& a2);

/// Order of the cyclic cokernel of the restriction map, gcd(m1, m2), checked
/// against the Smith form of the 1x2 presentation (m1, -m2).
Integer cokernel_of_pi(const Integer& m1, const Integer& m2);

/// A class D with D.S = 1 for a primitive surface class of a unimodular lattice.
LatticeVector find_dual_class(const IntegerLattice& lattice, const LatticeVector& surface_class);

// ------------------------------------------------------------- fiber sum

enum class RoleKind { Torus, Sphere, FromX1, FromX2, DualD, SurfaceSigma };

struct BasisRole {
  RoleKind kind;
  std::size_t index = 0;  // 0-based position within its block

  std::string label() const;
  friend bool operator==(const BasisRole&, const BasisRole&) = default;
};

/// Lattice of the fiber sum in the basis
///   T_a1, T_b1, ..., T_ag, T_bg, D_a1, ..., D_bg, W1-perp, W2-perp, D, S
/// where T are the tori gamma x S^1, D_gamma the (-2)-spheres, W_i-perp the
/// orthogonal complement of span{S_i, D_i} in X_i.
struct GluedLatticePresentation {
  int genus = 0;
  std::vector<BasisRole> roles;
  IntegerLattice lattice;
  SublatticeBasis w1_perp;  // coordinates in X1
  SublatticeBasis w2_perp;  // coordinates in X2

  std::size_t rank() const noexcept { return roles.size(); }
  std::size_t torus(std::size_t gamma) const { return gamma; }
  std::size_t sphere(std::size_t gamma) const { return 2 * genus + gamma; }
  std::size_t from_x1(std::size_t i) const { return 4 * genus + i; }
  std::size_t from_x2(std::size_t i) const { return 4 * genus + w1_perp.generators.size() + i; }
  std::size_t dual_d() const { return rank() - 2; }
  std::size_t surface_sigma() const { return rank() - 1; }

  LatticeVector unit(std::size_t index) const { return LatticeVector::unit(rank(), index); }
};

/// <beta, gamma> on H_1 of the surface in the basis a1, b1, ..., ag, bg.
int symplectic_pairing(std::size_t beta, std::size_t gamma);

/// Assembles the glued lattice from normalized surfaces with duals. The DualD
/// square is D1^2 + D2^2 and distinct spheres are orthogonal.
GluedLatticePresentation assemble_presentation(const FourManifold& x1, const SurfaceEmbedding& s1,
                                               const FourManifold& x2, const SurfaceEmbedding& s2);

/// kappa_i = alpha_i + c D_i + r_i S_i with c = kappa_i.S_i and alpha_i in W_i-perp.
struct SurfaceDecomposition {
  LatticeVector alpha;                // coordinates in X_i
  std::vector<Integer> alpha_in_perp;  // coordinates in the W_i-perp basis
  Integer dual_coefficient;            // c
  Integer surface_coefficient;         // r_i
};

SurfaceDecomposition decompose(const FourManifold& x, const SurfaceEmbedding& s, const SublatticeBasis& w_perp,
                               const LatticeVector& k);

struct GluedClass {
  BasicClass basic;
  std::size_t source1;  // index into x1.basic_classes
  std::size_t source2;
  int sign;                    // +1 or -1: kappa.S = sign (2g - 2)
  Integer coefficient_formula;  // r1 + r2 + 2 sign
  Integer coefficient_square;   // solved from kappa^2 = 2chi + 3sigma
};

struct UndeterminedPair {
  std::size_t source1;
  std::size_t source2;
  Integer pairing;  // common value kappa_i.S_i, |.| < 2g - 2
  std::string reason;
};

struct GluingOutcome {
  std::vector<GluedClass> classes;          // sorted by glued vector
  std::vector<UndeterminedPair> undetermined;  // sorted by (source1, source2)
};

/// Glues every pair of extremal basic classes with equal surface pairing.
/// Pairs in the pairing group with |pairing| < 2g-2 are reported as
/// undetermined, never as vanishing.
GluingOutcome glue_basic_classes(const FourManifold& x1, const SurfaceEmbedding& s1, const FourManifold& x2,
                                 const SurfaceEmbedding& s2, const GluedLatticePresentation& presentation);

struct FiberSumResult {
  FourManifold manifold;
  GluedLatticePresentation presentation;
  SurfaceEmbedding surface;
  GluingOutcome gluing;
};

/// Connected sum along square-zero surfaces of equal genus g >= 2.
FiberSumResult fiber_sum(const FourManifold& x1, const SurfaceEmbedding& s1, const FourManifold& x2,
                         const SurfaceEmbedding& s2);

// ------------------------------------------------------------- constraints

/// c.S even with |c.S| <= 2g-2 and, when a presentation is given, c.T_gamma = 0
/// for every torus generator.
bool theorem1_filter(const FourManifold& x, const SurfaceEmbedding& s, const LatticeVector& c,
                     const GluedLatticePresentation* presentation = nullptr);

/// sw(k1) * sw(k2) for an extremal pair in the pairing group. Throws
/// HypothesisNotMet when the product formula does not apply.
Integer theorem2_product(const FourManifold& x1, const SurfaceEmbedding& s1, const FourManifold& x2,
                         const SurfaceEmbedding& s2, const BasicClass& k1, const BasicClass& k2);

}  // namespace swsurg
