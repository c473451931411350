#include "swsurg/surgery.hpp"

#include <algorithm>
#include <tuple>

#include "swsurg/errors.hpp"

namespace swsurg {

namespace {

std::vector<std::string> labels_or_default(const FourManifold& x) {
  if (!x.basis_labels.empty()) return x.basis_labels;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < x.b2(); ++i) labels.push_back("v" + std::to_string(i + 1));
  return labels;
}

std::size_t count_exceptional(const std::vector<std::string>& labels) {
  return std::count_if(labels.begin(), labels.end(),
                       [](const std::string& l) { return l.size() > 1 && l[0] == 'E' && std::isdigit(l[1]); });
}

void add_convention(std::vector<std::string>& conventions, const std::string& c) {
  if (std::find(conventions.begin(), conventions.end(), c) == conventions.end()) conventions.push_back(c);
}

Integer extremal(int genus) { return Integer(2 * genus - 2); }

}  // namespace

// ------------------------------------------------------------------ blow-up

FourManifold blow_up(const FourManifold& x) {
  require_valid(x);
  if (!x.simple_type) throw HypothesisNotMet("blow-up formula needs a simple-type manifold");

  const std::size_t n = x.b2();
  FourManifold out;
  out.name = x.name + "#CP2bar";
  out.chi = x.chi + 1;
  out.sigma = x.sigma - 1;
  out.lattice = x.lattice.direct_sum(IntegerLattice::diagonal({-1}));
  out.simple_type = true;
  out.basis_labels = labels_or_default(x);
  out.basis_labels.push_back("E" + std::to_string(count_exceptional(out.basis_labels) + 1));
  out.conventions = x.conventions;
  add_convention(out.conventions, kBlowUpConvention);

  const LatticeVector e = LatticeVector::unit(n + 1, n);
  for (const BasicClass& bc : x.basic_classes) {
    const LatticeVector k = bc.k.extended(1);
    out.basic_classes.push_back({k + e, bc.sw});
    out.basic_classes.push_back({k - e, bc.sw});
  }
  std::sort(out.basic_classes.begin(), out.basic_classes.end(),
            [](const BasicClass& a, const BasicClass& b) { return a.k < b.k; });
  return out;
}

SurfaceEmbedding extend_surface(const SurfaceEmbedding& s, std::size_t extra) {
  SurfaceEmbedding out = s;
  out.surface_class = s.surface_class.extended(extra);
  if (s.dual_class) out.dual_class = s.dual_class->extended(extra);
  return out;
}

std::pair<FourManifold, SurfaceEmbedding> blow_up_on_surface(const FourManifold& x, const SurfaceEmbedding& s,
                                                             int times) {
  if (times < 0) throw InvalidInput("blow-up count must be non-negative");
  if (s.surface_class.size() != x.b2()) throw InvalidInput("surface class length does not match the lattice");
  FourManifold current = x;
  SurfaceEmbedding surface = s;
  for (int i = 0; i < times; ++i) {
    current = blow_up(current);
    surface = extend_surface(surface, 1);
    surface.surface_class[current.b2() - 1] -= 1;
  }
  return {std::move(current), std::move(surface)};
}

std::pair<NormalizedSide, NormalizedSide> normalize_pair(const FourManifold& x1, const SurfaceEmbedding& s1,
                                                         const FourManifold& x2, const SurfaceEmbedding& s2) {
  auto side = [](const FourManifold& x, const SurfaceEmbedding& s, int which) {
    const Integer n = self_intersection(x, s);
    if (n < 0)
      throw Unsupported("surface " + std::to_string(which) + " has negative self-intersection " + n.get_str());
    if (!n.fits_sint_p()) throw Unsupported("self-intersection too large to blow down to zero");
    const int times = static_cast<int>(n.get_si());
    auto [m, surf] = blow_up_on_surface(x, s, times);
    return NormalizedSide{std::move(m), std::move(surf), times};
  };
  return {side(x1, s1, 1), side(x2, s2, 2)};
}

// ------------------------------------------------------- pairing and cokernel

bool pairing_group_check(const FourManifold& x1, const SurfaceEmbedding& s1, const FourManifold& x2,
                         const SurfaceEmbedding& s2, const LatticeVector& a1, const LatticeVector& a2) {
  return pair(x1.lattice, a1, s1.surface_class) == pair(x2.lattice, a2, s2.surface_class);
}

Integer cokernel_of_pi(const Integer& m1, const Integer& m2) {
  if (m1 <= 0 || m2 <= 0) throw InvalidInput("divisibility of a surface class must be positive");
  Integer g;
  mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  Integer l;
  mpz_lcm(l.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  const Integer d = m1 * m2 / l;

  IntMatrix presentation(1, 2);
  presentation(0, 0) = m1;
  presentation(0, 1) = -m2;
  const auto factors = smith_normal_form(presentation).invariant_factors();
  if (factors.size() != 1 || factors[0] != d || d != g)
    throw InternalConsistency("cokernel order disagrees with the Smith form of (m1, -m2)");
  return d;
}

LatticeVector find_dual_class(const IntegerLattice& lattice, const LatticeVector& surface_class) {
  const std::size_t n = lattice.rank();
  if (surface_class.size() != n) throw InvalidInput("surface class length does not match the lattice");
  if (surface_class.is_zero() || !is_primitive(surface_class))
    throw Unsupported("surface class " + surface_class.to_string() + " is not primitive; no class pairs to 1 with it");
  // w_j = S.e_j; build x with x.w = 1 by running extended Euclid over w.
  std::vector<Integer> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = pair(lattice, surface_class, LatticeVector::unit(n, j));
  LatticeVector x(n);
  Integer g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (w[j] == 0) continue;
    Integer next, s, t;
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
    x *= s;
    x[j] += t;
    g = next;
  }
  if (g != 1) throw Unsupported("surface class has divisibility " + g.get_str() + " in the lattice");
  return x;
}

// ------------------------------------------------------------- fiber sum

std::string BasisRole::label() const {
  auto curve = [](std::size_t gamma) {
    return std::string(gamma % 2 == 0 ? "a" : "b") + std::to_string(gamma / 2 + 1);
  };
  switch (kind) {
    case RoleKind::Torus: return "Torus(" + curve(index) + ")";
    case RoleKind::Sphere: return "Sphere(" + curve(index) + ")";
    case RoleKind::FromX1: return "FromX1(" + std::to_string(index) + ")";
    case RoleKind::FromX2: return "FromX2(" + std::to_string(index) + ")";
    case RoleKind::DualD: return "DualD";
    case RoleKind::SurfaceSigma: return "SurfaceSigma";
  }
  return "?";
}

int symplectic_pairing(std::size_t beta, std::size_t gamma) {
  if (beta / 2 != gamma / 2 || beta == gamma) return 0;
  return beta % 2 == 0 ? 1 : -1;
}

namespace {

void require_fiber_sum_side(const FourManifold& x, const SurfaceEmbedding& s, int which) {
  const std::string side = "side " + std::to_string(which) + ": ";
  ValidationReport vs = validate_surface(x, s);
  if (!vs.valid()) throw ValidationError(std::move(vs.errors));
  if (self_intersection(x, s) != 0)
    throw HypothesisNotMet(side + "surface is not normalized (self-intersection " + self_intersection(x, s).get_str() +
                           ")");
  if (!is_primitive(s.surface_class)) throw Unsupported(side + "surface class is not primitive");
  if (!s.dual_class) throw HypothesisNotMet(side + "surface has no dual class");
}

}  // namespace

GluedLatticePresentation assemble_presentation(const FourManifold& x1, const SurfaceEmbedding& s1,
                                               const FourManifold& x2, const SurfaceEmbedding& s2) {
  require_fiber_sum_side(x1, s1, 1);
  require_fiber_sum_side(x2, s2, 2);
  if (s1.genus != s2.genus) throw HypothesisNotMet("surfaces have different genus");

  GluedLatticePresentation p;
  p.genus = s1.genus;
  const std::size_t g2 = 2 * static_cast<std::size_t>(p.genus);

  p.w1_perp = orthogonal_complement(x1.lattice, {{s1.surface_class, *s1.dual_class}, "W1"});
  p.w2_perp = orthogonal_complement(x2.lattice, {{s2.surface_class, *s2.dual_class}, "W2"});
  p.w1_perp.label = "W1-perp";
  p.w2_perp.label = "W2-perp";
  if (p.w1_perp.generators.size() + 2 != x1.b2() || p.w2_perp.generators.size() + 2 != x2.b2())
    throw InternalConsistency("span{S, D} complement has the wrong rank");

  for (std::size_t i = 0; i < g2; ++i) p.roles.push_back({RoleKind::Torus, i});
  for (std::size_t i = 0; i < g2; ++i) p.roles.push_back({RoleKind::Sphere, i});
  for (std::size_t i = 0; i < p.w1_perp.generators.size(); ++i) p.roles.push_back({RoleKind::FromX1, i});
  for (std::size_t i = 0; i < p.w2_perp.generators.size(); ++i) p.roles.push_back({RoleKind::FromX2, i});
  p.roles.push_back({RoleKind::DualD, 0});
  p.roles.push_back({RoleKind::SurfaceSigma, 0});

  const std::size_t n = p.roles.size();
  IntMatrix gram(n, n);
  for (std::size_t gamma = 0; gamma < g2; ++gamma) {
    gram(p.sphere(gamma), p.sphere(gamma)) = -2;
    for (std::size_t beta = 0; beta < g2; ++beta) {
      const int v = symplectic_pairing(beta, gamma);
      gram(p.sphere(gamma), p.torus(beta)) = v;
      gram(p.torus(beta), p.sphere(gamma)) = v;
    }
  }
  const IntMatrix w1 = restricted_gram(x1.lattice, p.w1_perp.generators);
  for (std::size_t i = 0; i < w1.rows(); ++i)
    for (std::size_t j = 0; j < w1.cols(); ++j) gram(p.from_x1(i), p.from_x1(j)) = w1(i, j);
  const IntMatrix w2 = restricted_gram(x2.lattice, p.w2_perp.generators);
  for (std::size_t i = 0; i < w2.rows(); ++i)
    for (std::size_t j = 0; j < w2.cols(); ++j) gram(p.from_x2(i), p.from_x2(j)) = w2(i, j);
  gram(p.dual_d(), p.dual_d()) =
      pair(x1.lattice, *s1.dual_class, *s1.dual_class) + pair(x2.lattice, *s2.dual_class, *s2.dual_class);
  gram(p.dual_d(), p.surface_sigma()) = gram(p.surface_sigma(), p.dual_d()) = 1;

  p.lattice = IntegerLattice(std::move(gram));
  return p;
}

SurfaceDecomposition decompose(const FourManifold& x, const SurfaceEmbedding& s, const SublatticeBasis& w_perp,
                               const LatticeVector& k) {
  const LatticeVector& surface = s.surface_class;
  const LatticeVector& dual = *s.dual_class;
  SurfaceDecomposition d;
  d.dual_coefficient = pair(x.lattice, k, surface);
  d.surface_coefficient = pair(x.lattice, k, dual) - d.dual_coefficient * pair(x.lattice, dual, dual);
  d.alpha = k - d.dual_coefficient * dual - d.surface_coefficient * surface;
  if (pair(x.lattice, d.alpha, surface) != 0 || pair(x.lattice, d.alpha, dual) != 0)
    throw InternalConsistency("decomposition residue is not orthogonal to span{S, D}");
  auto coords = solve_in_hermite_basis(w_perp.generators, d.alpha);
  if (!coords) throw InternalConsistency("decomposition residue " + d.alpha.to_string() + " is not in W-perp");
  d.alpha_in_perp = std::move(*coords);
  return d;
}

namespace {

void require_adjunction_bound(const FourManifold& x, const SurfaceEmbedding& s, int which) {
  const Integer bound = extremal(s.genus);
  for (std::size_t i = 0; i < x.basic_classes.size(); ++i) {
    const Integer n = pair(x.lattice, x.basic_classes[i].k, s.surface_class);
    if (abs(n) > bound || mpz_odd_p(n.get_mpz_t()))
      throw HypothesisNotMet("side " + std::to_string(which) + " class " + std::to_string(i) +
                             " pairs to " + n.get_str() + " with the surface, outside the even range [-" +
                             bound.get_str() + ", " + bound.get_str() + "]");
  }
}

}  // namespace

GluingOutcome glue_basic_classes(const FourManifold& x1, const SurfaceEmbedding& s1, const FourManifold& x2,
                                 const SurfaceEmbedding& s2, const GluedLatticePresentation& presentation) {
  if (s1.genus < 2 || s1.genus != s2.genus) throw HypothesisNotMet("gluing needs equal genus g >= 2");
  if (!x1.simple_type || !x2.simple_type) throw HypothesisNotMet("gluing needs simple-type summands");
  require_adjunction_bound(x1, s1, 1);
  require_adjunction_bound(x2, s2, 2);

  const GluedLatticePresentation& p = presentation;
  const Integer bound = extremal(s1.genus);
  const Integer chi = x1.chi + x2.chi + 4 * s1.genus - 4;
  const Integer sigma = x1.sigma + x2.sigma;
  const Integer target = 2 * chi + 3 * sigma;

  GluingOutcome out;
  for (std::size_t i = 0; i < x1.basic_classes.size(); ++i) {
    for (std::size_t j = 0; j < x2.basic_classes.size(); ++j) {
      const BasicClass& k1 = x1.basic_classes[i];
      const BasicClass& k2 = x2.basic_classes[j];
      if (!pairing_group_check(x1, s1, x2, s2, k1.k, k2.k)) continue;
      const Integer n = pair(x1.lattice, k1.k, s1.surface_class);
      if (abs(n) != bound) {
        out.undetermined.push_back({i, j, n, "undetermined by paper: non-extremal pairing needs higher Floer homology"});
        continue;
      }
      const int sign = n > 0 ? 1 : -1;
      const SurfaceDecomposition d1 = decompose(x1, s1, p.w1_perp, k1.k);
      const SurfaceDecomposition d2 = decompose(x2, s2, p.w2_perp, k2.k);

      LatticeVector base(p.rank());
      for (std::size_t a = 0; a < d1.alpha_in_perp.size(); ++a) base[p.from_x1(a)] = d1.alpha_in_perp[a];
      for (std::size_t a = 0; a < d2.alpha_in_perp.size(); ++a) base[p.from_x2(a)] = d2.alpha_in_perp[a];
      base[p.dual_d()] = n;

      const Integer formula = d1.surface_coefficient + d2.surface_coefficient + 2 * sign;
      // kappa(s) = base + s S has square base^2 + 2 s n since S^2 = 0 and base.S = n.
      const Integer numerator = target - pair(p.lattice, base, base);
      if (!mpz_divisible_p(numerator.get_mpz_t(), Integer(2 * n).get_mpz_t()))
        throw InternalConsistency("no integral surface coefficient satisfies the square condition");
      const Integer solved = numerator / (2 * n);
      if (solved != formula)
        throw InternalConsistency("surface coefficient " + formula.get_str() + " from the gluing formula disagrees with " +
                                  solved.get_str() + " from the square condition");

      LatticeVector kappa = base;
      kappa[p.surface_sigma()] = formula;
      GluedClass gc{{std::move(kappa), theorem2_product(x1, s1, x2, s2, k1, k2)}, i, j, sign, formula, solved};
      out.classes.push_back(std::move(gc));
    }
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const GluedClass& a, const GluedClass& b) { return a.basic.k < b.basic.k; });
  for (std::size_t c = 1; c < out.classes.size(); ++c)
    if (out.classes[c].basic.k == out.classes[c - 1].basic.k)
      throw InternalConsistency("two pairs glue to the same class " + out.classes[c].basic.k.to_string());
  return out;
}

FiberSumResult fiber_sum(const FourManifold& x1, const SurfaceEmbedding& s1, const FourManifold& x2,
                         const SurfaceEmbedding& s2) {
  require_valid(x1);
  require_valid(x2);
  if (s1.genus != s2.genus) throw HypothesisNotMet("genus mismatch: " + std::to_string(s1.genus) + " vs " +
                                                   std::to_string(s2.genus));
  if (s1.genus < 2) throw HypothesisNotMet("fiber sum gluing needs genus >= 2");
  if (!x1.simple_type || !x2.simple_type) throw HypothesisNotMet("fiber sum needs simple-type summands");

  FiberSumResult r;
  r.presentation = assemble_presentation(x1, s1, x2, s2);
  r.gluing = glue_basic_classes(x1, s1, x2, s2, r.presentation);

  FourManifold& m = r.manifold;
  m.name = x1.name + "#S" + x2.name;
  m.chi = x1.chi + x2.chi + 4 * s1.genus - 4;
  m.sigma = x1.sigma + x2.sigma;
  m.lattice = r.presentation.lattice;
  m.simple_type = true;
  for (const auto& role : r.presentation.roles) m.basis_labels.push_back(role.label());
  m.conventions = x1.conventions;
  for (const auto& c : x2.conventions) add_convention(m.conventions, c);
  add_convention(m.conventions, "fiber-sum total: sw of a glued class is the sum over its H^1(Y) gluing fiber");
  add_convention(m.conventions,
                 "sw sign: glued sw is sw1*sw2 with no homology-orientation correction (exact up to a global sign)");
  for (const auto& gc : r.gluing.classes) m.basic_classes.push_back(gc.basic);

  r.surface.surface_class = r.presentation.unit(r.presentation.surface_sigma());
  r.surface.dual_class = r.presentation.unit(r.presentation.dual_d());
  r.surface.genus = s1.genus;

  ValidationReport check = validate(m);
  if (!check.valid()) {
    std::string msg = "fiber sum output fails validation:";
    for (const auto& e : check.errors) msg += " [" + e + "]";
    throw InternalConsistency(msg);
  }
  return r;
}

// ------------------------------------------------------------- constraints

bool theorem1_filter(const FourManifold& x, const SurfaceEmbedding& s, const LatticeVector& c,
                     const GluedLatticePresentation* presentation) {
  const Integer n = pair(x.lattice, c, s.surface_class);
  if (mpz_odd_p(n.get_mpz_t()) || abs(n) > extremal(s.genus)) return false;
  if (presentation) {
    if (presentation->rank() != c.size()) throw InvalidInput("presentation does not match the class");
    for (std::size_t gamma = 0; gamma < 2 * static_cast<std::size_t>(presentation->genus); ++gamma)
      if (pair(presentation->lattice, c, presentation->unit(presentation->torus(gamma))) != 0) return false;
  }
  return true;
}

Integer theorem2_product(const FourManifold& x1, const SurfaceEmbedding& s1, const FourManifold& x2,
                         const SurfaceEmbedding& s2, const BasicClass& k1, const BasicClass& k2) {
  if (s1.genus != s2.genus || s1.genus < 2) throw HypothesisNotMet("product formula needs equal genus g >= 2");
  if (!x1.simple_type || !x2.simple_type) throw HypothesisNotMet("product formula needs simple-type summands");
  if (!pairing_group_check(x1, s1, x2, s2, k1.k, k2.k))
    throw HypothesisNotMet("classes are not in the pairing group: k1.S1 != k2.S2");
  const Integer n = pair(x1.lattice, k1.k, s1.surface_class);
  if (abs(n) != extremal(s1.genus))
    throw HypothesisNotMet("product formula needs k.S = +-(2g-2), got " + n.get_str());
  return k1.sw * k2.sw;
}

}  // namespace swsurg
