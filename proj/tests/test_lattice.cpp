#include <doctest.h>

#include <Eigen/Dense>

#include <random>

#include "support/synthetic.hpp"
#include "swsurg/errors.hpp"
#include "swsurg/lattice.hpp"

using namespace swsurg;
using namespace swsurg::testing;

namespace {

const IntegerLattice H = IntegerLattice::hyperbolic();

LatticeVector random_vector(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = uniform(rng, lo, hi);
  return v;
}

IntegerLattice random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = uniform(rng, lo, hi);
  return IntegerLattice(g);
}

}  // namespace

TEST_CASE("pair evaluates x^T G y") {
  CHECK(pair(H, {1, 0}, {0, 1}) == 1);
  // (2e + 2f)^2 = 2 * 2 * 2 * (e.f) = 8
  CHECK(pair(H, {2, 2}, {2, 2}) == 8);
  CHECK(pair(H, {0, 0}, {5, -7}) == 0);
  CHECK_THROWS_AS(pair(H, {1, 0, 0}, {0, 1}), InvalidInput);
}

TEST_CASE("pair is symmetric on random vectors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(rng, 1, 7);
    const IntegerLattice l = random_symmetric(rng, n, -9, 9);
    const LatticeVector x = random_vector(rng, n, -20, 20), y = random_vector(rng, n, -20, 20);
    CHECK(pair(l, x, y) == pair(l, y, x));
  }
}

TEST_CASE("characteristic vectors") {
  CHECK(is_characteristic(IntegerLattice::diagonal({-1}), {1}));
  CHECK(is_characteristic(H, {0, 0}));
  CHECK_FALSE(is_characteristic(H, {1, 0}));
  CHECK_THROWS_AS(is_characteristic(H, {1}), InvalidInput);

  SUBCASE("basis criterion agrees with the full Wu check") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = uniform(rng, 1, 6);
      const IntegerLattice l = random_symmetric(rng, n, -3, 3);
      const LatticeVector k = random_vector(rng, n, -3, 3);
      CHECK(is_characteristic(l, k) == brute_force_characteristic(l, k));
    }
  }

  SUBCASE("stable under adding even vectors") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = uniform(rng, 1, 6);
      const IntegerLattice l = random_symmetric(rng, n, -4, 4);
      const LatticeVector k = random_vector(rng, n, -5, 5);
      const LatticeVector x = random_vector(rng, n, -5, 5);
      CHECK(is_characteristic(l, k) == is_characteristic(l, k + Integer(2) * x));
    }
  }
}

TEST_CASE("smith normal form examples") {
  SUBCASE("diag(2,3) -> diag(gcd, lcm)") {
    const SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.diagonal == IntMatrix{{1, 0}, {0, 6}});
    CHECK(s.left * IntMatrix{{2, 0}, {0, 3}} * s.right == s.diagonal);
  }
  SUBCASE("identity") {
    const SmithForm s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.diagonal == IntMatrix::identity(3));
    CHECK(s.left == IntMatrix::identity(3));
    CHECK(s.right == IntMatrix::identity(3));
  }
  SUBCASE("zero map") {
    const SmithForm s = smith_normal_form(IntMatrix{{0}});
    CHECK(s.diagonal == IntMatrix{{0}});
    CHECK(s.rank() == 0);
  }
  SUBCASE("empty matrix") {
    const SmithForm s = smith_normal_form(IntMatrix(0, 3));
    CHECK(s.right == IntMatrix::identity(3));
  }
}

TEST_CASE("smith normal form matches determinantal divisors") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = uniform(rng, 1, 4), cols = uniform(rng, 1, 4);
    IntMatrix m = random_matrix(rng, rows, cols, -12, 12);
    if (trial % 5 == 0 && rows > 1)  // force rank deficiency
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c);
    const SmithForm s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(s.invariant_factors() == determinantal_invariant_factors(m));
    CHECK(abs(laplace_det(s.left)) == 1);
    CHECK(abs(laplace_det(s.right)) == 1);
  }
}

TEST_CASE("bareiss determinant agrees with Laplace expansion") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(rng, 1, 5);
    const IntMatrix m = random_matrix(rng, n, n, -6, 6);
    CHECK(determinant(m) == laplace_det(m));
  }
  CHECK(determinant(IntegerLattice::minus_e8().gram()) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("divisibility") {
  CHECK(divisibility(H, {0, 1}) == 1);
  // H + H, s = (0,2,0,4): pairings with the basis are (2,0,4,0)
  const IntegerLattice hh = H.direct_sum(H);
  CHECK(divisibility(hh, {0, 2, 0, 4}) == 2);
  CHECK(brute_force_divisibility(hh, {0, 2, 0, 4}, 1) == 2);
  CHECK(divisibility(hh, {0, 0, 0, 0}) == 0);

  SUBCASE("divides every pairing and matches the box minimum") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = uniform(rng, 1, 3);
      const IntegerLattice l = random_symmetric(rng, n, -4, 4);
      const LatticeVector s = random_vector(rng, n, -3, 3);
      const Integer d = divisibility(l, s);
      for (int k = 0; k < 10; ++k) {
        const Integer p = pair(l, s, random_vector(rng, n, -10, 10));
        if (d == 0)
          CHECK(p == 0);
        else
          CHECK(mpz_divisible_p(p.get_mpz_t(), d.get_mpz_t()));
      }
      // Every pairing found in a box is a multiple of d, and the box holds
      // the basis vectors, so d == 0 exactly when the box minimum is 0.
      const Integer boxed = brute_force_divisibility(l, s, 2);
      CHECK((d == 0) == (boxed == 0));
      if (d != 0) CHECK(mpz_divisible_p(boxed.get_mpz_t(), d.get_mpz_t()));
    }
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive({1, 0}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK(is_primitive({3, 5}));
  CHECK_THROWS_AS(is_primitive({0, 0}), InvalidInput);
}

TEST_CASE("orthogonal complement") {
  SUBCASE("H, S = {e}") {
    const auto perp = orthogonal_complement(H, {{{1, 0}}, "S"});
    REQUIRE(perp.generators.size() == 1);
    CHECK(perp.generators[0] == LatticeVector{1, 0});
  }
  SUBCASE("empty generator set gives the full basis") {
    const auto perp = orthogonal_complement(H.direct_sum(H), {{}, ""});
    REQUIRE(perp.generators.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(perp.generators[i] == LatticeVector::unit(4, i));
  }
  SUBCASE("H + <-1>, S = {E}") {
    const auto perp = orthogonal_complement(H.direct_sum(IntegerLattice::diagonal({-1})), {{{0, 0, 1}}, ""});
    REQUIRE(perp.generators.size() == 2);
    CHECK(perp.generators[0] == LatticeVector{1, 0, 0});
    CHECK(perp.generators[1] == LatticeVector{0, 1, 0});
  }
  SUBCASE("saturation: complement of 2e+2f in H is spanned by e-f") {
    const auto perp = orthogonal_complement(H, {{{2, 2}}, ""});
    REQUIRE(perp.generators.size() == 1);
    CHECK(perp.generators[0] == LatticeVector{1, -1});
  }
  SUBCASE("random: orthogonal, full rank, saturated") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = uniform(rng, 2, 6);
      const IntegerLattice l = random_symmetric(rng, n, -5, 5);
      const std::size_t k = uniform(rng, 1, static_cast<long>(n) - 1);
      SublatticeBasis sub;
      for (std::size_t i = 0; i < k; ++i) sub.generators.push_back(random_vector(rng, n, -4, 4));
      const IntMatrix restricted = restricted_gram(l, sub.generators);
      if (laplace_det(restricted) == 0 || determinant(l.gram()) == 0) continue;
      const auto perp = orthogonal_complement(l, sub);
      CHECK(perp.generators.size() + k == n);
      for (const auto& v : perp.generators)
        for (const auto& g : sub.generators) CHECK(pair(l, v, g) == 0);
      // Saturated: the gcd of maximal minors of the basis matrix is 1.
      IntMatrix basis(perp.generators.size(), n);
      for (std::size_t i = 0; i < perp.generators.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = perp.generators[i][j];
      const auto factors = determinantal_invariant_factors(basis);
      CHECK(factors.size() == perp.generators.size());
      for (const auto& f : factors) CHECK(f == 1);
    }
  }
}

TEST_CASE("hermite basis solving") {
  const std::vector<LatticeVector> basis = hermite_rows({{2, 4, 0}, {0, 3, 3}, {2, 1, -3}});
  // Third row is the difference of the first two, so the rank is 2.
  CHECK(basis.size() == 2);
  auto y = solve_in_hermite_basis(basis, {4, 11, 3});
  REQUIRE(y);
  LatticeVector back(3);
  for (std::size_t i = 0; i < basis.size(); ++i) back += (*y)[i] * basis[i];
  CHECK(back == LatticeVector{4, 11, 3});
  CHECK_FALSE(solve_in_hermite_basis(basis, {1, 0, 0}));
}

TEST_CASE("signature by exact diagonalization") {
  CHECK(signature(H).value() == 0);
  CHECK(signature(IntegerLattice::minus_e8()).negative == 8);
  const Signature k3_sig = signature(k3().lattice);
  CHECK(k3_sig.positive == 3);
  CHECK(k3_sig.negative == 19);
  CHECK(signature(IntegerLattice(IntMatrix{{0, 0}, {0, 0}})).null == 2);

  SUBCASE("agrees with floating point eigenvalues on small random forms") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = uniform(rng, 1, 6);
      const IntegerLattice l = random_symmetric(rng, n, -3, 3);
      Eigen::MatrixXd m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = l.gram()(i, j).get_d();
      const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
      std::size_t pos = 0, neg = 0;
      for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) > 1e-9) ++pos;
        if (ev(i) < -1e-9) ++neg;
      }
      const Signature s = signature(l);
      CHECK(s.positive == pos);
      CHECK(s.negative == neg);
    }
  }
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(H));
  CHECK(is_unimodular(k3().lattice));
  CHECK_FALSE(is_unimodular(IntegerLattice::diagonal({2, 1})));
  CHECK_FALSE(is_unimodular(IntegerLattice::diagonal({0, 1})));
}

TEST_CASE("gram must be symmetric") {
  CHECK_THROWS_AS(IntegerLattice(IntMatrix{{0, 1}, {2, 0}}), InvalidInput);
}
