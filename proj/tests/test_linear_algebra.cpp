#include <gtest/gtest.h>

#include <random>

#include "nashtoric/feasibility.hpp"
#include "nashtoric/linear_algebra.hpp"
#include "oracles.hpp"

using namespace nashtoric;

namespace {

IntMatrix columns(std::vector<LatticeVector> cols) { return IntMatrix::from_columns(cols, cols.front().dim()); }

// Largest k with a nonzero k x k minor.
std::size_t oracle_rank(const oracle::Mat& m) {
  const std::size_t rows = m.size(), cols = m[0].size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k)
    for (const auto& rs : oracle::subsets(rows, k))
      for (const auto& cs : oracle::subsets(cols, k))
        if (oracle::permutation_det(oracle::submatrix(m, rs, cs)) != 0) return k;
  return 0;
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(det(columns({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}})), 2);
  EXPECT_EQ(det(IntMatrix::identity(3)), 1);
  EXPECT_EQ(det(IntMatrix{{3}}), 3);
}

TEST(Determinant, NonSquareIsDimensionError) {
  try {
    det(IntMatrix(2, 3));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
  }
}

TEST(Determinant, MatchesPermutationExpansion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 1 + trial % 5;
    auto m = oracle::random_mat(rng, n, n, -9, 9);
    if (trial % 7 == 0 && n > 1) m[n - 1] = m[0];  // singular
    EXPECT_EQ(det(oracle::to_matrix(m)), oracle::permutation_det(m));
  }
}

TEST(Determinant, HugeEntriesStayExact) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = oracle::random_mat(rng, 4, 4, -(1LL << 60), 1LL << 60);
    EXPECT_EQ(det(oracle::to_matrix(m)), oracle::permutation_det(m));
  }
}

TEST(DeterminantMod, Examples) {
  EXPECT_EQ(det_mod(IntMatrix{{3}}, Characteristic(2)), 1);
  EXPECT_EQ(det_mod(IntMatrix{{2}}, Characteristic(2)), 0);
  EXPECT_EQ(det_mod(columns({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}), Characteristic(2)), 0);
  EXPECT_EQ(det_mod(IntMatrix{{-7}}, Characteristic(0)), -7);
  EXPECT_EQ(det_mod(IntMatrix{{-7}}, Characteristic(5)), 3);
}

TEST(DeterminantMod, AgreesWithReducedDeterminant) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    auto m = oracle::random_mat(rng, n, n, -20, 20);
    Integer exact = oracle::permutation_det(m);
    for (std::uint64_t p : {2, 3, 5, 7, 101}) {
      Integer expected = exact % p;
      if (expected < 0) expected += p;
      EXPECT_EQ(det_mod(oracle::to_matrix(m), Characteristic(p)), expected);
    }
  }
}

TEST(Characteristic, RejectsComposites) {
  for (std::uint64_t p : {0, 2, 3, 5, 7, 97}) EXPECT_NO_THROW(Characteristic{p});
  for (std::uint64_t p : {1, 4, 6, 9, 15, 91}) {
    try {
      Characteristic c(p);
      FAIL() << p << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::invalid_characteristic);
      EXPECT_NE(std::string(e.what()).find("characteristic must be 0 or prime"), std::string::npos);
    }
  }
}

TEST(Rank, MatchesMinorOracle) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    auto m = oracle::random_mat(rng, rows, cols, -3, 3);
    if (trial % 3 == 0 && rows > 1) m[1] = m[0];
    EXPECT_EQ(rank(oracle::to_matrix(m)), oracle_rank(m));
  }
}

TEST(Adjugate, TimesMatrixIsDeterminantIdentity) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 4;
    IntMatrix m = oracle::to_matrix(oracle::random_mat(rng, n, n, -9, 9));
    IntMatrix product = adjugate(m) * m;
    Integer d = det(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(product(i, j), i == j ? d : Integer(0));
  }
}

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 3}}).diagonal, (IntMatrix{{1, 0}}));
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).diagonal, IntMatrix::identity(3));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal, (IntMatrix{{1, 0}, {0, 6}}));
}

TEST(SmithNormalForm, UnimodularTransformsAndDivisibility) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    auto raw = oracle::random_mat(rng, rows, cols, -12, 12);
    if (trial % 5 == 0 && rows > 1) raw[rows - 1] = raw[0];
    IntMatrix m = oracle::to_matrix(raw);
    SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.left * m * s.right, s.diagonal);
    EXPECT_EQ(abs(det(s.left)), 1);
    EXPECT_EQ(abs(det(s.right)), 1);
    EXPECT_TRUE(is_diagonal(s.diagonal));
    auto factors = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      EXPECT_GT(factors[i], 0);
      EXPECT_EQ(factors[i + 1] % factors[i], 0);
    }
    EXPECT_EQ(factors, oracle::invariant_factors_by_minors(raw));
    EXPECT_EQ(s.rank, factors.size());
  }
}

TEST(HermiteNormalForm, CanonicalEchelonForm) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    auto raw = oracle::random_mat(rng, rows, cols, -10, 10);
    IntMatrix h = hermite_normal_form(oracle::to_matrix(raw));
    std::size_t previous_pivot = 0;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t p = 0;
      while (p < h.cols() && h(i, p) == 0) ++p;
      if (p == h.cols()) {
        seen_zero_row = true;
        continue;
      }
      EXPECT_FALSE(seen_zero_row) << "zero rows must be last";
      if (i > 0) EXPECT_GT(p, previous_pivot);
      previous_pivot = p;
      EXPECT_GT(h(i, p), 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h(k, p), 0);
        EXPECT_LT(h(k, p), h(i, p));
      }
    }
    EXPECT_EQ(hermite_normal_form(h), h);
    EXPECT_EQ(oracle::invariant_factors_by_minors(oracle::Mat(raw)), smith_normal_form(h).invariant_factors());
    // The form depends only on the row lattice.
    std::reverse(raw.begin(), raw.end());
    EXPECT_EQ(hermite_normal_form(oracle::to_matrix(raw)), h);
  }
}

TEST(FullLattice, Examples) {
  std::vector<LatticeVector> gamma{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 1, 2}};
  EXPECT_TRUE(group_is_full_lattice(gamma, 3));
  std::vector<LatticeVector> index_two{{2, 0}, {0, 1}};
  EXPECT_FALSE(group_is_full_lattice(index_two, 2));
  std::vector<LatticeVector> basis{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_TRUE(group_is_full_lattice(basis, 4));
  std::vector<LatticeVector> cusp{{2}, {3}};
  EXPECT_TRUE(group_is_full_lattice(cusp, 1));
}

TEST(FullLattice, MaximalMinorsCoprime) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 1 + trial % 3, n = d + trial % 3;
    auto cols = oracle::random_mat(rng, n, d, -4, 4);  // n vectors in Z^d
    oracle::Mat a(d, oracle::Vec(n));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    auto factors = oracle::invariant_factors_by_minors(a);
    bool expected = factors.size() == d && std::all_of(factors.begin(), factors.end(), [](const Integer& f) { return f == 1; });
    std::vector<LatticeVector> gens;
    for (const auto& c : cols) gens.push_back(oracle::to_lattice(c));
    EXPECT_EQ(group_is_full_lattice(gens, d), expected);
  }
}

TEST(KernelBasis, Examples) {
  IntMatrix b = kernel_basis(IntMatrix{{2, 3}});
  EXPECT_EQ(b, (IntMatrix{{3}, {-2}}));

  IntMatrix empty = kernel_basis(IntMatrix::identity(3));
  EXPECT_EQ(empty.rows(), 3u);
  EXPECT_EQ(empty.cols(), 0u);

  IntMatrix a = columns({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 1, 2}});
  IntMatrix k = kernel_basis(a);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(a * k, IntMatrix(3, 1));
  EXPECT_EQ(smith_normal_form(k).invariant_factors(), std::vector<Integer>{1});
  EXPECT_EQ(k.column(0), (LatticeVector{1, 1, -2, 1}));
}

TEST(KernelBasis, SaturatedCanonicalBasis) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 1 + trial % 3, n = 1 + (trial / 3) % 6;
    auto raw = oracle::random_mat(rng, d, n, -6, 6);
    if (trial % 4 == 0 && d > 1) raw[d - 1] = raw[0];
    IntMatrix a = oracle::to_matrix(raw);
    IntMatrix b = kernel_basis(a);
    ASSERT_EQ(b.rows(), n);
    ASSERT_EQ(b.cols(), n - rank(a));
    if (b.cols() == 0) continue;
    EXPECT_EQ(a * b, IntMatrix(d, b.cols()));
    EXPECT_EQ(rank(b), b.cols());
    for (const auto& f : smith_normal_form(b).invariant_factors()) EXPECT_EQ(f, 1);
    auto cols = b.columns();
    EXPECT_TRUE(std::is_sorted(cols.begin(), cols.end()));
    for (const auto& c : cols) {
      auto first = std::find_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; });
      ASSERT_NE(first, c.end());
      EXPECT_GT(*first, 0);
    }
  }
}

// Complementary minors of A and of its kernel basis vanish together mod p.
TEST(KernelBasis, GaleDualityComplementaryMinors) {
  std::mt19937_64 rng(20);
  int checked = 0;
  while (checked < 60) {
    std::size_t d = 1 + oracle::random_int(rng, 0, 2), n = d + 1 + oracle::random_int(rng, 0, 5 - static_cast<long long>(d));
    auto raw = oracle::random_mat(rng, d, n, -10, 10);
    IntMatrix a = oracle::to_matrix(raw);
    if (!group_is_full_lattice(a.columns(), d)) continue;
    ++checked;
    IntMatrix b = kernel_basis(a);
    ASSERT_EQ(b.cols(), n - d);
    for (const auto& k : oracle::subsets(n, n - d)) {
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < n; ++j)
        if (std::find(k.begin(), k.end(), j) == k.end()) rest.push_back(j);
      for (std::uint64_t p : {2, 3, 5}) {
        Characteristic ch(p);
        EXPECT_EQ(det_mod(b.select_rows(k), ch) != 0, det_mod(a.select_columns(rest), ch) != 0);
      }
    }
  }
}

TEST(RationalFeasible, Examples) {
  std::vector<HalfSpace> contradictory{{{1}, 1}, {{-1}, 0}};
  EXPECT_FALSE(rational_feasible(contradictory, 1).has_value());

  std::vector<HalfSpace> ray{{{1}, 1}};
  auto w = rational_feasible(ray, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(satisfies(ray[0], *w));
}

// The separating system for (2,2,2) against the characteristic-2 exponents is
// feasible: (2,2,2) lies outside their Newton polyhedron, so it can be cut off.
TEST(RationalFeasible, SeparatesPointOutsideCharTwoPolyhedron) {
  std::vector<LatticeVector> e2{{2, 2, 1}, {2, 3, 3}, {3, 2, 3}};
  std::vector<LatticeVector> rays{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
  LatticeVector e{2, 2, 2};
  std::vector<HalfSpace> system;
  for (const auto& other : e2) system.push_back({other - e, 1});
  for (const auto& u : rays) system.push_back({u, 1});
  auto w = rational_feasible(system, 3);
  ASSERT_TRUE(w.has_value());
  for (const auto& h : system) EXPECT_TRUE(satisfies(h, *w));
  EXPECT_FALSE(polyhedron_contains(e2, rays, e));

  // With (2,2,2) itself among the points the system loses its witness.
  system.push_back({e - e, 1});
  EXPECT_FALSE(rational_feasible(system, 3).has_value());
}

TEST(RationalFeasible, WitnessOrGridFindsNothing) {
  std::mt19937_64 rng(21);
  // Grid of rationals k/4 in [-6, 6]^2.
  std::vector<Rational> grid;
  for (int k = -24; k <= 24; ++k) grid.push_back(Rational(k) / 4);
  int infeasible = 0, feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t m = 1 + trial % 6;
    std::vector<HalfSpace> system;
    for (std::size_t i = 0; i < m; ++i) {
      auto n = oracle::random_vec(rng, 2, -3, 3);
      system.push_back({oracle::to_lattice(n), Rational(oracle::random_int(rng, -6, 6)) / oracle::random_int(rng, 1, 3)});
    }
    auto w = rational_feasible(system, 2);
    if (w) {
      ++feasible;
      for (const auto& h : system) EXPECT_TRUE(satisfies(h, *w));
      continue;
    }
    ++infeasible;
    for (const auto& x : grid)
      for (const auto& y : grid) {
        std::vector<Rational> p{x, y};
        bool all = std::all_of(system.begin(), system.end(), [&](const HalfSpace& h) { return satisfies(h, p); });
        ASSERT_FALSE(all) << "grid point satisfies a system declared infeasible";
      }
  }
  EXPECT_GT(infeasible, 10);
  EXPECT_GT(feasible, 10);
}

TEST(PolyhedronContains, SimpleCases) {
  std::vector<LatticeVector> points{{2, 1}, {2, 3}};
  std::vector<LatticeVector> rays{{1, 0}, {1, 2}};
  EXPECT_TRUE(polyhedron_contains(points, rays, LatticeVector{2, 2}));
  EXPECT_TRUE(polyhedron_contains(points, rays, LatticeVector{10, 3}));
  EXPECT_FALSE(polyhedron_contains(points, rays, LatticeVector{1, 1}));
  EXPECT_FALSE(polyhedron_contains(points, rays, LatticeVector{2, 5}));
  std::vector<LatticeVector> none;
  EXPECT_FALSE(polyhedron_contains(none, rays, LatticeVector{2, 2}));
}

TEST(PolyhedronContains, AgreesWithPlanarOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    oracle::Vec r1 = oracle::random_vec(rng, 2, 0, 5), r2 = oracle::random_vec(rng, 2, -5, 5);
    if (r1[0] * r2[1] - r1[1] * r2[0] <= 0) continue;
    std::vector<oracle::Vec> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(oracle::random_vec(rng, 2, -6, 6));
    auto x = oracle::random_vec(rng, 2, -8, 8);
    std::vector<LatticeVector> points = oracle::to_lattice(pts);
    std::vector<LatticeVector> rays{oracle::to_lattice(r1), oracle::to_lattice(r2)};
    EXPECT_EQ(polyhedron_contains(points, rays, oracle::to_lattice(x)), oracle::planar_polyhedron_contains(pts, r1, r2, x));
  }
}
