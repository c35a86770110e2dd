#include <gtest/gtest.h>

#include <random>

#include "mcx/mcx.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace mcx;
using testing_support::complex_from;
using testing_support::library_betti;
using Betti = std::vector<std::int64_t>;

namespace {

std::int64_t alternating(const Betti& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i % 2 == 1 ? 1 : -1) * b[i];  // index 0 is beta_{-1}
  return s;
}

}  // namespace

TEST(FieldPrime, RejectsNonPrimes) {
  EXPECT_THROW(FieldPrime(1), Error);
  EXPECT_THROW(FieldPrime(4), Error);
  EXPECT_THROW(FieldPrime(65537), Error);
  EXPECT_EQ(FieldPrime(65521).value(), 65521u);
  EXPECT_EQ(FieldPrime(7).mul(FieldPrime(7).inv(3), 3), 1u);
}

TEST(BoundaryMatrix, SingleEdgeAndAugmentation) {
  const Complex e = simplex(2);
  const auto d0 = boundary_matrix(e, 0, FieldPrime(3)).dense();
  EXPECT_EQ(d0, (std::vector<std::vector<std::uint32_t>>{{1, 1}}));
  const auto d1 = boundary_matrix(e, 1, FieldPrime(3)).dense();
  // Deleting vertex 0 gives {1} with sign +, deleting vertex 1 gives {0} with sign -.
  EXPECT_EQ(d1, (std::vector<std::vector<std::uint32_t>>{{2}, {1}}));
  EXPECT_THROW(boundary_matrix(e, 2, FieldPrime(3)), Error);
}

TEST(BoundaryMatrix, TriangleTopMapHasRankOne) {
  const auto m = boundary_matrix(simplex(3), 2, FieldPrime(2));
  EXPECT_EQ(m.rows, 3);
  EXPECT_EQ(m.cols, 1);
  EXPECT_EQ(rank(m, FieldPrime(2)), 1u);
}

TEST(BoundaryMatrix, SquareIsZero) {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u}) {
    for (int t = 0; t < 40; ++t) {
      const Complex c = complex_from(oracle::random_facets(rng, 8, 6, 5));
      for (int k = 0; k < c.dimension(); ++k) {
        const auto a = boundary_matrix(c, k, FieldPrime(p)).dense();
        const auto b = boundary_matrix(c, k + 1, FieldPrime(p)).dense();
        for (std::size_t i = 0; i < a.size(); ++i) {
          for (std::size_t j = 0; j < b[0].size(); ++j) {
            std::uint64_t s = 0;
            for (std::size_t r = 0; r < b.size(); ++r) s += std::uint64_t{a[i][r]} * b[r][j];
            EXPECT_EQ(s % p, 0u);
          }
        }
      }
    }
  }
}

TEST(Betti, Examples) {
  const Complex torus = matching_complex(complete_bipartite(4, 3));
  EXPECT_EQ(betti_reduced(torus, FieldPrime(3)).nonnegative(), (Betti{0, 2, 1}));
  EXPECT_EQ(betti_reduced(matching_complex(cycle(5)), FieldPrime(2)).nonnegative(), (Betti{0, 1}));
  for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_TRUE(betti_reduced(simplex(5), FieldPrime(p)).all_zero());
  EXPECT_EQ(betti_reduced(Complex::empty_face(), FieldPrime(2)).betti, (Betti{1}));
  EXPECT_THROW(betti_reduced(Complex::void_complex(), FieldPrime(2)), Error);
}

TEST(Betti, SphereAndBallPredicates) {
  EXPECT_TRUE(has_sphere_homology(matching_complex(copies(2, path(3))), 1, FieldPrime(2)));
  EXPECT_TRUE(has_ball_homology(matching_complex(spider(4)), FieldPrime(2)));
  EXPECT_EQ(matching_complex(spider(4)).dimension(), 3);
  const Complex hexagon_path = complex_of_graph(path(6));
  EXPECT_FALSE(has_sphere_homology(hexagon_path, 1, FieldPrime(3)));
  EXPECT_TRUE(has_ball_homology(hexagon_path, FieldPrime(3)));
  EXPECT_TRUE(has_sphere_homology(Complex::empty_face(), -1, FieldPrime(2)));
  EXPECT_FALSE(has_sphere_homology(Complex::void_complex(), 0, FieldPrime(2)));
  EXPECT_FALSE(has_ball_homology(Complex::void_complex(), FieldPrime(2)));
}

TEST(Betti, EulerPoincare) {
  std::mt19937_64 rng(32);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int t = 0; t < 40; ++t) {
      const Complex c = complex_from(oracle::random_facets(rng, 9, 8, 5));
      EXPECT_EQ(alternating(library_betti(c, p)), euler_characteristic(c) - 1);
    }
  }
}

TEST(Betti, AgreesWithRationalOracleOnGoldenComplexes) {
  std::vector<std::vector<oracle::Face>> golden;
  for (int n = 1; n <= 6; ++n) golden.push_back(simplex(n).facet_labels());
  for (int n = 2; n <= 6; ++n) golden.push_back(simplex_boundary(n).facet_labels());
  for (int l = 1; l <= 5; ++l) golden.push_back(oracle::crosspolytope_boundary(l));
  for (int n = 3; n <= 9; ++n) golden.push_back(complex_of_graph(cycle(n)).facet_labels());
  golden.push_back(matching_complex(cycle(7)).facet_labels());
  for (const auto& facets : golden) {
    const Complex c = complex_from(facets);
    const Betti q = oracle::betti(facets, 0);
    for (std::uint32_t p : {2u, 3u}) {
      EXPECT_EQ(library_betti(c, p), oracle::betti(facets, p));
      EXPECT_EQ(library_betti(c, p), q) << "golden complexes are torsion free";
    }
  }
}

TEST(Betti, GoldenValues) {
  for (int l = 1; l <= 5; ++l) {
    Betti sphere(static_cast<std::size_t>(l + 1), 0);
    sphere.back() = 1;
    EXPECT_EQ(library_betti(complex_from(oracle::crosspolytope_boundary(l)), 2), sphere);
  }
  EXPECT_EQ(library_betti(complex_of_graph(cycle(8)), 3), (Betti{0, 0, 1}));
  EXPECT_EQ(library_betti(matching_complex(cycle(7)), 2), (Betti{0, 0, 1, 0}));
  EXPECT_EQ(library_betti(matching_complex(cycle(7)), 3), (Betti{0, 0, 1, 0}));
  EXPECT_EQ(library_betti(simplex_boundary(5), 3), (Betti{0, 0, 0, 0, 1}));
}

TEST(Betti, AgreesWithOracleOnRandomComplexes) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 50; ++t) {
    const auto facets = oracle::random_facets(rng, 9, 3 + static_cast<int>(rng() % 6), 5);
    ASSERT_LE(oracle::faces(facets).size(), 200u);
    const Complex c = complex_from(facets);
    for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_EQ(library_betti(c, p), oracle::betti(facets, p));
    EXPECT_EQ(library_betti(c, 65521), oracle::betti(facets, 0));
  }
}

TEST(Betti, RealProjectivePlaneSeesTorsionOnlyAtTwo) {
  // Six-vertex triangulation of the real projective plane.
  const std::vector<oracle::Face> rp2{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                      {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
  const Complex c = complex_from(rp2);
  EXPECT_EQ(library_betti(c, 2), (Betti{0, 0, 1, 1}));
  EXPECT_EQ(library_betti(c, 3), (Betti{0, 0, 0, 0}));
  EXPECT_EQ(oracle::betti(rp2, 0), (Betti{0, 0, 0, 0}));
  EXPECT_EQ(oracle::betti(rp2, 2), (Betti{0, 0, 1, 1}));
}

TEST(Betti, PackedAndSparseEliminationAgree) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 30; ++t) {
    const Complex c = complex_from(oracle::random_facets(rng, 14, 20, 6));
    for (int k = 0; k <= c.dimension(); ++k) {
      const auto layers = c.faces_by_dimension();
      const auto block = detail::boundary_block(layers, k, FieldPrime(2), nullptr);
      const std::size_t rows = layers[static_cast<std::size_t>(k)].size();
      EXPECT_EQ(detail::reduce_gf2_packed(block, rows).rank, detail::reduce_sparse(block, rows, FieldPrime(2)).rank);
    }
  }
}

TEST(Betti, FieldIndependenceOnCatalogComplexes) {
  for (const auto& e : exceptional_table()) {
    const Complex c = matching_complex(e.graph);
    const Betti b2 = library_betti(c, 2);
    EXPECT_EQ(library_betti(c, 3), b2) << e.name;
    EXPECT_EQ(library_betti(c, 5), b2) << e.name;
  }
}

TEST(Betti, JoinOfSpheresIsSphere) {
  std::vector<Complex> spheres{simplex_boundary(2), simplex_boundary(3), complex_of_graph(cycle(5)),
                               matching_complex(complete_bipartite(3, 2)), simplex_boundary(4)};
  for (const auto& a : spheres) {
    for (const auto& b : spheres) {
      const Complex j = join(a, b);
      EXPECT_TRUE(has_sphere_homology(j, a.dimension() + b.dimension() + 1, FieldPrime(3)));
    }
  }
}
