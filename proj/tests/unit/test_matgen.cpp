#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbdet/matgen.hpp"
#include "test_util.hpp"

using namespace hilbdet;
using namespace hilbdet::testutil;

namespace {

// explicit 2x2 matrix [[x0, x1], [x2, x3]] with linear entries
HomogeneousMatrix two_by_two() {
  DegreeMatrix dm{{0, 0}, {1, 1}, 5};
  HomogeneousMatrix M;
  M.dm = dm;
  M.row_labels = {0, 1};
  M.entries = {{Polynomial::variable(6, 0), Polynomial::variable(6, 1)},
               {Polynomial::variable(6, 2), Polynomial::variable(6, 3)}};
  return M;
}

} // namespace

TEST_CASE("random general instances") {
  PrimeField F;
  HomogeneousMatrix A = random_general(ex1(5), F, 42);
  CHECK(A.rows() == 4);
  CHECK(A.cols() == 4);
  int linear = 0, quadratic = 0;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      int d = A.at(j, i).degree();
      if (d == 1) ++linear;
      if (d == 2) ++quadratic;
    }
  CHECK(linear == 12);
  CHECK(quadratic == 4);

  HomogeneousMatrix A2 = random_general(ex1(5), F, 42);
  CHECK(A == A2);
  HomogeneousMatrix A3 = random_general(ex1(5), F, 43);
  CHECK(!(A == A3));

  // minimality: a_1 = b_1 forces a zero corner
  DegreeMatrix flat{{0, 0, 0}, {0, 1, 2}, 5};
  HomogeneousMatrix Z = random_general(flat, F, 7);
  CHECK(Z.at(0, 0).is_zero());
  CHECK(Z.at(0, 1).is_zero());
  CHECK(Z.at(0, 2).is_zero());
  CHECK(!Z.at(1, 0).is_zero());
}

TEST_CASE("row deletion and adjunction") {
  PrimeField F;
  HomogeneousMatrix A = random_general(ex1(5), F, 1);
  HomogeneousMatrix N = delete_row(A);
  CHECK(N.rows() == 3);
  CHECK(N.cols() == 4);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 4; ++i) CHECK(N.at(j, i) == A.at(j, i));

  std::vector<Polynomial> last;
  for (int i = 0; i < 4; ++i) last.push_back(A.at(3, i));
  CHECK(adjoin_row(N, last, F) == A);

  std::vector<Polynomial> bad = last;
  bad[0] = Polynomial::variable(6, 0); // degree 1, needs 2
  CHECK_THROWS(adjoin_row(N, bad, F));
  CHECK_THROWS(delete_row(A, 0));
  CHECK_THROWS(delete_row(A, 5));
}

TEST_CASE("minors and determinants of an explicit 2x2") {
  PrimeField F;
  HomogeneousMatrix M = two_by_two();
  auto m2 = minors(M, 2, F);
  REQUIRE(m2.size() == 1);
  Polynomial expect = sub(mul(Polynomial::variable(6, 0), Polynomial::variable(6, 3), F),
                          mul(Polynomial::variable(6, 1), Polynomial::variable(6, 2), F),
                          F);
  CHECK(m2[0].poly == expect);
  CHECK(m2[0].degree == 2);
  auto m1 = minors(M, 1, F);
  CHECK(m1.size() == 4);
  CHECK(m1[0].poly == Polynomial::variable(6, 0));
  CHECK(determinant(M, F) == expect);
}

TEST_CASE("submaximal minor degrees") {
  PrimeField F;
  HomogeneousMatrix A = random_general(ex1(5), F, 42);
  auto ms = minors(A, 3, F);
  CHECK(ms.size() == 16);
  std::vector<int> degs;
  for (auto& m : ms) {
    degs.push_back(m.degree);
    CHECK(m.poly.is_homogeneous_of_degree(m.degree));
  }
  std::sort(degs.begin(), degs.end());
  std::vector<int> expect = {3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4};
  CHECK(degs == expect);
}

TEST_CASE("determinant degree bookkeeping and degenerate rows") {
  PrimeField F;
  HomogeneousMatrix A = random_general(ex2(4), F, 9);
  Polynomial det = determinant(A, F);
  CHECK(det.is_homogeneous_of_degree(det_degree(ex2(4))));

  // adjoin a copy of an existing row: determinant vanishes
  DegreeMatrix eq{{0, 0, 0}, {1, 1, 1}, 5};
  HomogeneousMatrix E = random_general(eq, F, 3);
  HomogeneousMatrix EN = delete_row(E);
  std::vector<Polynomial> row0;
  for (int i = 0; i < 3; ++i) row0.push_back(E.at(0, i));
  HomogeneousMatrix Edup = adjoin_row(EN, row0, F);
  CHECK(determinant(Edup, F).is_zero());
}

TEST_CASE("diagonal determinant is the product of the diagonal") {
  PrimeField F;
  DegreeMatrix dm{{0, 0, 0}, {1, 1, 1}, 5};
  HomogeneousMatrix D;
  D.dm = dm;
  D.row_labels = {0, 1, 2};
  D.entries.assign(3, std::vector<Polynomial>(3, Polynomial::zero(6)));
  for (int i = 0; i < 3; ++i) D.entries[i][i] = Polynomial::variable(6, i);
  Polynomial det = determinant(D, F);
  Polynomial prod = mul(mul(Polynomial::variable(6, 0), Polynomial::variable(6, 1), F),
                        Polynomial::variable(6, 2), F);
  CHECK(det == prod);
}

TEST_CASE("last-row expansion and signed minor relations") {
  PrimeField F;
  for (auto dm : {ex1(5), ex2(3), ex3(6)}) {
    HomogeneousMatrix A = random_general(dm, F, 11);
    HomogeneousMatrix N = delete_row(A);
    const int t = dm.t();

    // det(A) = sum_i (-1)^{(t-1)+i} A[t-1][i] * (minor of N omitting column i)
    auto g = signed_maximal_minors(N, F);
    Polynomial acc = Polynomial::zero(6);
    for (int i = 0; i < t; ++i) {
      Polynomial term = mul(A.at(t - 1, i), g[i], F);
      if ((t - 1) % 2) term = scale(term, F.neg(1), F);
      acc = add(acc, term, F);
    }
    CHECK(acc == determinant(A, F));

    // every row of N pairs to zero against the signed minors
    for (int j = 0; j < t - 1; ++j) {
      Polynomial zero = Polynomial::zero(6);
      for (int i = 0; i < t; ++i) zero = add(zero, mul(N.at(j, i), g[i], F), F);
      CHECK(zero.is_zero());
    }
  }
}

TEST_CASE("cofactor matrix multiplies back to the determinant") {
  PrimeField F;
  HomogeneousMatrix A = random_general(ex2(4), F, 21);
  auto cof = cofactor_matrix(A, F);
  Polynomial det = determinant(A, F);
  const int t = 3;
  for (int j = 0; j < t; ++j)
    for (int l = 0; l < t; ++l) {
      Polynomial acc = Polynomial::zero(6);
      for (int i = 0; i < t; ++i) acc = add(acc, mul(A.at(j, i), cof[i][l], F), F);
      if (j == l)
        CHECK(acc == det);
      else
        CHECK(acc.is_zero());
    }
}

TEST_CASE("matrix json round trip") {
  PrimeField F;
  HomogeneousMatrix A = random_general(ex3(5), F, 77);
  HomogeneousMatrix back = matrix_from_json(matrix_to_json(A), F);
  CHECK(back == A);
  HomogeneousMatrix N = delete_row(A);
  CHECK(matrix_from_json(matrix_to_json(N), F) == N);
}
