#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbdet/oracle.hpp"
#include "test_util.hpp"

using namespace hilbdet;
using namespace hilbdet::testutil;

TEST_CASE("ideal piece dimensions from ranks") {
  PrimeField F;
  DegreeBasisIndex idx(6);
  HomogeneousMatrix A = random_general(ex1(5), F, 42);
  HomogeneousMatrix N = delete_row(A);
  auto IB = ideal_generators_IB(N, F);
  auto IA = ideal_generators_IA(A, F);

  CHECK(ideal_piece_dim(IA, 3, idx, F) == 4);
  CHECK(ideal_piece_dim(IB, 4, idx, F) == 21);
  CHECK(ideal_piece_dim(IB, 2, idx, F) == 0);

  // the four cubic generators of I_B are linearly independent
  CHECK(ideal_piece_dim(IB, 3, idx, F) == 4);
}

TEST_CASE("hilbert function checks on general instances") {
  PrimeField F;
  DegreeBasisIndex idx(6);
  HomogeneousMatrix A = random_general(ex1(5), F, 42);
  HomogeneousMatrix N = delete_row(A);
  auto IB = ideal_generators_IB(N, F);
  auto rep = hilbert_function_check(IB, hilbert_burch_table(ex1(5)),
                                    TableResolves::Quotient, 0, 8, idx, F);
  CHECK(rep.agree);

  HomogeneousMatrix A2 = random_general(ex2(3), F, 5);
  auto IB2gens =
      ideal_generators_IB2(ideal_generators_IB(delete_row(A2), F), F);
  auto rep2 = hilbert_function_check(IB2gens, ideal_square_table(ex2(3)),
                                     TableResolves::Module, 0, 8, idx, F);
  CHECK(rep2.agree);
}

TEST_CASE("degenerate draws are detected") {
  PrimeField F;
  DegreeBasisIndex idx(6);
  DegreeMatrix eq{{0, 0, 0}, {1, 1, 1}, 5};
  HomogeneousMatrix E = random_general(eq, F, 3);
  HomogeneousMatrix EN = delete_row(E);
  std::vector<Polynomial> row0;
  for (int i = 0; i < 3; ++i) row0.push_back(E.at(0, i));
  HomogeneousMatrix Edup = adjoin_row(EN, row0, F); // repeated row
  auto IA = ideal_generators_IA(Edup, F);
  auto rep = hilbert_function_check(IA, gulliksen_negard_table(eq),
                                    TableResolves::Quotient, 2, 6, idx, F);
  CHECK(!rep.agree);
  CHECK(rep.first_mismatch.has_value());
}

TEST_CASE("containment checks") {
  PrimeField F;
  DegreeBasisIndex idx(6);
  HomogeneousMatrix A = random_general(ex1(5), F, 42);
  HomogeneousMatrix N = delete_row(A);
  auto IB = ideal_generators_IB(N, F);
  auto IA = ideal_generators_IA(A, F);

  CHECK(containment_check(IB, IA, 8, idx, F));
  CHECK(!containment_check(IA, IB, 8, idx, F));

  std::vector<DegGen> x0 = {{Polynomial::variable(6, 0), 1}};
  std::vector<DegGen> x1 = {{Polynomial::variable(6, 1), 1}};
  CHECK(!containment_check(x0, x1, 3, idx, F));

  // det(A) is a combination of submaximal minors, hence inside both ideals
  std::vector<DegGen> det = {{determinant(A, F), det_degree(ex1(5))}};
  CHECK(containment_check(det, IA, det_degree(ex1(5)), idx, F));
  CHECK(containment_check(det, IB, det_degree(ex1(5)), idx, F));
}

TEST_CASE("oracle dims are monotone and consistent under containment") {
  PrimeField F;
  DegreeBasisIndex idx(6);
  HomogeneousMatrix A = random_general(ex2(4), F, 17);
  auto IB = ideal_generators_IB(delete_row(A), F);
  auto IA = ideal_generators_IA(A, F);
  std::vector<DegGen> both = IA;
  both.insert(both.end(), IB.begin(), IB.end());
  for (int v = 0; v <= 7; ++v) {
    long long da = ideal_piece_dim(IA, v, idx, F);
    long long db = ideal_piece_dim(IB, v, idx, F);
    long long dboth = ideal_piece_dim(both, v, idx, F);
    CHECK(dboth == da); // I_B lies inside I_A
    CHECK(da >= db);
  }
}

TEST_CASE("certified instances resample on demand") {
  PrimeField F;
  DegreeBasisIndex idx(6);
  CertifiedInstance inst = make_certified_instance(ex1(5), F, 42, idx);
  CHECK(inst.attempts >= 1);
  CHECK(inst.checks.size() == 3);
  for (auto& c : inst.checks) CHECK(c.agree);
  CHECK(inst.N.rows() == 3);
  CHECK(inst.gens_IB.size() == 4);
  CHECK(inst.gens_IB2.size() == 10);
  CHECK(inst.gens_IA.size() == 16);
}
