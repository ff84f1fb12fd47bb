#ifndef HILBDET_MATGEN_HPP
#define HILBDET_MATGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hilbdet/degmat.hpp"
#include "hilbdet/polynomial.hpp"

namespace hilbdet {

// A t x t (or (t-1) x t after row deletion) matrix of homogeneous forms
// respecting a DegreeMatrix: entry (j,i) is homogeneous of degree a_j - b_i,
// and zero whenever a_j <= b_i.
struct HomogeneousMatrix {
  DegreeMatrix dm;
  std::vector<int> row_labels; // indices into dm.a for the surviving rows
  std::vector<std::vector<Polynomial>> entries;

  int rows() const { return static_cast<int>(row_labels.size()); }
  int cols() const { return dm.t(); }
  int row_degree(int j) const { return dm.a[row_labels[j]]; }
  int entry_degree(int j, int i) const { return dm.a[row_labels[j]] - dm.b[i]; }
  const Polynomial& at(int j, int i) const { return entries[j][i]; }

  bool operator==(const HomogeneousMatrix& o) const {
    return dm == o.dm && row_labels == o.row_labels && entries == o.entries;
  }
};

// Deterministic general instance: entries with uniformly random coefficients
// over F_p in all prescribed degrees; identical for identical (dm, prime,
// seed).
HomogeneousMatrix random_general(const DegreeMatrix& dm, const PrimeField& F,
                                 std::uint64_t seed);

// Removes row j (1-based; default the last row), yielding the (t-1) x t
// matrix whose maximal minors cut the codimension-2 scheme.
HomogeneousMatrix delete_row(const HomogeneousMatrix& A, int j = -1);

// Adjoins g as a final row; deg g_i must be a_t - b_i (zero allowed).
HomogeneousMatrix adjoin_row(const HomogeneousMatrix& N,
                             const std::vector<Polynomial>& g,
                             const PrimeField& F);

struct Minor {
  Polynomial poly;
  int degree;                  // prescribed degree from the degree data
  std::vector<int> rows, cols; // 0-based index sets, increasing
};

// All k x k minors, row/column subsets enumerated in lexicographic order.
std::vector<Minor> minors(const HomogeneousMatrix& M, int k, const PrimeField& F);

Polynomial determinant(const HomogeneousMatrix& A, const PrimeField& F);

// Adjugate: cof[i][j] = (-1)^{i+j} * minor omitting row j, column i, so that
// A * cof = det(A) * id.
std::vector<std::vector<Polynomial>> cofactor_matrix(const HomogeneousMatrix& A,
                                                     const PrimeField& F);

// Signed maximal minors of a (t-1) x t matrix: gen[i] = (-1)^i * minor
// omitting column i; every row of N pairs to zero against them.
std::vector<Polynomial> signed_maximal_minors(const HomogeneousMatrix& N,
                                              const PrimeField& F);

std::string matrix_to_json(const HomogeneousMatrix& M);
HomogeneousMatrix matrix_from_json(const std::string& text, const PrimeField& F);

} // namespace hilbdet

#endif
