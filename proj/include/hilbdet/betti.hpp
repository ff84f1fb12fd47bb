#ifndef HILBDET_BETTI_HPP
#define HILBDET_BETTI_HPP

#include <string>
#include <utility>
#include <vector>

#include "hilbdet/degmat.hpp"

namespace hilbdet {

// A graded free complex recorded as, per homological index, the multiset of
// generator degrees d (each meaning a free summand R(-d)).
struct BettiTable {
  std::string label; // HB | SQ | GN | ...
  int n = 5;         // ambient P^n
  std::vector<std::vector<int>> terms;

  long long rank(int k) const {
    return k < (int)terms.size() ? (long long)terms[k].size() : 0;
  }
  std::string to_text() const; // R(-d)^k notation, arrows left to right
};

// 0 -> (+)_{j<t} R(a_t-s-a_j) -> (+)_i R(a_t-s-b_i) -> R -> B -> 0,
// recorded as the resolution of B = R/I_B (terms[0] = {0}).
BettiTable hilbert_burch_table(const DegreeMatrix& dm);

// Resolution of the module I_B^2:
// 0 -> /\^2 F2 -> F1 (x) F2 -> S^2 F1 -> I_B^2 -> 0.
BettiTable ideal_square_table(const DegreeMatrix& dm);

// Length-4 self-dual resolution of A = R/I_A with ranks (1, t^2, 2t^2-2,
// t^2, 1) and top twist 2s. Rejects data whose listed degrees are not all
// positive (non-minimal cases) with a diagnostic.
BettiTable gulliksen_negard_table(const DegreeMatrix& dm);

// Alternating sum sum_k (-1)^k sum_{d in terms[k]} C(v-d+n, n), i.e. the
// dimension of the resolved module in degree v.
long long hilbert_function(const BettiTable& table, int v);

// Integer-valued polynomial in the binomial basis: p(v) = sum c_i * C(v, i).
struct HilbertPolynomial {
  std::vector<long long> c; // c[i] multiplies C(v, i); trailing zeros trimmed

  int degree() const;
  long long operator()(long long v) const;
  bool operator==(const HilbertPolynomial& o) const { return c == o.c; }
  std::string to_string() const;
};

// C(x, k) for arbitrary integer x (no truncation): x(x-1)...(x-k+1)/k!.
long long signed_binom(long long x, int k);

HilbertPolynomial hilbert_polynomial(const BettiTable& table);

// For a 1-dimensional scheme, reads p(v) = d*v + 1 - g. Throws when the
// polynomial is not linear.
std::pair<long long, long long> degree_and_genus(const HilbertPolynomial& p);

// dim (I_B)_v from the Hilbert-Burch data (closed form).
long long ideal_piece_dim_closed(const DegreeMatrix& dm, int v);

// eta(v) = dim (I_B/I_B^2)_v = dim (I_B)_v - dim (I_B^2)_v, closed form.
long long eta(const DegreeMatrix& dm, int v);

// epsilon = eta(s) + sum_j eta(n2_j) - sum_i eta(n1_i).
long long epsilon(const DegreeMatrix& dm);

struct DimWResult {
  long long value = 0;
  HypothesisReport hypotheses;
};

// Literal evaluation of the eight-sum closed-form dimension of the family
// W^{t-1}_{t,t}(b;a), with truncated binomials. The value is certified to be
// the dimension of the locus exactly when the hypotheses all hold.
DimWResult dim_w_formula(const DegreeMatrix& dm);

std::string betti_table_to_json(const BettiTable& t);
std::string hilbert_polynomial_to_json(const HilbertPolynomial& p);

} // namespace hilbdet

#endif
