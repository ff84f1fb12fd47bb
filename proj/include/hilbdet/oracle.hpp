#ifndef HILBDET_ORACLE_HPP
#define HILBDET_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbdet/betti.hpp"
#include "hilbdet/macaulay.hpp"
#include "hilbdet/matgen.hpp"

namespace hilbdet {

// dim of the degree-v piece of the ideal generated by `gens`, as a Macaulay
// matrix rank. Ground truth for every closed-form table.
long long ideal_piece_dim(const std::vector<DegGen>& gens, int v,
                          const DegreeBasisIndex& idx, const PrimeField& F);

enum class TableResolves { Quotient, Module };

struct HilbertCheckReport {
  bool agree = true;
  std::optional<int> first_mismatch;
  // per degree: (v, predicted, observed)
  std::vector<std::tuple<int, long long, long long>> pairs;
  std::string subject;
};

// Compares oracle dims of the ideal generated by `gens` against the
// closed-form dims from `table` for v in [v_lo, v_hi]. `resolves` states
// whether the table resolves R/ideal or the ideal itself.
HilbertCheckReport hilbert_function_check(const std::vector<DegGen>& gens,
                                          const BettiTable& table,
                                          TableResolves resolves, int v_lo,
                                          int v_hi, const DegreeBasisIndex& idx,
                                          const PrimeField& F);

// True iff every degree-v piece of (sub) lies in the row space of (super)
// for all v <= up_to.
bool containment_check(const std::vector<DegGen>& sub,
                       const std::vector<DegGen>& super, int up_to,
                       const DegreeBasisIndex& idx, const PrimeField& F);

// A random instance certified non-degenerate: the oracle Hilbert functions of
// I_B, I_B^2 and I_A match the closed forms over [first generator degree,
// s + window_slack]. Degenerate draws are resampled with incremented seeds up
// to a retry cap, then rejected with an exception.
struct CertifiedInstance {
  DegreeMatrix dm;
  std::uint64_t seed_requested = 0;
  std::uint64_t seed_used = 0;
  int attempts = 1;
  HomogeneousMatrix A; // t x t
  HomogeneousMatrix N; // (t-1) x t, last row deleted
  std::vector<DegGen> gens_IB;  // signed maximal minors of N
  std::vector<DegGen> gens_IB2; // pairwise products
  std::vector<DegGen> gens_IA;  // submaximal minors of A
  std::vector<HilbertCheckReport> checks;
};

struct DegenerateInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CertifiedInstance make_certified_instance(const DegreeMatrix& dm,
                                          const PrimeField& F,
                                          std::uint64_t seed,
                                          const DegreeBasisIndex& idx,
                                          int window_slack = 3,
                                          int retry_cap = 5);

std::vector<DegGen> ideal_generators_IB(const HomogeneousMatrix& N,
                                        const PrimeField& F);
std::vector<DegGen> ideal_generators_IB2(const std::vector<DegGen>& gens_IB,
                                         const PrimeField& F);
std::vector<DegGen> ideal_generators_IA(const HomogeneousMatrix& A,
                                        const PrimeField& F);

} // namespace hilbdet

#endif
