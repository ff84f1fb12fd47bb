#ifndef HILBDET_INVARIANTS_HPP
#define HILBDET_INVARIANTS_HPP

#include <optional>
#include <string>

#include "hilbdet/gradedmod.hpp"

namespace hilbdet {

enum class DeltaTarget { KB, NB };

struct DeltaValue {
  long long value = 0;
  long long hom = 0;
  long long ext1 = 0;
  bool converged = true;
};

// delta(N)_v = hom(I_B/I_B^2, N)_v - ext^1(I_B/I_B^2, N)_v.
DeltaValue delta_of(const StdModules& mods, DeltaTarget target, int v,
                    const SyzygyOptions& opt);

struct DeltaPair {
  long long delta_KB = 0; // at degree n+1-2s
  long long delta_NB = 0; // at degree -s
  long long value = 0;    // delta_KB - delta_NB
  bool converged = true;
};

DeltaPair delta(const StdModules& mods, const SyzygyOptions& opt);

enum class EstimateMode { Formula, Eps, EpsPlusDelta };

struct DimEstimate {
  EstimateMode mode = EstimateMode::Eps;
  long long value = 0;
  HypothesisReport hypotheses;
  bool converged = true;
};

// formula -> the closed-form family dimension (t > 2 required);
// eps -> epsilon; eps_plus_delta -> epsilon + delta.
DimEstimate dim_hilb_estimate(const DegreeMatrix& dm, const StdModules* mods,
                              EstimateMode mode, const SyzygyOptions& opt);

struct CodimBounds {
  long long lower = 0;
  long long upper = 0;
  std::optional<long long> exact;
  long long c_IAB = 0;        // upper - ext_term
  long long ext_term = 0;     // ext^1(N_B, A)_s
  long long hom_IB_IAB = 0;   // hom(I_B/I_B^2, I_{A/B})_0
  long long delta_val = 0;
  std::optional<long long> h2;
  bool converged = true;
};

// Codimension of the stratum of subschemes cut out by regular sections:
// lower = max(0, c, delta - ext_term), upper = ext^1(I_B/I_B^2, I_{A/B})_0,
// exact = c + h2 when h2 is known (or the common value when the bounds meet).
CodimBounds codim_bounds(const StdModules& mods, const SyzygyOptions& opt,
                         std::optional<long long> h2_override = std::nullopt);

struct H2Result {
  long long value = 0;
  bool converged = true;
};

// h^2 of the ambient-to-A algebra cohomology in degree 0, computed as
// ext^1_A(I_A/I_A^2, A); valid for generically complete intersection A.
H2Result h2_RAA(const StdModules& mods, const SyzygyOptions& opt);

struct InvariantReport {
  DegreeMatrix dm;
  int s = 0;
  fp_t prime = 0;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> seeds_used;
  int bound = 0;
  int window = 0;
  bool converged = true; // false marks the whole report UNCERTIFIED

  long long epsilon_val = 0;
  long long delta_KB = 0;
  long long delta_NB = 0;
  long long delta_val = 0;
  std::string mode;
  long long dim_estimate = 0;
  std::optional<long long> dim_formula;
  long long codi_lower = 0;
  long long codi_upper = 0;
  std::optional<long long> codi_exact;
  long long hom_IB_IAB = 0;
  long long ext1_NB_A = 0;
  long long ext1_conormal_IAB = 0;
  std::optional<long long> h2;
  HypothesisReport hypotheses;
};

// Assembles the full report. Hom/ext dimensions are minimized over
// `num_seeds` certified random instances (seeds seed, seed+1, ...), the
// numeric stand-in for generality of the pair (X in Y).
InvariantReport invariant_report(const DegreeMatrix& dm, const PrimeField& F,
                                 std::uint64_t seed, int num_seeds,
                                 const SyzygyOptions& opt, bool with_h2,
                                 EstimateMode mode = EstimateMode::EpsPlusDelta);

std::string invariant_report_to_json(const InvariantReport& r);

} // namespace hilbdet

#endif
