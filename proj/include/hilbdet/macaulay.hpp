#ifndef HILBDET_MACAULAY_HPP
#define HILBDET_MACAULAY_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "hilbdet/linalg.hpp"
#include "hilbdet/polynomial.hpp"

namespace hilbdet {

// Memoized monomial bases of the graded pieces R_d and their index maps.
// Safe for shared use from multiple threads.
class DegreeBasisIndex {
public:
  explicit DegreeBasisIndex(int n_vars) : n_vars_(n_vars) {}

  int n_vars() const { return n_vars_; }

  const std::vector<Exponents>& basis(int d) const;

  // Position of e inside basis(total_degree(e)).
  std::uint32_t index_of(const Exponents& e) const;

  // Coordinates of a homogeneous polynomial in basis(deg).
  SparseVec coords(const Polynomial& f, int deg) const;

private:
  struct Level {
    std::vector<Exponents> monomials;
    std::unordered_map<Exponents, std::uint32_t, ExponentsHash> index;
  };
  const Level& level(int d) const;

  int n_vars_;
  mutable std::mutex mu_;
  mutable std::unordered_map<int, std::unique_ptr<Level>> levels_;
};

// A generator with its declared degree.
struct DegGen {
  Polynomial poly;
  int degree;
};

// Macaulay matrix of the degree-`target` piece of the ideal generated by
// `gens`: one row per (generator g, monomial m of degree target - deg g),
// holding the coefficient vector of m*g in the basis(target) ordering.
// Throws if a generator is not homogeneous of its declared degree.
ExactMatrix coefficient_matrix(const std::vector<DegGen>& gens, int target,
                               const DegreeBasisIndex& idx,
                               const PrimeField& F);

} // namespace hilbdet

#endif
