#ifndef HILBDET_MONOMIAL_HPP
#define HILBDET_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace hilbdet {

// Exponent vector of a monomial in n_vars variables x_0..x_{n_vars-1}.
using Exponents = std::vector<std::uint16_t>;

int total_degree(const Exponents& e);

// Order used for every monomial basis: by total degree, ties broken
// lexicographically with x_0 heaviest (x_0^d first within a degree).
// Coefficient vectors are reproducible bit-for-bit given this order.
bool grlex_before(const Exponents& a, const Exponents& b);

// All monomials of total degree d in n_vars variables, in the fixed order.
// Empty for d < 0; throws for n_vars <= 0.
std::vector<Exponents> monomial_basis(int n_vars, int d);

// dim of the degree-d piece of k[x_0..x_{n_vars-1}]; 0 for d < 0.
long long ring_piece_dim(int n_vars, int d);

// C(x, k) with the truncation convention C(x, k) = 0 whenever x < k.
// This is the convention that keeps every closed-form degree sum finite.
long long choose_trunc(long long x, int k);

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace hilbdet

#endif
