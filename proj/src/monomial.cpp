#include "hilbdet/monomial.hpp"

#include <stdexcept>

namespace hilbdet {

int total_degree(const Exponents& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool grlex_before(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // within a degree: larger exponent on the earliest variable comes first
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

static void enumerate(int n_vars, int var, int rem, Exponents& cur,
                      std::vector<Exponents>& out) {
  if (var == n_vars - 1) {
    cur[var] = static_cast<std::uint16_t>(rem);
    out.push_back(cur);
    return;
  }
  for (int e = rem; e >= 0; --e) {
    cur[var] = static_cast<std::uint16_t>(e);
    enumerate(n_vars, var + 1, rem - e, cur, out);
  }
  cur[var] = 0;
}

std::vector<Exponents> monomial_basis(int n_vars, int d) {
  if (n_vars <= 0) throw std::invalid_argument("monomial_basis: need at least one variable");
  if (d < 0) return {};
  std::vector<Exponents> out;
  out.reserve(static_cast<std::size_t>(ring_piece_dim(n_vars, d)));
  Exponents cur(n_vars, 0);
  enumerate(n_vars, 0, d, cur, out);
  return out;
}

long long ring_piece_dim(int n_vars, int d) {
  if (d < 0) return 0;
  return choose_trunc(d + n_vars - 1, n_vars - 1);
}

long long choose_trunc(long long x, int k) {
  if (k < 0 || x < k) return 0;
  // exact: multiply/divide incrementally, every prefix is a binomial
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (x - k + i) / i;
  return r;
}

} // namespace hilbdet
