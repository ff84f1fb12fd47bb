#include "hilbdet/macaulay.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbdet {

const DegreeBasisIndex::Level& DegreeBasisIndex::level(int d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = levels_.find(d);
  if (it == levels_.end()) {
    auto lv = std::make_unique<Level>();
    lv->monomials = monomial_basis(n_vars_, d);
    lv->index.reserve(lv->monomials.size());
    for (std::uint32_t i = 0; i < lv->monomials.size(); ++i)
      lv->index.emplace(lv->monomials[i], i);
    it = levels_.emplace(d, std::move(lv)).first;
  }
  return *it->second;
}

const std::vector<Exponents>& DegreeBasisIndex::basis(int d) const {
  return level(d).monomials;
}

std::uint32_t DegreeBasisIndex::index_of(const Exponents& e) const {
  const Level& lv = level(total_degree(e));
  auto it = lv.index.find(e);
  if (it == lv.index.end()) throw std::logic_error("DegreeBasisIndex: unknown monomial");
  return it->second;
}

SparseVec DegreeBasisIndex::coords(const Polynomial& f, int deg) const {
  if (!f.is_homogeneous_of_degree(deg))
    throw std::invalid_argument("coords: polynomial not homogeneous of declared degree");
  const Level& lv = level(deg);
  SparseVec v;
  v.nz.reserve(f.term_count());
  for (auto& t : f.terms()) v.push(lv.index.at(t.exp), t.coeff);
  std::sort(v.nz.begin(), v.nz.end());
  return v;
}

ExactMatrix coefficient_matrix(const std::vector<DegGen>& gens, int target,
                               const DegreeBasisIndex& idx,
                               const PrimeField&) {
  const int n_vars = idx.n_vars();
  std::size_t nrows = 0;
  for (auto& g : gens) {
    if (!g.poly.is_homogeneous_of_degree(g.degree))
      throw std::invalid_argument("coefficient_matrix: inhomogeneous generator");
    nrows += static_cast<std::size_t>(ring_piece_dim(n_vars, target - g.degree));
  }
  const auto& target_basis = idx.basis(target);
  ExactMatrix m(nrows, target_basis.size());
  std::size_t r = 0;
  for (auto& g : gens) {
    if (g.poly.is_zero()) {
      r += static_cast<std::size_t>(ring_piece_dim(n_vars, target - g.degree));
      continue;
    }
    for (const Exponents& mono : idx.basis(target - g.degree)) {
      SparseVec& row = m.row(r++);
      row.nz.reserve(g.poly.term_count());
      Exponents e(n_vars);
      for (auto& t : g.poly.terms()) {
        for (int k = 0; k < n_vars; ++k)
          e[k] = static_cast<std::uint16_t>(t.exp[k] + mono[k]);
        row.push(idx.index_of(e), t.coeff);
      }
      std::sort(row.nz.begin(), row.nz.end());
    }
  }
  return m;
}

} // namespace hilbdet
