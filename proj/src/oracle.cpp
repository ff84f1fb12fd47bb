#include "hilbdet/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace hilbdet {

long long ideal_piece_dim(const std::vector<DegGen>& gens, int v,
                          const DegreeBasisIndex& idx, const PrimeField& F) {
  if (v < 0) return 0;
  RowReducer red(idx.basis(v).size(), 0, F);
  for (auto& g : gens) {
    if (!g.poly.is_homogeneous_of_degree(g.degree))
      throw std::invalid_argument("ideal_piece_dim: inhomogeneous generator");
    if (g.poly.is_zero() || g.degree > v) continue;
    for (const Exponents& mono : idx.basis(v - g.degree)) {
      SparseVec row;
      row.nz.reserve(g.poly.term_count());
      Exponents e(idx.n_vars());
      for (auto& t : g.poly.terms()) {
        for (int k = 0; k < idx.n_vars(); ++k)
          e[k] = static_cast<std::uint16_t>(t.exp[k] + mono[k]);
        row.push(idx.index_of(e), t.coeff);
      }
      std::sort(row.nz.begin(), row.nz.end());
      red.insert(row);
    }
  }
  return static_cast<long long>(red.rank());
}

HilbertCheckReport hilbert_function_check(const std::vector<DegGen>& gens,
                                          const BettiTable& table,
                                          TableResolves resolves, int v_lo,
                                          int v_hi, const DegreeBasisIndex& idx,
                                          const PrimeField& F) {
  HilbertCheckReport rep;
  rep.subject = table.label;
  for (int v = v_lo; v <= v_hi; ++v) {
    long long predicted = hilbert_function(table, v);
    if (resolves == TableResolves::Quotient)
      predicted = ring_piece_dim(idx.n_vars(), v) - predicted;
    long long observed = ideal_piece_dim(gens, v, idx, F);
    rep.pairs.emplace_back(v, predicted, observed);
    if (predicted != observed && rep.agree) {
      rep.agree = false;
      rep.first_mismatch = v;
    }
  }
  return rep;
}

bool containment_check(const std::vector<DegGen>& sub,
                       const std::vector<DegGen>& super, int up_to,
                       const DegreeBasisIndex& idx, const PrimeField& F) {
  for (int v = 0; v <= up_to; ++v) {
    RowReducer red(idx.basis(v).size(), 0, F);
    auto rows_of = [&](const DegGen& g, auto&& sink) {
      if (g.poly.is_zero() || g.degree > v) return;
      Exponents e(idx.n_vars());
      for (const Exponents& mono : idx.basis(v - g.degree)) {
        SparseVec row;
        row.nz.reserve(g.poly.term_count());
        for (auto& t : g.poly.terms()) {
          for (int k = 0; k < idx.n_vars(); ++k)
            e[k] = static_cast<std::uint16_t>(t.exp[k] + mono[k]);
          row.push(idx.index_of(e), t.coeff);
        }
        std::sort(row.nz.begin(), row.nz.end());
        sink(row);
      }
    };
    for (auto& g : super)
      rows_of(g, [&](const SparseVec& r) { red.insert(r); });
    bool ok = true;
    for (auto& g : sub) {
      rows_of(g, [&](const SparseVec& r) {
        if (ok && !red.in_row_space(r)) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<DegGen> ideal_generators_IB(const HomogeneousMatrix& N,
                                        const PrimeField& F) {
  auto polys = signed_maximal_minors(N, F);
  auto [n1, n2] = hb_twists(N.dm);
  std::vector<DegGen> out;
  for (std::size_t i = 0; i < polys.size(); ++i)
    out.push_back({polys[i], n1[i]});
  return out;
}

std::vector<DegGen> ideal_generators_IB2(const std::vector<DegGen>& gens_IB,
                                         const PrimeField& F) {
  std::vector<DegGen> out;
  for (std::size_t i = 0; i < gens_IB.size(); ++i)
    for (std::size_t k = i; k < gens_IB.size(); ++k)
      out.push_back({mul(gens_IB[i].poly, gens_IB[k].poly, F),
                     gens_IB[i].degree + gens_IB[k].degree});
  return out;
}

std::vector<DegGen> ideal_generators_IA(const HomogeneousMatrix& A,
                                        const PrimeField& F) {
  const int t = A.rows();
  auto ms = minors(A, t - 1, F);
  std::vector<DegGen> out;
  out.reserve(ms.size());
  for (auto& m : ms) out.push_back({m.poly, m.degree});
  return out;
}

CertifiedInstance make_certified_instance(const DegreeMatrix& dm,
                                          const PrimeField& F,
                                          std::uint64_t seed,
                                          const DegreeBasisIndex& idx,
                                          int window_slack, int retry_cap) {
  if (!is_nonempty(dm))
    throw std::invalid_argument("make_certified_instance: empty family");
  const int s = det_degree(dm);
  const BettiTable hb = hilbert_burch_table(dm);
  const BettiTable sq = ideal_square_table(dm);
  const BettiTable gn = gulliksen_negard_table(dm);
  auto [n1, n2] = hb_twists(dm);
  const int v_top = s + window_slack;

  for (int attempt = 0; attempt <= retry_cap; ++attempt) {
    CertifiedInstance inst;
    inst.dm = dm;
    inst.seed_requested = seed;
    inst.seed_used = seed + attempt;
    inst.attempts = attempt + 1;
    inst.A = random_general(dm, F, inst.seed_used);
    inst.N = delete_row(inst.A);
    inst.gens_IB = ideal_generators_IB(inst.N, F);
    inst.gens_IB2 = ideal_generators_IB2(inst.gens_IB, F);
    inst.gens_IA = ideal_generators_IA(inst.A, F);

    int ib_lo = *std::min_element(n1.begin(), n1.end());
    int ia_lo = ib_lo;
    for (auto& g : inst.gens_IA) ia_lo = std::min(ia_lo, g.degree);
    inst.checks.push_back(hilbert_function_check(
        inst.gens_IB, hb, TableResolves::Quotient, ib_lo, v_top, idx, F));
    inst.checks.push_back(hilbert_function_check(
        inst.gens_IB2, sq, TableResolves::Module, 2 * ib_lo, v_top, idx, F));
    inst.checks.push_back(hilbert_function_check(
        inst.gens_IA, gn, TableResolves::Quotient, ia_lo, v_top, idx, F));
    bool ok = true;
    for (auto& c : inst.checks) ok = ok && c.agree;
    if (ok) return inst;
  }
  std::ostringstream os;
  os << "make_certified_instance: degenerate draws for seeds " << seed << ".."
     << (seed + retry_cap) << "; raise the retry cap or change the seed";
  throw DegenerateInstanceError(os.str());
}

} // namespace hilbdet
