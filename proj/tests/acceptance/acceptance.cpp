// Acceptance suite: runs every criterion at its stated tolerance (exact
// integer equality throughout) and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hilbdet/betti.hpp"
#include "hilbdet/gradedmod.hpp"
#include "hilbdet/invariants.hpp"

using namespace hilbdet;

namespace {

const PrimeField& field() {
  static PrimeField F;
  return F;
}

DegreeMatrix ex1(int s) { return {{0, 0, 0, 0}, {1, 1, 1, s - 3}, 5}; }
DegreeMatrix ex2(int s) { return {{0, 0, 0}, {1, 1, s - 2}, 5}; }
DegreeMatrix ex3(int s) { return {{0, 0, 0}, {1, 2, s - 3}, 5}; }

struct Check {
  int failures = 0;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      std::printf("    FAIL: %s\n", what.c_str());
    }
  }
  template <class T>
  void equal(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
      ++failures;
      std::printf("    FAIL: %s: expected %lld, got %lld\n", what.c_str(),
                  (long long)want, (long long)got);
    }
  }
};

// shared engine state, built once per (family, s)
StdModules& mods_for(int family, int s) {
  static std::map<std::pair<int, int>, std::unique_ptr<StdModules>> cache;
  auto key = std::make_pair(family, s);
  auto it = cache.find(key);
  if (it == cache.end()) {
    DegreeMatrix dm = family == 1 ? ex1(s) : family == 2 ? ex2(s) : ex3(s);
    DegreeBasisIndex idx(dm.n_vars());
    auto mods = std::make_unique<StdModules>(
        make_certified_instance(dm, field(), 42, idx), field());
    it = cache.emplace(key, std::move(mods)).first;
  }
  return *it->second;
}

SyzygyOptions opt_for(int s, int extra = 0) { return {2 * s + 4 + extra, 3}; }

DegreeMatrix random_admissible(std::mt19937_64& rng) {
  int t = 2 + (int)(rng() % 4);
  std::vector<int> b(t), a(t);
  b[0] = (int)(rng() % 3);
  for (int i = 1; i < t; ++i) b[i] = b[i - 1] + (int)(rng() % 3);
  a[0] = b[1] + 1 + (int)(rng() % 2);
  for (int i = 1; i < t; ++i) {
    int lo = std::max(a[i - 1], (i + 1 < t) ? b[i + 1] + 1 : a[i - 1]);
    a[i] = lo + (int)(rng() % 3);
  }
  a[t - 1] += (int)(rng() % 5);
  return {b, a, 5};
}

// ---------------------------------------------------------------------------

void criterion1(Check& c) {
  for (int s = 6; s <= 12; ++s)
    c.equal(dim_w_formula(ex1(s)).value,
            2LL * s * s * s - 10LL * s * s + 13 * s + 48,
            "family 1 closed form at s=" + std::to_string(s));
  for (int s = 5; s <= 12; ++s)
    c.equal(dim_w_formula(ex2(s)).value, (long long)(s + 1) * (s - 1) * (s - 1) + 23,
            "family 2 closed form at s=" + std::to_string(s));
}

void criterion2(Check& c) {
  auto multiset = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  for (int s = 3; s <= 8; ++s) {
    BettiTable t = gulliksen_negard_table(ex2(s));
    std::vector<int> t1, t2, t3;
    for (int i = 0; i < 6; ++i) t1.push_back(s - 1);
    for (int i = 0; i < 3; ++i) t1.push_back(2);
    for (int i = 0; i < 12; ++i) t2.push_back(s);
    t2.insert(t2.end(), {3, 3, 2 * s - 3, 2 * s - 3});
    for (int i = 0; i < 6; ++i) t3.push_back(s + 1);
    for (int i = 0; i < 3; ++i) t3.push_back(2 * s - 2);
    c.expect(t.terms[0] == std::vector<int>{0} && t.terms[1] == multiset(t1) &&
                 t.terms[2] == multiset(t2) && t.terms[3] == multiset(t3) &&
                 t.terms[4] == std::vector<int>{2 * s},
             "3x3 family table at s=" + std::to_string(s));
  }
  BettiTable koszul = gulliksen_negard_table(DegreeMatrix{{0, 0}, {1, 1}, 5});
  c.expect(koszul.rank(0) == 1 && koszul.rank(1) == 4 && koszul.rank(2) == 6 &&
               koszul.rank(3) == 4 && koszul.rank(4) == 1,
           "2x2 case has Koszul ranks");
  std::mt19937_64 rng(20240808);
  for (int trial = 0; trial < 200; ++trial) {
    DegreeMatrix dm = random_admissible(rng);
    const int s = det_degree(dm);
    BettiTable t = gulliksen_negard_table(dm);
    bool ok = true;
    for (int k = 0; k <= 4; ++k) {
      std::vector<int> dual;
      for (int d : t.terms[4 - k]) dual.push_back(2 * s - d);
      ok = ok && multiset(dual) == t.terms[k];
    }
    c.expect(ok, "self-duality on random degree data, trial " + std::to_string(trial));
    if (!ok) break;
  }
}

void criterion3(Check& c) {
  BettiTable hb = hilbert_burch_table(ex1(5));
  HilbertPolynomial p = hilbert_polynomial(hb);
  bool hb_ok = true;
  for (long long v = 0; v <= 15; ++v)
    hb_ok = hb_ok && p(v) == choose_trunc(v + 3, 3) + 2 * choose_trunc(v + 2, 3) +
                                 3 * choose_trunc(v + 1, 3);
  c.expect(hb_ok, "codim-2 Hilbert polynomial closed form");
  for (int s = 4; s <= 8; ++s) {
    auto [d1, g1] = degree_and_genus(hilbert_polynomial(gulliksen_negard_table(ex1(s))));
    c.equal(d1, 6LL * s * s - 28 * s + 36, "family 1 degree at s=" + std::to_string(s));
    c.equal(g1, 1 + (6LL * s * s - 28 * s + 36) * (s - 3),
            "family 1 genus at s=" + std::to_string(s));
    auto [d2, g2] = degree_and_genus(hilbert_polynomial(gulliksen_negard_table(ex2(s))));
    c.equal(d2, 3LL * s * s - 10 * s + 9, "family 2 degree at s=" + std::to_string(s));
    c.equal(g2, 1 + (3LL * s * s - 10 * s + 9) * (s - 3),
            "family 2 genus at s=" + std::to_string(s));
  }
}

void criterion4(Check& c) {
  for (auto [family, s] : {std::pair{1, 5}, {2, 4}, {3, 6}}) {
    DegreeMatrix dm = family == 1 ? ex1(s) : family == 2 ? ex2(s) : ex3(s);
    DegreeBasisIndex idx(dm.n_vars());
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      try {
        CertifiedInstance inst = make_certified_instance(dm, field(), seed, idx);
        bool ok = true;
        for (auto& rep : inst.checks) ok = ok && rep.agree;
        c.expect(ok, "family " + std::to_string(family) + " seed " +
                         std::to_string(seed));
      } catch (const std::exception& e) {
        c.expect(false, "family " + std::to_string(family) + " seed " +
                            std::to_string(seed) + ": " + e.what());
      }
    }
  }
}

void criterion5(Check& c) {
  struct DeltaCase {
    int family, s;
    long long kb, nb;
  };
  for (auto dc : {DeltaCase{1, 4, -3, -15}, {1, 5, 0, -12}, {2, 3, -1, 2},
                  {2, 4, 0, -3}, {3, 5, 0, -8}, {3, 6, 0, -3}}) {
    StdModules& mods = mods_for(dc.family, dc.s);
    for (int extra : {0, 2}) {
      DeltaPair d = delta(mods, opt_for(dc.s, extra));
      std::string tag = "family " + std::to_string(dc.family) + " s=" +
                        std::to_string(dc.s) + " bound+" + std::to_string(extra);
      c.expect(d.converged, tag + " converged");
      c.equal(d.delta_KB, dc.kb, tag + " delta_KB");
      c.equal(d.delta_NB, dc.nb, tag + " delta_NB");
    }
  }
  struct HomCase {
    int family, s;
    long long value;
  };
  for (auto hc : {HomCase{1, 4, 3}, {2, 3, 3}, {3, 5, 1}, {3, 6, 0}}) {
    StdModules& mods = mods_for(hc.family, hc.s);
    c.equal(hom_dim(*mods.conormal(), *mods.I_AB(), 0), hc.value,
            "hom(I_B, I_{A/B}) family " + std::to_string(hc.family) + " s=" +
                std::to_string(hc.s));
  }
  {
    StdModules& mods = mods_for(3, 5);
    for (int extra : {0, 2}) {
      ExtResult e2 = ext_dim(*mods.normal(), *mods.normal(), 2, 0, opt_for(5, extra));
      ExtResult e1 = ext_dim(*mods.normal(), *mods.A_over_B(), 1, 5, opt_for(5, extra));
      H2Result h2 = h2_RAA(mods, opt_for(5, extra));
      std::string tag = "family 3 s=5 bound+" + std::to_string(extra);
      c.expect(e2.converged && e1.converged && h2.converged, tag + " converged");
      c.equal(e2.value, 3LL, tag + " ext2(N_B,N_B)_0");
      c.equal(e1.value, 3LL, tag + " ext1(N_B,A)_5");
      c.equal(h2.value, 0LL, tag + " h2_RAA");
    }
  }
  { // a genuinely deeper search: widen the stabilization window
    StdModules& mods = mods_for(2, 3);
    DeltaPair d = delta(mods, SyzygyOptions{12, 5});
    c.expect(d.converged, "family 2 s=3 window 5 converged");
    c.equal(d.delta_KB, -1LL, "family 2 s=3 window 5 delta_KB");
    c.equal(d.delta_NB, 2LL, "family 2 s=3 window 5 delta_NB");
  }
}

void criterion6(Check& c) {
  struct DimCase {
    int family, s;
    long long dim;
  };
  for (auto dc : {DimCase{1, 4, 80}, {1, 5, 125}, {2, 3, 36}, {2, 4, 71}}) {
    StdModules& mods = mods_for(dc.family, dc.s);
    DeltaPair d = delta(mods, opt_for(dc.s));
    c.equal(epsilon(mods.dm()) + d.value, dc.dim,
            "eps+delta family " + std::to_string(dc.family) + " s=" +
                std::to_string(dc.s));
  }
  struct CodimCase {
    int family, s;
    long long codim;
  };
  for (auto cc : {CodimCase{1, 5, 12}, {1, 4, 15}, {2, 3, 0}, {2, 4, 3}}) {
    StdModules& mods = mods_for(cc.family, cc.s);
    CodimBounds cb = codim_bounds(mods, opt_for(cc.s));
    std::string tag = "codim family " + std::to_string(cc.family) + " s=" +
                      std::to_string(cc.s);
    c.expect(cb.converged, tag + " converged");
    c.expect(cb.exact.has_value(), tag + " exact value");
    if (cb.exact) c.equal(*cb.exact, cc.codim, tag);
    if (cc.family == 1 && cc.s == 4)
      c.equal(cb.hom_IB_IAB + cb.delta_val, 15LL, tag + " = hom + delta");
  }
  { // the 3x3 mixed family: exact 6 at s=5 with h2 = 0, bounds only at s=6
    StdModules& m5 = mods_for(3, 5);
    H2Result h2 = h2_RAA(m5, opt_for(5));
    CodimBounds cb5 = codim_bounds(m5, opt_for(5), h2.value);
    c.expect(cb5.converged && h2.converged, "family 3 s=5 converged");
    c.expect(cb5.exact.has_value(), "family 3 s=5 exact present");
    if (cb5.exact) c.equal(*cb5.exact, 6LL, "codim family 3 s=5");
    c.expect(cb5.delta_val - cb5.ext_term >= 5, "family 3 s=5 lower bound >= 5");

    StdModules& m6 = mods_for(3, 6);
    CodimBounds cb6 = codim_bounds(m6, opt_for(6));
    c.expect(cb6.converged, "family 3 s=6 converged");
    c.equal(cb6.lower, 0LL, "family 3 s=6 lower");
    c.equal(cb6.upper, 3LL, "family 3 s=6 upper");
    // claiming an exact value here is a failure
    c.expect(!cb6.exact.has_value(), "family 3 s=6 must stay a bracket");
  }
}

void criterion7(Check& c) {
  for (auto [family, s] : {std::pair{1, 5}, {2, 4}, {3, 5}}) {
    StdModules& mods = mods_for(family, s);
    const DegreeMatrix& dm = mods.dm();
    const int n = dm.n;
    DegreeBasisIndex idx(dm.n_vars());
    std::string tag = "family " + std::to_string(family) + " s=" + std::to_string(s);

    bool ns_ok = true, j07_ok = true;
    for (int v = 0; v <= s + 3; ++v) {
      long long kb = mods.canonical()->piece_dim(v + n + 1 - 2 * s);
      long long nb = mods.normal()->piece_dim(v - s);
      long long iab = mods.I_AB()->piece_dim(v);
      ns_ok = ns_ok && (kb + iab == nb);
      long long dimA = ring_piece_dim(n + 1, v) -
                       ideal_piece_dim(mods.instance().gens_IA, v, idx, field());
      j07_ok = j07_ok && (mods.ring_B()->dim(v) - dimA == nb - kb);
    }
    c.expect(ns_ok, tag + " section-sequence bookkeeping");
    c.expect(j07_ok, tag + " quotient bookkeeping vs rank oracle");

    bool two_routes = true;
    for (int v = -2; v <= 2; ++v)
      two_routes = two_routes && mods.normal()->piece_dim(v) ==
                                     hom_dim(*mods.conormal(), *mods.B_free(), v);
    c.expect(two_routes, tag + " normal module two routes");

    c.expect(containment_check(mods.instance().gens_IB, mods.instance().gens_IA,
                               s + 3, idx, field()),
             tag + " I_B inside I_A");
    // determinant identity: last-row expansion against the signed minors
    const HomogeneousMatrix& A = mods.instance().A;
    auto g = signed_maximal_minors(mods.instance().N, field());
    const int t = dm.t();
    Polynomial acc = Polynomial::zero(dm.n_vars());
    for (int i = 0; i < t; ++i) {
      Polynomial term = mul(A.at(t - 1, i), g[i], field());
      if ((t - 1) % 2) term = scale(term, field().neg(1), field());
      acc = add(acc, term, field());
    }
    c.expect(acc == determinant(A, field()), tag + " determinant expansion");
  }
  { // H_1 isomorphisms on the two families where the paper pins them
    StdModules& m3 = mods_for(3, 5);
    bool h1_ok = true;
    for (int v = 0; v <= 8; ++v)
      h1_ok = h1_ok && m3.koszul_H1()->piece_dim(v) ==
                           m3.canonical()->piece_dim(v - 3);
    c.expect(h1_ok, "family 3 H_1 = K_B(-3)");

    StdModules& m1 = mods_for(1, 5);
    ModulePtr h1 = m1.koszul_H1();
    ModulePtr k6 = m1.canonical()->twisted(6, "K_B(6)");
    bool hom_ok = true;
    for (int v = -8; v <= -5; ++v)
      hom_ok = hom_ok && hom_dim(*h1, *k6, v) == h1->piece_dim(v + 12);
    c.expect(hom_ok, "family 1 Hom(H_1, K_B(6)) = H_1(12)");
  }
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<void(Check&)> body;
  };
  std::vector<Criterion> criteria = {
      {1, "closed-form family dimensions match the cubic forms", criterion1},
      {2, "length-4 Betti tables, Koszul degeneration, self-duality", criterion2},
      {3, "Hilbert polynomials, degrees and genera", criterion3},
      {4, "rank oracle agrees with every closed form on random instances", criterion4},
      {5, "graded-module engine reproduces the worked integers", criterion5},
      {6, "dimension estimates and stratum codimension bounds", criterion6},
      {7, "structural identities across modules", criterion7},
  };
  int failed = 0;
  for (auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    std::printf("[%s] criterion %d: %s (%.1fs)\n",
                check.failures == 0 ? "PASS" : "FAIL", cr.id, cr.label, secs);
    if (check.failures) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
