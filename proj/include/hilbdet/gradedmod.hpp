#ifndef HILBDET_GRADEDMOD_HPP
#define HILBDET_GRADEDMOD_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hilbdet/oracle.hpp"

namespace hilbdet {

// ---------------------------------------------------------------------------
// Quotient ring contexts
// ---------------------------------------------------------------------------

// Graded quotient S = k[x_0..x_n]/(ideal), with memoized per-degree
// monomial-complement bases. Normal forms come from the echelon form of the
// ideal's Macaulay matrix in each degree, so every piece computation runs in
// bases of S_v rather than R_v. Safe for shared read-only use across threads.
class QuotientRing {
public:
  QuotientRing(int n_vars, const PrimeField& F, std::vector<DegGen> ideal,
               std::string name);

  static std::shared_ptr<QuotientRing> polynomial_ring(int n_vars,
                                                       const PrimeField& F);

  int n_vars() const { return n_vars_; }
  const PrimeField& field() const { return F_; }
  const std::string& name() const { return name_; }
  const std::vector<DegGen>& ideal() const { return ideal_; }
  const DegreeBasisIndex& index() const { return idx_; }

  // When set, every piece construction cross-checks its dimension and throws
  // DegenerateInstanceError on mismatch (degeneracy tripwire).
  void expect_hilbert(std::function<long long(int)> h) { expected_ = std::move(h); }

  long long dim(int v) const;
  const std::vector<Exponents>& piece_basis(int v) const;

  // Coordinates of (mono * f) on piece_basis(out_deg), where out_deg =
  // deg(mono) + deg(f). Entries appended to `out` with `offset` added.
  void nf_mul_into(const Exponents& mono, const Polynomial& f, int out_deg,
                   std::uint32_t offset, SparseVec& out) const;

  Polynomial lift(const std::vector<std::pair<std::uint32_t, fp_t>>& coords,
                  int v) const;

private:
  struct RingPiece {
    std::vector<Exponents> comp;     // complement monomials = basis
    std::vector<long> comp_pos;      // R_v monomial index -> comp index or -1
    std::unique_ptr<RowReducer> red; // echelon of the ideal rows, may be null
  };
  const RingPiece& piece(int v) const;

  int n_vars_;
  PrimeField F_;
  std::vector<DegGen> ideal_;
  std::string name_;
  DegreeBasisIndex idx_;
  std::function<long long(int)> expected_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<RingPiece>> pieces_;
};

using RingPtr = std::shared_ptr<QuotientRing>;

// ---------------------------------------------------------------------------
// Presentations and graded pieces
// ---------------------------------------------------------------------------

struct RelationColumn {
  int degree;
  std::vector<Polynomial> entries; // one per generator; entry i homogeneous of
                                   // degree (degree - gen_degrees[i]) or zero
};

struct Presentation {
  RingPtr base;
  std::vector<int> gen_degrees;
  std::vector<RelationColumn> relations;
  std::string name;

  void validate() const;
  // M(c): piece v of the twist is piece v+c of M
  Presentation twisted(int c, const std::string& new_name = "") const;
};

struct SyzygyOptions {
  int degree_bound = 0;
  int stab_window = 3;
};

struct KernelGen {
  int degree;
  std::vector<Polynomial> comps; // one per source slot
};

struct SyzygySearch {
  std::vector<KernelGen> gens;
  int degree_bound = 0;
  int stab_window = 3;
  int searched_to = 0;
  bool converged = false;

  std::vector<int> gen_degrees() const {
    std::vector<int> d;
    for (auto& g : gens) d.push_back(g.degree);
    return d;
  }
};

// A finitely presented graded module with memoized graded-piece data.
class Module {
public:
  explicit Module(Presentation pres);

  const Presentation& pres() const { return pres_; }
  const RingPtr& base() const { return pres_.base; }
  const std::string& name() const { return pres_.name; }

  long long piece_dim(int v) const;

  // Coordinates in M_{v + deg r} of r * (k-th basis vector of M_v).
  std::vector<fp_t> mult_basis(int v, long k, const Polynomial& r) const;

  std::shared_ptr<Module> twisted(int c, const std::string& name = "") const;

  // Generators of ker(C1 -> C0) for the presentation cover, searched
  // degreewise (second syzygies of the presented module). Cached; a converged
  // search is reused for any larger bound.
  const SyzygySearch& second_syzygies(const SyzygyOptions& opt) const;
  // Generators of ker(C2cover -> C1) over the second-syzygy generators.
  const SyzygySearch& third_syzygies(const SyzygyOptions& opt) const;

  struct Piece {
    long long cover_dim = 0;
    long long dim = 0;
    std::vector<long long> offsets;       // block start per generator
    std::vector<long long> block_sizes;   // base dim(v - e_i)
    std::unique_ptr<RowReducer> rel;      // echelon of relation span, may be null
    std::vector<std::uint32_t> comp;      // complement cover coordinates
    std::vector<long> comp_pos;           // cover coord -> comp index or -1
  };
  const Piece& piece(int v) const;

  // (gen index, local monomial) of a cover coordinate at degree v
  std::pair<int, const Exponents*> decode_cover(int v, std::uint32_t coord) const;

private:
  Presentation pres_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<Piece>> pieces_;
  mutable std::map<std::pair<int, int>, SyzygySearch> syz2_, syz3_;
};

using ModulePtr = std::shared_ptr<Module>;

// ---------------------------------------------------------------------------
// Kernel-generator search (degreewise syzygies)
// ---------------------------------------------------------------------------

// Map of free graded modules over `base`: column c is an element of the free
// target with generator degrees `target_degrees`, homogeneous of degree
// col_degrees[c]. Finds minimal generators of the kernel module degree by
// degree up to opt.degree_bound, stopping early once opt.stab_window
// consecutive degrees bring no new generator.
struct KernelSearchInput {
  RingPtr base;
  std::vector<int> target_degrees;
  std::vector<int> col_degrees;
  std::vector<std::vector<Polynomial>> cols;
};

SyzygySearch kernel_generators(const KernelSearchInput& in,
                               const SyzygyOptions& opt);

// First syzygies of an ideal given by generators (target = the ring itself).
// Throws when the bound sits below the least possible syzygy degree.
SyzygySearch syzygies_of_ideal(const std::vector<DegGen>& gens, RingPtr ring,
                               const SyzygyOptions& opt);

// ---------------------------------------------------------------------------
// Hom and Ext dimensions of graded pieces
// ---------------------------------------------------------------------------

// dim of degree-v homomorphisms M -> N (same base required): tuples of
// elements m_i in N_{v+e_i} annihilating every relation of M.
long long hom_dim(const Module& M, const Module& N, int v);

struct ExtResult {
  long long value = 0;
  bool converged = true;
  int degree_bound = 0;
  int stab_window = 0;
  int searched_to = 0;
};

// dim of the degree-v piece of Ext^i_base(M, N), i in {1, 2}, computed from
// Hom applied to a truncated free resolution of M obtained via the kernel
// search. The converged flag propagates stabilization of the searches.
ExtResult ext_dim(const Module& M, const Module& N, int i, int v,
                  const SyzygyOptions& opt);

// twists + relation polynomials
std::string presentation_to_json(const Presentation& p);
// value with its (bound, window, converged) provenance
std::string ext_result_to_json(const ExtResult& r);

// ---------------------------------------------------------------------------
// The paper's standard modules for a certified instance
// ---------------------------------------------------------------------------

// Builds and caches the graded modules attached to a certified general
// instance: everything over B = R/I_B needed for the conormal/normal/
// canonical module computations, the A-side modules for h^2, and the plain
// R-side presentations of the ideals.
class StdModules {
public:
  StdModules(CertifiedInstance inst, const PrimeField& F);

  const CertifiedInstance& instance() const { return inst_; }
  const DegreeMatrix& dm() const { return inst_.dm; }
  const PrimeField& field() const { return F_; }

  RingPtr ring_R() const { return R_; }
  RingPtr ring_B() const { return B_; }
  RingPtr ring_A() const; // built on first use

  // names: B, A, I_B, I_B2, I_B_mod_IB2, K_B, N_B, I_AB, H1, I_A_mod_IA2, A_over_A
  ModulePtr by_name(const std::string& name) const;

  ModulePtr B_free() const;        // B as a free rank-1 B-module
  ModulePtr A_over_B() const;      // A = B / I_{A/B}
  ModulePtr I_B_over_R() const;    // the ideal I_B with its Hilbert-Burch relations
  ModulePtr I_B2_over_R() const;   // I_B^2 with its length-2 presentation head
  ModulePtr conormal() const;      // I_B/I_B^2 over B
  ModulePtr canonical() const;     // K_B over B (untwisted)
  ModulePtr normal() const;        // N_B over B via the four-term presentation
  ModulePtr I_AB() const;          // I_{A/B} over B (untwisted)
  ModulePtr koszul_H1() const;     // H_1 over B, relations from the lifted Koszul map
  ModulePtr A_conormal() const;    // I_A/I_A^2 over A
  ModulePtr A_free() const;        // A as a free rank-1 A-module

private:
  CertifiedInstance inst_;
  PrimeField F_;
  RingPtr R_, B_;
  mutable std::mutex mu_;
  mutable RingPtr A_;
  mutable std::map<std::string, ModulePtr> cache_;
};

} // namespace hilbdet

#endif
