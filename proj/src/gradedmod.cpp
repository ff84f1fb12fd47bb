#include "hilbdet/gradedmod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hilbdet {

// ---------------------------------------------------------------------------
// QuotientRing
// ---------------------------------------------------------------------------

QuotientRing::QuotientRing(int n_vars, const PrimeField& F,
                           std::vector<DegGen> ideal, std::string name)
    : n_vars_(n_vars), F_(F), ideal_(std::move(ideal)), name_(std::move(name)),
      idx_(n_vars) {
  for (auto& g : ideal_)
    if (!g.poly.is_homogeneous_of_degree(g.degree))
      throw std::invalid_argument("QuotientRing: inhomogeneous ideal generator");
}

std::shared_ptr<QuotientRing> QuotientRing::polynomial_ring(int n_vars,
                                                            const PrimeField& F) {
  return std::make_shared<QuotientRing>(n_vars, F, std::vector<DegGen>{}, "R");
}

const QuotientRing::RingPiece& QuotientRing::piece(int v) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = pieces_.find(v);
  if (it != pieces_.end()) return *it->second;

  auto rp = std::make_unique<RingPiece>();
  if (v >= 0) {
    const auto& monos = idx_.basis(v);
    bool any = false;
    for (auto& g : ideal_)
      if (!g.poly.is_zero() && g.degree <= v) any = true;
    if (!any) {
      rp->comp = monos;
      rp->comp_pos.resize(monos.size());
      for (std::size_t i = 0; i < monos.size(); ++i) rp->comp_pos[i] = (long)i;
    } else {
      rp->red = std::make_unique<RowReducer>(monos.size(), 0, F_);
      Exponents e(n_vars_);
      for (auto& g : ideal_) {
        if (g.poly.is_zero() || g.degree > v) continue;
        for (const Exponents& mono : idx_.basis(v - g.degree)) {
          SparseVec row;
          row.nz.reserve(g.poly.term_count());
          for (auto& t : g.poly.terms()) {
            for (int k = 0; k < n_vars_; ++k)
              e[k] = static_cast<std::uint16_t>(t.exp[k] + mono[k]);
            row.push(idx_.index_of(e), t.coeff);
          }
          std::sort(row.nz.begin(), row.nz.end());
          rp->red->insert(row);
        }
      }
      auto comp_cols = rp->red->main_complement();
      rp->comp.reserve(comp_cols.size());
      rp->comp_pos.assign(monos.size(), -1);
      for (std::size_t i = 0; i < comp_cols.size(); ++i) {
        rp->comp.push_back(monos[comp_cols[i]]);
        rp->comp_pos[comp_cols[i]] = (long)i;
      }
    }
  }
  if (expected_) {
    long long want = expected_(v);
    if (want != (long long)rp->comp.size()) {
      std::ostringstream os;
      os << "QuotientRing " << name_ << ": degree " << v << " piece has dimension "
         << rp->comp.size() << ", expected " << want << " (degenerate instance)";
      throw DegenerateInstanceError(os.str());
    }
  }
  return *pieces_.emplace(v, std::move(rp)).first->second;
}

long long QuotientRing::dim(int v) const {
  if (v < 0) return 0;
  return (long long)piece(v).comp.size();
}

const std::vector<Exponents>& QuotientRing::piece_basis(int v) const {
  static const std::vector<Exponents> kEmpty;
  if (v < 0) return kEmpty;
  return piece(v).comp;
}

void QuotientRing::nf_mul_into(const Exponents& mono, const Polynomial& f,
                               int out_deg, std::uint32_t offset,
                               SparseVec& out) const {
  if (f.is_zero() || out_deg < 0) return;
  const RingPiece& P = piece(out_deg);
  SparseVec w;
  w.nz.reserve(f.term_count());
  Exponents e(n_vars_);
  for (auto& t : f.terms()) {
    for (int k = 0; k < n_vars_; ++k)
      e[k] = static_cast<std::uint16_t>(t.exp[k] + mono[k]);
    w.push(idx_.index_of(e), t.coeff);
  }
  std::sort(w.nz.begin(), w.nz.end());
  if (!P.red) {
    for (auto& [c, val] : w.nz) out.push(offset + c, val);
    return;
  }
  auto res = P.red->residual(w);
  for (std::size_t c = 0; c < res.size(); ++c) {
    if (res[c] == 0) continue;
    long pos = P.comp_pos[c];
    // residual vanishes on pivot columns, so pos >= 0 here
    out.push(offset + (std::uint32_t)pos, res[c]);
  }
}

Polynomial QuotientRing::lift(
    const std::vector<std::pair<std::uint32_t, fp_t>>& coords, int v) const {
  std::vector<Polynomial::Term> terms;
  const auto& basis = piece_basis(v);
  for (auto& [pos, val] : coords) terms.push_back({basis[pos], val});
  return Polynomial::from_terms(n_vars_, std::move(terms), F_);
}

// ---------------------------------------------------------------------------
// Presentation
// ---------------------------------------------------------------------------

void Presentation::validate() const {
  if (!base) throw std::invalid_argument("Presentation: missing base ring");
  for (auto& col : relations) {
    if (col.entries.size() != gen_degrees.size())
      throw std::invalid_argument("Presentation: relation arity mismatch");
    for (std::size_t i = 0; i < col.entries.size(); ++i) {
      const auto& e = col.entries[i];
      if (e.is_zero()) continue;
      if (e.n_vars() != base->n_vars())
        throw std::invalid_argument("Presentation: variable count mismatch");
      if (!e.is_homogeneous_of_degree(col.degree - gen_degrees[i]))
        throw std::invalid_argument("Presentation: inhomogeneous relation entry");
    }
  }
}

Presentation Presentation::twisted(int c, const std::string& new_name) const {
  Presentation p = *this;
  for (auto& d : p.gen_degrees) d -= c;
  for (auto& col : p.relations) col.degree -= c;
  p.name = new_name.empty() ? name + "(" + std::to_string(c) + ")" : new_name;
  return p;
}

// ---------------------------------------------------------------------------
// Module pieces
// ---------------------------------------------------------------------------

Module::Module(Presentation pres) : pres_(std::move(pres)) { pres_.validate(); }

const Module::Piece& Module::piece(int v) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = pieces_.find(v);
  if (it != pieces_.end()) return *it->second;

  auto P = std::make_unique<Piece>();
  const auto& base = *pres_.base;
  const int ngens = (int)pres_.gen_degrees.size();
  P->offsets.resize(ngens);
  P->block_sizes.resize(ngens);
  long long cover = 0;
  for (int i = 0; i < ngens; ++i) {
    P->offsets[i] = cover;
    P->block_sizes[i] = base.dim(v - pres_.gen_degrees[i]);
    cover += P->block_sizes[i];
  }
  P->cover_dim = cover;
  if (cover == 0) {
    P->dim = 0;
    return *pieces_.emplace(v, std::move(P)).first->second;
  }
  bool any_rel = false;
  for (auto& col : pres_.relations)
    if (v - col.degree >= 0 && base.dim(v - col.degree) > 0) any_rel = true;
  if (!any_rel) {
    P->dim = cover;
    P->comp.resize(cover);
    P->comp_pos.resize(cover);
    for (long long i = 0; i < cover; ++i) {
      P->comp[i] = (std::uint32_t)i;
      P->comp_pos[i] = (long)i;
    }
    return *pieces_.emplace(v, std::move(P)).first->second;
  }
  P->rel = std::make_unique<RowReducer>(cover, 0, base.field());
  for (auto& col : pres_.relations) {
    const int mdeg = v - col.degree;
    if (mdeg < 0) continue;
    for (const Exponents& mono : base.piece_basis(mdeg)) {
      SparseVec row;
      for (int i = 0; i < ngens; ++i) {
        if (col.entries[i].is_zero() || P->block_sizes[i] == 0) continue;
        base.nf_mul_into(mono, col.entries[i], v - pres_.gen_degrees[i],
                         (std::uint32_t)P->offsets[i], row);
      }
      P->rel->insert(row);
    }
  }
  P->comp = P->rel->main_complement();
  P->comp_pos.assign(cover, -1);
  for (std::size_t i = 0; i < P->comp.size(); ++i) P->comp_pos[P->comp[i]] = (long)i;
  P->dim = (long long)P->comp.size();
  return *pieces_.emplace(v, std::move(P)).first->second;
}

long long Module::piece_dim(int v) const { return piece(v).dim; }

std::pair<int, const Exponents*> Module::decode_cover(int v,
                                                      std::uint32_t coord) const {
  const Piece& P = piece(v);
  int i = (int)(std::upper_bound(P.offsets.begin(), P.offsets.end(),
                                 (long long)coord) -
                P.offsets.begin()) -
          1;
  long long local = coord - P.offsets[i];
  const auto& basis = pres_.base->piece_basis(v - pres_.gen_degrees[i]);
  return {i, &basis[(std::size_t)local]};
}

std::vector<fp_t> Module::mult_basis(int v, long k, const Polynomial& r) const {
  const int d = r.degree();
  if (d < 0) {
    // zero polynomial: need an out-degree to size the result; callers skip
    // zero multipliers, so this path only serves genuinely empty products
    return {};
  }
  const int out_v = v + d;
  const Piece& src = piece(v);
  const Piece& dst = piece(out_v);
  std::vector<fp_t> out((std::size_t)dst.dim, 0);
  if (dst.dim == 0) return out;
  auto [i, mono] = decode_cover(v, src.comp[(std::size_t)k]);
  SparseVec cover_vec;
  pres_.base->nf_mul_into(*mono, r, out_v - pres_.gen_degrees[i],
                          (std::uint32_t)dst.offsets[i], cover_vec);
  if (!dst.rel) {
    for (auto& [c, val] : cover_vec.nz) out[(std::size_t)dst.comp_pos[c]] = val;
    return out;
  }
  auto res = dst.rel->residual(cover_vec);
  for (std::size_t c = 0; c < res.size(); ++c) {
    if (res[c] == 0) continue;
    out[(std::size_t)dst.comp_pos[c]] = res[c];
  }
  return out;
}

std::shared_ptr<Module> Module::twisted(int c, const std::string& name) const {
  return std::make_shared<Module>(pres_.twisted(c, name));
}

// ---------------------------------------------------------------------------
// Kernel-generator search
// ---------------------------------------------------------------------------

SyzygySearch kernel_generators(const KernelSearchInput& in,
                               const SyzygyOptions& opt) {
  SyzygySearch out;
  out.degree_bound = opt.degree_bound;
  out.stab_window = opt.stab_window;
  const auto& base = *in.base;
  const PrimeField& F = base.field();
  const int ncols = (int)in.cols.size();
  const int ntgt = (int)in.target_degrees.size();
  if (ncols == 0) {
    out.converged = true;
    return out;
  }
  const int w_start = *std::min_element(in.col_degrees.begin(), in.col_degrees.end());
  int last_new = w_start - 1;
  int w = w_start;
  for (; w <= opt.degree_bound; ++w) {
    std::vector<long long> src_off(ncols), src_sz(ncols);
    long long S = 0;
    for (int c = 0; c < ncols; ++c) {
      src_off[c] = S;
      src_sz[c] = base.dim(w - in.col_degrees[c]);
      S += src_sz[c];
    }
    std::vector<long long> tgt_off(ntgt), tgt_sz(ntgt);
    long long T = 0;
    for (int g = 0; g < ntgt; ++g) {
      tgt_off[g] = T;
      tgt_sz[g] = base.dim(w - in.target_degrees[g]);
      T += tgt_sz[g];
    }
    if (S > 0) {
      // span at degree w of the generators already found
      RowReducer old_red((std::size_t)S, 0, F);
      for (auto& q : out.gens) {
        const int mdeg = w - q.degree;
        if (mdeg < 0) continue;
        for (const Exponents& mono : base.piece_basis(mdeg)) {
          SparseVec row;
          for (int c = 0; c < ncols; ++c) {
            if (q.comps[c].is_zero() || src_sz[c] == 0) continue;
            base.nf_mul_into(mono, q.comps[c], w - in.col_degrees[c],
                             (std::uint32_t)src_off[c], row);
          }
          old_red.insert(row);
        }
      }
      const long long rank_old = (long long)old_red.rank();

      auto build_column = [&](int c, const Exponents& mono) {
        SparseVec col;
        for (int g = 0; g < ntgt; ++g) {
          if (in.cols[c][g].is_zero() || tgt_sz[g] == 0) continue;
          base.nf_mul_into(mono, in.cols[c][g], w - in.target_degrees[g],
                           (std::uint32_t)tgt_off[g], col);
        }
        return col;
      };

      RowReducer map_red((std::size_t)T, 0, F);
      for (int c = 0; c < ncols; ++c) {
        const int mdeg = w - in.col_degrees[c];
        if (mdeg < 0) continue;
        for (const Exponents& mono : base.piece_basis(mdeg))
          map_red.insert(build_column(c, mono));
      }
      const long long dimK = S - (long long)map_red.rank();
      if (dimK < rank_old)
        throw std::logic_error("kernel_generators: span escaped the kernel");
      if (dimK > rank_old) {
        // harvest a kernel basis and keep the vectors that are new modulo the
        // span of everything found so far
        RowReducer aug((std::size_t)T, (std::size_t)S, F);
        long long src_idx = 0;
        for (int c = 0; c < ncols; ++c) {
          const int mdeg = w - in.col_degrees[c];
          if (mdeg < 0) continue;
          for (const Exponents& mono : base.piece_basis(mdeg)) {
            SparseVec row = build_column(c, mono);
            row.push((std::uint32_t)(T + src_idx), 1);
            auto res = aug.insert(row);
            if (res.in_aug) {
              const auto& tail = aug.row_at((std::uint32_t)res.pivot_col);
              SparseVec kappa;
              const long long lead = res.pivot_col - T;
              for (std::size_t j = 0; j < tail.size(); ++j)
                kappa.push((std::uint32_t)(lead + (long long)j), tail[j]);
              auto r2 = old_red.insert(kappa);
              if (r2.pivot_col >= 0) {
                KernelGen gen;
                gen.degree = w;
                gen.comps.assign(ncols, Polynomial::zero(base.n_vars()));
                std::vector<std::vector<std::pair<std::uint32_t, fp_t>>> per_col(ncols);
                for (auto& [coord, val] : kappa.nz) {
                  int c2 = (int)(std::upper_bound(src_off.begin(), src_off.end(),
                                                  (long long)coord) -
                                 src_off.begin()) -
                           1;
                  per_col[c2].push_back(
                      {(std::uint32_t)(coord - src_off[c2]), val});
                }
                for (int c2 = 0; c2 < ncols; ++c2)
                  if (!per_col[c2].empty())
                    gen.comps[c2] =
                        base.lift(per_col[c2], w - in.col_degrees[c2]);
                out.gens.push_back(std::move(gen));
                last_new = w;
              }
            }
            ++src_idx;
          }
        }
      }
    }
    if (w - last_new >= opt.stab_window) {
      out.searched_to = w;
      out.converged = true;
      return out;
    }
  }
  out.searched_to = opt.degree_bound;
  out.converged = (opt.degree_bound - last_new >= opt.stab_window);
  return out;
}

SyzygySearch syzygies_of_ideal(const std::vector<DegGen>& gens, RingPtr ring,
                               const SyzygyOptions& opt) {
  KernelSearchInput in;
  in.base = std::move(ring);
  in.target_degrees = {0};
  for (auto& g : gens) {
    in.col_degrees.push_back(g.degree);
    in.cols.push_back({g.poly});
  }
  if (!in.col_degrees.empty() &&
      opt.degree_bound <
          *std::min_element(in.col_degrees.begin(), in.col_degrees.end()))
    throw std::invalid_argument(
        "syzygies_of_ideal: bound below the least possible syzygy degree");
  return kernel_generators(in, opt);
}

const SyzygySearch& Module::second_syzygies(const SyzygyOptions& opt) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(opt.degree_bound, opt.stab_window);
  auto it = syz2_.find(key);
  if (it != syz2_.end()) return it->second;
  // a converged search is independent of any larger bound
  for (auto& [k, s] : syz2_) {
    if (k.second == opt.stab_window && s.converged &&
        opt.degree_bound >= s.searched_to) {
      SyzygySearch copy = s;
      copy.degree_bound = opt.degree_bound;
      return syz2_.emplace(key, std::move(copy)).first->second;
    }
  }
  KernelSearchInput in;
  in.base = pres_.base;
  in.target_degrees = pres_.gen_degrees;
  for (auto& col : pres_.relations) {
    in.col_degrees.push_back(col.degree);
    in.cols.push_back(col.entries);
  }
  return syz2_.emplace(key, kernel_generators(in, opt)).first->second;
}

const SyzygySearch& Module::third_syzygies(const SyzygyOptions& opt) const {
  const SyzygySearch& s2 = second_syzygies(opt);
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(opt.degree_bound, opt.stab_window);
  auto it = syz3_.find(key);
  if (it != syz3_.end()) return it->second;
  for (auto& [k, s] : syz3_) {
    if (k.second == opt.stab_window && s.converged &&
        opt.degree_bound >= s.searched_to) {
      SyzygySearch copy = s;
      copy.degree_bound = opt.degree_bound;
      return syz3_.emplace(key, std::move(copy)).first->second;
    }
  }
  KernelSearchInput in;
  in.base = pres_.base;
  for (auto& col : pres_.relations) in.target_degrees.push_back(col.degree);
  for (auto& q : s2.gens) {
    in.col_degrees.push_back(q.degree);
    in.cols.push_back(q.comps);
  }
  SyzygySearch s3 = kernel_generators(in, opt);
  s3.converged = s3.converged && s2.converged;
  return syz3_.emplace(key, std::move(s3)).first->second;
}

// ---------------------------------------------------------------------------
// Hom / Ext
// ---------------------------------------------------------------------------

static void require_same_base(const Module& M, const Module& N) {
  if (M.base() != N.base())
    throw std::invalid_argument("hom/ext: modules over different base rings");
}

long long hom_dim(const Module& M, const Module& N, int v) {
  require_same_base(M, N);
  const auto& gens = M.pres().gen_degrees;
  const auto& rels = M.pres().relations;
  std::vector<long long> udim(gens.size());
  long long U = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    udim[i] = N.piece_dim(v + gens[i]);
    U += udim[i];
  }
  if (U == 0) return 0;
  std::vector<long long> coff;
  long long W = 0;
  for (auto& col : rels) {
    coff.push_back(W);
    W += N.piece_dim(v + col.degree);
  }
  if (W == 0) return U;
  RowReducer red((std::size_t)W, 0, N.base()->field());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (long k = 0; k < udim[i]; ++k) {
      SparseVec row;
      for (std::size_t c = 0; c < rels.size(); ++c) {
        const auto& r = rels[c].entries[i];
        if (r.is_zero()) continue;
        auto coords = N.mult_basis(v + gens[i], k, r);
        for (std::size_t p = 0; p < coords.size(); ++p)
          row.push((std::uint32_t)(coff[c] + (long long)p), coords[p]);
      }
      red.insert(row);
    }
  }
  return U - (long long)red.rank();
}

ExtResult ext_dim(const Module& M, const Module& N, int i, int v,
                  const SyzygyOptions& opt) {
  require_same_base(M, N);
  if (i != 1 && i != 2)
    throw std::invalid_argument("ext_dim: only Ext^1 and Ext^2 are supported");
  const PrimeField& F = N.base()->field();
  const auto& gens = M.pres().gen_degrees;
  const auto& rels = M.pres().relations;
  const SyzygySearch& s2 = M.second_syzygies(opt);

  ExtResult out;
  out.degree_bound = opt.degree_bound;
  out.stab_window = opt.stab_window;

  if (i == 1) {
    out.converged = s2.converged;
    out.searched_to = s2.searched_to;
    // cochain block sum_c N_{v+d_c}
    std::vector<long long> coff(rels.size());
    std::vector<long long> cdim(rels.size());
    long long U1 = 0;
    for (std::size_t c = 0; c < rels.size(); ++c) {
      coff[c] = U1;
      cdim[c] = N.piece_dim(v + rels[c].degree);
      U1 += cdim[c];
    }
    if (U1 == 0) return out;
    // cocycles: annihilate every second-syzygy generator
    std::vector<long long> qoff;
    long long QW = 0;
    for (auto& q : s2.gens) {
      qoff.push_back(QW);
      QW += N.piece_dim(v + q.degree);
    }
    long long dimZ = U1;
    if (QW > 0) {
      RowReducer red((std::size_t)QW, 0, F);
      for (std::size_t c = 0; c < rels.size(); ++c) {
        for (long k = 0; k < cdim[c]; ++k) {
          SparseVec row;
          for (std::size_t qi = 0; qi < s2.gens.size(); ++qi) {
            const auto& h = s2.gens[qi].comps[c];
            if (h.is_zero()) continue;
            auto coords = N.mult_basis(v + rels[c].degree, k, h);
            for (std::size_t p = 0; p < coords.size(); ++p)
              row.push((std::uint32_t)(qoff[qi] + (long long)p), coords[p]);
          }
          red.insert(row);
        }
      }
      dimZ = U1 - (long long)red.rank();
    }
    // coboundaries: image of Hom(C0, N)
    RowReducer redI((std::size_t)U1, 0, F);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const long long nd = N.piece_dim(v + gens[g]);
      for (long k = 0; k < nd; ++k) {
        SparseVec row;
        for (std::size_t c = 0; c < rels.size(); ++c) {
          const auto& r = rels[c].entries[g];
          if (r.is_zero() || cdim[c] == 0) continue;
          auto coords = N.mult_basis(v + gens[g], k, r);
          for (std::size_t p = 0; p < coords.size(); ++p)
            row.push((std::uint32_t)(coff[c] + (long long)p), coords[p]);
        }
        redI.insert(row);
      }
    }
    out.value = dimZ - (long long)redI.rank();
    return out;
  }

  // i == 2
  const SyzygySearch& s3 = M.third_syzygies(opt);
  out.converged = s2.converged && s3.converged;
  out.searched_to = std::max(s2.searched_to, s3.searched_to);
  std::vector<long long> qoff(s2.gens.size()), qdim(s2.gens.size());
  long long U2 = 0;
  for (std::size_t q = 0; q < s2.gens.size(); ++q) {
    qoff[q] = U2;
    qdim[q] = N.piece_dim(v + s2.gens[q].degree);
    U2 += qdim[q];
  }
  if (U2 == 0) return out;
  std::vector<long long> roff;
  long long RW = 0;
  for (auto& r3 : s3.gens) {
    roff.push_back(RW);
    RW += N.piece_dim(v + r3.degree);
  }
  long long dimZ = U2;
  if (RW > 0) {
    RowReducer red((std::size_t)RW, 0, F);
    for (std::size_t q = 0; q < s2.gens.size(); ++q) {
      for (long k = 0; k < qdim[q]; ++k) {
        SparseVec row;
        for (std::size_t r = 0; r < s3.gens.size(); ++r) {
          const auto& h = s3.gens[r].comps[q];
          if (h.is_zero()) continue;
          auto coords = N.mult_basis(v + s2.gens[q].degree, k, h);
          for (std::size_t p = 0; p < coords.size(); ++p)
            row.push((std::uint32_t)(roff[r] + (long long)p), coords[p]);
        }
        red.insert(row);
      }
    }
    dimZ = U2 - (long long)red.rank();
  }
  RowReducer redI((std::size_t)U2, 0, F);
  for (std::size_t c = 0; c < rels.size(); ++c) {
    const long long nd = N.piece_dim(v + rels[c].degree);
    for (long k = 0; k < nd; ++k) {
      SparseVec row;
      for (std::size_t q = 0; q < s2.gens.size(); ++q) {
        const auto& h = s2.gens[q].comps[c];
        if (h.is_zero() || qdim[q] == 0) continue;
        auto coords = N.mult_basis(v + rels[c].degree, k, h);
        for (std::size_t p = 0; p < coords.size(); ++p)
          row.push((std::uint32_t)(qoff[q] + (long long)p), coords[p]);
      }
      redI.insert(row);
    }
  }
  out.value = dimZ - (long long)redI.rank();
  return out;
}

std::string presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["base"] = p.base->name();
  j["gen_degrees"] = p.gen_degrees;
  nlohmann::json rels = nlohmann::json::array();
  for (auto& col : p.relations) {
    nlohmann::json jc;
    jc["degree"] = col.degree;
    nlohmann::json entries = nlohmann::json::array();
    for (auto& e : col.entries) {
      nlohmann::json terms = nlohmann::json::array();
      for (auto& t : e.terms()) terms.push_back({{"e", t.exp}, {"c", t.coeff}});
      entries.push_back(terms);
    }
    jc["entries"] = entries;
    rels.push_back(jc);
  }
  j["relations"] = rels;
  return j.dump();
}

std::string ext_result_to_json(const ExtResult& r) {
  nlohmann::json j;
  j["value"] = r.value;
  j["converged"] = r.converged;
  j["bound"] = r.degree_bound;
  j["window"] = r.stab_window;
  j["searched_to"] = r.searched_to;
  return j.dump();
}

// ---------------------------------------------------------------------------
// StdModules
// ---------------------------------------------------------------------------

StdModules::StdModules(CertifiedInstance inst, const PrimeField& F)
    : inst_(std::move(inst)), F_(F) {
  const int nv = inst_.dm.n_vars();
  R_ = QuotientRing::polynomial_ring(nv, F_);
  B_ = std::make_shared<QuotientRing>(nv, F_, inst_.gens_IB, "B");
  BettiTable hb = hilbert_burch_table(inst_.dm);
  B_->expect_hilbert([hb](int v) { return hilbert_function(hb, v); });
}

RingPtr StdModules::ring_A() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!A_) {
    A_ = std::make_shared<QuotientRing>(inst_.dm.n_vars(), F_, inst_.gens_IA, "A");
    BettiTable gn = gulliksen_negard_table(inst_.dm);
    A_->expect_hilbert([gn](int v) { return hilbert_function(gn, v); });
  }
  return A_;
}

namespace {

Polynomial zero_of(int nv) { return Polynomial::zero(nv); }

} // namespace

ModulePtr StdModules::B_free() const { return by_name("B"); }
ModulePtr StdModules::A_over_B() const { return by_name("A"); }
ModulePtr StdModules::I_B_over_R() const { return by_name("I_B"); }
ModulePtr StdModules::I_B2_over_R() const { return by_name("I_B2"); }
ModulePtr StdModules::conormal() const { return by_name("I_B_mod_IB2"); }
ModulePtr StdModules::canonical() const { return by_name("K_B"); }
ModulePtr StdModules::normal() const { return by_name("N_B"); }
ModulePtr StdModules::I_AB() const { return by_name("I_AB"); }
ModulePtr StdModules::koszul_H1() const { return by_name("H1"); }
ModulePtr StdModules::A_conormal() const { return by_name("I_A_mod_IA2"); }
ModulePtr StdModules::A_free() const { return by_name("A_over_A"); }

ModulePtr StdModules::by_name(const std::string& name) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
  }
  const DegreeMatrix& dm = inst_.dm;
  const int t = dm.t();
  const int nv = dm.n_vars();
  const int s = det_degree(dm);
  auto [n1, n2] = hb_twists(dm);
  const HomogeneousMatrix& Nmat = inst_.N;
  const HomogeneousMatrix& Amat = inst_.A;
  Presentation p;
  p.name = name;

  if (name == "B") {
    p.base = B_;
    p.gen_degrees = {0};
  } else if (name == "A") {
    p.base = B_;
    p.gen_degrees = {0};
    for (auto& g : inst_.gens_IA) {
      if (g.poly.is_zero()) continue;
      p.relations.push_back({g.degree, {g.poly}});
    }
  } else if (name == "A_over_A") {
    p.base = ring_A();
    p.gen_degrees = {0};
  } else if (name == "I_B") {
    p.base = R_;
    p.gen_degrees = n1;
    for (int j = 0; j < t - 1; ++j) {
      RelationColumn col;
      col.degree = n2[j];
      for (int i = 0; i < t; ++i) col.entries.push_back(Nmat.at(j, i));
      p.relations.push_back(std::move(col));
    }
  } else if (name == "I_B2") {
    p.base = R_;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < t; ++i)
      for (int k = i; k < t; ++k) {
        pairs.emplace_back(i, k);
        p.gen_degrees.push_back(n1[i] + n1[k]);
      }
    auto slot = [&](int i, int k) {
      if (i > k) std::swap(i, k);
      return (int)(std::find(pairs.begin(), pairs.end(), std::make_pair(i, k)) -
                   pairs.begin());
    };
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t - 1; ++j) {
        RelationColumn col;
        col.degree = n1[i] + n2[j];
        col.entries.assign(pairs.size(), zero_of(nv));
        for (int k = 0; k < t; ++k)
          col.entries[slot(i, k)] =
              add(col.entries[slot(i, k)], Nmat.at(j, k), F_);
        p.relations.push_back(std::move(col));
      }
  } else if (name == "I_B_mod_IB2") {
    p.base = B_;
    p.gen_degrees = n1;
    for (int j = 0; j < t - 1; ++j) {
      RelationColumn col;
      col.degree = n2[j];
      for (int i = 0; i < t; ++i) col.entries.push_back(Nmat.at(j, i));
      p.relations.push_back(std::move(col));
    }
  } else if (name == "K_B") {
    // K_B(n+1): generators -n2_j, relations the columns of N; untwist after
    p.base = B_;
    for (int j = 0; j < t - 1; ++j) p.gen_degrees.push_back(-n2[j]);
    for (int i = 0; i < t; ++i) {
      RelationColumn col;
      col.degree = -n1[i];
      for (int j = 0; j < t - 1; ++j) col.entries.push_back(Nmat.at(j, i));
      p.relations.push_back(std::move(col));
    }
    p = p.twisted(-(dm.n + 1), "K_B");
  } else if (name == "N_B" || name == "I_AB") {
    // cover Hom(F, G_t): generator (j,i) in degree b_i - a_j
    p.base = B_;
    for (int j = 0; j < t - 1; ++j)
      for (int i = 0; i < t; ++i) p.gen_degrees.push_back(dm.b[i] - dm.a[j]);
    auto gen_slot = [&](int j, int i) { return j * t + i; };
    for (int i = 0; i < t; ++i)
      for (int k = 0; k < t; ++k) {
        RelationColumn col;
        col.degree = dm.b[k] - dm.b[i];
        col.entries.assign((t - 1) * t, zero_of(nv));
        for (int j = 0; j < t - 1; ++j) col.entries[gen_slot(j, k)] = Nmat.at(j, i);
        p.relations.push_back(std::move(col));
      }
    const int lmax = (name == "N_B") ? t - 1 : t;
    for (int j = 0; j < t - 1; ++j)
      for (int l = 0; l < lmax; ++l) {
        RelationColumn col;
        col.degree = dm.a[l] - dm.a[j];
        col.entries.assign((t - 1) * t, zero_of(nv));
        for (int i = 0; i < t; ++i) col.entries[gen_slot(j, i)] = Amat.at(l, i);
        p.relations.push_back(std::move(col));
      }
    if (name == "I_AB") p = p.twisted(-s, "I_AB");
  } else if (name == "H1") {
    // cover (+)_j B(-n2_j); relations lift the Koszul boundaries g_i e_k -
    // g_k e_i through the transposed matrix, solved degreewise
    p.base = B_;
    p.gen_degrees = n2;
    const auto& idx = R_->index();
    for (int i = 0; i < t; ++i)
      for (int k = i + 1; k < t; ++k) {
        const int cdeg = n1[i] + n1[k];
        // unknowns: coefficients of x_j in R_{cdeg - n2_j}
        std::vector<std::vector<fp_t>> cols;
        std::vector<std::pair<int, Exponents>> labels;
        std::vector<long long> eq_off(t);
        long long eq_dim = 0;
        for (int i2 = 0; i2 < t; ++i2) {
          eq_off[i2] = eq_dim;
          eq_dim += ring_piece_dim(nv, cdeg - n1[i2]);
        }
        for (int j = 0; j < t - 1; ++j) {
          for (const Exponents& mono : idx.basis(cdeg - n2[j])) {
            std::vector<fp_t> colv((std::size_t)eq_dim, 0);
            Exponents e(nv);
            for (int i2 = 0; i2 < t; ++i2) {
              const Polynomial& entry = Nmat.at(j, i2);
              if (entry.is_zero()) continue;
              for (auto& term : entry.terms()) {
                for (int kk = 0; kk < nv; ++kk)
                  e[kk] = static_cast<std::uint16_t>(term.exp[kk] + mono[kk]);
                colv[(std::size_t)(eq_off[i2] + idx.index_of(e))] =
                    F_.add(colv[(std::size_t)(eq_off[i2] + idx.index_of(e))],
                           term.coeff);
              }
            }
            cols.push_back(std::move(colv));
            labels.emplace_back(j, mono);
          }
        }
        std::vector<fp_t> rhs((std::size_t)eq_dim, 0);
        auto put = [&](int slot, const Polynomial& f, bool negate) {
          for (auto& term : f.terms()) {
            fp_t val = negate ? F_.neg(term.coeff) : term.coeff;
            std::size_t pos = (std::size_t)(eq_off[slot] + idx.index_of(term.exp));
            rhs[pos] = F_.add(rhs[pos], val);
          }
        };
        put(k, inst_.gens_IB[i].poly, false);
        put(i, inst_.gens_IB[k].poly, true);
        auto sol = solve_columns(cols, rhs, F_);
        if (!sol)
          throw std::logic_error("H1: Koszul boundary failed to lift");
        RelationColumn col;
        col.degree = cdeg;
        col.entries.assign(t - 1, zero_of(nv));
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
          if ((*sol)[ci] == 0) continue;
          auto [j, mono] = labels[ci];
          col.entries[j] = add(col.entries[j],
                               Polynomial::monomial(mono, (*sol)[ci]), F_);
        }
        p.relations.push_back(std::move(col));
      }
  } else if (name == "I_A_mod_IA2") {
    // generators: the cofactors, with the trace-balanced relation columns
    p.base = ring_A();
    auto gen_slot = [&](int j, int i) { return j * t + i; };
    for (int j = 0; j < t; ++j)
      for (int i = 0; i < t; ++i) p.gen_degrees.push_back(s + dm.b[i] - dm.a[j]);
    for (int i = 0; i < t; ++i)
      for (int k = 0; k < t; ++k) {
        if (i == k) continue;
        RelationColumn col;
        col.degree = s + dm.b[k] - dm.b[i];
        col.entries.assign(t * t, zero_of(nv));
        for (int j = 0; j < t; ++j) col.entries[gen_slot(j, k)] = Amat.at(j, i);
        p.relations.push_back(std::move(col));
      }
    for (int j = 0; j < t; ++j)
      for (int l = 0; l < t; ++l) {
        if (j == l) continue;
        RelationColumn col;
        col.degree = s + dm.a[l] - dm.a[j];
        col.entries.assign(t * t, zero_of(nv));
        for (int i = 0; i < t; ++i) col.entries[gen_slot(j, i)] = Amat.at(l, i);
        p.relations.push_back(std::move(col));
      }
    for (int i = 0; i < t; ++i) {
      // eta(E^FF_ii, E^GG_00): row 0 of A enters positively, column i leaves
      RelationColumn col;
      col.degree = s;
      col.entries.assign(t * t, zero_of(nv));
      for (int c = 0; c < t; ++c)
        col.entries[gen_slot(0, c)] = add(col.entries[gen_slot(0, c)],
                                          Amat.at(0, c), F_);
      for (int j = 0; j < t; ++j)
        col.entries[gen_slot(j, i)] =
            sub(col.entries[gen_slot(j, i)], Amat.at(j, i), F_);
      p.relations.push_back(std::move(col));
    }
    for (int l = 1; l < t; ++l) {
      RelationColumn col;
      col.degree = s;
      col.entries.assign(t * t, zero_of(nv));
      for (int i = 0; i < t; ++i) {
        col.entries[gen_slot(l, i)] =
            add(col.entries[gen_slot(l, i)], Amat.at(l, i), F_);
        col.entries[gen_slot(0, i)] =
            sub(col.entries[gen_slot(0, i)], Amat.at(0, i), F_);
      }
      p.relations.push_back(std::move(col));
    }
  } else {
    throw std::invalid_argument("StdModules: unknown module name " + name);
  }

  auto mod = std::make_shared<Module>(std::move(p));
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(name, std::move(mod)).first->second;
}

} // namespace hilbdet
