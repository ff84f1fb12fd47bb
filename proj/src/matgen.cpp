#include "hilbdet/matgen.hpp"

#include <random>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace hilbdet {

HomogeneousMatrix random_general(const DegreeMatrix& dm, const PrimeField& F,
                                 std::uint64_t seed) {
  dm.validate();
  const int t = dm.t();
  const int nv = dm.n_vars();
  std::mt19937_64 rng(seed);
  HomogeneousMatrix M;
  M.dm = dm;
  M.row_labels.resize(t);
  for (int j = 0; j < t; ++j) M.row_labels[j] = j;
  M.entries.assign(t, std::vector<Polynomial>(t, Polynomial::zero(nv)));
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < t; ++i) {
      const int u = dm.a[j] - dm.b[i];
      if (u <= 0) continue; // minimality: zero at a_j <= b_i
      std::vector<Polynomial::Term> terms;
      for (const Exponents& e : monomial_basis(nv, u)) {
        fp_t c = static_cast<fp_t>(rng() % F.p());
        if (c != 0) terms.push_back({e, c});
      }
      M.entries[j][i] = Polynomial::from_terms(nv, std::move(terms), F);
    }
  return M;
}

HomogeneousMatrix delete_row(const HomogeneousMatrix& A, int j) {
  const int r = A.rows();
  if (j == -1) j = r;
  if (j < 1 || j > r) throw std::out_of_range("delete_row: row index out of range");
  HomogeneousMatrix N;
  N.dm = A.dm;
  for (int k = 0; k < r; ++k) {
    if (k == j - 1) continue;
    N.row_labels.push_back(A.row_labels[k]);
    N.entries.push_back(A.entries[k]);
  }
  return N;
}

HomogeneousMatrix adjoin_row(const HomogeneousMatrix& N,
                             const std::vector<Polynomial>& g,
                             const PrimeField&) {
  const int t = N.cols();
  if ((int)g.size() != t)
    throw std::invalid_argument("adjoin_row: need one entry per column");
  if (N.rows() + 1 != t)
    throw std::invalid_argument("adjoin_row: matrix is not (t-1) x t");
  const int at = N.dm.a[t - 1];
  for (int i = 0; i < t; ++i) {
    const int want = at - N.dm.b[i];
    if (want > 0) {
      if (!g[i].is_homogeneous_of_degree(want))
        throw std::invalid_argument("adjoin_row: entry degree mismatch");
    } else if (!g[i].is_zero()) {
      throw std::invalid_argument("adjoin_row: entry must vanish when a_t <= b_i");
    }
  }
  HomogeneousMatrix A;
  A.dm = N.dm;
  A.row_labels = N.row_labels;
  A.row_labels.push_back(t - 1);
  A.entries = N.entries;
  A.entries.push_back(g);
  return A;
}

namespace {

// Laplace expansion with shared sub-minor memoization across index subsets.
class MinorEngine {
public:
  MinorEngine(const HomogeneousMatrix& M, const PrimeField& F) : M_(M), F_(F) {}

  // rows/cols as bitmasks of equal popcount
  const Polynomial& det(std::uint32_t rows, std::uint32_t cols) {
    std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Polynomial result(M_.dm.n_vars());
    if (rows == 0) {
      result = Polynomial::constant(M_.dm.n_vars(), 1);
    } else {
      const int r = lowest_bit(rows);
      const std::uint32_t rest_rows = rows & (rows - 1);
      int pos = 0;
      for (int c = 0; c < M_.cols(); ++c) {
        if (!(cols & (1u << c))) continue;
        const int sign_pos = pos++;
        const Polynomial& e = M_.at(r, c);
        if (e.is_zero()) continue;
        Polynomial sub = det(rest_rows, cols & ~(1u << c));
        Polynomial prod = mul(e, sub, F_);
        if (sign_pos % 2) prod = scale(prod, F_.neg(1), F_);
        result = add(result, prod, F_);
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

private:
  static int lowest_bit(std::uint32_t m) {
    int i = 0;
    while (!(m & 1u)) {
      m >>= 1;
      ++i;
    }
    return i;
  }
  const HomogeneousMatrix& M_;
  const PrimeField& F_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

void subsets(int n, int k, int start, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (k - (int)cur.size()); ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::uint32_t mask_of(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= 1u << i;
  return m;
}

} // namespace

std::vector<Minor> minors(const HomogeneousMatrix& M, int k, const PrimeField& F) {
  if (k < 0 || k > std::min(M.rows(), M.cols()))
    throw std::invalid_argument("minors: size out of range");
  MinorEngine eng(M, F);
  std::vector<std::vector<int>> row_sets, col_sets;
  std::vector<int> cur;
  subsets(M.rows(), k, 0, cur, row_sets);
  subsets(M.cols(), k, 0, cur, col_sets);
  std::vector<Minor> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (auto& rs : row_sets)
    for (auto& cs : col_sets) {
      Minor m;
      m.rows = rs;
      m.cols = cs;
      m.degree = 0;
      for (int j : rs) m.degree += M.dm.a[M.row_labels[j]];
      for (int i : cs) m.degree -= M.dm.b[i];
      m.poly = eng.det(mask_of(rs), mask_of(cs));
      out.push_back(std::move(m));
    }
  return out;
}

Polynomial determinant(const HomogeneousMatrix& A, const PrimeField& F) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("determinant: matrix not square");
  MinorEngine eng(A, F);
  const std::uint32_t full = (1u << A.rows()) - 1;
  return eng.det(full, full);
}

std::vector<std::vector<Polynomial>> cofactor_matrix(const HomogeneousMatrix& A,
                                                     const PrimeField& F) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("cofactor_matrix: matrix not square");
  const int t = A.rows();
  MinorEngine eng(A, F);
  const std::uint32_t full = (1u << t) - 1;
  std::vector<std::vector<Polynomial>> cof(
      t, std::vector<Polynomial>(t, Polynomial::zero(A.dm.n_vars())));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      Polynomial m = eng.det(full & ~(1u << j), full & ~(1u << i));
      cof[i][j] = ((i + j) % 2) ? scale(m, F.neg(1), F) : m;
    }
  return cof;
}

std::vector<Polynomial> signed_maximal_minors(const HomogeneousMatrix& N,
                                              const PrimeField& F) {
  const int t = N.cols();
  if (N.rows() + 1 != t)
    throw std::invalid_argument("signed_maximal_minors: matrix is not (t-1) x t");
  MinorEngine eng(N, F);
  const std::uint32_t all_rows = (1u << (t - 1)) - 1;
  const std::uint32_t all_cols = (1u << t) - 1;
  std::vector<Polynomial> out;
  out.reserve(t);
  for (int i = 0; i < t; ++i) {
    Polynomial m = eng.det(all_rows, all_cols & ~(1u << i));
    out.push_back((i % 2) ? scale(m, F.neg(1), F) : m);
  }
  return out;
}

std::string matrix_to_json(const HomogeneousMatrix& M) {
  nlohmann::json j;
  j["b"] = M.dm.b;
  j["a"] = M.dm.a;
  j["n"] = M.dm.n;
  j["row_labels"] = M.row_labels;
  nlohmann::json rows = nlohmann::json::array();
  for (auto& row : M.entries) {
    nlohmann::json jr = nlohmann::json::array();
    for (auto& e : row) {
      nlohmann::json terms = nlohmann::json::array();
      for (auto& t : e.terms()) {
        nlohmann::json term;
        term["e"] = t.exp;
        term["c"] = t.coeff;
        terms.push_back(term);
      }
      jr.push_back(terms);
    }
    rows.push_back(jr);
  }
  j["entries"] = rows;
  return j.dump();
}

HomogeneousMatrix matrix_from_json(const std::string& text, const PrimeField& F) {
  nlohmann::json j = nlohmann::json::parse(text);
  HomogeneousMatrix M;
  M.dm.b = j.at("b").get<std::vector<int>>();
  M.dm.a = j.at("a").get<std::vector<int>>();
  M.dm.n = j.value("n", 5);
  M.dm.validate();
  M.row_labels = j.at("row_labels").get<std::vector<int>>();
  const int nv = M.dm.n_vars();
  for (auto& jr : j.at("entries")) {
    std::vector<Polynomial> row;
    for (auto& je : jr) {
      std::vector<Polynomial::Term> terms;
      for (auto& jt : je) {
        Polynomial::Term t;
        t.exp = jt.at("e").get<Exponents>();
        t.coeff = jt.at("c").get<fp_t>();
        terms.push_back(std::move(t));
      }
      row.push_back(Polynomial::from_terms(nv, std::move(terms), F));
    }
    M.entries.push_back(std::move(row));
  }
  if ((int)M.entries.size() != M.rows())
    throw std::invalid_argument("matrix_from_json: row count mismatch");
  for (int jrow = 0; jrow < M.rows(); ++jrow) {
    if ((int)M.entries[jrow].size() != M.cols())
      throw std::invalid_argument("matrix_from_json: column count mismatch");
    for (int i = 0; i < M.cols(); ++i) {
      const int want = M.entry_degree(jrow, i);
      const Polynomial& e = M.at(jrow, i);
      if (want > 0 ? !e.is_homogeneous_of_degree(want) : !e.is_zero())
        throw std::invalid_argument("matrix_from_json: entry degree violation");
    }
  }
  return M;
}

} // namespace hilbdet
