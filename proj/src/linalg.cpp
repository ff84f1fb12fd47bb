#include "hilbdet/linalg.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace hilbdet {

RowReducer::RowReducer(std::size_t main_cols, std::size_t aug_cols,
                       const PrimeField& F)
    : F_(F),
      main_cols_(main_cols),
      width_(main_cols + aug_cols),
      pivot_of_col_(width_, -1),
      scratch_(width_, 0) {}

void RowReducer::load(const SparseVec& row,
                      std::vector<std::uint64_t>& scratch) const {
  std::fill(scratch.begin(), scratch.end(), 0);
  for (auto& [c, v] : row.nz) scratch[c] = v;
}

long RowReducer::reduce(std::vector<std::uint64_t>& scratch,
                        std::uint32_t start, bool stop_at_lead) const {
  const fp_t p = F_.p();
  long lead = -1;
  for (std::size_t c = start; c < width_; ++c) {
    fp_t x = static_cast<fp_t>(scratch[c] % p);
    scratch[c] = x;
    if (x == 0) continue;
    long r = pivot_of_col_[c];
    if (r < 0) {
      if (lead < 0) lead = static_cast<long>(c);
      if (stop_at_lead) break;
      continue;
    }
    const PivotRow& pr = rows_[static_cast<std::size_t>(r)];
    const std::uint64_t m = p - x; // add m*row so slot c becomes 0 mod p
    const fp_t* t = pr.tail.data();
    std::uint64_t* s = scratch.data() + c;
    const std::size_t n = pr.tail.size();
    for (std::size_t j = 0; j < n; ++j) s[j] += m * t[j];
  }
  if (stop_at_lead && lead >= 0) {
    for (std::size_t c = static_cast<std::size_t>(lead); c < width_; ++c)
      scratch[c] %= p;
  }
  return lead;
}

RowReducer::InsertResult RowReducer::commit(std::vector<std::uint64_t>& scratch,
                                            long lead) {
  if (lead < 0) return {-1, false};
  const std::size_t c = static_cast<std::size_t>(lead);
  PivotRow pr;
  pr.col = static_cast<std::uint32_t>(c);
  pr.tail.resize(width_ - c);
  const fp_t s = F_.inv(static_cast<fp_t>(scratch[c]));
  for (std::size_t j = c; j < width_; ++j)
    pr.tail[j - c] = F_.mul(static_cast<fp_t>(scratch[j]), s);
  pivot_of_col_[c] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(pr));
  bool in_aug = c >= main_cols_;
  if (!in_aug) ++main_rank_;
  return {lead, in_aug};
}

RowReducer::InsertResult RowReducer::insert(const SparseVec& row) {
  if (row.nz.empty()) return {-1, false};
  load(row, scratch_);
  long lead = reduce(scratch_, row.nz.front().first, true);
  return commit(scratch_, lead);
}

RowReducer::InsertResult RowReducer::insert_dense(const std::vector<fp_t>& row) {
  if (row.size() != width_) throw std::invalid_argument("RowReducer: width mismatch");
  std::copy(row.begin(), row.end(), scratch_.begin());
  long lead = reduce(scratch_, 0, true);
  return commit(scratch_, lead);
}

std::vector<fp_t> RowReducer::residual(const SparseVec& row) const {
  std::vector<std::uint64_t> scratch(width_, 0);
  for (auto& [c, v] : row.nz) scratch[c] = v;
  std::uint32_t start = row.nz.empty() ? static_cast<std::uint32_t>(width_)
                                       : row.nz.front().first;
  reduce(scratch, start, false);
  std::vector<fp_t> out(width_);
  const fp_t p = F_.p();
  for (std::size_t c = 0; c < width_; ++c)
    out[c] = static_cast<fp_t>(scratch[c] % p);
  return out;
}

bool RowReducer::in_row_space(const SparseVec& row) const {
  auto res = residual(row);
  for (fp_t v : res)
    if (v != 0) return false;
  return true;
}

const std::vector<fp_t>& RowReducer::row_at(std::uint32_t col) const {
  long r = pivot_of_col_[col];
  if (r < 0) throw std::out_of_range("RowReducer: no pivot at column");
  return rows_[static_cast<std::size_t>(r)].tail;
}

std::vector<std::uint32_t> RowReducer::main_complement() const {
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c < main_cols_; ++c)
    if (pivot_of_col_[c] < 0) out.push_back(static_cast<std::uint32_t>(c));
  return out;
}

void ExactMatrix::set(std::size_t i, std::size_t j, fp_t v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix::set");
  auto& nz = data_[i].nz;
  auto it = std::lower_bound(nz.begin(), nz.end(), j,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != nz.end() && it->first == j) {
    if (v == 0) nz.erase(it);
    else it->second = v;
  } else if (v != 0) {
    nz.insert(it, {static_cast<std::uint32_t>(j), v});
  }
}

fp_t ExactMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix::get");
  for (auto& [c, v] : data_[i].nz)
    if (c == j) return v;
  return 0;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [c, v] : data_[i].nz)
      t.data_[c].nz.emplace_back(static_cast<std::uint32_t>(i), v);
  return t;
}

std::size_t rank(const ExactMatrix& m, const PrimeField& F) {
  RowReducer red(m.cols(), 0, F);
  for (std::size_t i = 0; i < m.rows(); ++i) red.insert(m.row(i));
  return red.rank();
}

std::vector<std::vector<fp_t>> kernel_basis(const ExactMatrix& m,
                                            const PrimeField& F) {
  // kernel vectors are combinations of columns summing to zero: eliminate the
  // columns with an identity augmentation and harvest rows that die on the
  // main block
  ExactMatrix t = m.transposed(); // row i of t = column i of m
  RowReducer red(m.rows(), m.cols(), F);
  std::vector<std::vector<fp_t>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVec v = t.row(j);
    v.push(static_cast<std::uint32_t>(m.rows() + j), 1);
    auto res = red.insert(v);
    if (res.pivot_col >= 0 && res.in_aug) {
      const auto& tail = red.row_at(static_cast<std::uint32_t>(res.pivot_col));
      std::vector<fp_t> k(m.cols(), 0);
      std::size_t base = static_cast<std::size_t>(res.pivot_col) - m.rows();
      for (std::size_t j2 = 0; j2 < tail.size(); ++j2) k[base + j2] = tail[j2];
      out.push_back(std::move(k));
    }
  }
  return out;
}

std::optional<std::vector<fp_t>> solve_columns(
    const std::vector<std::vector<fp_t>>& columns, const std::vector<fp_t>& rhs,
    const PrimeField& F) {
  const std::size_t m = rhs.size();
  const std::size_t n = columns.size();
  RowReducer red(m, n, F);
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != m)
      throw std::invalid_argument("solve_columns: ragged columns");
    SparseVec v;
    for (std::size_t i = 0; i < m; ++i) v.push(static_cast<std::uint32_t>(i), columns[j][i]);
    v.push(static_cast<std::uint32_t>(m + j), 1);
    red.insert(v);
  }
  SparseVec b;
  for (std::size_t i = 0; i < m; ++i) b.push(static_cast<std::uint32_t>(i), rhs[i]);
  auto res = red.residual(b);
  for (std::size_t i = 0; i < m; ++i)
    if (res[i] != 0) return std::nullopt; // rhs outside the column span
  std::vector<fp_t> x(n, 0);
  // residual = rhs - sum c_j * (col_j | e_j): aug part holds -x
  for (std::size_t j = 0; j < n; ++j) x[j] = F.neg(res[m + j]);
  return x;
}

} // namespace hilbdet
