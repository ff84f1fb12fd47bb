#ifndef HILBDET_LINALG_HPP
#define HILBDET_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hilbdet/field.hpp"

namespace hilbdet {

// Sparse vector: (column, value) pairs with strictly increasing columns and
// nonzero values.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, fp_t>> nz;

  void push(std::uint32_t col, fp_t val) {
    if (val != 0) nz.emplace_back(col, val);
  }
};

// Incremental row-echelon eliminator over F_p.
//
// Rows live in a space of `main_cols + aug_cols` coordinates. The optional
// augmentation block records combinations: inserting rows of the form
// (image | unit) makes every row whose image part dies under reduction
// surface its kernel combination in the augmentation block.
//
// Pivot rows are stored dense from their pivot column on, normalized to a
// leading 1. Incoming rows are reduced in a 64-bit accumulator; products stay
// below 2^30 so reductions mod p are deferred to the very end of a pass.
class RowReducer {
public:
  RowReducer(std::size_t main_cols, std::size_t aug_cols, const PrimeField& F);

  struct InsertResult {
    long pivot_col;  // -1 if the row vanished entirely
    bool in_aug;     // pivot fell inside the augmentation block
  };

  InsertResult insert(const SparseVec& row);
  InsertResult insert_dense(const std::vector<fp_t>& row);

  // Reduces without inserting; the returned vector has zeros at every pivot
  // column, i.e. it is the normal form of `row` modulo the row space.
  std::vector<fp_t> residual(const SparseVec& row) const;
  bool in_row_space(const SparseVec& row) const;

  std::size_t main_cols() const { return main_cols_; }
  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t main_rank() const { return main_rank_; }

  bool has_pivot(std::uint32_t col) const { return pivot_of_col_[col] >= 0; }

  // Pivot row at column `col` (must exist): values from `col` to width-1,
  // leading entry 1.
  const std::vector<fp_t>& row_at(std::uint32_t col) const;

  // Non-pivot columns of the main block, increasing.
  std::vector<std::uint32_t> main_complement() const;

private:
  struct PivotRow {
    std::uint32_t col;
    std::vector<fp_t> tail; // tail[0] == 1
  };

  void load(const SparseVec& row, std::vector<std::uint64_t>& scratch) const;
  // Reduces scratch in place; returns first nonzero column or -1.
  long reduce(std::vector<std::uint64_t>& scratch, std::uint32_t start,
              bool stop_at_lead) const;
  InsertResult commit(std::vector<std::uint64_t>& scratch, long lead);

  PrimeField F_;
  std::size_t main_cols_, width_;
  std::size_t main_rank_ = 0;
  std::vector<PivotRow> rows_;
  std::vector<long> pivot_of_col_;
  std::vector<std::uint64_t> scratch_;
};

// Spec-facing exact matrix: sparse rows over F_p.
class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t i, std::size_t j, fp_t v);
  fp_t get(std::size_t i, std::size_t j) const;
  const SparseVec& row(std::size_t i) const { return data_[i]; }
  SparseVec& row(std::size_t i) { return data_[i]; }

  ExactMatrix transposed() const;

private:
  std::size_t rows_, cols_;
  std::vector<SparseVec> data_;
};

std::size_t rank(const ExactMatrix& m, const PrimeField& F);

// Basis of the right kernel: every returned x satisfies M*x = 0 exactly.
std::vector<std::vector<fp_t>> kernel_basis(const ExactMatrix& m,
                                            const PrimeField& F);

// Solves sum_j x_j * columns[j] = rhs if possible (dense columns of equal
// length). Returns nullopt when rhs is outside the column span.
std::optional<std::vector<fp_t>> solve_columns(
    const std::vector<std::vector<fp_t>>& columns, const std::vector<fp_t>& rhs,
    const PrimeField& F);

} // namespace hilbdet

#endif
