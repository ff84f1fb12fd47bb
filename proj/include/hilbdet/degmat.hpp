#ifndef HILBDET_DEGMAT_HPP
#define HILBDET_DEGMAT_HPP

#include <string>
#include <utility>
#include <vector>

namespace hilbdet {

// Degree data (b_1 <= ... <= b_t ; a_1 <= ... <= a_t) of a t x t homogeneous
// matrix over k[x_0..x_n], entry (j,i) of degree u_ji = a_j - b_i. Positions
// with a_j <= b_i carry the zero polynomial (minimality convention).
struct DegreeMatrix {
  std::vector<int> b;
  std::vector<int> a;
  int n = 5; // ambient P^n

  int t() const { return static_cast<int>(a.size()); }
  int n_vars() const { return n + 1; }
  int entry_degree(int j, int i) const { return a[j] - b[i]; }

  // throws std::invalid_argument on any shape/order violation
  void validate() const;

  bool operator==(const DegreeMatrix& o) const {
    return b == o.b && a == o.a && n == o.n;
  }
};

// Numerical hypotheses of the dimension theorem, evaluated literally.
struct HypothesisReport {
  bool nonempty = false;
  bool t_gt_2 = false;
  // a_i >= b_{i+3} for 1 <= i <= t-3, plus a_1 >= b_t when t == 3
  bool depth_condition = false;
  // variant with the row condition required for every t <= 3 (reported only,
  // never used in theorem_applies)
  bool row_condition_strict = false;
  bool at_condition = false;   // a_t > a_{t-1} + a_{t-2} - b_1
  bool ambient = false;        // n >= 5
  bool positive_dim = false;   // n - 4 >= 1

  bool theorem_applies() const {
    return nonempty && t_gt_2 && depth_condition && at_condition && ambient &&
           positive_dim;
  }
};

// Nonemptiness of the family: a_{i-1} - b_i > 0 for i = 2..t.
bool is_nonempty(const DegreeMatrix& dm);

// Degree s of the determinant: sum a_j - sum b_i.
int det_degree(const DegreeMatrix& dm);

// Generator degrees n1_i = s + b_i - a_t of the codimension-2 ideal and
// relation degrees n2_j = s + a_j - a_t (j <= t-1) of its free resolution.
std::pair<std::vector<int>, std::vector<int>> hb_twists(const DegreeMatrix& dm);

HypothesisReport theorem_hypotheses(const DegreeMatrix& dm);

// JSON schema {"b":[ints],"a":[ints],"n":int}; sorted-order violations are
// parse errors, never silently fixed.
DegreeMatrix degree_matrix_from_json(const std::string& text);
std::string degree_matrix_to_json(const DegreeMatrix& dm);

} // namespace hilbdet

#endif
