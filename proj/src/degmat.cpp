#include "hilbdet/degmat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace hilbdet {

void DegreeMatrix::validate() const {
  if (a.size() != b.size())
    throw std::invalid_argument("DegreeMatrix: a and b must have equal length");
  if (a.size() < 2)
    throw std::invalid_argument("DegreeMatrix: need t >= 2");
  if (!std::is_sorted(b.begin(), b.end()))
    throw std::invalid_argument("DegreeMatrix: b not non-decreasing");
  if (!std::is_sorted(a.begin(), a.end()))
    throw std::invalid_argument("DegreeMatrix: a not non-decreasing");
  if (n < 1)
    throw std::invalid_argument("DegreeMatrix: ambient dimension must be positive");
}

bool is_nonempty(const DegreeMatrix& dm) {
  dm.validate();
  for (int i = 1; i < dm.t(); ++i)
    if (dm.a[i - 1] - dm.b[i] <= 0) return false;
  return true;
}

int det_degree(const DegreeMatrix& dm) {
  dm.validate();
  return std::accumulate(dm.a.begin(), dm.a.end(), 0) -
         std::accumulate(dm.b.begin(), dm.b.end(), 0);
}

std::pair<std::vector<int>, std::vector<int>> hb_twists(const DegreeMatrix& dm) {
  dm.validate();
  const int s = det_degree(dm);
  const int at = dm.a.back();
  std::vector<int> n1, n2;
  n1.reserve(dm.t());
  for (int bi : dm.b) n1.push_back(s + bi - at);
  n2.reserve(dm.t() - 1);
  for (int j = 0; j + 1 < dm.t(); ++j) n2.push_back(s + dm.a[j] - at);
  return {n1, n2};
}

HypothesisReport theorem_hypotheses(const DegreeMatrix& dm) {
  dm.validate();
  const int t = dm.t();
  HypothesisReport r;
  r.nonempty = is_nonempty(dm);
  r.t_gt_2 = t > 2;
  bool chain = true;
  for (int i = 1; i + 3 <= t; ++i) // a_i >= b_{i+3}, 1-based
    if (dm.a[i - 1] < dm.b[i + 2]) chain = false;
  r.depth_condition = chain && (t != 3 || dm.a[0] >= dm.b[t - 1]);
  r.row_condition_strict = chain && (t > 3 || dm.a[0] >= dm.b[t - 1]);
  r.at_condition =
      t >= 3 && dm.a[t - 1] > dm.a[t - 2] + dm.a[t - 3] - dm.b[0];
  r.ambient = dm.n >= 5;
  r.positive_dim = dm.n - 4 >= 1;
  return r;
}

DegreeMatrix degree_matrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("b") || !j.contains("a"))
    throw std::invalid_argument("degree matrix JSON: need keys \"b\" and \"a\"");
  DegreeMatrix dm;
  dm.b = j.at("b").get<std::vector<int>>();
  dm.a = j.at("a").get<std::vector<int>>();
  dm.n = j.value("n", 5);
  dm.validate();
  return dm;
}

std::string degree_matrix_to_json(const DegreeMatrix& dm) {
  nlohmann::json j;
  j["b"] = dm.b;
  j["a"] = dm.a;
  j["n"] = dm.n;
  return j.dump();
}

} // namespace hilbdet
