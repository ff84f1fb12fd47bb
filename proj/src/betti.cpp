#include "hilbdet/betti.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hilbdet/monomial.hpp"

namespace hilbdet {

static std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string BettiTable::to_text() const {
  // twist display, rightmost homological index first:
  // HB: 0 -> R(-4)^3 -> R(-3)^4 -> R -> B -> 0
  std::ostringstream os;
  os << label << ": 0";
  for (int k = (int)terms.size() - 1; k >= 0; --k) {
    os << " -> ";
    if (terms[k].empty()) {
      os << "0";
      continue;
    }
    std::map<int, int> mult;
    for (int d : terms[k]) mult[d]++;
    bool first = true;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
      if (!first) os << " (+) ";
      first = false;
      if (it->first == 0)
        os << "R";
      else
        os << "R(" << -it->first << ")";
      if (it->second > 1) os << "^" << it->second;
    }
  }
  const char* target = label == "HB" ? "B" : label == "SQ" ? "I_B^2"
                                      : label == "GN"      ? "A"
                                                           : "M";
  os << " -> " << target << " -> 0";
  return os.str();
}

BettiTable hilbert_burch_table(const DegreeMatrix& dm) {
  if (!is_nonempty(dm))
    throw std::invalid_argument("hilbert_burch_table: empty family");
  auto [n1, n2] = hb_twists(dm);
  BettiTable t;
  t.label = "HB";
  t.n = dm.n;
  t.terms = {{0}, sorted(n1), sorted(n2)};
  return t;
}

BettiTable ideal_square_table(const DegreeMatrix& dm) {
  if (!is_nonempty(dm))
    throw std::invalid_argument("ideal_square_table: empty family");
  auto [n1, n2] = hb_twists(dm);
  std::vector<int> s2f1, f1f2, l2f2;
  for (std::size_t i = 0; i < n1.size(); ++i)
    for (std::size_t k = i; k < n1.size(); ++k) s2f1.push_back(n1[i] + n1[k]);
  for (int x : n1)
    for (int y : n2) f1f2.push_back(x + y);
  for (std::size_t i = 0; i < n2.size(); ++i)
    for (std::size_t k = i + 1; k < n2.size(); ++k) l2f2.push_back(n2[i] + n2[k]);
  BettiTable t;
  t.label = "SQ";
  t.n = dm.n;
  t.terms = {sorted(s2f1), sorted(f1f2), sorted(l2f2)};
  return t;
}

BettiTable gulliksen_negard_table(const DegreeMatrix& dm) {
  if (!is_nonempty(dm))
    throw std::invalid_argument("gulliksen_negard_table: empty family");
  const int t_sz = dm.t();
  const int s = det_degree(dm);
  std::vector<int> t1, t2, t3;
  for (int i = 0; i < t_sz; ++i)
    for (int j = 0; j < t_sz; ++j) {
      t1.push_back(s - dm.a[j] + dm.b[i]);
      t3.push_back(s + dm.a[j] - dm.b[i]);
      t2.push_back(s + dm.b[i] - dm.b[j]);
      t2.push_back(s + dm.a[j] - dm.a[i]);
    }
  // drop the trace target and the identity pair: two copies of degree s
  for (int drop = 0; drop < 2; ++drop)
    t2.erase(std::find(t2.begin(), t2.end(), s));
  BettiTable t;
  t.label = "GN";
  t.n = dm.n;
  t.terms = {{0}, sorted(t1), sorted(t2), sorted(t3), {2 * s}};
  for (int k = 1; k <= 4; ++k)
    for (int d : t.terms[k])
      if (d <= 0) {
        std::ostringstream os;
        os << "gulliksen_negard_table: non-minimal data, term of degree " << d
           << " at homological index " << k << " (need a_{i-1} > b_i throughout)";
        throw std::invalid_argument(os.str());
      }
  return t;
}

long long hilbert_function(const BettiTable& table, int v) {
  long long acc = 0;
  int sign = 1;
  for (auto& degs : table.terms) {
    for (int d : degs) acc += sign * choose_trunc((long long)v - d + table.n, table.n);
    sign = -sign;
  }
  return acc;
}

long long signed_binom(long long x, int k) {
  if (k < 0) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (x - k + i) / i;
  return r;
}

int HilbertPolynomial::degree() const {
  for (int i = (int)c.size() - 1; i >= 0; --i)
    if (c[i] != 0) return i;
  return -1; // zero polynomial
}

long long HilbertPolynomial::operator()(long long v) const {
  long long acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * signed_binom(v, (int)i);
  return acc;
}

std::string HilbertPolynomial::to_string() const {
  if (degree() < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = (int)c.size() - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    long long v = c[i];
    if (first) {
      os << v;
    } else {
      os << (v < 0 ? " - " : " + ") << (v < 0 ? -v : v);
    }
    first = false;
    if (i >= 1) os << "*C(v," << i << ")";
  }
  return os.str();
}

HilbertPolynomial hilbert_polynomial(const BettiTable& table) {
  // sample in the polynomial regime (v >= every listed degree), then move the
  // Newton expansion to the binomial basis at 0 by exact evaluation
  int vmax = 0;
  for (auto& degs : table.terms)
    for (int d : degs) vmax = std::max(vmax, d);
  const int m = table.n + 1;
  std::vector<long long> samples(m);
  for (int i = 0; i < m; ++i) samples[i] = hilbert_function(table, vmax + i);
  std::vector<long long> newton = samples; // forward differences at vmax
  for (int lvl = 1; lvl < m; ++lvl)
    for (int i = m - 1; i >= lvl; --i) newton[i] -= newton[i - 1];
  auto eval_at = [&](long long v) {
    long long acc = 0;
    for (int i = 0; i < m; ++i) acc += newton[i] * signed_binom(v - vmax, i);
    return acc;
  };
  std::vector<long long> at0(m);
  for (int i = 0; i < m; ++i) at0[i] = eval_at(i);
  for (int lvl = 1; lvl < m; ++lvl)
    for (int i = m - 1; i >= lvl; --i) at0[i] -= at0[i - 1];
  HilbertPolynomial p;
  p.c = at0;
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
  return p;
}

std::pair<long long, long long> degree_and_genus(const HilbertPolynomial& p) {
  if (p.degree() > 1)
    throw std::invalid_argument("degree_and_genus: Hilbert polynomial not linear");
  long long d = p.c.size() > 1 ? p.c[1] : 0;
  long long c0 = p.c.empty() ? 0 : p.c[0];
  return {d, 1 - c0};
}

long long ideal_piece_dim_closed(const DegreeMatrix& dm, int v) {
  auto [n1, n2] = hb_twists(dm);
  long long acc = 0;
  for (int d : n1) acc += choose_trunc((long long)v - d + dm.n, dm.n);
  for (int d : n2) acc -= choose_trunc((long long)v - d + dm.n, dm.n);
  return acc;
}

long long eta(const DegreeMatrix& dm, int v) {
  return ideal_piece_dim_closed(dm, v) - hilbert_function(ideal_square_table(dm), v);
}

long long epsilon(const DegreeMatrix& dm) {
  if (!is_nonempty(dm)) throw std::invalid_argument("epsilon: empty family");
  auto [n1, n2] = hb_twists(dm);
  long long acc = eta(dm, det_degree(dm));
  for (int d : n2) acc += eta(dm, d);
  for (int d : n1) acc -= eta(dm, d);
  return acc;
}

DimWResult dim_w_formula(const DegreeMatrix& dm) {
  dm.validate();
  const int t = dm.t();
  if (t <= 2)
    throw std::invalid_argument("dim_w_formula: requires t > 2");
  const int n = dm.n;
  const int s = det_degree(dm);
  const auto& a = dm.a;
  const auto& b = dm.b;
  const int at = a[t - 1];
  auto C = [&](long long x) { return choose_trunc(x + n, n); };
  long long v = 0;
  for (int i = 0; i < t; ++i) // sum over 1<=i,j<=t of C(a_j-b_i+n,n)
    for (int j = 0; j < t; ++j) v += C(a[j] - b[i]);
  for (int i = 0; i < t - 1; ++i)
    for (int j = 0; j < t; ++j) v -= C(a[j] - a[i]);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) v -= C(b[i] - b[j]);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t - 1; ++j) v += C(b[i] - a[j]);
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < t; ++i)
      for (int k = i; k < t; ++k) v -= C(at - s - b[i] - b[k] + a[j]);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      for (int k = 0; k < t - 1; ++k) v += C(at - s - b[i] - a[k] + a[j]);
  for (int i = 0; i < t - 1; ++i)
    for (int k = i + 1; k < t - 1; ++k)
      for (int j = 0; j < t; ++j) v -= C(at - s - a[i] - a[k] + a[j]);
  for (int i = 1; i < t; ++i) v += C(at - s + b[i] - 2 * b[0]);
  return {v, theorem_hypotheses(dm)};
}

std::string betti_table_to_json(const BettiTable& t) {
  nlohmann::json j;
  j["label"] = t.label;
  j["n"] = t.n;
  nlohmann::json terms = nlohmann::json::object();
  for (std::size_t k = 0; k < t.terms.size(); ++k)
    terms[std::to_string(k)] = t.terms[k];
  j["terms"] = terms;
  return j.dump();
}

std::string hilbert_polynomial_to_json(const HilbertPolynomial& p) {
  nlohmann::json j;
  j["binomial_basis"] = p.c;
  return j.dump();
}

} // namespace hilbdet
