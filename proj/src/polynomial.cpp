#include "hilbdet/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hilbdet {

static void sort_terms(std::vector<Polynomial::Term>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Polynomial::Term& x, const Polynomial::Term& y) {
              return grlex_before(x.exp, y.exp);
            });
}

Polynomial Polynomial::constant(int n_vars, fp_t c) {
  Polynomial p(n_vars);
  if (c != 0) p.terms_.push_back({Exponents(n_vars, 0), c});
  return p;
}

Polynomial Polynomial::monomial(Exponents e, fp_t c) {
  Polynomial p(static_cast<int>(e.size()));
  if (c != 0) p.terms_.push_back({std::move(e), c});
  return p;
}

Polynomial Polynomial::variable(int n_vars, int i) {
  if (i < 0 || i >= n_vars) throw std::out_of_range("Polynomial::variable");
  Exponents e(n_vars, 0);
  e[i] = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::from_terms(int n_vars, std::vector<Term> terms,
                                  const PrimeField& F) {
  std::unordered_map<Exponents, fp_t, ExponentsHash> acc;
  for (auto& t : terms) {
    if ((int)t.exp.size() != n_vars)
      throw std::invalid_argument("Polynomial::from_terms: arity mismatch");
    fp_t& slot = acc[t.exp];
    slot = F.add(slot, t.coeff % F.p());
  }
  Polynomial p(n_vars);
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.push_back({e, c});
  sort_terms(p.terms_);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, total_degree(t.exp));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.front().exp);
  for (auto& t : terms_)
    if (total_degree(t.exp) != d) return false;
  return true;
}

bool Polynomial::is_homogeneous_of_degree(int d) const {
  for (auto& t : terms_)
    if (total_degree(t.exp) != d) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (t.coeff != 1 || total_degree(t.exp) == 0) {
      os << t.coeff;
      printed = true;
    }
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (printed) os << "*";
      os << "x" << i;
      if (t.exp[i] > 1) os << "^" << t.exp[i];
      printed = true;
    }
  }
  return os.str();
}

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& F) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("add: arity mismatch");
  Polynomial r(a.n_vars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[j];
    if (ta.exp == tb.exp) {
      fp_t c = F.add(ta.coeff, tb.coeff);
      if (c != 0) r.terms_.push_back({ta.exp, c});
      ++i; ++j;
    } else if (grlex_before(ta.exp, tb.exp)) {
      r.terms_.push_back(ta);
      ++i;
    } else {
      r.terms_.push_back(tb);
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& F) {
  return add(a, scale(b, F.neg(1), F), F);
}

Polynomial scale(const Polynomial& a, fp_t c, const PrimeField& F) {
  Polynomial r(a.n_vars_);
  if (c == 0) return r;
  r.terms_.reserve(a.terms_.size());
  for (auto& t : a.terms_) r.terms_.push_back({t.exp, F.mul(t.coeff, c)});
  return r;
}

Polynomial mul_monomial(const Polynomial& a, const Exponents& m, fp_t c,
                        const PrimeField& F) {
  if ((int)m.size() != a.n_vars_)
    throw std::invalid_argument("mul_monomial: arity mismatch");
  Polynomial r(a.n_vars_);
  if (c == 0) return r;
  r.terms_.reserve(a.terms_.size());
  for (auto& t : a.terms_) {
    Exponents e = t.exp;
    for (std::size_t k = 0; k < e.size(); ++k)
      e[k] = static_cast<std::uint16_t>(e[k] + m[k]);
    r.terms_.push_back({std::move(e), F.mul(t.coeff, c)});
  }
  // monomial shift preserves the term order
  return r;
}

Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& F) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("mul: arity mismatch");
  std::unordered_map<Exponents, fp_t, ExponentsHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (auto& ta : a.terms_)
    for (auto& tb : b.terms_) {
      Exponents e = ta.exp;
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = static_cast<std::uint16_t>(e[k] + tb.exp[k]);
      fp_t& slot = acc[std::move(e)];
      slot = F.add(slot, F.mul(ta.coeff, tb.coeff));
    }
  Polynomial r(a.n_vars_);
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, c});
  sort_terms(r.terms_);
  return r;
}

} // namespace hilbdet
