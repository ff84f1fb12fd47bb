#ifndef HILBDET_POLYNOMIAL_HPP
#define HILBDET_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "hilbdet/field.hpp"
#include "hilbdet/monomial.hpp"

namespace hilbdet {

// Sparse multivariate polynomial over F_p. Terms are kept in the global
// monomial order with nonzero coefficients only, so equal polynomials have
// identical representations.
class Polynomial {
public:
  struct Term {
    Exponents exp;
    fp_t coeff;
  };

  explicit Polynomial(int n_vars = 1) : n_vars_(n_vars) {}

  static Polynomial zero(int n_vars) { return Polynomial(n_vars); }
  static Polynomial constant(int n_vars, fp_t c);
  static Polynomial monomial(Exponents e, fp_t c);
  static Polynomial variable(int n_vars, int i);

  // Builds from an arbitrary term list (merges duplicates, drops zeros).
  static Polynomial from_terms(int n_vars, std::vector<Term> terms,
                               const PrimeField& F);

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // max total degree of a term, -1 for the zero polynomial
  int degree() const;
  bool is_homogeneous() const;
  // true iff zero or homogeneous of exactly degree d
  bool is_homogeneous_of_degree(int d) const;

  bool operator==(const Polynomial& o) const {
    if (n_vars_ != o.n_vars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
      if (terms_[k].coeff != o.terms_[k].coeff || terms_[k].exp != o.terms_[k].exp)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  int n_vars_;
  std::vector<Term> terms_; // sorted by grlex_before, nonzero coeffs
  friend Polynomial add(const Polynomial&, const Polynomial&, const PrimeField&);
  friend Polynomial sub(const Polynomial&, const Polynomial&, const PrimeField&);
  friend Polynomial mul(const Polynomial&, const Polynomial&, const PrimeField&);
  friend Polynomial scale(const Polynomial&, fp_t, const PrimeField&);
  friend Polynomial mul_monomial(const Polynomial&, const Exponents&, fp_t,
                                 const PrimeField&);
};

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& F);
Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& F);
Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& F);
Polynomial scale(const Polynomial& a, fp_t c, const PrimeField& F);
Polynomial mul_monomial(const Polynomial& a, const Exponents& m, fp_t c,
                        const PrimeField& F);

} // namespace hilbdet

#endif
