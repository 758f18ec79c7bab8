#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "langerlab/plane.hpp"

namespace langerlab {

// Sparse homogeneous/inhomogeneous polynomials in x, y, z over a finite
// field. Degrees here stay tiny (<= q+1 for the forms of interest), so a
// sorted term list is plenty.

struct Term {
  std::array<int, 3> e;
  FieldElem c;
};

class Poly3 {
 public:
  Poly3() = default;
  explicit Poly3(Field f) : field_(std::move(f)) {}
  static Poly3 monomial(const Field& f, std::array<int, 3> exps, const FieldElem& coeff);

  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree, -1 for 0

  FieldElem eval(const FieldElem& x, const FieldElem& y, const FieldElem& z) const;
  FieldElem eval(const ProjPoint& p) const;
  Poly3 derivative(int var) const;  // formal partial, exponents reduced mod p

  friend Poly3 operator+(const Poly3& a, const Poly3& b);
  friend Poly3 operator-(const Poly3& a, const Poly3& b);
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  friend Poly3 operator*(const FieldElem& c, const Poly3& a);
  friend bool operator==(const Poly3& a, const Poly3& b);

  // substitute x_i -> sum_j L[i][j] x_j
  Poly3 subst_linear(const std::array<std::array<FieldElem, 3>, 3>& L) const;

 private:
  Field field_;
  std::vector<Term> terms_;  // sorted by exponents, no zero coefficients
  void insert(const std::array<int, 3>& e, const FieldElem& c);
  void sort_and_prune();
};

// the c with A == c*B (both nonzero), if any
std::optional<FieldElem> scalar_ratio(const Poly3& a, const Poly3& b);

// C(n, k) mod p by Lucas' theorem; exact for any n, k >= 0
int64_t binom_mod_p(int64_t n, int64_t k, int64_t p);

// Coefficient of s^a t^b in the local expansion of the monomial
// x^e0 y^e1 z^e2 around the normalized point P: dehomogenize at the chart
// (the leftmost nonzero coordinate of P, which equals 1), translate P to
// the origin by substitution, expand. The result is the Hasse-derivative
// value, never an iterated ordinary partial (those vanish spuriously in
// characteristic p).
FieldElem local_monomial_coeff(const Field& f, const std::array<int, 3>& exps, const ProjPoint& p,
                               int a, int b);

// all coefficients of s^a t^b with a + b <= max_total of F expanded at P
std::map<std::pair<int, int>, FieldElem> local_expansion(const Poly3& F, const ProjPoint& p,
                                                         int max_total);

}  // namespace langerlab
