#include "langerlab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace langerlab {

Poly3 Poly3::monomial(const Field& f, std::array<int, 3> exps, const FieldElem& coeff) {
  Poly3 p(f);
  if (!coeff.is_zero()) p.terms_.push_back(Term{exps, coeff});
  return p;
}

int Poly3::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.e[0] + t.e[1] + t.e[2]);
  return d;
}

FieldElem Poly3::eval(const FieldElem& x, const FieldElem& y, const FieldElem& z) const {
  FieldElem acc = fe_zero(field_);
  for (const Term& t : terms_)
    acc = acc + t.c * fe_pow(x, t.e[0]) * fe_pow(y, t.e[1]) * fe_pow(z, t.e[2]);
  return acc;
}

FieldElem Poly3::eval(const ProjPoint& p) const { return eval(p.x[0], p.x[1], p.x[2]); }

Poly3 Poly3::derivative(int var) const {
  Poly3 out(field_);
  for (const Term& t : terms_) {
    if (t.e[var] == 0) continue;
    FieldElem c = fe(field_, t.e[var]) * t.c;
    if (c.is_zero()) continue;
    std::array<int, 3> e = t.e;
    --e[var];
    out.insert(e, c);
  }
  out.sort_and_prune();
  return out;
}

void Poly3::insert(const std::array<int, 3>& e, const FieldElem& c) {
  terms_.push_back(Term{e, c});
}

void Poly3::sort_and_prune() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.e < b.e; });
  std::vector<Term> merged;
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().e == t.e)
      merged.back().c = merged.back().c + t.c;
    else
      merged.push_back(std::move(t));
  }
  terms_.clear();
  for (Term& t : merged)
    if (!t.c.is_zero()) terms_.push_back(std::move(t));
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
  Poly3 out(a.field_ ? a.field_ : b.field_);
  out.terms_ = a.terms_;
  for (const Term& t : b.terms_) out.insert(t.e, t.c);
  out.sort_and_prune();
  return out;
}

Poly3 operator-(const Poly3& a, const Poly3& b) {
  Poly3 out(a.field_ ? a.field_ : b.field_);
  out.terms_ = a.terms_;
  for (const Term& t : b.terms_) out.insert(t.e, -t.c);
  out.sort_and_prune();
  return out;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 out(a.field_ ? a.field_ : b.field_);
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_)
      out.insert({s.e[0] + t.e[0], s.e[1] + t.e[1], s.e[2] + t.e[2]}, s.c * t.c);
  out.sort_and_prune();
  return out;
}

Poly3 operator*(const FieldElem& c, const Poly3& a) {
  Poly3 out(a.field_);
  for (const Term& t : a.terms_) out.insert(t.e, c * t.c);
  out.sort_and_prune();
  return out;
}

bool operator==(const Poly3& a, const Poly3& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

Poly3 Poly3::subst_linear(const std::array<std::array<FieldElem, 3>, 3>& L) const {
  Poly3 out(field_);
  std::array<Poly3, 3> lin;
  for (int i = 0; i < 3; ++i) {
    lin[i] = Poly3(field_);
    for (int j = 0; j < 3; ++j) {
      std::array<int, 3> e{0, 0, 0};
      e[j] = 1;
      lin[i] = lin[i] + Poly3::monomial(field_, e, L[i][j]);
    }
  }
  for (const Term& t : terms_) {
    Poly3 prod = Poly3::monomial(field_, {0, 0, 0}, t.c);
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < t.e[v]; ++k) prod = prod * lin[v];
    out = out + prod;
  }
  return out;
}

std::optional<FieldElem> scalar_ratio(const Poly3& a, const Poly3& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return std::nullopt;
  FieldElem c = ta[0].c / tb[0].c;
  for (size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].e != tb[i].e) return std::nullopt;
    if (ta[i].c != c * tb[i].c) return std::nullopt;
  }
  return c;
}

int64_t binom_mod_p(int64_t n, int64_t k, int64_t p) {
  if (k < 0 || k > n) return 0;
  auto small_binom = [p](int64_t nn, int64_t kk) {
    // C(nn, kk) mod p for nn, kk < p, multiplicative formula with inverses mod p
    if (kk < 0 || kk > nn) return static_cast<int64_t>(0);
    int64_t num = 1, den = 1;
    for (int64_t i = 0; i < kk; ++i) {
      num = num * ((nn - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den^(p-2) mod p
    int64_t inv = 1, base = den, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return num * inv % p;
  };
  int64_t result = 1;
  while (n > 0 || k > 0) {
    int64_t nd = n % p, kd = k % p;
    result = result * small_binom(nd, kd) % p;
    if (result == 0) return 0;
    n /= p;
    k /= p;
  }
  return result;
}

FieldElem local_monomial_coeff(const Field& f, const std::array<int, 3>& exps, const ProjPoint& p,
                               int a, int b) {
  int chart = leftmost_nonzero(p);
  int u = -1, v = -1;
  for (int i = 0; i < 3; ++i) {
    if (i == chart) continue;
    if (u < 0)
      u = i;
    else
      v = i;
  }
  int eu = exps[u], ev = exps[v];
  if (a > eu || b > ev) return fe_zero(f);
  int64_t bu = binom_mod_p(eu, a, f->p);
  int64_t bv = binom_mod_p(ev, b, f->p);
  if (bu == 0 || bv == 0) return fe_zero(f);
  return fe(f, bu) * fe_pow(p.x[u], eu - a) * fe(f, bv) * fe_pow(p.x[v], ev - b);
}

std::map<std::pair<int, int>, FieldElem> local_expansion(const Poly3& F, const ProjPoint& p,
                                                         int max_total) {
  std::map<std::pair<int, int>, FieldElem> out;
  const Field& f = F.field();
  for (int a = 0; a <= max_total; ++a)
    for (int b = 0; a + b <= max_total; ++b) {
      FieldElem acc = fe_zero(f);
      for (const Term& t : F.terms()) acc = acc + t.c * local_monomial_coeff(f, t.e, p, a, b);
      out[{a, b}] = acc;
    }
  return out;
}

}  // namespace langerlab
