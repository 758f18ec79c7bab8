#include "langerlab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace langerlab {

void prime_power(int64_t q, int64_t* p, int* e) {
  if (q < 2) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  int64_t base = q;
  for (int64_t d = 2; d * d <= base; ++d)
    if (base % d == 0) {
      base = d;
      break;
    }
  int64_t t = q;
  int k = 0;
  while (t % base == 0) {
    t /= base;
    ++k;
  }
  if (t != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  *p = base;
  *e = k;
}

Surface make_surface(const Field& f, std::vector<ProjPoint> centers) {
  for (size_t i = 0; i < centers.size(); ++i)
    for (size_t j = i + 1; j < centers.size(); ++j)
      if (centers[i] == centers[j]) throw std::invalid_argument("blowup centers must be distinct");
  auto s = std::make_shared<SurfaceDesc>();
  s->field = f;
  s->n = static_cast<int>(centers.size());
  s->centers = std::move(centers);
  std::vector<ProjPoint> all = all_proj_points(f);
  s->is_langer = (s->centers.size() == all.size());
  if (s->is_langer)
    for (size_t i = 0; i < all.size(); ++i)
      if (!(s->centers[i] == all[i])) {
        s->is_langer = false;
        break;
      }
  return s;
}

Surface langer_surface(int64_t q) {
  int64_t p;
  int e;
  prime_power(q, &p, &e);
  Field f = make_field(p, e);
  return make_surface(f, all_proj_points(f));
}

DivClass div_zero(const Surface& s) { return DivClass{s, 0, std::vector<Rat>(s->n, 0)}; }

DivClass div_H(const Surface& s) { return DivClass{s, 1, std::vector<Rat>(s->n, 0)}; }

DivClass div_E(const Surface& s, int i) {
  if (i < 0 || i >= s->n) throw std::invalid_argument("exceptional index out of range");
  DivClass d = div_zero(s);
  d.m[i] = -1;
  return d;
}

DivClass div_K(const Surface& s) { return DivClass{s, -3, std::vector<Rat>(s->n, -1)}; }

DivClass div_make(const Surface& s, Rat a, std::vector<Rat> m) {
  if (static_cast<int>(m.size()) != s->n)
    throw std::invalid_argument("multiplicity vector length != number of centers");
  return DivClass{s, std::move(a), std::move(m)};
}

bool same_surface(const Surface& a, const Surface& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (!same_field(*a->field, *b->field) || a->n != b->n) return false;
  for (int i = 0; i < a->n; ++i)
    if (!(a->centers[i] == b->centers[i])) return false;
  return true;
}

namespace {
void require_same(const DivClass& x, const DivClass& y) {
  if (!same_surface(x.surface, y.surface)) throw std::invalid_argument("surface mismatch");
}
}  // namespace

DivClass operator+(const DivClass& x, const DivClass& y) {
  require_same(x, y);
  DivClass r = x;
  r.a += y.a;
  for (size_t i = 0; i < r.m.size(); ++i) r.m[i] += y.m[i];
  return r;
}

DivClass operator-(const DivClass& x, const DivClass& y) {
  require_same(x, y);
  DivClass r = x;
  r.a -= y.a;
  for (size_t i = 0; i < r.m.size(); ++i) r.m[i] -= y.m[i];
  return r;
}

DivClass operator-(const DivClass& x) {
  DivClass r = x;
  r.a = -r.a;
  for (auto& v : r.m) v = -v;
  return r;
}

DivClass operator*(const Rat& c, const DivClass& x) {
  DivClass r = x;
  r.a *= c;
  for (auto& v : r.m) v *= c;
  return r;
}

bool operator==(const DivClass& x, const DivClass& y) {
  return same_surface(x.surface, y.surface) && x.a == y.a && x.m == y.m;
}
bool operator!=(const DivClass& x, const DivClass& y) { return !(x == y); }

bool is_integral(const DivClass& d) {
  if (!is_integer(d.a)) return false;
  return std::all_of(d.m.begin(), d.m.end(), [](const Rat& r) { return is_integer(r); });
}

Rat intersect(const DivClass& x, const DivClass& y) {
  require_same(x, y);
  Rat r = x.a * y.a;
  for (size_t i = 0; i < x.m.size(); ++i) r -= x.m[i] * y.m[i];
  return r;
}

Rat euler_char(const DivClass& d) {
  if (!is_integral(d)) throw std::invalid_argument("euler_char requires an integral divisor class");
  Rat chi = 1 + intersect(d, d - div_K(d.surface)) / 2;
  if (!is_integer(chi)) throw std::logic_error("chi(D) is not an integer");
  return chi;
}

StandardClasses standard_classes(const Surface& s, const Incidence& inc) {
  if (!s->is_langer)
    throw std::invalid_argument("standard classes exist on the Langer surface only");
  if (!same_field(*s->field, *inc.field)) throw std::invalid_argument("incidence/surface field mismatch");
  int64_t q = s->field->size;
  int n = s->n;

  StandardClasses out;
  out.S = s;
  out.H = div_H(s);
  out.K = div_K(s);
  for (int i = 0; i < n; ++i) out.E.push_back(div_E(s, i));
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> m(n, 0);
    for (int i = 0; i < n; ++i)
      if (inc.is_on(i, j)) m[i] = 1;
    out.Lp.push_back(div_make(s, 1, std::move(m)));
  }
  out.B = div_make(s, q * q + 1, std::vector<Rat>(n, q));
  DivClass sumLp = div_zero(s);
  for (const DivClass& lp : out.Lp) sumLp = sumLp + lp;
  out.Delta = Rat(q, q + 1) * sumLp;
  out.M = div_make(s, q + 1, std::vector<Rat>(n, 1));
  return out;
}

ContractionData contraction_data(const Surface& s, const StandardClasses& cls) {
  if (!s->is_langer) throw std::invalid_argument("contraction data requires the Langer surface");
  int64_t q = s->field->size;

  // solve (K + c * sum L'_j) . L'_j = 0 for each j; all must agree
  DivClass sumLp = div_zero(s);
  for (const DivClass& lp : cls.Lp) sumLp = sumLp + lp;
  Rat coeff;
  bool first = true;
  for (const DivClass& lp : cls.Lp) {
    Rat kd = intersect(cls.K, lp);
    Rat ld = intersect(sumLp, lp);  // = (L'_j)^2 since the L' are pairwise disjoint
    Rat c = -kd / ld;
    if (first) {
      coeff = c;
      first = false;
    } else if (c != coeff) {
      throw std::logic_error("contraction coefficient differs between L'_j");
    }
  }
  if (coeff != Rat(q - 2, q)) throw std::logic_error("contraction coefficient != 1 - 2/q");

  ContractionData out;
  out.coeff = coeff;
  out.ky_lhs = q * q + q + 1;
  out.ky_rhs = q * q - 2 * q - 2;
  out.rho_y = static_cast<int>(s->n + 1 - cls.Lp.size());
  out.klt = coeff < 1;
  out.canonical = coeff <= 0;
  out.ky_ample = out.ky_rhs > 0;
  out.minus_ky_ample = out.ky_rhs < 0;
  return out;
}

}  // namespace langerlab
