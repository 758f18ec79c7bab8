#include "langerlab/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace langerlab {

namespace {

// --- polynomial helpers over GF(p), dense low-to-high coefficient vectors ---

void trim(std::vector<int32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int deg(const std::vector<int32_t>& v) { return static_cast<int>(v.size()) - 1; }

// a mod b, b monic
std::vector<int32_t> poly_mod(std::vector<int32_t> a, const std::vector<int32_t>& b, int64_t p) {
  trim(a);
  int db = deg(b);
  while (deg(a) >= db) {
    int64_t lead = a.back();
    int shift = deg(a) - db;
    for (int i = 0; i <= db; ++i) {
      int64_t v = (a[shift + i] - lead * b[i]) % p;
      a[shift + i] = static_cast<int32_t>(v < 0 ? v + p : v);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const std::vector<int32_t>& f, int64_t p) {
  int d = deg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  // trial division by all monic polynomials of degree 1..d/2
  for (int dd = 1; dd <= d / 2; ++dd) {
    int64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int64_t c = 0; c < count; ++c) {
      std::vector<int32_t> g(dd + 1, 0);
      int64_t t = c;
      for (int i = 0; i < dd; ++i) {
        g[i] = static_cast<int32_t>(t % p);
        t /= p;
      }
      g[dd] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

void require_same(const FieldElem& a, const FieldElem& b) {
  if (!a.field || !b.field) throw std::invalid_argument("field element without a field");
  if (a.field != b.field && !same_field(*a.field, *b.field))
    throw std::invalid_argument("field mismatch");
}

std::vector<int32_t> raw_mul(const FieldDesc& f, const std::vector<int32_t>& a,
                             const std::vector<int32_t>& b) {
  int e = f.e;
  std::vector<int64_t> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < e; ++j) prod[i + j] += static_cast<int64_t>(a[i]) * b[j];
  }
  // reduce by the monic modulus
  for (int d = 2 * e - 2; d >= e; --d) {
    int64_t lead = prod[d] % f.p;
    if (lead == 0) continue;
    for (int j = 0; j <= e; ++j) {
      prod[d - e + j] -= lead * f.modulus[j];
    }
  }
  std::vector<int32_t> out(e);
  for (int i = 0; i < e; ++i) {
    int64_t v = prod[i] % f.p;
    out[i] = static_cast<int32_t>(v < 0 ? v + f.p : v);
  }
  return out;
}

}  // namespace

bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool same_field(const FieldDesc& a, const FieldDesc& b) {
  return a.p == b.p && a.e == b.e && a.modulus == b.modulus;
}

Field make_field(int64_t p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (e < 1 || e > FieldDesc::kMaxDegree)
    throw std::invalid_argument("extension degree out of range [1, 12]");
  int64_t size = 1;
  for (int i = 0; i < e; ++i) {
    size *= p;
    if (size > FieldDesc::kDeskBound)
      throw std::invalid_argument("p^e exceeds the desk bound 2^20");
  }

  auto desc = std::make_shared<FieldDesc>();
  desc->p = p;
  desc->e = e;
  desc->size = size;

  if (e == 1) {
    desc->modulus = {0, 1};  // t
  } else {
    // lexicographically smallest (a_0, ..., a_{e-1}) with f = sum a_i t^i + t^e irreducible
    std::vector<int32_t> a(e, 0);
    bool found = false;
    while (!found) {
      std::vector<int32_t> f(a);
      f.push_back(1);
      if (is_irreducible(f, p)) {
        desc->modulus = f;
        found = true;
        break;
      }
      // next sequence in lex order (a_0 most significant)
      int i = e - 1;
      while (i >= 0 && a[i] == p - 1) {
        a[i] = 0;
        --i;
      }
      if (i < 0) throw std::logic_error("no irreducible polynomial found");  // unreachable
      ++a[i];
    }
  }

  if (size <= FieldDesc::kTableLimit) {
    auto& d = *desc;
    size_t n = static_cast<size_t>(size);
    d.neg_tab.resize(n);
    d.inv_tab.assign(n, 0);
    d.add_tab.resize(n * n);
    d.mul_tab.resize(n * n);
    // decode inline: code digits base p
    auto digits = [&](int64_t codev) {
      std::vector<int32_t> c(e);
      for (int i = 0; i < e; ++i) {
        c[i] = static_cast<int32_t>(codev % p);
        codev /= p;
      }
      return c;
    };
    auto encode = [&](const std::vector<int32_t>& c) {
      int64_t v = 0;
      for (int i = e - 1; i >= 0; --i) v = v * p + c[i];
      return v;
    };
    std::vector<std::vector<int32_t>> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = digits(static_cast<int64_t>(i));
    for (size_t i = 0; i < n; ++i) {
      std::vector<int32_t> neg(e);
      for (int k = 0; k < e; ++k) neg[k] = static_cast<int32_t>((p - all[i][k]) % p);
      d.neg_tab[i] = static_cast<int32_t>(encode(neg));
      for (size_t j = 0; j < n; ++j) {
        std::vector<int32_t> s(e);
        for (int k = 0; k < e; ++k) s[k] = static_cast<int32_t>((all[i][k] + all[j][k]) % p);
        d.add_tab[i * n + j] = static_cast<int32_t>(encode(s));
        int64_t m = encode(raw_mul(d, all[i], all[j]));
        d.mul_tab[i * n + j] = static_cast<int32_t>(m);
        if (m == 1) d.inv_tab[i] = static_cast<int32_t>(j);
      }
    }
  }

  return desc;
}

bool FieldElem::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int32_t v) { return v == 0; });
}

bool FieldElem::is_one() const {
  if (c.empty() || c[0] != 1) return false;
  return std::all_of(c.begin() + 1, c.end(), [](int32_t v) { return v == 0; });
}

FieldElem fe(const Field& f, int64_t value) {
  FieldElem x{f, std::vector<int32_t>(f->e, 0)};
  int64_t v = value % f->p;
  if (v < 0) v += f->p;
  x.c[0] = static_cast<int32_t>(v);
  return x;
}

FieldElem fe_zero(const Field& f) { return fe(f, 0); }
FieldElem fe_one(const Field& f) { return fe(f, 1); }

FieldElem fe_gen(const Field& f) {
  if (f->e == 1) return fe_one(f);
  FieldElem x{f, std::vector<int32_t>(f->e, 0)};
  x.c[1] = 1;
  return x;
}

int64_t code(const FieldElem& x) {
  int64_t v = 0;
  for (int i = x.field->e - 1; i >= 0; --i) v = v * x.field->p + x.c[i];
  return v;
}

FieldElem decode(const Field& f, int64_t codev) {
  FieldElem x{f, std::vector<int32_t>(f->e, 0)};
  for (int i = 0; i < f->e; ++i) {
    x.c[i] = static_cast<int32_t>(codev % f->p);
    codev /= f->p;
  }
  return x;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  FieldElem r{a.field, std::vector<int32_t>(a.c.size())};
  int64_t p = a.field->p;
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = static_cast<int32_t>((a.c[i] + b.c[i]) % p);
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  FieldElem r{a.field, std::vector<int32_t>(a.c.size())};
  int64_t p = a.field->p;
  for (size_t i = 0; i < a.c.size(); ++i)
    r.c[i] = static_cast<int32_t>(((a.c[i] - b.c[i]) % p + p) % p);
  return r;
}

FieldElem operator-(const FieldElem& a) {
  FieldElem r{a.field, std::vector<int32_t>(a.c.size())};
  int64_t p = a.field->p;
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = static_cast<int32_t>((p - a.c[i]) % p);
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return FieldElem{a.field, raw_mul(*a.field, a.c, b.c)};
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * fe_inv(b); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return a.c == b.c;
}

bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

FieldElem fe_inv(const FieldElem& a) {
  if (a.is_zero()) throw std::invalid_argument("inversion of zero");
  const FieldDesc& f = *a.field;
  if (f.has_tables()) return decode(a.field, f.inv_tab[code(a)]);
  return fe_pow(a, f.size - 2);
}

FieldElem fe_pow(const FieldElem& a, int64_t n) {
  if (n < 0) throw std::invalid_argument("fe_pow: negative exponent");
  FieldElem base = a;
  FieldElem acc = fe_one(a.field);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

FieldElem frobenius(const FieldElem& a) { return fe_pow(a, a.field->p); }

FieldElem qth_root(const FieldElem& a, int64_t q) {
  const FieldDesc& f = *a.field;
  if (q < 2 || q % f.p != 0)
    throw std::invalid_argument("q is not a power of the field characteristic");
  int64_t t = q;
  while (t % f.p == 0) t /= f.p;
  if (t != 1) throw std::invalid_argument("q is not a power of the field characteristic");
  // field size must be q^k
  int64_t s = f.size;
  int k = 0;
  while (s > 1 && s % q == 0) {
    s /= q;
    ++k;
  }
  if (s != 1) throw std::invalid_argument("field size is not a power of q");
  int64_t exp = 1;
  for (int i = 0; i < k - 1; ++i) exp *= q;
  return fe_pow(a, exp);
}

bool elem_less(const FieldElem& a, const FieldElem& b) { return a.c < b.c; }

std::vector<FieldElem> all_elements(const Field& f) {
  std::vector<FieldElem> out;
  out.reserve(static_cast<size_t>(f->size));
  for (int64_t i = 0; i < f->size; ++i) out.push_back(decode(f, i));
  std::sort(out.begin(), out.end(), elem_less);
  return out;
}

std::string elem_str(const FieldElem& a) {
  std::string s;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a.c[i]);
  }
  return s;
}

Embedding::Embedding(Field src, Field dst) : src_(std::move(src)), dst_(std::move(dst)) {
  if (src_->p != dst_->p || dst_->e % src_->e != 0)
    throw std::invalid_argument("embedding requires same characteristic and divisible degrees");
  gen_image_ = fe_zero(dst_);
  if (src_->e == 1) {
    gen_image_ = fe_one(dst_);
    return;
  }
  // smallest root of the source modulus in the target, in the fixed element order
  bool found = false;
  for (const FieldElem& x : all_elements(dst_)) {
    FieldElem acc = fe_zero(dst_);
    FieldElem pw = fe_one(dst_);
    for (int i = 0; i <= src_->e; ++i) {
      acc = acc + fe(dst_, src_->modulus[i]) * pw;
      pw = pw * x;
    }
    if (acc.is_zero()) {
      gen_image_ = x;
      found = true;
      break;
    }
  }
  if (!found)
    throw std::logic_error("no root of the source modulus in the target field (modulus corruption)");
}

FieldElem Embedding::operator()(const FieldElem& x) const {
  if (!same_field(*x.field, *src_)) throw std::invalid_argument("embedding: element not in source field");
  FieldElem acc = fe_zero(dst_);
  FieldElem pw = fe_one(dst_);
  for (int i = 0; i < src_->e; ++i) {
    acc = acc + fe(dst_, x.c[i]) * pw;
    pw = pw * gen_image_;
  }
  return acc;
}

int64_t code_add(const FieldDesc& f, int64_t a, int64_t b) {
  if (f.has_tables()) return f.add_tab[static_cast<size_t>(a) * f.size + b];
  throw std::logic_error("code_add without tables");
}

int64_t code_mul(const FieldDesc& f, int64_t a, int64_t b) {
  if (f.has_tables()) return f.mul_tab[static_cast<size_t>(a) * f.size + b];
  throw std::logic_error("code_mul without tables");
}

int64_t code_inv(const FieldDesc& f, int64_t a) {
  if (a == 0) throw std::invalid_argument("inversion of zero");
  if (f.has_tables()) return f.inv_tab[static_cast<size_t>(a)];
  throw std::logic_error("code_inv without tables");
}

int64_t code_neg(const FieldDesc& f, int64_t a) {
  if (f.has_tables()) return f.neg_tab[static_cast<size_t>(a)];
  throw std::logic_error("code_neg without tables");
}

int64_t code_pow(const FieldDesc& f, int64_t a, int64_t n) {
  if (f.has_tables()) {
    int64_t acc = 1, base = a;
    while (n > 0) {
      if (n & 1) acc = code_mul(f, acc, base);
      base = code_mul(f, base, base);
      n >>= 1;
    }
    return acc;
  }
  throw std::logic_error("code_pow without tables");
}

GFMatrix::GFMatrix(Field f, int r, int c)
    : field(std::move(f)), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

void GFMatrix::set(int r, int c, const FieldElem& x) { set_code(r, c, code(x)); }

FieldElem GFMatrix::elem(int r, int c) const { return decode(field, get(r, c)); }

int GFMatrix::rank() const {
  if (rows == 0 || cols == 0) return 0;
  const FieldDesc& f = *field;
  if (f.has_tables()) {
    std::vector<int32_t> m = a;
    auto at = [&](int r, int c) -> int32_t& { return m[static_cast<size_t>(r) * cols + c]; };
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
      int piv = -1;
      for (int r = rk; r < rows; ++r)
        if (at(r, c) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      if (piv != rk)
        for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(rk, j));
      int64_t inv = code_inv(f, at(rk, c));
      for (int j = c; j < cols; ++j) at(rk, j) = static_cast<int32_t>(code_mul(f, at(rk, j), inv));
      for (int r = rk + 1; r < rows; ++r) {
        int64_t factor = at(r, c);
        if (factor == 0) continue;
        int64_t nf = code_neg(f, factor);
        for (int j = c; j < cols; ++j)
          at(r, j) = static_cast<int32_t>(code_add(f, at(r, j), code_mul(f, nf, at(rk, j))));
      }
      ++rk;
    }
    return rk;
  }

  // generic element path for fields above the table limit
  std::vector<FieldElem> m;
  m.reserve(a.size());
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.push_back(elem(r, c));
  auto at = [&](int r, int c) -> FieldElem& { return m[static_cast<size_t>(r) * cols + c]; };
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (!at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rk)
      for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(rk, j));
    FieldElem inv = fe_inv(at(rk, c));
    for (int j = c; j < cols; ++j) at(rk, j) = at(rk, j) * inv;
    for (int r = rk + 1; r < rows; ++r) {
      FieldElem factor = at(r, c);
      if (factor.is_zero()) continue;
      for (int j = c; j < cols; ++j) at(r, j) = at(r, j) - factor * at(rk, j);
    }
    ++rk;
  }
  return rk;
}

}  // namespace langerlab
