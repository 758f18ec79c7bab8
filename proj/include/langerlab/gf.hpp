#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace langerlab {

// Exact arithmetic in GF(p^e). Elements are coefficient vectors over GF(p)
// in the polynomial basis 1, t, ..., t^{e-1}, stored low-to-high. All
// choices (modulus, embedding root) are totally ordered, so every
// downstream enumeration is deterministic across runs.

struct FieldDesc;
using Field = std::shared_ptr<const FieldDesc>;

struct FieldDesc {
  int64_t p = 0;
  int e = 0;
  int64_t size = 0;              // p^e
  std::vector<int32_t> modulus;  // monic irreducible, length e+1, low-to-high

  // code-indexed op tables (code = sum c_i p^i), built for small fields;
  // the rank kernel and brute-force scans run on codes
  std::vector<int32_t> add_tab, mul_tab, inv_tab, neg_tab;

  static constexpr int64_t kTableLimit = 1024;
  static constexpr int64_t kDeskBound = 1 << 20;  // p^e <= 2^20
  static constexpr int kMaxDegree = 12;

  bool has_tables() const { return !mul_tab.empty(); }
};

bool same_field(const FieldDesc& a, const FieldDesc& b);
bool is_prime(int64_t n);

// GF(p^e) with the lexicographically smallest monic irreducible modulus
// (coefficient sequences compared low-to-high).
Field make_field(int64_t p, int e);

struct FieldElem {
  Field field;
  std::vector<int32_t> c;  // length e, entries in [0, p)

  bool is_zero() const;
  bool is_one() const;
};

FieldElem fe(const Field& f, int64_t value);  // image of an integer
FieldElem fe_zero(const Field& f);
FieldElem fe_one(const Field& f);
FieldElem fe_gen(const Field& f);  // class of t (e >= 2), 1 for prime fields

int64_t code(const FieldElem& x);  // sum c_i p^i
FieldElem decode(const Field& f, int64_t code);

FieldElem operator+(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a);
FieldElem operator*(const FieldElem& a, const FieldElem& b);
FieldElem operator/(const FieldElem& a, const FieldElem& b);
bool operator==(const FieldElem& a, const FieldElem& b);
bool operator!=(const FieldElem& a, const FieldElem& b);

FieldElem fe_inv(const FieldElem& a);
FieldElem fe_pow(const FieldElem& a, int64_t n);  // n >= 0, square-and-multiply
FieldElem frobenius(const FieldElem& a);          // x -> x^p

// Inverse of the q-power Frobenius: the unique y with y^q = x. Requires the
// ambient field size to be a power of q; computed as x^(q^{k-1}).
FieldElem qth_root(const FieldElem& a, int64_t q);

// fixed total order: coefficient sequences compared low-to-high
bool elem_less(const FieldElem& a, const FieldElem& b);
std::vector<FieldElem> all_elements(const Field& f);  // ascending
std::string elem_str(const FieldElem& a);             // "c0,c1,..."

// Ring embedding GF(p^e) -> GF(p^{e*k}): the source generator maps to the
// smallest root of the source modulus in the target (element order above).
class Embedding {
 public:
  Embedding(Field src, Field dst);
  FieldElem operator()(const FieldElem& x) const;
  const Field& src() const { return src_; }
  const Field& dst() const { return dst_; }
  const FieldElem& generator_image() const { return gen_image_; }

 private:
  Field src_, dst_;
  FieldElem gen_image_;
};

// code-level ops used by the rank kernel and exhaustive scans
int64_t code_add(const FieldDesc& f, int64_t a, int64_t b);
int64_t code_mul(const FieldDesc& f, int64_t a, int64_t b);
int64_t code_inv(const FieldDesc& f, int64_t a);
int64_t code_neg(const FieldDesc& f, int64_t a);
int64_t code_pow(const FieldDesc& f, int64_t a, int64_t n);

// Dense matrix over a field; rank by exact Gaussian elimination.
struct GFMatrix {
  Field field;
  int rows = 0, cols = 0;
  std::vector<int32_t> a;  // codes, row-major

  GFMatrix() = default;
  GFMatrix(Field f, int r, int c);

  int32_t get(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  void set_code(int r, int c, int64_t v) { a[static_cast<size_t>(r) * cols + c] = static_cast<int32_t>(v); }
  void set(int r, int c, const FieldElem& x);
  FieldElem elem(int r, int c) const;

  int rank() const;
};

}  // namespace langerlab
