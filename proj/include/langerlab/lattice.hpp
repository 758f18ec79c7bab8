#pragma once

#include <memory>
#include <vector>

#include "langerlab/plane.hpp"
#include "langerlab/rational.hpp"

namespace langerlab {

// Picard lattice of a blowup of the plane at n distinct rational points.
// Numerical classes stand in for linear-equivalence classes: the divisor
// class group here is the free lattice on H, E_1..E_n with the diagonal
// form (1, -1, ..., -1), so class equality implements "~" and "~_Q".
// Sign convention: D = a*H - sum m_i E_i, so interpolation multiplicities
// m_i are nonnegative for effective conditions and K has m = (-1,...,-1).

struct SurfaceDesc {
  Field field;
  std::vector<ProjPoint> centers;  // pairwise distinct, normalized
  int n = 0;
  bool is_langer = false;  // centers == all plane points in canonical order
};

using Surface = std::shared_ptr<const SurfaceDesc>;

Surface make_surface(const Field& f, std::vector<ProjPoint> centers);

// blowup of PG(2,q) at all q^2+q+1 rational points, canonical center order
Surface langer_surface(int64_t q);

// factor a prime power; throws if q is not one
void prime_power(int64_t q, int64_t* p, int* e);

struct DivClass {
  Surface surface;
  Rat a;               // coefficient of f*H
  std::vector<Rat> m;  // length n
};

DivClass div_zero(const Surface& s);
DivClass div_H(const Surface& s);
DivClass div_E(const Surface& s, int i);
DivClass div_K(const Surface& s);
DivClass div_make(const Surface& s, Rat a, std::vector<Rat> m);

DivClass operator+(const DivClass& x, const DivClass& y);
DivClass operator-(const DivClass& x, const DivClass& y);
DivClass operator-(const DivClass& x);
DivClass operator*(const Rat& c, const DivClass& x);
bool operator==(const DivClass& x, const DivClass& y);
bool operator!=(const DivClass& x, const DivClass& y);

bool same_surface(const Surface& a, const Surface& b);
bool is_integral(const DivClass& d);

// a1*a2 - sum m1_i*m2_i, exact
Rat intersect(const DivClass& x, const DivClass& y);

// Riemann-Roch Euler characteristic chi(D) = 1 + D.(D-K)/2; requires D
// integral and asserts the result is an integer.
Rat euler_char(const DivClass& d);

// The named classes on a Langer surface.
struct StandardClasses {
  Surface S;
  DivClass H, K, B, Delta, M;
  std::vector<DivClass> E;   // exceptional curves, center order
  std::vector<DivClass> Lp;  // strict transforms of the lines, line order
};

StandardClasses standard_classes(const Surface& s, const Incidence& inc);

// Numerical data of the contraction g: X -> Y of all L'_j.
struct ContractionData {
  Rat coeff;        // the c with g*K_Y = K_X + c * sum L'_j; equals 1 - 2/q
  BigInt ky_lhs;    // q^2+q+1      in (q^2+q+1) K_Y ~ (q^2-2q-2) sum E_i^Y
  BigInt ky_rhs;    // q^2-2q-2
  int rho_y = 0;    // 1
  bool klt = false;           // coeff < 1
  bool canonical = false;     // coeff <= 0, iff q = 2
  bool ky_ample = false;         // q^2-2q-2 > 0, iff q >= 3
  bool minus_ky_ample = false;   // q^2-2q-2 < 0, iff q = 2
};

ContractionData contraction_data(const Surface& s, const StandardClasses& cls);

}  // namespace langerlab
