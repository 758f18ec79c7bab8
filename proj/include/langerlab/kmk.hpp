#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "langerlab/poly.hpp"

namespace langerlab {

// Projectivities moving 4-point frames, uniqueness of the strange conic in
// characteristic 2, and the lattice/incidence-level identification of the
// degree-3 Keel-McKernan surface with the q = 2 blowup. Infinitely near
// points are handled purely at the lattice level; the tangent-direction
// inputs are verified as plane statements through the conic's gradient.

struct Projectivity {
  Field field;
  std::array<std::array<FieldElem, 3>, 3> m;  // acts by matrix * column
};

ProjPoint apply(const Projectivity& s, const ProjPoint& p);
Projectivity compose(const Projectivity& a, const Projectivity& b);
Projectivity inverse(const Projectivity& s);

bool three_collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// sigma with sigma(P_i) = Q_i projectively; refuses when 3 of either frame
// are collinear
Projectivity find_projectivity(const std::array<ProjPoint, 4>& P,
                               const std::array<ProjPoint, 4>& Q);

// conic c0 x^2 + c1 y^2 + c2 z^2 + c3 xy + c4 xz + c5 yz, normalized
struct Conic {
  Field field;
  std::array<FieldElem, 6> c;
};

Conic make_conic(const Field& f, std::array<FieldElem, 6> coeffs);
Poly3 conic_poly(const Conic& c);
FieldElem conic_eval(const Conic& c, const ProjPoint& p);
bool conic_smooth(const Conic& c);
// tangent line at a point of a smooth conic (the gradient line)
ProjLine conic_tangent(const Conic& c, const ProjPoint& p);

// all smooth conics through P1, P2, P3 whose tangents there pass through Q;
// char 2 only; expected output length 1
std::vector<Conic> strange_conics(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                                  const ProjPoint& q);

std::vector<ProjPoint> conic_rational_points(const Conic& c);

// Rank-8 lattice of the degree-3 Keel-McKernan surface, basis
// (H, eQ, e1, e1', e2, e2', e3, e3') with the diagonal form (1, -1 x7).
// The blowup tower is handled purely at this level; infinitely near points
// never reach the interpolation machinery.
struct KMLattice {
  using Vec = std::array<int64_t, 8>;

  static int64_t form(const Vec& a, const Vec& b);
  static Vec k_class();  // -3H + eQ + sum(e_i + e_i'), squares to 2
  // { eQ, e1', e2', e3', H-e1-e2, H-e1-e3, H-e2-e3 }
  static std::array<Vec, 7> candidate_classes();
};

struct KMLatticeReport {
  bool classes_ok = false;           // 7 classes: self -1, K-degree -1, pairwise 0
  bool incidence_ok = false;         // F_2 facts justifying the classes
  bool contraction_ok = false;       // rank drops to 1, image of K squares to 9
  bool isometry_ok = false;          // form-preserving map onto the q=2 lattice fixing K
  int64_t k_squared = 0;             // 2
  int64_t contracted_k_squared = 0;  // 9
  int rank_after = 0;                // 1
  bool ok() const { return classes_ok && incidence_ok && contraction_ok && isometry_ok; }
};

KMLatticeReport km_lattice_check();

struct StepIndependentReport {
  int64_t field_size = 0;
  int conic_points = 0;
  int pairs_tested = 0;
  bool all_ok = false;
};

// any two valid point triples on the strange conic are moved to one another
// by a projectivity fixing Q, and that projectivity preserves the conic
StepIndependentReport step_independent_check(const Field& f);

}  // namespace langerlab
