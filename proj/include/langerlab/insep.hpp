#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "langerlab/lattice.hpp"
#include "langerlab/linsys.hpp"
#include "langerlab/poly.hpp"

namespace langerlab {

// The degree-(q+1) forms spanning the image of H^0(X, O(M)) in the plane,
// the member classification over F_q, the explicit fiber solver for the
// induced map Psi, and seeded fiber censuses (degree-q universal
// homeomorphism evidence).

// gamma*(x^q y - x y^q) + alpha*(y^q z - y z^q) + beta*(z^q x - z x^q)
struct MForm {
  Field field;  // coefficients may live in an extension of F_q
  int64_t q = 0;
  FieldElem alpha, beta, gamma;
};

MForm make_mform(const Field& f, int64_t q, const FieldElem& alpha, const FieldElem& beta,
                 const FieldElem& gamma);
Poly3 mform_poly(const MForm& m);

// the three basis forms x^q y - x y^q, y^q z - y z^q, z^q x - z x^q over f
std::array<Poly3, 3> m_basis_forms(const Field& f, int64_t q);

struct MBasisCheck {
  bool vanish_at_all_points = false;
  bool linearly_independent = false;
  bool h0_equals_3 = false;
  bool class_identity = false;  // M == q*E_i + sum of L' through P_i, every i
  int64_t h0_value = 0;
  bool ok() const {
    return vanish_at_all_points && linearly_independent && h0_equals_3 && class_identity;
  }
};

MBasisCheck m_basis_check(const Surface& s, const Incidence& inc, const StandardClasses& cls);

struct BaseLocusCheck {
  bool zero_set_is_fq_points = false;  // common zeros over F_{q^k} = the F_q-points
  bool linear_parts_rank2 = false;     // at every F_q-point
  int64_t points_scanned = 0;
  int64_t common_zeros = 0;
  bool ok() const { return zero_set_is_fq_points && linear_parts_rank2; }
};

// hard failure (logic_error) on a common zero off the F_q-points
BaseLocusCheck base_locus_check(int64_t q, int k);

struct MemberClass {
  int center_index = -1;
  std::vector<int> line_indices;
  FieldElem scale;  // form == scale * product of the line forms
};

// coefficients must lie in F_q; hard failure if the form does not factor
// into the q+1 lines through the q-th-root point
MemberClass classify_member(const Incidence& inc, const MForm& m);

// the q^2+q+1 members over F_q, canonical coefficient order
std::vector<MForm> all_members(const Field& f, int64_t q);

// the unique singular point [alpha^{1/q} : beta^{1/q} : gamma^{1/q}];
// verified singular by local expansion (no linear part) and the member
// verified smooth at up to `smooth_samples` other points of the curve
ProjPoint member_singular_point(const MForm& m, uint64_t sample_seed, int smooth_samples = 8);

struct IntegralityEvidence {
  int64_t q = 0;
  int64_t field_size = 0;  // GF(q^4)
  int samples = 0;
  int integral_count = 0;       // certified geometrically integral
  int line_factored_count = 0;  // special members hit by the sampler
  int64_t expected_points = 0;  // q^4 + 1
  bool ok() const { return integral_count >= 1; }
};

// Sampled evidence that a general member is integral, q in {2, 3}. Members
// are drawn over GF(q^4) with truly quartic coefficient classes; every
// member with coefficients in GF(q^2) is genuinely reducible. A sample is
// certified integral when no rational line lies inside it and its rational
// point count equals q^4 + 1: each Galois-stable component split of a cubic
// or quartic with a unique geometric singular point violates one of the two.
IntegralityEvidence member_integrality_evidence(int64_t q, int samples, uint64_t seed);

struct PsiValue {
  bool excluded = false;  // point on the union of the F_q-lines through the origin
  FieldElem alpha, beta;
};

// (u, v) -> ((v^q - v)/(u^q v - u v^q), (u - u^q)/(u^q v - u v^q))
PsiValue psi_eval(int64_t q, const FieldElem& u, const FieldElem& v);

struct FiberSolution {
  bool degenerate = false;
  std::string reason;
  FieldElem u, v;
};

// closed-form fiber of Psi over (alpha, beta); the proof's "general point"
// conditions are the explicit finite list of denominator checks, and inputs
// failing any of them are routed to `degenerate` rather than guessed at
FiberSolution fiber_solve(int64_t q, const FieldElem& alpha, const FieldElem& beta);

struct FiberCensus {
  int64_t q = 0;
  int ext = 0;  // k
  int samples = 0;
  uint64_t seed = 0;
  std::map<int, int> histogram;  // fiber size -> count, over non-degenerate targets
  int degenerate_count = 0;
  int64_t domain_pairs = 0;  // |F_{q^{2k}}|^2 searched per target
  bool solver_matched = true;
};

// N seeded non-degenerate targets in F_{q^{2k}}, preimages brute-forced over
// F_{q^{2k}}^2 (targets in F_{q^k} itself all fail the general-point
// conditions when q = 2); per-target seeds split deterministically, so the
// result is independent of the thread count
FiberCensus fiber_census(int64_t q, int k, int samples, uint64_t seed, int threads = 1);

}  // namespace langerlab
