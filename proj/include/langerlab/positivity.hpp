#pragma once

#include <string>
#include <vector>

#include "langerlab/lattice.hpp"

namespace langerlab {

// Positivity certificates for the hypotheses of the vanishing
// counterexample: klt-ness of (X, Delta), nef-and-bigness of B - Delta,
// and the ample-perturbation hypothesis for q = 2. Nefness is certified,
// never decided: for q > 2 the full Mori cone is unknown to the library,
// so "inconclusive" is an honest third verdict.

struct BoundaryComponent {
  DivClass cls;
  Rat coeff;
};

// Boundary of pairwise disjoint smooth rational curves; the geometric flags
// are verified at construction (C^2 < 0, C.C' = 0, C^2 + C.K = -2) and
// violations refuse rather than report false.
struct PairDesc {
  Surface S;
  std::vector<BoundaryComponent> boundary;
};

PairDesc make_pair_desc(const Surface& s, std::vector<BoundaryComponent> boundary);

struct KltCertificate {
  bool klt = false;
  std::vector<Rat> coefficients;
  bool disjoint_verified = false;
  bool adjunction_verified = false;
  std::string note;
};

// valid only for the flagged disjoint-smooth-rational geometry; klt iff
// every coefficient < 1
KltCertificate is_klt_disjoint_snc(const PairDesc& pair);

enum class NefBigMode { pullback_decomposition, full_cone_q2 };
enum class CertVerdict { certified, inconclusive };

struct NefBigCertificate {
  CertVerdict verdict = CertVerdict::inconclusive;
  bool nef = false;
  bool big = false;
  std::string route;
  std::vector<Rat> generator_pairings;  // full-cone mode
  Rat self_intersection;
  std::string note;
};

// full_cone_q2 needs the 14 generators from the cone module
NefBigCertificate nef_big_certificate(const DivClass& d, NefBigMode mode,
                                      const std::vector<DivClass>* cone_generators = nullptr);

struct AmplePerturbation {
  Rat epsilon;       // largest 1/2^s, s <= 20, passing every strict inequality
  int s = 0;
  std::vector<Rat> generator_pairings;  // (B - Delta - eps*sumE) . C for the 14 generators
  Rat self_intersection;
};

// q = 2 only (the cone is certified there); Kleiman's criterion relative to
// the verified cone
AmplePerturbation ample_perturbation_q2(const StandardClasses& cls,
                                        const std::vector<DivClass>& generators);

}  // namespace langerlab
