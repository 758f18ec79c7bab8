#pragma once

#include <string>
#include <vector>

#include "langerlab/lattice.hpp"

namespace langerlab {

// The q = 2 Mori cone: Diophantine enumeration of negative classes,
// mechanical exclusion by the incidence arguments, and the 14 generators.
//
// The enumeration certifies classes, not curves: irreducibility of the E_i
// and L'_j comes from the construction (exceptionals and strict transforms
// of lines); excluded classes are shown non-representable by an irreducible
// curve. Curves outside the enumerated Diophantine solution set cannot
// exist: -K_X nef and big forces C^2 >= -2 for q = 2, and C^2, K.C then pin
// the solution space.

struct CurveCandidate {
  enum class Status { realized_E, realized_L, excluded, undetermined };

  DivClass cls;  // integer entries
  int64_t selfint = 0;
  int64_t kdot = 0;
  Status status = Status::undetermined;
  std::string reason;     // exclusion reason, empty otherwise
  int witness_line = -1;  // line index backing an exclusion, when one exists
};

// max degree of f_*(C) for C^2 = -1 resp. -2, re-derived by running the
// Schwarz inequality over the integers; returns 3 resp. 2
struct DegreeBound {
  int bound = 0;
  std::string inequality;  // the instance that fails at bound+1
};
DegreeBound degree_bound(int selfint);

// all integer vectors (a; m_1..m_7) with C^2 in {-1, -2} and the adjunction
// constraint, 0 <= a <= degree_bound; no symmetry reduction
std::vector<CurveCandidate> enumerate_candidates(const Surface& s);

// apply the exclusion arguments to one candidate
void exclude(CurveCandidate& c, const Incidence& inc);

struct ConeResult {
  std::vector<DivClass> generators;  // E_1..E_7 then L'_1..L'_7
  std::vector<CurveCandidate> candidates;
  int total = 0, realized = 0, excluded = 0, undetermined = 0;
  // dual checks
  bool h_pairings_ok = false;       // H.C >= 0 for all generators, 0 exactly on the E_i
  bool minus_k_pairings_ok = false; // -K.C >= 0, 0 exactly on the L'_j
};

// refuses (invalid_argument) when q != 2 or undetermined candidates remain
ConeResult cone_generators(const Surface& s, const Incidence& inc);

}  // namespace langerlab
