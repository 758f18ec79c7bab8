#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "langerlab/lattice.hpp"
#include "langerlab/poly.hpp"

namespace langerlab {

// Exact cohomology of line bundles on point blowups. h0 is computed as a
// fat-point interpolation rank over the base field, h2 by Serre duality
// h0(K - D), h1 through the Euler characteristic. All centers are distinct
// plane points, so every h0 in scope is a plane interpolation problem.

struct InterpolationSystem {
  int degree = 0;
  std::vector<std::pair<int, int>> conditions;   // (center index, multiplicity >= 1)
  std::vector<std::array<int, 3>> monomials;     // column order
  GFMatrix matrix;                               // rows = local vanishing conditions
};

// degree-d system imposing multiplicity mult[i] (entries < 1 impose nothing)
// at center i; entries over `ext` when given (centers embedded), else over
// the surface's own field
InterpolationSystem build_interpolation(const Surface& s, int degree,
                                        const std::vector<int64_t>& mult);
InterpolationSystem build_interpolation_over(const Surface& s, int degree,
                                             const std::vector<int64_t>& mult, const Field& ext);

int64_t h0(const Surface& s, const DivClass& d);

struct CohomologyTriple {
  int64_t h0 = 0, h1 = 0, h2 = 0;
  int64_t chi = 0;
  std::string notes;
};

// K must be the canonical class of s
CohomologyTriple cohomology(const Surface& s, const DivClass& d, const DivClass& K);

// recompute h0 with all centers embedded into GF(q^k); true iff unchanged
bool base_change_check(const Surface& s, const DivClass& d, int k);

// plain-text rows of field-element coefficient vectors, one row per condition
std::string dump_matrix(const InterpolationSystem& sys);

}  // namespace langerlab
