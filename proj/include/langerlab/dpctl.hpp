#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "langerlab/linsys.hpp"

namespace langerlab {

// Empirical vanishing scan on smooth del Pezzo surfaces (blowups at r <= 7
// points in general position), the positive control next to the Langer
// configuration. r is restricted to 2..7 so the Mori cone is exactly the
// (-1)-class cone and nefness is decidable by finite pairing.

struct GenPosResult {
  bool ok = false;
  std::string kind;          // "collinear-triple" or "six-on-a-conic" on failure
  std::vector<int> witness;  // offending subset
};

GenPosResult general_position_check(const Field& f, const std::vector<ProjPoint>& points);

struct GeneralConfig {
  Field field;
  std::vector<ProjPoint> points;
  uint64_t seed = 0;
  int attempts = 0;
};

// Seeded rejection sampling until the general-position certificates pass.
// Frames (r = 4) exist over every field; larger r needs room: GF(32) is
// comfortable for every r <= 7, while small planes admit no general
// configuration at all (PG(2,2) has only 7 points, all on lines of 3) and
// the sampler then reports budget exhaustion.
GeneralConfig sample_config(int r, const Field& f, uint64_t seed, int budget = 20000);

// all integer (-1)-classes C^2 = K.C = -1 on a blowup at r points; for a
// general-position del Pezzo these generate the Mori cone (r in 2..7)
std::vector<DivClass> minus_one_classes(const Surface& s);

struct ScanTrial {
  DivClass D;
  int64_t h0 = 0, h1 = 0, h2 = 0;
  int attempts = 0;  // rejection draws used to find a nef-and-big D - K
};

struct ScanReport {
  int r = 0;
  int64_t field_size = 0;
  int trials = 0;
  uint64_t seed = 0;
  int64_t k_squared = 0;
  int minus_one_count = 0;
  std::vector<ScanTrial> data;
  int h1_nonzero = 0, h2_nonzero = 0;  // falsification events, expected 0
};

// seeded random integral D with D - K nef (paired against the enumerated
// (-1)-classes) and (D - K)^2 > 0; records h1, h2 of D
ScanReport kvv_scan(const GeneralConfig& config, int trials, uint64_t seed);

}  // namespace langerlab
