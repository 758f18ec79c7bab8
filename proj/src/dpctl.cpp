#include "langerlab/dpctl.hpp"

#include <stdexcept>

#include "langerlab/rng.hpp"

namespace langerlab {

GenPosResult general_position_check(const Field& f, const std::vector<ProjPoint>& points) {
  size_t r = points.size();
  if (r < 1 || r > 7) throw std::invalid_argument("general position check supports 1..7 points");
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j)
      if (points[i] == points[j]) throw std::invalid_argument("points must be distinct");

  GenPosResult out;
  // no 3 collinear: exact 3x3 determinants
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j)
      for (size_t k = j + 1; k < r; ++k) {
        const ProjPoint &a = points[i], &b = points[j], &c = points[k];
        FieldElem det = a.x[0] * (b.x[1] * c.x[2] - b.x[2] * c.x[1]) -
                        a.x[1] * (b.x[0] * c.x[2] - b.x[2] * c.x[0]) +
                        a.x[2] * (b.x[0] * c.x[1] - b.x[1] * c.x[0]);
        if (det.is_zero()) {
          out.kind = "collinear-triple";
          out.witness = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
          return out;
        }
      }
  // no 6 on a conic: rank of the 6x6 conic-evaluation minor
  if (r >= 6) {
    std::vector<std::array<int, 3>> mons{{2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                                         {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    std::vector<int> idx(6);
    auto check6 = [&](const std::vector<int>& sel) {
      GFMatrix m(f, 6, 6);
      for (int row = 0; row < 6; ++row) {
        const ProjPoint& p = points[sel[row]];
        for (int col = 0; col < 6; ++col)
          m.set(row, col,
                fe_pow(p.x[0], mons[col][0]) * fe_pow(p.x[1], mons[col][1]) *
                    fe_pow(p.x[2], mons[col][2]));
      }
      return m.rank() == 6;
    };
    // all 6-subsets (at most 7 of them)
    std::vector<int> sel;
    auto rec = [&](auto&& self, size_t start) -> bool {
      if (sel.size() == 6) {
        if (!check6(sel)) {
          out.kind = "six-on-a-conic";
          out.witness = sel;
          return false;
        }
        return true;
      }
      for (size_t i = start; i < r; ++i) {
        sel.push_back(static_cast<int>(i));
        bool ok = self(self, i + 1);
        sel.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!rec(rec, 0)) return out;
  }
  out.ok = true;
  return out;
}

GeneralConfig sample_config(int r, const Field& f, uint64_t seed, int budget) {
  if (r < 1 || r > 7) throw std::invalid_argument("sample_config supports 1..7 points");
  SplitMix64 rng(derive_seed(seed, 0x5eedc0de));
  for (int attempt = 1; attempt <= budget; ++attempt) {
    std::vector<ProjPoint> pts;
    while (static_cast<int>(pts.size()) < r) {
      FieldElem a = decode(f, static_cast<int64_t>(rng.below(f->size)));
      FieldElem b = decode(f, static_cast<int64_t>(rng.below(f->size)));
      FieldElem c = decode(f, static_cast<int64_t>(rng.below(f->size)));
      if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
      ProjPoint p = make_point(a, b, c);
      bool dup = false;
      for (const ProjPoint& q : pts)
        if (q == p) dup = true;
      if (!dup) pts.push_back(p);
    }
    if (general_position_check(f, pts).ok)
      return GeneralConfig{f, std::move(pts), seed, attempt};
  }
  throw std::runtime_error("sampling budget exhausted: no general configuration of " +
                           std::to_string(r) + " points over GF(" + std::to_string(f->size) + ")");
}

std::vector<DivClass> minus_one_classes(const Surface& s) {
  int r = s->n;
  if (r < 1 || r > 7) throw std::invalid_argument("(-1)-class enumeration supports 1..7 points");
  std::vector<DivClass> out;
  // C^2 = -1 and K.C = -1: sum m = 3a - 1, sum m^2 = a^2 + 1, within the
  // Schwarz bound (3a-1)^2 <= r(a^2+1)
  for (int64_t a = 0;; ++a) {
    if ((3 * a - 1) * (3 * a - 1) > static_cast<int64_t>(r) * (a * a + 1) && a > 0) break;
    int64_t sum_target = 3 * a - 1;
    int64_t sq_target = a * a + 1;
    int64_t maxabs = 0;
    while ((maxabs + 1) * (maxabs + 1) <= sq_target) ++maxabs;
    std::vector<int64_t> m(r, 0);
    auto rec = [&](auto&& self, int idx, int64_t sum, int64_t sq) -> void {
      if (idx == r) {
        if (sum != sum_target || sq != sq_target) return;
        // curve classes: exceptional pattern for a = 0, nonnegative otherwise
        if (a == 0) {
          int negs = 0;
          for (int64_t v : m)
            if (v < 0) ++negs;
          if (negs != 1) return;
        } else {
          for (int64_t v : m)
            if (v < 0) return;
        }
        std::vector<Rat> mm(r);
        for (int i = 0; i < r; ++i) mm[i] = m[i];
        out.push_back(div_make(s, a, std::move(mm)));
        return;
      }
      for (int64_t v = -maxabs; v <= maxabs; ++v) {
        int64_t nsq = sq + v * v;
        if (nsq > sq_target) continue;
        int64_t slack = static_cast<int64_t>(r - idx - 1) * maxabs;
        if (sum + v - slack > sum_target || sum + v + slack < sum_target) continue;
        m[idx] = v;
        self(self, idx + 1, sum + v, nsq);
      }
      m[idx] = 0;
    };
    rec(rec, 0, 0, 0);
  }
  return out;
}

ScanReport kvv_scan(const GeneralConfig& config, int trials, uint64_t seed) {
  int r = static_cast<int>(config.points.size());
  if (r < 2 || r > 7)
    throw std::invalid_argument("the scan's nef test is sound for r in 2..7 only");
  if (!general_position_check(config.field, config.points).ok)
    throw std::invalid_argument("configuration is not in general position");

  Surface s = make_surface(config.field, config.points);
  DivClass K = div_K(s);
  std::vector<DivClass> gens = minus_one_classes(s);

  ScanReport rep;
  rep.r = r;
  rep.field_size = config.field->size;
  rep.trials = trials;
  rep.seed = seed;
  rep.k_squared = to_i64(intersect(K, K));
  rep.minus_one_count = static_cast<int>(gens.size());
  if (rep.k_squared <= 0) throw std::logic_error("K^2 <= 0 on a del Pezzo candidate");
  for (const DivClass& c : gens)
    if (intersect(-K, c) != 1) throw std::logic_error("-K.C != 1 on a (-1)-class");

  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, static_cast<uint64_t>(t)));
    ScanTrial trial;
    bool found = false;
    for (int attempt = 1; attempt <= 2000 && !found; ++attempt) {
      int64_t a = rng.range(0, 6);
      std::vector<Rat> m(r);
      for (int i = 0; i < r; ++i) m[i] = rng.range(-1, 2);
      DivClass D = div_make(s, a, std::move(m));
      DivClass N = D - K;
      bool nef = true;
      for (const DivClass& c : gens)
        if (intersect(N, c) < 0) {
          nef = false;
          break;
        }
      if (!nef || intersect(N, N) <= 0) continue;
      CohomologyTriple coh = cohomology(s, D, K);
      trial.D = D;
      trial.h0 = coh.h0;
      trial.h1 = coh.h1;
      trial.h2 = coh.h2;
      trial.attempts = attempt;
      found = true;
    }
    if (!found) throw std::runtime_error("kvv_scan: no nef-and-big D - K found within budget");
    if (trial.h1 != 0) ++rep.h1_nonzero;
    if (trial.h2 != 0) ++rep.h2_nonzero;
    rep.data.push_back(std::move(trial));
  }
  return rep;
}

}  // namespace langerlab
