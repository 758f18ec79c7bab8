#include "langerlab/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace langerlab {

namespace {

void require_q2(const Surface& s) {
  if (!s->is_langer || s->field->size != 2)
    throw std::invalid_argument("cone determination is established for q = 2 only");
}

int64_t isqrt_floor(int64_t v) {
  int64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

DegreeBound degree_bound(int selfint) {
  if (selfint != -1 && selfint != -2)
    throw std::invalid_argument("degree bound derived only for C^2 in {-1, -2}");
  // adjunction on a smooth rational curve: K.C = -2 - C^2
  int64_t kdot = -2 - selfint;
  DegreeBound out;
  // K.C = -3a + sum m_i  =>  sum m_i = 3a + K.C
  // sum m_i^2 = a^2 - C^2; Schwarz: (sum m_i)^2 <= 7 * sum m_i^2
  int64_t a = 0;
  while (true) {
    int64_t next = a + 1;
    int64_t lhs = (3 * next + kdot) * (3 * next + kdot);
    int64_t rhs = 7 * (next * next - selfint);
    if (lhs > rhs) {
      out.bound = static_cast<int>(a);
      out.inequality = "(3*" + std::to_string(next) + " + " + std::to_string(kdot) + ")^2 = " +
                       std::to_string(lhs) + " > " + std::to_string(rhs) + " = 7*(" +
                       std::to_string(next) + "^2 + " + std::to_string(-selfint) + ")";
      return out;
    }
    ++a;
  }
}

std::vector<CurveCandidate> enumerate_candidates(const Surface& s) {
  require_q2(s);
  const int n = 7;
  std::vector<CurveCandidate> out;

  for (int selfint : {-1, -2}) {
    int64_t kdot = -2 - selfint;
    int bound = degree_bound(selfint).bound;
    for (int a = 0; a <= bound; ++a) {
      int64_t sum_target = 3 * a + kdot;       // sum m_i
      int64_t sq_target = a * a - selfint;     // sum m_i^2
      int64_t maxabs = isqrt_floor(sq_target);
      std::vector<int64_t> m(n, 0);
      // depth-first over the 7 multiplicities
      auto rec = [&](auto&& self, int idx, int64_t sum, int64_t sq) -> void {
        if (idx == n) {
          if (sum != sum_target || sq != sq_target) return;
          CurveCandidate c;
          std::vector<Rat> mm(n);
          for (int i = 0; i < n; ++i) mm[i] = m[i];
          c.cls = div_make(s, a, std::move(mm));
          c.selfint = selfint;
          c.kdot = kdot;
          out.push_back(std::move(c));
          return;
        }
        int remaining = n - idx;
        for (int64_t v = -maxabs; v <= maxabs; ++v) {
          int64_t nsq = sq + v * v;
          if (nsq > sq_target) continue;
          // remaining entries can move the sum by at most maxabs each
          int64_t nsum = sum + v;
          int64_t slack = static_cast<int64_t>(remaining - 1) * maxabs;
          if (nsum - slack > sum_target || nsum + slack < sum_target) continue;
          m[idx] = v;
          self(self, idx + 1, nsum, nsq);
        }
        m[idx] = 0;
      };
      rec(rec, 0, 0, 0);
    }
  }
  return out;
}

void exclude(CurveCandidate& c, const Incidence& inc) {
  const int n = 7;
  int64_t a = to_i64(c.cls.a);
  std::vector<int64_t> m(n);
  for (int i = 0; i < n; ++i) m[i] = to_i64(c.cls.m[i]);

  // exceptional pattern: a = 0, one m_i = -1
  if (a == 0) {
    int negs = 0, idx = -1;
    bool others_zero = true;
    for (int i = 0; i < n; ++i) {
      if (m[i] == -1) {
        ++negs;
        idx = i;
      } else if (m[i] != 0) {
        others_zero = false;
      }
    }
    if (negs == 1 && others_zero && c.selfint == -1) {
      c.status = CurveCandidate::Status::realized_E;
      c.witness_line = idx;  // center index here
      return;
    }
    c.status = CurveCandidate::Status::excluded;
    c.reason = "degree 0 class without the exceptional pattern";
    return;
  }

  // an irreducible curve other than an exceptional has m_i >= 0
  for (int i = 0; i < n; ++i)
    if (m[i] < 0) {
      c.status = CurveCandidate::Status::excluded;
      c.reason = "negative multiplicity at a non-exceptional class";
      return;
    }

  std::vector<int> simple, doubled;
  bool clean = true;
  for (int i = 0; i < n; ++i) {
    if (m[i] == 1)
      simple.push_back(i);
    else if (m[i] == 2)
      doubled.push_back(i);
    else if (m[i] != 0)
      clean = false;
  }
  if (!clean) {
    c.status = CurveCandidate::Status::undetermined;
    return;
  }

  if (a == 1 && doubled.empty()) {
    // a degree-1 curve is a line; the assigned points must all sit on one F_2-line
    std::optional<int> container = line_avoiding(inc, {}, simple);
    if (container) {
      int extra = 0;
      for (int i = 0; i < n; ++i)
        if (inc.is_on(i, *container) && !std::count(simple.begin(), simple.end(), i)) ++extra;
      if (extra == 0) {
        c.status = CurveCandidate::Status::realized_L;
        c.witness_line = *container;
        return;
      }
      c.status = CurveCandidate::Status::excluded;
      c.witness_line = *container;
      c.reason = "the unique line through the assigned points is an F_2-line containing " +
                 std::to_string(extra) + " additional blown-up point(s)";
      return;
    }
    c.status = CurveCandidate::Status::excluded;
    c.reason = "assigned points are not collinear; no degree-1 curve passes through all of them";
    return;
  }

  if (a == 2 && doubled.empty()) {
    // find an F_2-line avoiding the complementary points: its three points
    // lie on the conic class, beating the Bezout bound 2
    std::vector<int> complement;
    for (int i = 0; i < n; ++i)
      if (!std::count(simple.begin(), simple.end(), i)) complement.push_back(i);
    std::optional<int> witness = line_avoiding(inc, complement, {});
    if (witness) {
      c.status = CurveCandidate::Status::excluded;
      c.witness_line = *witness;
      c.reason = "an F_2-line avoiding the complementary points meets the conic in >= 3 of the "
                 "assigned points (Bezout bound 2)";
      return;
    }
    c.status = CurveCandidate::Status::undetermined;
    return;
  }

  if (a == 3 && doubled.size() == 1 && simple.size() == 6) {
    // any line through the double point carries two more assigned points:
    // intersection >= 2+1+1 = 4 > 3
    int witness = lines_through(inc, doubled[0]).front();
    int64_t mult_sum = 0;
    for (int i = 0; i < n; ++i)
      if (inc.is_on(i, witness)) mult_sum += m[i];
    if (mult_sum > 3 * 1) {
      c.status = CurveCandidate::Status::excluded;
      c.witness_line = witness;
      c.reason = "a line through the double point meets the cubic with multiplicity " +
                 std::to_string(mult_sum) + " > 3 (Bezout)";
      return;
    }
    c.status = CurveCandidate::Status::undetermined;
    return;
  }

  c.status = CurveCandidate::Status::undetermined;
}

ConeResult cone_generators(const Surface& s, const Incidence& inc) {
  require_q2(s);
  ConeResult out;
  out.candidates = enumerate_candidates(s);
  for (CurveCandidate& c : out.candidates) exclude(c, inc);

  std::vector<const CurveCandidate*> realized_E(7, nullptr), realized_L(7, nullptr);
  for (const CurveCandidate& c : out.candidates) {
    ++out.total;
    switch (c.status) {
      case CurveCandidate::Status::realized_E:
        ++out.realized;
        realized_E[c.witness_line] = &c;
        break;
      case CurveCandidate::Status::realized_L:
        ++out.realized;
        realized_L[c.witness_line] = &c;
        break;
      case CurveCandidate::Status::excluded:
        ++out.excluded;
        break;
      case CurveCandidate::Status::undetermined:
        ++out.undetermined;
        break;
    }
  }
  if (out.undetermined > 0)
    throw std::logic_error("undetermined curve candidates remain; cone not certified");
  for (int i = 0; i < 7; ++i) {
    if (!realized_E[i] || !realized_L[i])
      throw std::logic_error("missing realized generator");
    out.generators.push_back(realized_E[i]->cls);
  }
  for (int i = 0; i < 7; ++i) out.generators.push_back(realized_L[i]->cls);

  DivClass H = div_H(s);
  DivClass minusK = -div_K(s);
  out.h_pairings_ok = true;
  out.minus_k_pairings_ok = true;
  for (size_t g = 0; g < out.generators.size(); ++g) {
    Rat hv = intersect(H, out.generators[g]);
    Rat kv = intersect(minusK, out.generators[g]);
    bool is_exceptional = g < 7;
    if (hv < 0 || (is_exceptional ? hv != 0 : hv <= 0)) out.h_pairings_ok = false;
    if (kv < 0 || (is_exceptional ? kv <= 0 : kv != 0)) out.minus_k_pairings_ok = false;
  }
  return out;
}

}  // namespace langerlab
