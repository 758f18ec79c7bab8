#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "langerlab/gf.hpp"

namespace langerlab {

// PG(2,q): points and lines as normalized coordinate triples (leftmost
// nonzero coordinate equal to 1), which gives a unique representative per
// projective class and hence stable indices P_i, L_j everywhere.

struct ProjPoint {
  std::array<FieldElem, 3> x;
};

struct ProjLine {
  std::array<FieldElem, 3> a;  // the linear form a0*x + a1*y + a2*z
};

ProjPoint make_point(const FieldElem& x0, const FieldElem& x1, const FieldElem& x2);
ProjLine make_line(const FieldElem& a0, const FieldElem& a1, const FieldElem& a2);

bool operator==(const ProjPoint& a, const ProjPoint& b);
bool operator!=(const ProjPoint& a, const ProjPoint& b);
bool operator==(const ProjLine& a, const ProjLine& b);

bool point_less(const ProjPoint& a, const ProjPoint& b);  // canonical order
int leftmost_nonzero(const ProjPoint& p);

FieldElem line_eval(const ProjLine& l, const ProjPoint& p);
bool on_line(const ProjPoint& p, const ProjLine& l);

// all q^2+q+1 normalized points, in canonical order
std::vector<ProjPoint> all_proj_points(const Field& f);
void for_each_proj_point(const Field& f, const std::function<void(const ProjPoint&)>& fn);

struct Incidence {
  Field field;
  int64_t q = 0;
  std::vector<ProjPoint> points;  // canonical order
  std::vector<ProjLine> lines;    // canonical order
  std::vector<uint8_t> on;        // points x lines

  bool is_on(int pi, int li) const { return on[static_cast<size_t>(pi) * lines.size() + li] != 0; }
  int point_index(const ProjPoint& p) const;  // -1 if absent
  int line_index(const ProjLine& l) const;

 private:
  friend Incidence enumerate_plane(const Field&);
  std::map<std::array<int64_t, 3>, int> point_idx_, line_idx_;
};

Incidence enumerate_plane(const Field& f);

// sorted ascending indices of the q+1 lines through P
std::vector<int> lines_through(const Incidence& inc, int point_index);
std::vector<int> lines_through(const Incidence& inc, const ProjPoint& p);

// true iff the lines through P cover every point of the plane
bool cover_check(const Incidence& inc, const ProjPoint& p);

// smallest-index line containing every point of `through` and no point of `avoid`
std::optional<int> line_avoiding(const Incidence& inc, const std::vector<int>& avoid,
                                 const std::vector<int>& through);

// axioms of a projective plane of order q
bool plane_axioms_ok(const Incidence& inc, std::string* why = nullptr);

}  // namespace langerlab
