#include "langerlab/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace langerlab {

namespace {

std::array<FieldElem, 3> normalize(std::array<FieldElem, 3> v) {
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) throw std::invalid_argument("projective triple must be nonzero");
  FieldElem inv = fe_inv(v[lead]);
  for (int i = 0; i < 3; ++i) v[i] = v[i] * inv;
  return v;
}

std::array<int64_t, 3> codes(const std::array<FieldElem, 3>& v) {
  return {code(v[0]), code(v[1]), code(v[2])};
}

bool triple_less(const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    if (elem_less(a[i], b[i])) return true;
    if (elem_less(b[i], a[i])) return false;
  }
  return false;
}

}  // namespace

ProjPoint make_point(const FieldElem& x0, const FieldElem& x1, const FieldElem& x2) {
  return ProjPoint{normalize({x0, x1, x2})};
}

ProjLine make_line(const FieldElem& a0, const FieldElem& a1, const FieldElem& a2) {
  return ProjLine{normalize({a0, a1, a2})};
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  return a.x[0] == b.x[0] && a.x[1] == b.x[1] && a.x[2] == b.x[2];
}
bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
bool operator==(const ProjLine& a, const ProjLine& b) {
  return a.a[0] == b.a[0] && a.a[1] == b.a[1] && a.a[2] == b.a[2];
}

bool point_less(const ProjPoint& a, const ProjPoint& b) { return triple_less(a.x, b.x); }

int leftmost_nonzero(const ProjPoint& p) {
  for (int i = 0; i < 3; ++i)
    if (!p.x[i].is_zero()) return i;
  throw std::invalid_argument("zero projective point");
}

FieldElem line_eval(const ProjLine& l, const ProjPoint& p) {
  return l.a[0] * p.x[0] + l.a[1] * p.x[1] + l.a[2] * p.x[2];
}

bool on_line(const ProjPoint& p, const ProjLine& l) { return line_eval(l, p).is_zero(); }

void for_each_proj_point(const Field& f, const std::function<void(const ProjPoint&)>& fn) {
  const FieldElem zero = fe_zero(f);
  const FieldElem one = fe_one(f);
  std::vector<FieldElem> elems = all_elements(f);
  fn(ProjPoint{{zero, zero, one}});
  for (const FieldElem& c : elems) fn(ProjPoint{{zero, one, c}});
  for (const FieldElem& b : elems)
    for (const FieldElem& c : elems) fn(ProjPoint{{one, b, c}});
}

std::vector<ProjPoint> all_proj_points(const Field& f) {
  std::vector<ProjPoint> out;
  out.reserve(static_cast<size_t>(f->size * f->size + f->size + 1));
  for_each_proj_point(f, [&](const ProjPoint& p) { out.push_back(p); });
  return out;
}

int Incidence::point_index(const ProjPoint& p) const {
  auto it = point_idx_.find(codes(p.x));
  return it == point_idx_.end() ? -1 : it->second;
}

int Incidence::line_index(const ProjLine& l) const {
  auto it = line_idx_.find(codes(l.a));
  return it == line_idx_.end() ? -1 : it->second;
}

Incidence enumerate_plane(const Field& f) {
  if (f->size > 64) throw std::invalid_argument("plane enumeration limited to q <= 64");
  Incidence inc;
  inc.field = f;
  inc.q = f->size;
  inc.points = all_proj_points(f);
  for (const ProjPoint& p : inc.points) inc.lines.push_back(ProjLine{p.x});
  size_t n = inc.points.size();
  inc.on.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i) {
    inc.point_idx_[codes(inc.points[i].x)] = static_cast<int>(i);
    inc.line_idx_[codes(inc.lines[i].a)] = static_cast<int>(i);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (on_line(inc.points[i], inc.lines[j])) inc.on[i * n + j] = 1;
  return inc;
}

std::vector<int> lines_through(const Incidence& inc, int point_index) {
  if (point_index < 0 || point_index >= static_cast<int>(inc.points.size()))
    throw std::invalid_argument("point index out of range");
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(inc.lines.size()); ++j)
    if (inc.is_on(point_index, j)) out.push_back(j);
  return out;
}

std::vector<int> lines_through(const Incidence& inc, const ProjPoint& p) {
  int idx = inc.point_index(p);
  if (idx < 0) throw std::invalid_argument("point is not in the plane");
  return lines_through(inc, idx);
}

bool cover_check(const Incidence& inc, const ProjPoint& p) {
  std::vector<int> ls = lines_through(inc, p);
  std::vector<uint8_t> covered(inc.points.size(), 0);
  for (int j : ls)
    for (size_t i = 0; i < inc.points.size(); ++i)
      if (inc.is_on(static_cast<int>(i), j)) covered[i] = 1;
  return std::all_of(covered.begin(), covered.end(), [](uint8_t v) { return v != 0; });
}

std::optional<int> line_avoiding(const Incidence& inc, const std::vector<int>& avoid,
                                 const std::vector<int>& through) {
  for (int j = 0; j < static_cast<int>(inc.lines.size()); ++j) {
    bool ok = true;
    for (int i : through)
      if (!inc.is_on(i, j)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (int i : avoid)
      if (inc.is_on(i, j)) {
        ok = false;
        break;
      }
    if (ok) return j;
  }
  return std::nullopt;
}

bool plane_axioms_ok(const Incidence& inc, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  int64_t q = inc.q;
  size_t n = inc.points.size();
  if (static_cast<int64_t>(n) != q * q + q + 1 || inc.lines.size() != n)
    return fail("count != q^2+q+1");
  for (size_t j = 0; j < n; ++j) {
    int64_t deg = 0;
    for (size_t i = 0; i < n; ++i) deg += inc.is_on(static_cast<int>(i), static_cast<int>(j));
    if (deg != q + 1) return fail("line " + std::to_string(j) + " has degree != q+1");
  }
  for (size_t i = 0; i < n; ++i) {
    int64_t deg = 0;
    for (size_t j = 0; j < n; ++j) deg += inc.is_on(static_cast<int>(i), static_cast<int>(j));
    if (deg != q + 1) return fail("point " + std::to_string(i) + " has degree != q+1");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t i2 = i + 1; i2 < n; ++i2) {
      int common = 0;
      for (size_t j = 0; j < n; ++j)
        common += inc.is_on(static_cast<int>(i), static_cast<int>(j)) &&
                  inc.is_on(static_cast<int>(i2), static_cast<int>(j));
      if (common != 1) return fail("two points not on exactly one line");
    }
  for (size_t j = 0; j < n; ++j)
    for (size_t j2 = j + 1; j2 < n; ++j2) {
      int common = 0;
      for (size_t i = 0; i < n; ++i)
        common += inc.is_on(static_cast<int>(i), static_cast<int>(j)) &&
                  inc.is_on(static_cast<int>(i), static_cast<int>(j2));
      if (common != 1) return fail("two lines not meeting in exactly one point");
    }
  return true;
}

}  // namespace langerlab
