#include "langerlab/kmk.hpp"

#include <stdexcept>

namespace langerlab {

namespace {

using Mat3 = std::array<std::array<FieldElem, 3>, 3>;

FieldElem det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 adjugate(const Mat3& m) {
  auto minor = [&](int r, int c) {
    FieldElem vals[4];
    int k = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == r) continue;
      for (int j = 0; j < 3; ++j) {
        if (j == c) continue;
        vals[k++] = m[i][j];
      }
    }
    return vals[0] * vals[3] - vals[1] * vals[2];
  };
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElem v = minor(j, i);  // transpose of cofactors
      if ((i + j) % 2 == 1) v = -v;
      out[i][j] = v;
    }
  return out;
}

std::array<FieldElem, 3> mat_vec(const Mat3& m, const std::array<FieldElem, 3>& v) {
  std::array<FieldElem, 3> out{m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
                               m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
                               m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
  return out;
}

// frame -> standard-frame projectivity, as in the matrix construction:
// columns Q1 Q2 Q3 rescaled so that Q4 becomes [1:1:1]
Projectivity frame_from_standard(const std::array<ProjPoint, 4>& q) {
  const Field& f = q[0].x[0].field;
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = q[j].x[i];
  FieldElem d = det3(m);
  if (d.is_zero()) throw std::invalid_argument("three frame points are collinear");
  Mat3 adj = adjugate(m);
  // [d:e:f] = M^{-1} Q4, up to the determinant factor
  std::array<FieldElem, 3> scale = mat_vec(adj, q[3].x);
  for (int j = 0; j < 3; ++j)
    if (scale[j].is_zero()) throw std::invalid_argument("frame point Q4 lies on a side line");
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m[i][j] * scale[j];
  return Projectivity{f, out};
}

}  // namespace

ProjPoint apply(const Projectivity& s, const ProjPoint& p) {
  auto v = mat_vec(s.m, p.x);
  return make_point(v[0], v[1], v[2]);
}

Projectivity compose(const Projectivity& a, const Projectivity& b) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElem acc = fe_zero(a.field);
      for (int k = 0; k < 3; ++k) acc = acc + a.m[i][k] * b.m[k][j];
      out[i][j] = acc;
    }
  return Projectivity{a.field, out};
}

Projectivity inverse(const Projectivity& s) {
  FieldElem d = det3(s.m);
  if (d.is_zero()) throw std::invalid_argument("singular projectivity");
  Mat3 adj = adjugate(s.m);
  FieldElem inv = fe_inv(d);
  for (auto& row : adj)
    for (auto& v : row) v = v * inv;
  return Projectivity{s.field, adj};
}

bool three_collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  Mat3 m{{{a.x[0], a.x[1], a.x[2]}, {b.x[0], b.x[1], b.x[2]}, {c.x[0], c.x[1], c.x[2]}}};
  return det3(m).is_zero();
}

Projectivity find_projectivity(const std::array<ProjPoint, 4>& P,
                               const std::array<ProjPoint, 4>& Q) {
  for (const auto& frame : {P, Q})
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
          if (three_collinear(frame[i], frame[j], frame[k]))
            throw std::invalid_argument("three frame points are collinear");
  Projectivity sigma = compose(frame_from_standard(Q), inverse(frame_from_standard(P)));
  for (int i = 0; i < 4; ++i)
    if (apply(sigma, P[i]) != Q[i]) throw std::logic_error("projectivity misses a frame point");
  return sigma;
}

Conic make_conic(const Field& f, std::array<FieldElem, 6> coeffs) {
  int lead = -1;
  for (int i = 0; i < 6; ++i)
    if (!coeffs[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) throw std::invalid_argument("zero conic");
  FieldElem inv = fe_inv(coeffs[lead]);
  for (auto& c : coeffs) c = c * inv;
  return Conic{f, coeffs};
}

Poly3 conic_poly(const Conic& c) {
  const Field& f = c.field;
  return Poly3::monomial(f, {2, 0, 0}, c.c[0]) + Poly3::monomial(f, {0, 2, 0}, c.c[1]) +
         Poly3::monomial(f, {0, 0, 2}, c.c[2]) + Poly3::monomial(f, {1, 1, 0}, c.c[3]) +
         Poly3::monomial(f, {1, 0, 1}, c.c[4]) + Poly3::monomial(f, {0, 1, 1}, c.c[5]);
}

FieldElem conic_eval(const Conic& c, const ProjPoint& p) { return conic_poly(c).eval(p); }

bool conic_smooth(const Conic& c) {
  Poly3 F = conic_poly(c);
  std::array<Poly3, 3> grad{F.derivative(0), F.derivative(1), F.derivative(2)};
  // the partials are linear forms; singular points are their common zeros
  // lying on the conic
  GFMatrix m(c.field, 3, 3);
  for (int r = 0; r < 3; ++r) {
    for (const Term& t : grad[r].terms())
      for (int j = 0; j < 3; ++j)
        if (t.e[j] == 1) m.set(r, j, t.c);
  }
  int rk = m.rank();
  if (rk == 3) return true;  // no common zero of the partials at all
  // enumerate projective kernel points (a point, a line, or everything) and
  // test membership in the conic; singular points of conics are rational
  bool singular = false;
  for_each_proj_point(c.field, [&](const ProjPoint& p) {
    if (singular) return;
    for (const Poly3& g : grad)
      if (!g.eval(p).is_zero()) return;
    if (conic_eval(c, p).is_zero()) singular = true;
  });
  return !singular;
}

ProjLine conic_tangent(const Conic& c, const ProjPoint& p) {
  Poly3 F = conic_poly(c);
  FieldElem gx = F.derivative(0).eval(p);
  FieldElem gy = F.derivative(1).eval(p);
  FieldElem gz = F.derivative(2).eval(p);
  if (gx.is_zero() && gy.is_zero() && gz.is_zero())
    throw std::invalid_argument("gradient vanishes; no tangent line at a singular point");
  return make_line(gx, gy, gz);
}

std::vector<Conic> strange_conics(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                                  const ProjPoint& q) {
  const Field& f = p1.x[0].field;
  if (f->p != 2) throw std::invalid_argument("strange conics live in characteristic 2");
  std::array<ProjPoint, 4> pts{p1, p2, p3, q};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("the four points must be distinct");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (three_collinear(pts[i], pts[j], pts[k]))
          throw std::invalid_argument("three of the four points are collinear");

  std::vector<Conic> out;
  // all conic classes: normalized 6-vectors, leftmost nonzero = 1
  std::vector<FieldElem> elems = all_elements(f);
  std::array<FieldElem, 6> c;
  auto consider = [&]() {
    Conic conic{f, c};
    for (const ProjPoint& p : {p1, p2, p3})
      if (!conic_eval(conic, p).is_zero()) return;
    if (!conic_smooth(conic)) return;
    for (const ProjPoint& p : {p1, p2, p3})
      if (!on_line(q, conic_tangent(conic, p))) return;
    out.push_back(conic);
  };
  auto rec = [&](auto&& self, int idx, bool fixed_lead) -> void {
    if (idx == 6) {
      if (fixed_lead) consider();
      return;
    }
    if (!fixed_lead) {
      c[idx] = fe_zero(f);
      self(self, idx + 1, false);
      c[idx] = fe_one(f);
      self(self, idx + 1, true);
      return;
    }
    for (const FieldElem& v : elems) {
      c[idx] = v;
      self(self, idx + 1, true);
    }
  };
  rec(rec, 0, false);
  return out;
}

std::vector<ProjPoint> conic_rational_points(const Conic& c) {
  std::vector<ProjPoint> out;
  for_each_proj_point(c.field, [&](const ProjPoint& p) {
    if (conic_eval(c, p).is_zero()) out.push_back(p);
  });
  return out;
}

int64_t KMLattice::form(const Vec& a, const Vec& b) {
  int64_t v = a[0] * b[0];
  for (int i = 1; i < 8; ++i) v -= a[i] * b[i];
  return v;
}

KMLattice::Vec KMLattice::k_class() { return {-3, 1, 1, 1, 1, 1, 1, 1}; }

std::array<KMLattice::Vec, 7> KMLattice::candidate_classes() {
  return {{
      {0, 1, 0, 0, 0, 0, 0, 0},    // exceptional over Q
      {0, 0, 0, 1, 0, 0, 0, 0},    // second-blowup exceptional over Q_1
      {0, 0, 0, 0, 0, 1, 0, 0},    // over Q_2
      {0, 0, 0, 0, 0, 0, 0, 1},    // over Q_3
      {1, 0, -1, 0, -1, 0, 0, 0},  // strict transform of line Q_1 Q_2
      {1, 0, -1, 0, 0, 0, -1, 0},  // line Q_1 Q_3
      {1, 0, 0, 0, -1, 0, -1, 0},  // line Q_2 Q_3
  }};
}

namespace {

using Vec8 = KMLattice::Vec;

int64_t form(const Vec8& a, const Vec8& b) { return KMLattice::form(a, b); }

Vec8 sub(const Vec8& a, const Vec8& b) {
  Vec8 out;
  for (int i = 0; i < 8; ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

KMLatticeReport km_lattice_check() {
  KMLatticeReport rep;

  const Vec8 K = KMLattice::k_class();
  const std::array<Vec8, 7> cls = KMLattice::candidate_classes();

  rep.k_squared = form(K, K);
  rep.classes_ok = rep.k_squared == 2;
  for (int i = 0; i < 7; ++i) {
    if (form(cls[i], cls[i]) != -1 || form(K, cls[i]) != -1) rep.classes_ok = false;
    for (int j = i + 1; j < 7; ++j)
      if (form(cls[i], cls[j]) != 0) rep.classes_ok = false;
  }

  // F_2 incidence facts backing the class list
  {
    Field f2 = make_field(2, 1);
    FieldElem z = fe_zero(f2), o = fe_one(f2);
    ProjPoint Q = make_point(z, z, o);
    ProjPoint s1 = make_point(o, z, z), s2 = make_point(z, o, z), s3 = make_point(o, o, o);
    std::vector<Conic> conics = strange_conics(s1, s2, s3, Q);
    rep.incidence_ok = conics.size() == 1;
    if (rep.incidence_ok) {
      const Conic& C = conics[0];
      std::vector<ProjPoint> pts = conic_rational_points(C);
      if (pts.size() != 3) rep.incidence_ok = false;
      if (conic_eval(C, Q).is_zero()) rep.incidence_ok = false;  // Q off the conic
      std::array<ProjPoint, 3> Qi{s1, s2, s3};
      for (const ProjPoint& p : Qi) {
        bool found = false;
        for (const ProjPoint& r : pts)
          if (r == p) found = true;
        if (!found) rep.incidence_ok = false;
        // tangent direction at Q_i points at Q
        if (!on_line(Q, conic_tangent(C, p))) rep.incidence_ok = false;
      }
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          // the joining line misses Q and differs from both tangents, so its
          // strict transform misses the second-blowup centers
          const ProjPoint &A = Qi[i], &B = Qi[j];
          FieldElem l0 = A.x[1] * B.x[2] - A.x[2] * B.x[1];
          FieldElem l1 = A.x[2] * B.x[0] - A.x[0] * B.x[2];
          FieldElem l2 = A.x[0] * B.x[1] - A.x[1] * B.x[0];
          ProjLine join = make_line(l0, l1, l2);
          if (on_line(Q, join)) rep.incidence_ok = false;
          if (join == conic_tangent(C, A) || join == conic_tangent(C, B)) rep.incidence_ok = false;
        }
    }
  }

  // contraction of the 7 classes: K' orthogonal to all of them, K'^2 = 9,
  // Picard rank drops from 8 to 1
  Vec8 kprime = K;
  for (const Vec8& c : cls) kprime = sub(kprime, c);
  rep.contraction_ok = true;
  for (const Vec8& c : cls)
    if (form(kprime, c) != 0) rep.contraction_ok = false;
  rep.contracted_k_squared = form(kprime, kprime);
  if (rep.contracted_k_squared != 9) rep.contraction_ok = false;
  rep.rank_after = 8 - 7;
  if (rep.rank_after != 1) rep.contraction_ok = false;

  // explicit isometry onto the q=2 lattice (H_L, E_1..E_7, same diagonal
  // form): the 7 classes map to E_1..E_7 and K maps to K
  const std::array<Vec8, 8> phi{{
      {2, 0, 0, 0, 0, -1, -1, -1},  // H
      {0, 1, 0, 0, 0, 0, 0, 0},     // eQ
      {1, 0, 0, 0, 0, -1, -1, 0},   // e1
      {0, 0, 1, 0, 0, 0, 0, 0},     // e1'
      {1, 0, 0, 0, 0, -1, 0, -1},   // e2
      {0, 0, 0, 1, 0, 0, 0, 0},     // e2'
      {1, 0, 0, 0, 0, 0, -1, -1},   // e3
      {0, 0, 0, 0, 1, 0, 0, 0},     // e3'
  }};
  auto apply_phi = [&](const Vec8& v) {
    Vec8 out{};
    for (int b = 0; b < 8; ++b)
      for (int i = 0; i < 8; ++i) out[i] += v[b] * phi[b][i];
    return out;
  };
  rep.isometry_ok = true;
  // form preservation on the whole basis
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      Vec8 ea{}, eb{};
      ea[a] = 1;
      eb[b] = 1;
      if (form(apply_phi(ea), apply_phi(eb)) != form(ea, eb)) rep.isometry_ok = false;
    }
  for (int i = 0; i < 7; ++i) {
    Vec8 img = apply_phi(cls[i]);
    Vec8 expect{};
    expect[i + 1] = 1;  // E_{i+1}
    if (img != expect) rep.isometry_ok = false;
  }
  if (apply_phi(K) != K) rep.isometry_ok = false;

  return rep;
}

StepIndependentReport step_independent_check(const Field& f) {
  if (f->p != 2) throw std::invalid_argument("Keel-McKernan checks live in characteristic 2");
  StepIndependentReport rep;
  rep.field_size = f->size;

  FieldElem z = fe_zero(f), o = fe_one(f);
  ProjPoint Q = make_point(z, z, o);
  ProjPoint s1 = make_point(o, z, z), s2 = make_point(z, o, z), s3 = make_point(o, o, o);
  std::vector<Conic> conics = strange_conics(s1, s2, s3, Q);
  if (conics.size() != 1) throw std::logic_error("strange conic through the standard frame not unique");
  const Conic& C = conics[0];
  Poly3 F = conic_poly(C);
  std::vector<ProjPoint> pts = conic_rational_points(C);
  rep.conic_points = static_cast<int>(pts.size());

  std::vector<std::array<ProjPoint, 3>> triples;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j)
      for (size_t k = 0; k < pts.size(); ++k) {
        if (i == j || i == k || j == k) continue;
        triples.push_back({pts[i], pts[j], pts[k]});
      }

  rep.all_ok = true;
  for (const auto& src : triples)
    for (const auto& dst : triples) {
      ++rep.pairs_tested;
      Projectivity sigma = find_projectivity({src[0], src[1], src[2], Q},
                                             {dst[0], dst[1], dst[2], Q});
      // sigma fixes Q and must preserve the conic: C = {F(sigma^{-1} x) = 0}
      Projectivity si = inverse(sigma);
      Poly3 moved = F.subst_linear(si.m);
      if (!scalar_ratio(moved, F)) rep.all_ok = false;
    }
  return rep;
}

}  // namespace langerlab
