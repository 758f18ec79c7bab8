#include "langerlab/linsys.hpp"

#include <stdexcept>

namespace langerlab {

namespace {

std::vector<std::array<int, 3>> monomials_of_degree(int d) {
  std::vector<std::array<int, 3>> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

int64_t clamped(const Rat& m) {
  BigInt v = to_bigint(m);
  return v > 0 ? v.convert_to<int64_t>() : 0;
}

}  // namespace

InterpolationSystem build_interpolation_over(const Surface& s, int degree,
                                             const std::vector<int64_t>& mult, const Field& ext) {
  if (degree < 0) throw std::invalid_argument("interpolation degree must be >= 0");
  if (mult.size() != static_cast<size_t>(s->n))
    throw std::invalid_argument("multiplicity vector length != number of centers");

  const bool embedded = !same_field(*s->field, *ext);
  std::vector<ProjPoint> centers;
  centers.reserve(s->centers.size());
  if (embedded) {
    Embedding emb(s->field, ext);
    for (const ProjPoint& p : s->centers)
      centers.push_back(ProjPoint{{emb(p.x[0]), emb(p.x[1]), emb(p.x[2])}});
  } else {
    centers = s->centers;
  }

  InterpolationSystem sys;
  sys.degree = degree;
  sys.monomials = monomials_of_degree(degree);
  int rows = 0;
  for (int i = 0; i < s->n; ++i)
    if (mult[i] >= 1) {
      sys.conditions.emplace_back(i, static_cast<int>(mult[i]));
      rows += static_cast<int>(mult[i] * (mult[i] + 1) / 2);
    }
  sys.matrix = GFMatrix(ext, rows, static_cast<int>(sys.monomials.size()));

  int row = 0;
  for (const auto& [ci, m] : sys.conditions) {
    const ProjPoint& p = centers[ci];
    for (int a = 0; a < m; ++a)
      for (int b = 0; a + b < m; ++b) {
        for (int col = 0; col < static_cast<int>(sys.monomials.size()); ++col)
          sys.matrix.set(row, col, local_monomial_coeff(ext, sys.monomials[col], p, a, b));
        ++row;
      }
  }
  return sys;
}

InterpolationSystem build_interpolation(const Surface& s, int degree,
                                        const std::vector<int64_t>& mult) {
  return build_interpolation_over(s, degree, mult, s->field);
}

int64_t h0(const Surface& s, const DivClass& d) {
  if (!is_integral(d)) throw std::invalid_argument("h0 requires an integral divisor class");
  if (!same_surface(s, d.surface)) throw std::invalid_argument("surface mismatch");
  if (d.a < 0) return 0;
  int64_t a = to_i64(d.a);
  std::vector<int64_t> mult(d.m.size());
  for (size_t i = 0; i < d.m.size(); ++i) mult[i] = clamped(d.m[i]);
  int64_t cols = (a + 1) * (a + 2) / 2;
  bool any = false;
  for (int64_t m : mult)
    if (m >= 1) any = true;
  if (!any) return cols;
  InterpolationSystem sys = build_interpolation(s, static_cast<int>(a), mult);
  return cols - sys.matrix.rank();
}

CohomologyTriple cohomology(const Surface& s, const DivClass& d, const DivClass& K) {
  if (K != div_K(s)) throw std::invalid_argument("K is not the canonical class of the surface");
  CohomologyTriple out;
  out.h0 = h0(s, d);
  out.h2 = h0(s, K - d);
  out.chi = to_i64(euler_char(d));
  out.h1 = out.h0 + out.h2 - out.chi;
  if (out.h1 < 0) throw std::logic_error("negative h1: internal inconsistency");
  out.notes = "h0 by interpolation rank; h2 = h0(K-D) (Serre); h1 = h0+h2-chi";
  return out;
}

bool base_change_check(const Surface& s, const DivClass& d, int k) {
  if (k < 2) throw std::invalid_argument("extension degree must be >= 2");
  if (!is_integral(d)) throw std::invalid_argument("base change check requires an integral class");
  Field ext = make_field(s->field->p, s->field->e * k);
  if (d.a < 0) return true;
  int64_t a = to_i64(d.a);
  std::vector<int64_t> mult(d.m.size());
  for (size_t i = 0; i < d.m.size(); ++i) mult[i] = clamped(d.m[i]);
  bool any = false;
  for (int64_t m : mult)
    if (m >= 1) any = true;
  if (!any) return true;  // no conditions over either field
  InterpolationSystem base = build_interpolation(s, static_cast<int>(a), mult);
  InterpolationSystem up = build_interpolation_over(s, static_cast<int>(a), mult, ext);
  return base.matrix.rank() == up.matrix.rank();
}

std::string dump_matrix(const InterpolationSystem& sys) {
  std::string out;
  for (int r = 0; r < sys.matrix.rows; ++r) {
    for (int c = 0; c < sys.matrix.cols; ++c) {
      if (c) out += ' ';
      out += elem_str(sys.matrix.elem(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace langerlab
