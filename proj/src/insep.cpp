#include "langerlab/insep.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "langerlab/rng.hpp"

namespace langerlab {

MForm make_mform(const Field& f, int64_t q, const FieldElem& alpha, const FieldElem& beta,
                 const FieldElem& gamma) {
  if (alpha.is_zero() && beta.is_zero() && gamma.is_zero())
    throw std::invalid_argument("(alpha, beta, gamma) must be nonzero");
  return MForm{f, q, alpha, beta, gamma};
}

std::array<Poly3, 3> m_basis_forms(const Field& f, int64_t q) {
  int iq = static_cast<int>(q);
  FieldElem one = fe_one(f);
  FieldElem minus = -one;
  auto pair = [&](std::array<int, 3> hi, std::array<int, 3> lo) {
    return Poly3::monomial(f, hi, one) + Poly3::monomial(f, lo, minus);
  };
  return {
      pair({iq, 1, 0}, {1, iq, 0}),  // x^q y - x y^q
      pair({0, iq, 1}, {0, 1, iq}),  // y^q z - y z^q
      pair({1, 0, iq}, {iq, 0, 1}),  // z^q x - z x^q
  };
}

Poly3 mform_poly(const MForm& m) {
  auto basis = m_basis_forms(m.field, m.q);
  return m.gamma * basis[0] + m.alpha * basis[1] + m.beta * basis[2];
}

MBasisCheck m_basis_check(const Surface& s, const Incidence& inc, const StandardClasses& cls) {
  int64_t q = s->field->size;
  auto basis = m_basis_forms(s->field, q);

  MBasisCheck out;
  out.vanish_at_all_points = true;
  for (const ProjPoint& p : inc.points)
    for (const Poly3& f : basis)
      if (!f.eval(p).is_zero()) out.vanish_at_all_points = false;

  // disjoint monomial supports; still check by rank of the coefficient matrix
  std::map<std::array<int, 3>, int> cols;
  for (const Poly3& f : basis)
    for (const Term& t : f.terms())
      if (!cols.count(t.e)) {
        int next = static_cast<int>(cols.size());
        cols[t.e] = next;
      }
  GFMatrix coeffs(s->field, 3, static_cast<int>(cols.size()));
  for (int r = 0; r < 3; ++r)
    for (const Term& t : basis[r].terms()) coeffs.set(r, cols[t.e], t.c);
  out.linearly_independent = coeffs.rank() == 3;

  out.h0_value = h0(s, cls.M);
  out.h0_equals_3 = out.h0_value == 3;

  out.class_identity = true;
  for (int i = 0; i < s->n; ++i) {
    DivClass rhs = Rat(q) * cls.E[i];
    for (int j : lines_through(inc, i)) rhs = rhs + cls.Lp[j];
    if (rhs != cls.M) out.class_identity = false;
  }
  return out;
}

BaseLocusCheck base_locus_check(int64_t q, int k) {
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  int64_t p;
  int e;
  prime_power(q, &p, &e);
  Field fq = make_field(p, e);
  Field ext = make_field(p, e * k);
  auto forms_ext = m_basis_forms(ext, q);
  auto forms_base = m_basis_forms(fq, q);

  BaseLocusCheck out;
  out.zero_set_is_fq_points = true;
  for_each_proj_point(ext, [&](const ProjPoint& pt) {
    ++out.points_scanned;
    for (const Poly3& f : forms_ext)
      if (!f.eval(pt).is_zero()) return;
    ++out.common_zeros;
    // the point must be F_q-rational: fixed by the q-power Frobenius
    for (int i = 0; i < 3; ++i)
      if (fe_pow(pt.x[i], q) != pt.x[i])
        throw std::logic_error("common zero of the three forms off the F_q-points");
  });
  if (out.common_zeros != q * q + q + 1) out.zero_set_is_fq_points = false;

  // at each F_q-point the linear parts of the three forms span dimension 2,
  // so the base points are resolved with multiplicity exactly 1
  out.linear_parts_rank2 = true;
  for_each_proj_point(fq, [&](const ProjPoint& pt) {
    GFMatrix lin(fq, 3, 2);
    for (int r = 0; r < 3; ++r) {
      auto exp = local_expansion(forms_base[r], pt, 1);
      if (!exp[{0, 0}].is_zero())
        throw std::logic_error("form does not vanish at an F_q-point");
      lin.set(r, 0, exp[{1, 0}]);
      lin.set(r, 1, exp[{0, 1}]);
    }
    if (lin.rank() != 2) out.linear_parts_rank2 = false;
  });
  return out;
}

MemberClass classify_member(const Incidence& inc, const MForm& m) {
  if (!same_field(*m.field, *inc.field))
    throw std::invalid_argument("classify_member: coefficients must lie in F_q");
  ProjPoint center = make_point(qth_root(m.alpha, m.q), qth_root(m.beta, m.q),
                                qth_root(m.gamma, m.q));
  MemberClass out;
  out.center_index = inc.point_index(center);
  if (out.center_index < 0) throw std::logic_error("q-th-root point is not an F_q-point");
  out.line_indices = lines_through(inc, out.center_index);

  Poly3 product = Poly3::monomial(m.field, {0, 0, 0}, fe_one(m.field));
  for (int j : out.line_indices) {
    const ProjLine& l = inc.lines[j];
    Poly3 lin = Poly3::monomial(m.field, {1, 0, 0}, l.a[0]) +
                Poly3::monomial(m.field, {0, 1, 0}, l.a[1]) +
                Poly3::monomial(m.field, {0, 0, 1}, l.a[2]);
    product = product * lin;
  }
  auto scale = scalar_ratio(mform_poly(m), product);
  if (!scale)
    throw std::logic_error("member does not factor into the lines through its center");
  out.scale = *scale;
  return out;
}

std::vector<MForm> all_members(const Field& f, int64_t q) {
  std::vector<MForm> out;
  for (const ProjPoint& p : all_proj_points(f))
    out.push_back(make_mform(f, q, p.x[0], p.x[1], p.x[2]));
  return out;
}

ProjPoint member_singular_point(const MForm& m, uint64_t sample_seed, int smooth_samples) {
  ProjPoint sing = make_point(qth_root(m.alpha, m.q), qth_root(m.beta, m.q),
                              qth_root(m.gamma, m.q));
  Poly3 F = mform_poly(m);

  auto exp = local_expansion(F, sing, 1);
  if (!exp[{0, 0}].is_zero() || !exp[{1, 0}].is_zero() || !exp[{0, 1}].is_zero())
    throw std::logic_error("q-th-root point is not a singular point of the member");

  // the member is smooth away from it: gradient nonzero at sampled curve points
  std::array<Poly3, 3> grad{F.derivative(0), F.derivative(1), F.derivative(2)};
  std::vector<ProjPoint> on_curve;
  for_each_proj_point(m.field, [&](const ProjPoint& pt) {
    if (F.eval(pt).is_zero() && pt != sing) on_curve.push_back(pt);
  });
  SplitMix64 rng(sample_seed);
  for (int t = 0; t < smooth_samples && !on_curve.empty(); ++t) {
    const ProjPoint& pt = on_curve[rng.below(on_curve.size())];
    bool any = false;
    for (const Poly3& g : grad)
      if (!g.eval(pt).is_zero()) any = true;
    if (!any) throw std::logic_error("member singular at a second point");
  }
  return sing;
}

namespace {

// a line lies inside the degree-(q+1) member iff the member vanishes at
// q+2 of its points (Bezout)
bool line_inside(const Poly3& F, int64_t q, const ProjPoint& p1, const ProjPoint& p2) {
  const Field& f = F.field();
  int needed = static_cast<int>(q) + 2;
  int found = 0;
  if (F.eval(p2).is_zero()) ++found;
  for (int64_t t = 0; t < f->size && found < needed; ++t) {
    FieldElem c = decode(f, t);
    ProjPoint pt = make_point(p1.x[0] + c * p2.x[0], p1.x[1] + c * p2.x[1],
                              p1.x[2] + c * p2.x[2]);
    if (!F.eval(pt).is_zero()) return false;
    ++found;
  }
  return found >= needed;
}

}  // namespace

IntegralityEvidence member_integrality_evidence(int64_t q, int samples, uint64_t seed) {
  if (q != 2 && q != 3)
    throw std::invalid_argument(
        "integrality certificate cases are established for member degree <= 4 (q in {2, 3})");
  if (samples < 1) throw std::invalid_argument("samples >= 1");
  int64_t p;
  int e;
  prime_power(q, &p, &e);
  Field f = make_field(p, 4 * e);

  IntegralityEvidence out;
  out.q = q;
  out.field_size = f->size;
  out.expected_points = f->size + 1;

  SplitMix64 rng(seed);
  int taken = 0;
  int64_t guard = 0;
  while (taken < samples) {
    if (++guard > 10000LL * samples)
      throw std::runtime_error("integrality sampling budget exhausted");
    FieldElem a = decode(f, static_cast<int64_t>(rng.below(f->size)));
    FieldElem b = decode(f, static_cast<int64_t>(rng.below(f->size)));
    FieldElem c = decode(f, static_cast<int64_t>(rng.below(f->size)));
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;  // those members drop a coordinate line
    ProjPoint cls = make_point(a, b, c);
    bool quadratic_class = true;
    for (int i = 0; i < 3; ++i)
      if (fe_pow(cls.x[i], q * q) != cls.x[i]) quadratic_class = false;
    if (quadratic_class) continue;
    ++taken;
    ++out.samples;

    Poly3 F = mform_poly(make_mform(f, q, a, b, c));
    std::vector<ProjPoint> zeros;
    for_each_proj_point(f, [&](const ProjPoint& pt) {
      if (F.eval(pt).is_zero()) zeros.push_back(pt);
    });
    bool line = false;
    for (size_t i = 0; i < zeros.size() && !line; ++i)
      for (size_t j = i + 1; j < zeros.size() && !line; ++j)
        if (line_inside(F, q, zeros[i], zeros[j])) line = true;
    if (line)
      ++out.line_factored_count;
    else if (static_cast<int64_t>(zeros.size()) == out.expected_points)
      ++out.integral_count;
  }
  return out;
}

PsiValue psi_eval(int64_t q, const FieldElem& u, const FieldElem& v) {
  FieldElem uq = fe_pow(u, q);
  FieldElem vq = fe_pow(v, q);
  FieldElem den = uq * v - u * vq;
  PsiValue out;
  if (den.is_zero()) {
    out.excluded = true;
    out.alpha = fe_zero(u.field);
    out.beta = fe_zero(u.field);
    return out;
  }
  FieldElem inv = fe_inv(den);
  out.alpha = (vq - v) * inv;
  out.beta = (u - uq) * inv;
  return out;
}

FiberSolution fiber_solve(int64_t q, const FieldElem& alpha, const FieldElem& beta) {
  const Field& f = alpha.field;
  FiberSolution out;
  out.u = fe_zero(f);
  out.v = fe_zero(f);
  auto degenerate = [&](const std::string& why) {
    out.degenerate = true;
    out.reason = why;
    return out;
  };
  if (beta.is_zero()) return degenerate("beta = 0");

  FieldElem sign = fe_pow(-fe_one(f), q - 1);  // computed in the field, no integer shortcut
  FieldElem beta_qm1 = fe_pow(beta, q - 1);
  FieldElem den = alpha * beta_qm1 - sign * fe_pow(alpha, q);
  if (den.is_zero()) return degenerate("alpha*beta^{q-1} = (-1)^{q-1} alpha^q");

  FieldElem uq = (-beta_qm1 + sign) / den;
  out.u = qth_root(uq, q);
  FieldElem au1 = alpha * out.u + fe_one(f);
  if (au1.is_zero()) return degenerate("alpha*u + 1 = 0");
  out.v = -au1 / beta;

  PsiValue check = psi_eval(q, out.u, out.v);
  if (check.excluded) return degenerate("solution lies on the excluded lines");
  if (check.alpha != alpha || check.beta != beta)
    throw std::logic_error("fiber_solve round-trip failed on a non-degenerate input");
  return out;
}

FiberCensus fiber_census(int64_t q, int k, int samples, uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("fiber_census: samples >= 1");
  if (k < 2)
    throw std::invalid_argument(
        "fiber_census: k >= 2 required; over the quadratic extension GF(q^2) every point of the "
        "image satisfies (u - u^q)^{q-1} = -1, so the solver denominator vanishes identically "
        "and no non-degenerate target exists");
  int64_t p;
  int e;
  prime_power(q, &p, &e);
  int64_t search_size = 1;
  for (int i = 0; i < 2 * e * k; ++i) {
    search_size *= p;
    if (search_size > FieldDesc::kDeskBound)
      throw std::invalid_argument("q^{2k} exceeds the desk bound");
  }
  // Targets live in the census field F_{q^{2k}} together with the search.
  Field field = make_field(p, 2 * e * k);
  FiberCensus out;
  out.q = q;
  out.ext = k;
  out.samples = samples;
  out.seed = seed;
  out.domain_pairs = field->size * field->size;

  // collect N non-degenerate targets; seeds split per attempt index so any
  // execution order gives the same draw sequence
  struct Target {
    FieldElem alpha, beta, u, v;
  };
  std::vector<Target> targets;
  int64_t attempts = 0;
  const int64_t cap = 1000LL * samples;
  while (static_cast<int>(targets.size()) < samples) {
    if (attempts >= cap) throw std::runtime_error("fiber_census: target sampling budget exhausted");
    SplitMix64 rng(derive_seed(seed, static_cast<uint64_t>(attempts)));
    ++attempts;
    FieldElem a = decode(field, static_cast<int64_t>(rng.below(field->size)));
    FieldElem b = decode(field, static_cast<int64_t>(rng.below(field->size)));
    FiberSolution sol = fiber_solve(q, a, b);
    if (sol.degenerate) {
      ++out.degenerate_count;
      continue;
    }
    targets.push_back(Target{a, b, sol.u, sol.v});
  }

  // one sweep over the whole domain, counting every value of Psi; a target's
  // fiber size is then a table lookup. fiber_solve has already verified
  // psi(sol) = target, so a fiber of size 1 is necessarily the solver's pair.
  const int64_t n = field->size;
  std::vector<int32_t> counts(static_cast<size_t>(n) * n, 0);
  auto sweep_rows = [&](int64_t cu_begin, int64_t cu_end, std::vector<int32_t>& acc) {
    const FieldDesc& fd = *field;
    if (fd.has_tables()) {
      for (int64_t cu = cu_begin; cu < cu_end; ++cu) {
        int64_t uq = code_pow(fd, cu, q);
        for (int64_t cv = 0; cv < n; ++cv) {
          int64_t vq = code_pow(fd, cv, q);
          int64_t den = code_add(fd, code_mul(fd, uq, cv), code_neg(fd, code_mul(fd, cu, vq)));
          if (den == 0) continue;
          int64_t inv = code_inv(fd, den);
          int64_t alpha = code_mul(fd, code_add(fd, vq, code_neg(fd, cv)), inv);
          int64_t beta = code_mul(fd, code_add(fd, cu, code_neg(fd, uq)), inv);
          ++acc[static_cast<size_t>(alpha) * n + beta];
        }
      }
    } else {
      for (int64_t cu = cu_begin; cu < cu_end; ++cu) {
        FieldElem u = decode(field, cu);
        for (int64_t cv = 0; cv < n; ++cv) {
          PsiValue val = psi_eval(q, u, decode(field, cv));
          if (val.excluded) continue;
          ++acc[static_cast<size_t>(code(val.alpha)) * n + code(val.beta)];
        }
      }
    }
  };

  int nthreads = static_cast<int>(std::max<int64_t>(1, std::min<int64_t>(threads, n)));
  if (nthreads == 1) {
    sweep_rows(0, n, counts);
  } else {
    std::vector<std::vector<int32_t>> partial(nthreads);
    std::vector<std::thread> pool;
    int64_t chunk = (n + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      int64_t b = t * chunk, en = std::min(n, b + chunk);
      if (b >= en) break;
      partial[t].assign(counts.size(), 0);
      pool.emplace_back([&, t, b, en] { sweep_rows(b, en, partial[t]); });
    }
    for (auto& th : pool) th.join();
    for (const auto& acc : partial)
      for (size_t i = 0; i < acc.size(); ++i) counts[i] += acc[i];
  }

  for (const Target& t : targets) {
    int size = counts[static_cast<size_t>(code(t.alpha)) * n + code(t.beta)];
    ++out.histogram[size];
    if (size != 1) out.solver_matched = false;
  }
  return out;
}

}  // namespace langerlab
