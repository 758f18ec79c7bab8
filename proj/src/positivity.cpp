#include "langerlab/positivity.hpp"

#include <stdexcept>

namespace langerlab {

PairDesc make_pair_desc(const Surface& s, std::vector<BoundaryComponent> boundary) {
  DivClass K = div_K(s);
  for (size_t i = 0; i < boundary.size(); ++i) {
    const DivClass& c = boundary[i].cls;
    if (!same_surface(s, c.surface)) throw std::invalid_argument("boundary curve on a different surface");
    if (boundary[i].coeff < 0 || boundary[i].coeff > 1)
      throw std::invalid_argument("boundary coefficient outside [0, 1]");
    if (intersect(c, c) >= 0)
      throw std::invalid_argument("boundary curve with nonnegative self-intersection");
    if (intersect(c, c) + intersect(c, K) != -2)
      throw std::invalid_argument("boundary curve is not smooth rational (adjunction != -2)");
    for (size_t j = i + 1; j < boundary.size(); ++j)
      if (intersect(c, boundary[j].cls) != 0)
        throw std::invalid_argument("boundary curves are not pairwise disjoint");
  }
  return PairDesc{s, std::move(boundary)};
}

KltCertificate is_klt_disjoint_snc(const PairDesc& pair) {
  KltCertificate cert;
  cert.disjoint_verified = true;
  cert.adjunction_verified = true;
  cert.klt = true;
  for (const BoundaryComponent& bc : pair.boundary) {
    cert.coefficients.push_back(bc.coeff);
    if (!(bc.coeff < 1)) cert.klt = false;
  }
  cert.note = cert.klt ? "disjoint smooth rational boundary, all coefficients < 1"
                       : "some coefficient >= 1 (log canonical at best, not klt)";
  return cert;
}

NefBigCertificate nef_big_certificate(const DivClass& d, NefBigMode mode,
                                      const std::vector<DivClass>* cone_generators) {
  NefBigCertificate cert;
  cert.self_intersection = intersect(d, d);

  if (mode == NefBigMode::pullback_decomposition) {
    cert.route = "pullback-decomposition";
    bool pure_h = d.a > 0;
    for (const Rat& m : d.m)
      if (m != 0) pure_h = false;
    if (!pure_h) {
      cert.note = "class is not a positive multiple of H; this route proves nothing";
      return cert;
    }
    cert.nef = true;  // positive multiple of the pullback of an ample class
    cert.big = cert.self_intersection > 0 && intersect(d, div_H(d.surface)) > 0;
    cert.verdict = (cert.nef && cert.big) ? CertVerdict::certified : CertVerdict::inconclusive;
    cert.note = "D = (" + rat_str(d.a) + ")*H, pullback of an ample class; D^2 = " +
                rat_str(cert.self_intersection);
    return cert;
  }

  cert.route = "full-cone-q2";
  if (d.surface->field->size != 2)
    throw std::invalid_argument("full-cone mode requires q = 2");
  if (cone_generators == nullptr || cone_generators->size() != 14)
    throw std::invalid_argument("full-cone mode requires the 14 cone generators");
  cert.nef = true;
  for (const DivClass& c : *cone_generators) {
    Rat v = intersect(d, c);
    cert.generator_pairings.push_back(v);
    if (v < 0) cert.nef = false;
  }
  cert.big = cert.self_intersection > 0;
  cert.verdict = (cert.nef && cert.big) ? CertVerdict::certified : CertVerdict::inconclusive;
  cert.note = cert.nef ? "pairs >= 0 with all 14 generators"
                       : "negative pairing against a generator";
  return cert;
}

AmplePerturbation ample_perturbation_q2(const StandardClasses& cls,
                                        const std::vector<DivClass>& generators) {
  const Surface& s = cls.S;
  if (s->field->size != 2)
    throw std::invalid_argument("ample perturbation certified for q = 2 only (full cone known)");
  if (generators.size() != 14) throw std::invalid_argument("expected 14 cone generators");

  DivClass sumE = div_zero(s);
  for (const DivClass& e : cls.E) sumE = sumE + e;
  DivClass base = cls.B - cls.Delta;

  for (int spow = 1; spow <= 20; ++spow) {
    Rat eps = Rat(1, BigInt(1) << spow);
    DivClass t = base - eps * sumE;
    AmplePerturbation out;
    out.epsilon = eps;
    out.s = spow;
    out.self_intersection = intersect(t, t);
    bool ok = out.self_intersection > 0;
    for (const DivClass& c : generators) {
      Rat v = intersect(t, c);
      out.generator_pairings.push_back(v);
      if (!(v > 0)) ok = false;
    }
    if (ok) return out;
  }
  throw std::logic_error("no ample perturbation 1/2^s (s <= 20) found; contradicts the corollary");
}

}  // namespace langerlab
