#include "langerlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "langerlab/rng.hpp"

namespace langerlab {

std::string status_str(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::pass: return "pass";
    case CheckReport::Status::fail: return "fail";
    case CheckReport::Status::inconclusive: return "inconclusive";
    case CheckReport::Status::skipped: return "skipped";
  }
  return "skipped";
}

Json json_elem(const FieldElem& x) {
  Json out = Json::array();
  for (int32_t v : x.c) out.push_back(v);
  return out;
}

Json json_point(const ProjPoint& p) {
  return Json::array({json_elem(p.x[0]), json_elem(p.x[1]), json_elem(p.x[2])});
}

Json json_line(const ProjLine& l) {
  return Json::array({json_elem(l.a[0]), json_elem(l.a[1]), json_elem(l.a[2])});
}

Json json_incidence(const Incidence& inc) {
  Json out;
  out["q"] = inc.q;
  out["points"] = Json::array();
  for (const ProjPoint& p : inc.points) out["points"].push_back(json_point(p));
  out["lines"] = Json::array();
  for (const ProjLine& l : inc.lines) out["lines"].push_back(json_line(l));
  out["on"] = Json::array();
  for (size_t i = 0; i < inc.points.size(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < inc.lines.size(); ++j)
      row.push_back(inc.is_on(static_cast<int>(i), static_cast<int>(j)));
    out["on"].push_back(std::move(row));
  }
  return out;
}

Json json_div(const DivClass& d) {
  Json out;
  out["a"] = rat_str(d.a);
  Json m = Json::array();
  for (const Rat& v : d.m) m.push_back(rat_str(v));
  out["m"] = std::move(m);
  return out;
}

Json json_cone(const ConeResult& cone) {
  Json out;
  out["generator_count"] = cone.generators.size();
  out["generators"] = Json::array();
  for (const DivClass& g : cone.generators) out["generators"].push_back(json_div(g));
  out["candidates"] = {{"total", cone.total},
                       {"realized", cone.realized},
                       {"excluded", cone.excluded},
                       {"undetermined", cone.undetermined}};
  Json table = Json::array();
  for (const CurveCandidate& c : cone.candidates) {
    Json row;
    row["class"] = json_div(c.cls);
    row["self_intersection"] = c.selfint;
    row["k_degree"] = c.kdot;
    switch (c.status) {
      case CurveCandidate::Status::realized_E: row["status"] = "realized-E"; break;
      case CurveCandidate::Status::realized_L: row["status"] = "realized-L"; break;
      case CurveCandidate::Status::excluded: row["status"] = "excluded"; break;
      case CurveCandidate::Status::undetermined: row["status"] = "undetermined"; break;
    }
    if (!c.reason.empty()) row["reason"] = c.reason;
    if (c.witness_line >= 0) row["witness"] = c.witness_line;
    table.push_back(std::move(row));
  }
  out["exclusion_table"] = std::move(table);
  out["dual_checks"] = {{"h_pairings_ok", cone.h_pairings_ok},
                        {"minus_k_pairings_ok", cone.minus_k_pairings_ok}};
  return out;
}

Json json_census(const FiberCensus& census) {
  Json hist;
  for (const auto& [size, count] : census.histogram) hist[std::to_string(size)] = count;
  Json out;
  out["q"] = census.q;
  out["ext"] = census.ext;
  out["samples"] = census.samples;
  out["seed"] = census.seed;
  out["histogram"] = std::move(hist);
  out["degenerate_count"] = census.degenerate_count;
  out["domain_pairs"] = census.domain_pairs;
  out["solver_matched"] = census.solver_matched;
  return out;
}

Json json_scan(const ScanReport& scan) {
  Json out;
  out["r"] = scan.r;
  out["field_order"] = scan.field_size;
  out["trials"] = scan.trials;
  out["seed"] = scan.seed;
  out["k_squared"] = scan.k_squared;
  out["minus_one_classes"] = scan.minus_one_count;
  out["h1_nonzero"] = scan.h1_nonzero;
  out["h2_nonzero"] = scan.h2_nonzero;
  Json rows = Json::array();
  for (const ScanTrial& t : scan.data) {
    Json row;
    row["D"] = json_div(t.D);
    row["h0"] = t.h0;
    row["h1"] = t.h1;
    row["h2"] = t.h2;
    row["attempts"] = t.attempts;
    rows.push_back(std::move(row));
  }
  out["trials_detail"] = std::move(rows);
  return out;
}

Json json_members(const Incidence& inc, int64_t q) {
  Json out;
  out["q"] = q;
  out["count"] = q * q + q + 1;
  Json members = Json::array();
  for (const MForm& m : all_members(inc.field, q)) {
    MemberClass cls = classify_member(inc, m);
    Json row;
    row["coefficients"] = Json::array({json_elem(m.alpha), json_elem(m.beta), json_elem(m.gamma)});
    row["center_index"] = cls.center_index;
    row["center"] = json_point(inc.points[cls.center_index]);
    row["lines"] = cls.line_indices;
    row["scale"] = json_elem(cls.scale);
    members.push_back(std::move(row));
  }
  out["members"] = std::move(members);
  return out;
}

Json json_kmk(const Field& f) {
  Json out;
  out["field_order"] = f->size;
  FieldElem z = fe_zero(f), o = fe_one(f);
  ProjPoint Q = make_point(z, z, o);
  ProjPoint s1 = make_point(o, z, z), s2 = make_point(z, o, z), s3 = make_point(o, o, o);
  std::vector<Conic> conics = strange_conics(s1, s2, s3, Q);
  out["strange_conics"] = Json::array();
  for (const Conic& c : conics) {
    Json cc = Json::array();
    for (const FieldElem& v : c.c) cc.push_back(json_elem(v));
    out["strange_conics"].push_back(std::move(cc));
  }
  out["strange_conic_count"] = conics.size();
  if (conics.size() == 1) {
    Json pts = Json::array();
    for (const ProjPoint& p : conic_rational_points(conics[0])) pts.push_back(json_point(p));
    out["conic_rational_points"] = std::move(pts);
  }
  KMLatticeReport lattice = km_lattice_check();
  out["lattice"] = {{"classes_ok", lattice.classes_ok},
                    {"incidence_ok", lattice.incidence_ok},
                    {"contraction_ok", lattice.contraction_ok},
                    {"isometry_ok", lattice.isometry_ok},
                    {"k_squared", lattice.k_squared},
                    {"contracted_k_squared", lattice.contracted_k_squared},
                    {"rank_after_contraction", lattice.rank_after}};
  StepIndependentReport step = step_independent_check(f);
  out["step_independent"] = {{"conic_points", step.conic_points},
                             {"pairs_tested", step.pairs_tested},
                             {"all_ok", step.all_ok}};
  return out;
}

namespace {

using Status = CheckReport::Status;

struct Runner {
  std::vector<CheckReport>& checks;

  void run(const std::string& id, const std::string& statement,
           const std::function<Status(Json&)>& fn) {
    CheckReport rep;
    rep.check_id = id;
    rep.statement = statement;
    auto start = std::chrono::steady_clock::now();
    try {
      rep.status = fn(rep.data);
    } catch (const std::invalid_argument& e) {
      // module precondition error, not a contradiction
      rep.status = Status::skipped;
      rep.data["error"] = e.what();
    } catch (const std::logic_error& e) {
      // hard failure: an asserted fact was contradicted
      rep.status = Status::fail;
      rep.data["error"] = e.what();
    } catch (const std::exception& e) {
      rep.status = Status::skipped;
      rep.data["error"] = e.what();
    }
    auto end = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    checks.push_back(std::move(rep));
  }

  void skip(const std::string& id, const std::string& statement, const std::string& note) {
    CheckReport rep;
    rep.check_id = id;
    rep.statement = statement;
    rep.status = Status::skipped;
    rep.data["note"] = note;
    checks.push_back(std::move(rep));
  }
};

Status ok(bool b) { return b ? Status::pass : Status::fail; }

bool exhaustive_field_laws(const Field& f) {
  std::vector<FieldElem> elems = all_elements(f);
  FieldElem zero = fe_zero(f), one = fe_one(f);
  for (const FieldElem& a : elems) {
    if (a + zero != a || a * one != a || (a - a) != zero) return false;
    if (!a.is_zero() && a * fe_inv(a) != one) return false;
    if (frobenius(a + one) != frobenius(a) + one) return false;  // additivity of Frobenius
    if (qth_root(fe_pow(a, f->size), f->size) != a) return false;
  }
  for (const FieldElem& a : elems)
    for (const FieldElem& b : elems) {
      if (a + b != b + a || a * b != b * a) return false;
      for (const FieldElem& c : elems) {
        if ((a + b) + c != a + (b + c)) return false;
        if ((a * b) * c != a * (b * c)) return false;
        if (a * (b + c) != a * b + a * c) return false;
      }
    }
  return true;
}

}  // namespace

ReportDoc run_report(int64_t q, const ReportOptions& opts) {
  static const int64_t supported[] = {2, 3, 4, 5, 7, 8, 9};
  if (std::find(std::begin(supported), std::end(supported), q) == std::end(supported))
    throw std::invalid_argument("unsupported q (prime powers 2..9 at desk scale)");

  ReportDoc doc;
  doc.q = q;
  doc.seed = opts.seed;
  Runner r{doc.checks};

  Surface S = langer_surface(q);
  Incidence inc = enumerate_plane(S->field);
  StandardClasses cls = standard_classes(S, inc);
  int64_t n = q * q + q + 1;
  const std::string qs = std::to_string(q);

  r.run("config.field-axioms", "field laws hold in GF(" + qs + ") and GF(" + qs + "^2), exhaustively",
        [&](Json& data) {
          bool base = exhaustive_field_laws(S->field);
          Field ext = make_field(S->field->p, S->field->e * 2);
          bool up = ext->size <= 81 ? exhaustive_field_laws(ext) : true;
          data["base_ok"] = base;
          data["ext_ok"] = up;
          data["ext_exhaustive"] = ext->size <= 81;
          return ok(base && up);
        });

  r.run("config.plane-axioms",
        "PG(2," + qs + "): " + std::to_string(n) + " points and lines, q+1 incidences, unique joins/meets",
        [&](Json& data) {
          std::string why;
          bool good = plane_axioms_ok(inc, &why);
          data["points"] = inc.points.size();
          data["lines"] = inc.lines.size();
          if (!good) data["violation"] = why;
          return ok(good);
        });

  r.run("lem-lines-cover.all-points",
        "for every rational point, the q+1 lines through it cover the plane",
        [&](Json& data) {
          int covered = 0;
          for (const ProjPoint& p : inc.points)
            if (cover_check(inc, p)) ++covered;
          data["points_checked"] = inc.points.size();
          data["covered"] = covered;
          return ok(covered == static_cast<int>(inc.points.size()));
        });

  r.run("nota-q.lprime-selfint", "(L'_j)^2 = -q and the L'_j are pairwise disjoint",
        [&](Json& data) {
          bool good = true;
          for (size_t j = 0; j < cls.Lp.size(); ++j) {
            if (intersect(cls.Lp[j], cls.Lp[j]) != -q) good = false;
            for (size_t j2 = j + 1; j2 < cls.Lp.size(); ++j2)
              if (intersect(cls.Lp[j], cls.Lp[j2]) != 0) good = false;
          }
          data["self_intersection"] = -q;
          return ok(good);
        });

  r.run("nota-q.sum-lines-identity",
        "(q^2+q+1) H = sum L'_j + (q+1) sum E_i as classes",
        [&](Json& data) {
          DivClass lhs = Rat(n) * cls.H;
          DivClass rhs = div_zero(S);
          for (const DivClass& lp : cls.Lp) rhs = rhs + lp;
          for (const DivClass& e : cls.E) rhs = rhs + Rat(q + 1) * e;
          data["holds"] = lhs == rhs;
          return ok(lhs == rhs);
        });

  r.run("lattice.adjunction", "C^2 + C.K = -2 for every E_i and L'_j",
        [&](Json& data) {
          bool good = true;
          for (const DivClass& c : cls.E)
            if (intersect(c, c) + intersect(c, cls.K) != -2) good = false;
          for (const DivClass& c : cls.Lp)
            if (intersect(c, c) + intersect(c, cls.K) != -2) good = false;
          data["curves_checked"] = cls.E.size() + cls.Lp.size();
          return ok(good);
        });

  r.run("lem-Y-sing.rho", "rho(Y) = 1 after contracting the q^2+q+1 curves L'_j",
        [&](Json& data) {
          ContractionData cd = contraction_data(S, cls);
          data["rho_y"] = cd.rho_y;
          return ok(cd.rho_y == 1);
        });

  r.run("lem-Y-sing.crepant-coeff",
        "g*K_Y = K_X + (1 - 2/q) sum L'_j; Y klt always, canonical iff q = 2",
        [&](Json& data) {
          ContractionData cd = contraction_data(S, cls);
          data["coeff"] = rat_str(cd.coeff);
          data["klt"] = cd.klt;
          data["canonical"] = cd.canonical;
          return ok(cd.coeff == Rat(q - 2, q) && cd.klt && cd.canonical == (q == 2));
        });

  r.run("lem-Y-sing.ky-sign",
        "(q^2+q+1) K_Y ~ (q^2-2q-2) sum E_i^Y; -K_Y ample iff q = 2, K_Y ample iff q > 2",
        [&](Json& data) {
          ContractionData cd = contraction_data(S, cls);
          // the X-level identity behind the pushforward
          DivClass lhs = Rat(n) * cls.K;
          DivClass rhs = div_zero(S);
          for (const DivClass& lp : cls.Lp) rhs = rhs - Rat(3) * lp;
          for (const DivClass& e : cls.E) rhs = rhs + Rat(q * q - 2 * q - 2) * e;
          bool identity = lhs == rhs;
          data["multiplier"] = cd.ky_rhs.convert_to<int64_t>();
          data["x_level_identity"] = identity;
          data["minus_ky_ample"] = cd.minus_ky_ample;
          data["ky_ample"] = cd.ky_ample;
          bool sign_ok = (q == 2) ? (cd.minus_ky_ample && !cd.ky_ample)
                                  : (cd.ky_ample && !cd.minus_ky_ample);
          return ok(identity && sign_ok);
        });

  if (q == 2) {
    r.run("lem-Y-sing.minus-kx", "-K_X is nef and big (q = 2)",
          [&](Json& data) {
            ConeResult cone = cone_generators(S, inc);
            NefBigCertificate cert =
                nef_big_certificate(-cls.K, NefBigMode::full_cone_q2, &cone.generators);
            data["verdict"] = cert.verdict == CertVerdict::certified ? "certified" : "inconclusive";
            data["self_intersection"] = rat_str(cert.self_intersection);
            return ok(cert.verdict == CertVerdict::certified && cert.nef && cert.big);
          });
  } else {
    r.run("lem-Y-sing.minus-kx",
          "-K_X.L'_j = -(q-2) < 0 for q > 2: -K_X not nef, consistent with K_Y ample",
          [&](Json& data) {
            bool good = true;
            for (const DivClass& lp : cls.Lp)
              if (intersect(-cls.K, lp) != -(q - 2)) good = false;
            data["pairing"] = -(q - 2);
            return ok(good);
          });
  }

  r.run("thm-cex-kvv.klt", "(X, Delta) is klt: disjoint smooth rational boundary, coefficients q/(q+1) < 1",
        [&](Json& data) {
          std::vector<BoundaryComponent> boundary;
          for (const DivClass& lp : cls.Lp) boundary.push_back({lp, Rat(q, q + 1)});
          KltCertificate cert = is_klt_disjoint_snc(make_pair_desc(S, std::move(boundary)));
          data["coefficient"] = rat_str(Rat(q, q + 1));
          data["disjoint_verified"] = cert.disjoint_verified;
          data["adjunction_verified"] = cert.adjunction_verified;
          return ok(cert.klt);
        });

  r.run("thm-cex-kvv.b-delta", "B - Delta = (1/(q+1)) H exactly",
        [&](Json& data) {
          DivClass diff = cls.B - cls.Delta;
          bool holds = diff == Rat(1, q + 1) * cls.H;
          data["difference"] = json_div(diff);
          return ok(holds);
        });

  r.run("thm-cex-kvv.nef-big", "B - Delta is nef and big (positive multiple of H, square > 0)",
        [&](Json& data) {
          NefBigCertificate cert =
              nef_big_certificate(cls.B - cls.Delta, NefBigMode::pullback_decomposition);
          data["route"] = cert.route;
          data["note"] = cert.note;
          return ok(cert.verdict == CertVerdict::certified && cert.nef && cert.big);
        });

  r.run("thm-cex-kvv.b-numbers", "B^2 = -q^3+q^2+1 and B.K_X = q^3-2q^2+q-3",
        [&](Json& data) {
          Rat b2 = intersect(cls.B, cls.B);
          Rat bk = intersect(cls.B, cls.K);
          data["B2"] = rat_str(b2);
          data["BK"] = rat_str(bk);
          return ok(b2 == -q * q * q + q * q + 1 && bk == q * q * q - 2 * q * q + q - 3);
        });

  r.run("thm-cex-kvv.chi", "chi(K_X + B) = (q - q^2)/2 by Riemann-Roch",
        [&](Json& data) {
          Rat chi = euler_char(cls.K + cls.B);
          data["chi"] = rat_str(chi);
          return ok(chi == Rat(q - q * q, 2));
        });

  r.run("thm-cex-kvv.h2-serre", "h^2(K_X + B) = h^0(-B) = 0 (negative degree)",
        [&](Json& data) {
          int64_t h2 = h0(S, cls.K - (cls.K + cls.B));
          data["h2"] = h2;
          return ok(h2 == 0);
        });

  r.run("thm-cex-kvv.h1",
        "h^1(K_X + B) >= (q^2-q)/2; Kawamata-Viehweg vanishing fails on X",
        [&](Json& data) {
          int64_t bound = (q * q - q) / 2;
          data["bound"] = bound;
          int64_t chi = to_i64(euler_char(cls.K + cls.B));
          int64_t h2 = h0(S, cls.K - (cls.K + cls.B));
          data["chi"] = chi;
          data["h2"] = h2;
          if (q <= 5) {
            CohomologyTriple coh = cohomology(S, cls.K + cls.B, cls.K);
            data["h0"] = coh.h0;
            data["h1"] = coh.h1;
            bool good = coh.h2 == 0 && coh.h1 == coh.h0 + bound && coh.h1 >= bound;
            if (q == 2) good = good && coh.h0 == 0 && coh.h1 == 1;
            return ok(good);
          }
          // exact h1 beyond desk size for q >= 7, but the bound is rigorous:
          // h1 = h0 + h2 - chi = h0 + (q^2-q)/2 >= (q^2-q)/2
          data["exact_h1"] = "not computed for q >= 7 (interpolation system size)";
          return ok(h2 == 0 && chi == -bound);
        });

  r.run("thm-pi.M-numbers", "M^2 = q, M.L'_j = 0 for all j, M.E_i = 1",
        [&](Json& data) {
          bool good = intersect(cls.M, cls.M) == q;
          for (const DivClass& lp : cls.Lp)
            if (intersect(cls.M, lp) != 0) good = false;
          for (const DivClass& e : cls.E)
            if (intersect(cls.M, e) != 1) good = false;
          data["M2"] = rat_str(intersect(cls.M, cls.M));
          return ok(good);
        });

  r.run("thm-pi.descent-shadow",
        "numerical shadow of the descent M = g*M_Y: M.L'_j = 0 on every contracted curve "
        "(Cartier descent to Y not machine-checked)",
        [&](Json& data) {
          bool good = true;
          for (const DivClass& lp : cls.Lp)
            if (intersect(cls.M, lp) != 0) good = false;
          data["contracted_curves"] = cls.Lp.size();
          return ok(good);
        });

  r.run("thm-pi.h0M", "h^0(X, O(M)) = 3",
        [&](Json& data) {
          int64_t v = h0(S, cls.M);
          data["h0"] = v;
          return ok(v == 3);
        });

  r.run("thm-pi.m-basis",
        "the three forms x^q y - x y^q, y^q z - y z^q, z^q x - z x^q vanish at every rational "
        "point, are independent, and span the image of H^0(M); M = q E_i + sum of the lines "
        "through P_i as classes",
        [&](Json& data) {
          MBasisCheck chk = m_basis_check(S, inc, cls);
          data["vanish_at_all_points"] = chk.vanish_at_all_points;
          data["linearly_independent"] = chk.linearly_independent;
          data["h0"] = chk.h0_value;
          data["class_identity"] = chk.class_identity;
          return ok(chk.ok());
        });

  r.run("thm-pi.base-locus",
        "|M| is base point free: common zeros over GF(q^2) are exactly the rational points, "
        "and the linear parts there span dimension 2",
        [&](Json& data) {
          BaseLocusCheck chk = base_locus_check(q, 2);
          data["points_scanned"] = chk.points_scanned;
          data["common_zeros"] = chk.common_zeros;
          data["linear_parts_rank2"] = chk.linear_parts_rank2;
          return ok(chk.ok());
        });

  if (q == 2) {
    r.run("rem-anti-map.q2", "M = -K_X as classes (q = 2)",
          [&](Json& data) {
            bool holds = cls.M == -cls.K;
            data["holds"] = holds;
            return ok(holds);
          });
  } else {
    r.skip("rem-anti-map.q2", "M = -K_X as classes (q = 2)", "statement specific to q = 2");
  }

  r.run("prop-bertini.members",
        "every member over F_q is q E_i + the q+1 lines through a unique rational point; "
        "member count (q^3-1)/(q-1) = q^2+q+1 and the center map is a bijection",
        [&](Json& data) {
          std::vector<MForm> members = all_members(S->field, q);
          std::vector<uint8_t> seen(inc.points.size(), 0);
          for (const MForm& m : members) {
            MemberClass mc = classify_member(inc, m);
            if (seen[mc.center_index]) return Status::fail;
            seen[mc.center_index] = 1;
          }
          data["members"] = members.size();
          bool all = std::all_of(seen.begin(), seen.end(), [](uint8_t v) { return v != 0; });
          return ok(static_cast<int64_t>(members.size()) == n && all);
        });

  r.run("prop-bertini.singular",
        "no member of |M| is smooth: the q-th-root point is singular on every F_q-member and "
        "on seeded members over GF(q^2); generic coefficient classes have a non-rational "
        "singular point",
        [&](Json& data) {
          for (const MForm& m : all_members(S->field, q))
            member_singular_point(m, derive_seed(opts.seed, 17));
          Field ext = make_field(S->field->p, S->field->e * 2);
          SplitMix64 rng(derive_seed(opts.seed, 18));
          int generic = 0, samples = 10;
          for (int t = 0; t < samples; ++t) {
            FieldElem a = decode(ext, static_cast<int64_t>(rng.below(ext->size)));
            FieldElem b = decode(ext, static_cast<int64_t>(rng.below(ext->size)));
            FieldElem c = decode(ext, static_cast<int64_t>(rng.below(ext->size)));
            if (a.is_zero() && b.is_zero() && c.is_zero()) c = fe_one(ext);
            MForm m = make_mform(ext, q, a, b, c);
            ProjPoint sing = member_singular_point(m, derive_seed(opts.seed, 19 + t));
            bool rational = true;
            for (int i = 0; i < 3; ++i)
              if (fe_pow(sing.x[i], q) != sing.x[i]) rational = false;
            if (!rational) ++generic;
          }
          data["fq_members_verified"] = n;
          data["ext_samples"] = samples;
          data["ext_samples_nonrational_singularity"] = generic;
          return Status::pass;
        });

  if (q <= 3) {
    r.run("prop-bertini.integrality",
          "a general member is integral: sampled members over GF(q^4) with truly quartic "
          "coefficient classes carry no rational line and have exactly q^4 + 1 rational "
          "points, certifying geometric integrality for member degree <= 4",
          [&](Json& data) {
            IntegralityEvidence ev =
                member_integrality_evidence(q, 8, derive_seed(opts.seed, 37));
            data["samples"] = ev.samples;
            data["integral"] = ev.integral_count;
            data["line_factored"] = ev.line_factored_count;
            data["expected_points"] = ev.expected_points;
            return ok(ev.ok());
          });
  } else {
    r.skip("prop-bertini.integrality", "a general member is integral (sampled evidence)",
           "integrality certificate cases are established for member degree <= 4 (q in {2, 3})");
  }

  r.run("thm-pi.fiber-roundtrip",
        "fiber_solve inverts Psi on seeded non-excluded points of GF(q^4)^2",
        [&](Json& data) {
          Field f = make_field(S->field->p, S->field->e * 4);
          SplitMix64 rng(derive_seed(opts.seed, 23));
          int tested = 0;
          for (int t = 0; t < 400 && tested < 30; ++t) {
            FieldElem u = decode(f, static_cast<int64_t>(rng.below(f->size)));
            FieldElem v = decode(f, static_cast<int64_t>(rng.below(f->size)));
            PsiValue val = psi_eval(q, u, v);
            if (val.excluded) continue;
            FiberSolution sol = fiber_solve(q, val.alpha, val.beta);
            if (sol.degenerate) continue;  // a non-general image point
            if (sol.u != u || sol.v != v) return Status::fail;
            ++tested;
          }
          data["round_trips"] = tested;
          return ok(tested > 0);
        });

  if (q <= 5) {
    int census_n = q <= 3 ? 50 : 20;
    r.run("thm-pi.fiber-census",
          "sampled evidence consistent with a degree-q universal homeomorphism: every "
          "non-degenerate fiber over GF(q^4) is a single point",
          [&](Json& data) {
            FiberCensus census =
                fiber_census(q, 2, census_n, derive_seed(opts.seed, 29), opts.threads);
            data["census"] = json_census(census);
            bool single = census.histogram.size() == 1 && census.histogram.count(1) == 1 &&
                          census.histogram.at(1) == census_n;
            return ok(single && census.solver_matched);
          });
  } else {
    r.skip("thm-pi.fiber-census",
           "sampled evidence that every non-degenerate fiber is a single point",
           "census over GF(q^4)^2 exceeds the report budget for q >= 7; run the fibers "
           "subcommand explicitly");
  }

  if (q == 2) {
    r.run("thm-KM-cone.generators",
          "NE(X) is generated by exactly 14 curves: E_1..E_7 and L'_1..L'_7; the Diophantine "
          "enumeration leaves no undetermined candidate",
          [&](Json& data) {
            ConeResult cone = cone_generators(S, inc);
            data["total_candidates"] = cone.total;
            data["realized"] = cone.realized;
            data["excluded"] = cone.excluded;
            data["undetermined"] = cone.undetermined;
            return ok(cone.generators.size() == 14 && cone.undetermined == 0 &&
                      cone.realized == 14);
          });

    r.run("thm-KM-cone.duality",
          "H and -K pair >= 0 with all 14 generators; -K pairs 0 exactly with the L'_j",
          [&](Json& data) {
            ConeResult cone = cone_generators(S, inc);
            data["h_pairings_ok"] = cone.h_pairings_ok;
            data["minus_k_pairings_ok"] = cone.minus_k_pairings_ok;
            return ok(cone.h_pairings_ok && cone.minus_k_pairings_ok);
          });

    r.run("cor-lift.ample-perturbation",
          "B - Delta - eps sum E_i is ample for some eps = 1/2^s (Kleiman against the "
          "certified cone); hypothesis of the non-liftability corollary",
          [&](Json& data) {
            ConeResult cone = cone_generators(S, inc);
            AmplePerturbation pert = ample_perturbation_q2(cls, cone.generators);
            data["epsilon"] = rat_str(pert.epsilon);
            data["s"] = pert.s;
            data["square"] = rat_str(pert.self_intersection);
            return ok(pert.epsilon > 0);
          });

    r.run("prop-km-surfaces.strange-conic",
          "exactly one smooth conic through [1:0:0], [0:1:0], [1:1:1] with all tangents "
          "through [0:0:1], over GF(2) (the conic xy + z^2, with exactly those 3 rational "
          "points) and over GF(4)",
          [&](Json& data) {
            Json sub = json_kmk(S->field);
            data["gf2"] = sub["strange_conic_count"];
            data["gf2_points"] = sub.contains("conic_rational_points")
                                     ? sub["conic_rational_points"].size()
                                     : 0;
            Field f4 = make_field(2, 2);
            FieldElem z = fe_zero(f4), o = fe_one(f4);
            std::vector<Conic> c4 = strange_conics(make_point(o, z, z), make_point(z, o, z),
                                                   make_point(o, o, o), make_point(z, z, o));
            data["gf4"] = c4.size();
            bool gf2_ok = sub["strange_conic_count"] == 1 && data["gf2_points"] == 3;
            return ok(gf2_ok && c4.size() == 1);
          });

    r.run("prop-km-surfaces.lattice",
          "the 7 Keel-McKernan classes are pairwise-orthogonal (-1)-classes; contracting them "
          "leaves rank 1 with K'^2 = 9; an explicit form-preserving isometry onto the q=2 "
          "lattice fixes K",
          [&](Json& data) {
            KMLatticeReport rep = km_lattice_check();
            data["classes_ok"] = rep.classes_ok;
            data["incidence_ok"] = rep.incidence_ok;
            data["contracted_k_squared"] = rep.contracted_k_squared;
            data["rank_after"] = rep.rank_after;
            data["isometry_ok"] = rep.isometry_ok;
            return ok(rep.ok());
          });

    r.run("prop-km-surfaces.step-independent",
          "projectivities fixing [0:0:1] act transitively on point triples of the strange "
          "conic and preserve it (GF(2) and GF(4))",
          [&](Json& data) {
            StepIndependentReport a = step_independent_check(make_field(2, 1));
            StepIndependentReport b = step_independent_check(make_field(2, 2));
            data["gf2_pairs"] = a.pairs_tested;
            data["gf4_pairs"] = b.pairs_tested;
            return ok(a.all_ok && b.all_ok);
          });
  } else {
    const std::string note = "established for q = 2 only";
    r.skip("thm-KM-cone.generators", "NE(X) generated by exactly 14 curves", note);
    r.skip("thm-KM-cone.duality", "dual pairings of H and -K against the generators", note);
    r.skip("cor-lift.ample-perturbation", "ample perturbation hypothesis", note);
    r.skip("prop-km-surfaces.strange-conic", "uniqueness of the strange conic", note);
    r.skip("prop-km-surfaces.lattice", "Keel-McKernan lattice identification", note);
    r.skip("prop-km-surfaces.step-independent", "triple transitivity preserving the conic", note);
  }

  r.run("linsys.base-change",
        "h^0 is invariant under base change to GF(q^2) (flat base change)",
        [&](Json& data) {
          bool good = base_change_check(S, cls.M, 2);
          int checked = 1;
          if (q <= 5) {
            good = good && base_change_check(S, cls.K + cls.B, 2);
            ++checked;
          }
          SplitMix64 rng(derive_seed(opts.seed, 31));
          for (int t = 0; t < 3; ++t, ++checked) {
            std::vector<Rat> m(S->n);
            for (int i = 0; i < S->n; ++i) m[i] = rng.range(-1, 2);
            DivClass d = div_make(S, rng.range(0, 6), std::move(m));
            if (!base_change_check(S, d, 2)) good = false;
          }
          data["divisors_checked"] = checked;
          return ok(good);
        });

  std::sort(doc.checks.begin(), doc.checks.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return doc;
}

bool report_has_fail(const ReportDoc& doc) {
  return std::any_of(doc.checks.begin(), doc.checks.end(), [](const CheckReport& c) {
    return c.status == CheckReport::Status::fail;
  });
}

Json report_json(const ReportDoc& doc, bool with_timing) {
  Json out;
  out["schema"] = doc.schema;
  out["q"] = doc.q;
  out["seed"] = doc.seed;
  Json checks = Json::array();
  for (const CheckReport& c : doc.checks) {
    Json row;
    row["check_id"] = c.check_id;
    row["statement"] = c.statement;
    row["status"] = status_str(c.status);
    row["data"] = c.data;
    if (with_timing) row["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(row));
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace langerlab
