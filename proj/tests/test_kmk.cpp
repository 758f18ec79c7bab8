#include <doctest.h>

#include "langerlab/kmk.hpp"
#include "langerlab/rng.hpp"

using namespace langerlab;

namespace {

std::array<ProjPoint, 4> standard_frame(const Field& f) {
  FieldElem z = fe_zero(f), o = fe_one(f);
  return {make_point(o, z, z), make_point(z, o, z), make_point(z, z, o), make_point(o, o, o)};
}

ProjPoint random_point(const Field& f, SplitMix64& rng) {
  while (true) {
    FieldElem a = decode(f, static_cast<int64_t>(rng.below(f->size)));
    FieldElem b = decode(f, static_cast<int64_t>(rng.below(f->size)));
    FieldElem c = decode(f, static_cast<int64_t>(rng.below(f->size)));
    if (!(a.is_zero() && b.is_zero() && c.is_zero())) return make_point(a, b, c);
  }
}

std::array<ProjPoint, 4> random_frame(const Field& f, SplitMix64& rng) {
  while (true) {
    std::array<ProjPoint, 4> fr{random_point(f, rng), random_point(f, rng), random_point(f, rng),
                                random_point(f, rng)};
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = i + 1; j < 4 && ok; ++j) {
        if (fr[i] == fr[j]) ok = false;
        for (int k = j + 1; k < 4 && ok; ++k)
          if (three_collinear(fr[i], fr[j], fr[k])) ok = false;
      }
    if (ok) return fr;
  }
}

}  // namespace

TEST_SUITE("kmk") {

TEST_CASE("projectivity on the standard frame is the identity") {
  Field f = make_field(5, 1);
  auto fr = standard_frame(f);
  Projectivity sigma = find_projectivity(fr, fr);
  for (const ProjPoint& p : fr) CHECK(apply(sigma, p) == p);
}

TEST_CASE("explicit F_2 frame move") {
  Field f = make_field(2, 1);
  FieldElem z = fe_zero(f), o = fe_one(f);
  std::array<ProjPoint, 4> target{make_point(z, z, o), make_point(o, z, z), make_point(z, o, z),
                                  make_point(o, o, o)};
  Projectivity sigma = find_projectivity(standard_frame(f), target);
  for (int i = 0; i < 4; ++i) CHECK(apply(sigma, standard_frame(f)[i]) == target[i]);
}

TEST_CASE("random frames over GF(2), GF(4), GF(9): 200 round trips each") {
  for (auto [p, e] : {std::pair<int64_t, int>{2, 1}, {2, 2}, {3, 2}}) {
    Field f = make_field(p, e);
    SplitMix64 rng(1000 + p * 10 + e);
    for (int t = 0; t < 200; ++t) {
      auto P = random_frame(f, rng);
      auto Q = random_frame(f, rng);
      Projectivity sigma = find_projectivity(P, Q);
      for (int i = 0; i < 4; ++i) CHECK(apply(sigma, P[i]) == Q[i]);
    }
  }
}

TEST_CASE("collinear frames are refused") {
  Field f = make_field(3, 1);
  FieldElem z = fe_zero(f), o = fe_one(f);
  std::array<ProjPoint, 4> bad{make_point(o, z, z), make_point(z, o, z), make_point(o, o, z),
                               make_point(o, o, o)};  // first three on z = 0
  CHECK_THROWS_AS(find_projectivity(bad, standard_frame(f)), std::invalid_argument);
}

TEST_CASE("the strange conic through the standard frame is xy + z^2") {
  Field f = make_field(2, 1);
  FieldElem z = fe_zero(f), o = fe_one(f);
  std::vector<Conic> found =
      strange_conics(make_point(o, z, z), make_point(z, o, z), make_point(o, o, o),
                     make_point(z, z, o));
  REQUIRE(found.size() == 1);
  std::array<FieldElem, 6> expect{z, z, o, o, z, z};  // z^2 + xy
  CHECK(found[0].c == expect);
}

TEST_CASE("uniqueness persists over GF(4): 1365 classes filtered") {
  Field f = make_field(2, 2);
  FieldElem z = fe_zero(f), o = fe_one(f);
  std::vector<Conic> found =
      strange_conics(make_point(o, z, z), make_point(z, o, z), make_point(o, o, o),
                     make_point(z, z, o));
  REQUIRE(found.size() == 1);
  // still the conic xy + z^2
  CHECK(found[0].c[2].is_one());
  CHECK(found[0].c[3].is_one());
  CHECK(found[0].c[0].is_zero());
  CHECK(found[0].c[1].is_zero());
  CHECK(found[0].c[4].is_zero());
  CHECK(found[0].c[5].is_zero());
}

TEST_CASE("collinear triples are refused by strange_conics") {
  Field f = make_field(2, 2);
  FieldElem z = fe_zero(f), o = fe_one(f);
  FieldElem t = fe_gen(f);
  CHECK_THROWS_AS(strange_conics(make_point(o, z, z), make_point(z, o, z), make_point(o, t, z),
                                 make_point(z, z, o)),
                  std::invalid_argument);
}

TEST_CASE("rational points of conics") {
  Field f2 = make_field(2, 1);
  FieldElem z = fe_zero(f2), o = fe_one(f2);
  Conic C = make_conic(f2, {z, z, o, o, z, z});  // xy + z^2
  std::vector<ProjPoint> pts = conic_rational_points(C);
  REQUIRE(pts.size() == 3);
  std::vector<ProjPoint> expect{make_point(o, z, z), make_point(z, o, z), make_point(o, o, o)};
  for (const ProjPoint& e : expect) {
    bool found = false;
    for (const ProjPoint& p : pts)
      if (p == e) found = true;
    CHECK(found);
  }

  // over GF(4) a smooth conic has q+1 = 5 rational points
  Field f4 = make_field(2, 2);
  FieldElem z4 = fe_zero(f4), o4 = fe_one(f4);
  CHECK(conic_rational_points(make_conic(f4, {z4, z4, o4, o4, z4, z4})).size() == 5);

  // the degenerate conic xy is a union of two lines: 3 + 3 - 1 points over GF(2)
  Conic deg = make_conic(f2, {z, z, z, o, z, z});
  CHECK(!conic_smooth(deg));
  CHECK(conic_rational_points(deg).size() == 5);
}

TEST_CASE("Keel-McKernan lattice identification") {
  CHECK(KMLattice::form(KMLattice::k_class(), KMLattice::k_class()) == 2);
  for (const auto& c : KMLattice::candidate_classes()) {
    CHECK(KMLattice::form(c, c) == -1);
    CHECK(KMLattice::form(KMLattice::k_class(), c) == -1);
  }

  KMLatticeReport rep = km_lattice_check();
  CHECK(rep.classes_ok);
  CHECK(rep.incidence_ok);
  CHECK(rep.contraction_ok);
  CHECK(rep.isometry_ok);
  CHECK(rep.k_squared == 2);
  CHECK(rep.contracted_k_squared == 9);
  CHECK(rep.rank_after == 1);
}

TEST_CASE("triples on the conic are equivalent under projectivities fixing Q") {
  StepIndependentReport a = step_independent_check(make_field(2, 1));
  CHECK(a.conic_points == 3);
  CHECK(a.pairs_tested == 36);
  CHECK(a.all_ok);

  StepIndependentReport b = step_independent_check(make_field(2, 2));
  CHECK(b.conic_points == 5);
  CHECK(b.pairs_tested == 3600);
  CHECK(b.all_ok);

  CHECK_THROWS_AS(step_independent_check(make_field(3, 1)), std::invalid_argument);
}

}  // TEST_SUITE
