#include <doctest.h>

#include "langerlab/cone.hpp"
#include "langerlab/positivity.hpp"

using namespace langerlab;

namespace {

struct LangerSetup {
  Surface S;
  Incidence inc;
  StandardClasses cls;
  explicit LangerSetup(int64_t q)
      : S(langer_surface(q)), inc(enumerate_plane(S->field)), cls(standard_classes(S, inc)) {}

  PairDesc delta_pair(const Rat& coeff) const {
    std::vector<BoundaryComponent> boundary;
    for (const DivClass& lp : cls.Lp) boundary.push_back({lp, coeff});
    return make_pair_desc(S, std::move(boundary));
  }
};

}  // namespace

TEST_SUITE("positivity") {

TEST_CASE("Delta with coefficients q/(q+1) is klt for every q") {
  for (int64_t q : {2, 3, 4, 5}) {
    LangerSetup s(q);
    KltCertificate cert = is_klt_disjoint_snc(s.delta_pair(Rat(q, q + 1)));
    CHECK(cert.klt);
    CHECK(cert.disjoint_verified);
    CHECK(cert.adjunction_verified);
  }
}

TEST_CASE("empty boundary is klt; coefficient 1 is lc but not klt") {
  LangerSetup s(2);
  CHECK(is_klt_disjoint_snc(make_pair_desc(s.S, {})).klt);

  std::vector<BoundaryComponent> one{{s.cls.Lp[0], Rat(1)}};
  CHECK(!is_klt_disjoint_snc(make_pair_desc(s.S, std::move(one))).klt);
}

TEST_CASE("unflagged geometry refuses instead of answering") {
  LangerSetup s(2);
  // E_1 meets the lines through P_1, so {E_1, L'_j} is not disjoint for some j
  int j_through = -1;
  for (size_t j = 0; j < s.cls.Lp.size(); ++j)
    if (intersect(s.cls.E[0], s.cls.Lp[j]) != 0) j_through = static_cast<int>(j);
  REQUIRE(j_through >= 0);
  std::vector<BoundaryComponent> bad{{s.cls.E[0], Rat(1, 2)}, {s.cls.Lp[j_through], Rat(1, 2)}};
  CHECK_THROWS_AS(make_pair_desc(s.S, std::move(bad)), std::invalid_argument);

  // coefficient outside [0, 1]
  std::vector<BoundaryComponent> neg{{s.cls.Lp[0], Rat(-1, 2)}};
  CHECK_THROWS_AS(make_pair_desc(s.S, std::move(neg)), std::invalid_argument);
  std::vector<BoundaryComponent> big{{s.cls.Lp[0], Rat(3, 2)}};
  CHECK_THROWS_AS(make_pair_desc(s.S, std::move(big)), std::invalid_argument);
  // H is not a negative curve
  std::vector<BoundaryComponent> notneg{{s.cls.H, Rat(1, 2)}};
  CHECK_THROWS_AS(make_pair_desc(s.S, std::move(notneg)), std::invalid_argument);
}

TEST_CASE("B - Delta is nef and big through the pullback decomposition") {
  for (int64_t q : {2, 3, 5}) {
    LangerSetup s(q);
    NefBigCertificate cert =
        nef_big_certificate(s.cls.B - s.cls.Delta, NefBigMode::pullback_decomposition);
    CHECK(cert.verdict == CertVerdict::certified);
    CHECK(cert.nef);
    CHECK(cert.big);
  }
}

TEST_CASE("full-cone certificates at q = 2") {
  LangerSetup s(2);
  ConeResult cone = cone_generators(s.S, s.inc);

  NefBigCertificate mk =
      nef_big_certificate(-s.cls.K, NefBigMode::full_cone_q2, &cone.generators);
  CHECK(mk.verdict == CertVerdict::certified);
  CHECK(mk.nef);
  CHECK(mk.big);
  CHECK(mk.self_intersection == 2);

  NefBigCertificate lp =
      nef_big_certificate(s.cls.Lp[0], NefBigMode::full_cone_q2, &cone.generators);
  CHECK(lp.verdict == CertVerdict::inconclusive);
  CHECK(!lp.nef);  // L'_1 . L'_1 = -2 < 0 fails the cone test
  CHECK(lp.self_intersection == -2);

  // -K has exceptional coordinates, so the pullback route proves nothing
  NefBigCertificate wrong_route =
      nef_big_certificate(-s.cls.K, NefBigMode::pullback_decomposition);
  CHECK(wrong_route.verdict == CertVerdict::inconclusive);
}

TEST_CASE("full-cone mode is guarded") {
  LangerSetup s3(3);
  CHECK_THROWS_AS(nef_big_certificate(-s3.cls.K, NefBigMode::full_cone_q2, nullptr),
                  std::invalid_argument);
}

TEST_CASE("ample perturbation at q = 2 returns 1/16") {
  LangerSetup s(2);
  ConeResult cone = cone_generators(s.S, s.inc);
  AmplePerturbation pert = ample_perturbation_q2(s.cls, cone.generators);
  CHECK(pert.epsilon == Rat(1, 16));
  CHECK(pert.s == 4);
  CHECK(pert.generator_pairings.size() == 14);
  for (const Rat& v : pert.generator_pairings) CHECK(v > 0);
  CHECK(pert.self_intersection > 0);  // 15 strict inequalities in total
}

TEST_CASE("ample perturbation refuses q != 2") {
  LangerSetup s(3);
  std::vector<DivClass> dummy;
  CHECK_THROWS_AS(ample_perturbation_q2(s.cls, dummy), std::invalid_argument);
}

}  // TEST_SUITE
