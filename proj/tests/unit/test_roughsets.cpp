#include <doctest.h>

#include "mrpcorr/roughsets.hpp"
#include "mrpcorr/semantics.hpp"
#include "support/fixtures.hpp"

using namespace mrpcorr;

TEST_CASE("lower and upper approximations") {
  // R an equivalence with classes {1,2} and {3}
  FiniteDomain dom({"1", "2", "3"});
  FiniteRelation r(dom, dom);
  for (auto [a, b] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}) r.set(a, b);
  KripkeFrame f = KripkeFrame::unimodal(dom, r);
  Approximations ap = approximations(f, bit(0) | bit(2));
  CHECK(ap.lower == bit(2));
  CHECK(ap.upper == (bit(0) | bit(1) | bit(2)));

  KripkeFrame id = KripkeFrame::unimodal(dom, FiniteRelation::identity(dom));
  Bits z = bit(0) | bit(1);
  Approximations ap2 = approximations(id, z);
  CHECK(ap2.lower == z);
  CHECK(ap2.upper == z);

  CHECK(approximations(f, 0).upper == 0);
  CHECK_THROWS_AS(approximations(KripkeFrame{dom, r, FiniteRelation::identity(dom)}, 0),
                  std::invalid_argument);

  // lower approximation sits below the upper one on serial spaces
  FrameSampler sampler(61);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + i % 4;
    FiniteRelation rel = sampler.relation(FiniteDomain::indexed(n), FiniteDomain::indexed(n), 0.5);
    KripkeFrame kf = KripkeFrame::unimodal(rel.src(), rel);
    if (!classify_space(kf).serial.holds) continue;
    Bits s = sampler.subset(n);
    Approximations a = approximations(kf, s);
    CHECK((a.lower & ~a.upper) == 0);
  }
}

TEST_CASE("kripke space classification") {
  FiniteDomain dom({"1", "2", "3"});
  FiniteRelation r(dom, dom);
  for (auto [a, b] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}) r.set(a, b);
  SpaceClassReport rep = classify_space(KripkeFrame::unimodal(dom, r));
  CHECK(rep.serial.holds);
  CHECK(rep.reflexive.holds);
  CHECK(rep.symmetric.holds);
  CHECK(rep.transitive.holds);
  CHECK(rep.euclidean.holds);

  SpaceClassReport k12 = classify_space(fixtures::k12());
  CHECK_FALSE(k12.serial.holds);
  CHECK(k12.serial.witness->first == 1);  // state 2 has no successor
  CHECK_FALSE(k12.reflexive.holds);
  CHECK(k12.transitive.holds);
}

TEST_CASE("graph space classification") {
  FrameSampler sampler(62);
  for (int i = 0; i < 50; ++i) {
    FiniteRelation e = sampler.reflexive_relation(1 + i % 5);
    GraphFrame f = canonical_pawlak_frame(e.src(), e);
    SpaceClassReport rep = classify_space(f);
    CHECK(rep.serial.holds);
    CHECK(rep.e_reflexive.holds);
    CHECK(rep.e_symmetric.holds);
    CHECK(rep.e_transitive_box.holds);
    CHECK(rep.e_transitive_dia.holds);
    CHECK(rep.pawlak());
  }

  for (char who : {'b', 'l', 's'}) {
    SpaceClassReport rep = classify_space(fixtures::rashomon(who));
    CHECK(rep.e_reflexive.holds);
    CHECK(rep.e_transitive_box.holds);
    CHECK(rep.e_transitive_dia.holds);
    CHECK(rep.serial.holds);
  }
}

TEST_CASE("classification flags agree with frame validity") {
  // Kripke: each flag matches validity of its axiom, exhaustively at n <= 3
  struct Probe {
    const char* axiom;
    FlagResult SpaceClassReport::* flag;
  };
  const Probe probes[] = {{"box p <= dia p", &SpaceClassReport::serial},
                          {"box p <= p", &SpaceClassReport::reflexive},
                          {"p <= box dia p", &SpaceClassReport::symmetric},
                          {"box p <= box box p", &SpaceClassReport::transitive},
                          {"dia p <= box dia p", &SpaceClassReport::euclidean}};
  for (std::size_t n = 1; n <= 3; ++n)
    for (const KripkeFrame& f : all_unimodal_kripke_frames(n)) {
      SpaceClassReport rep = classify_space(f);
      for (const Probe& p : probes)
        CHECK((rep.*(p.flag)).holds == frame_valid(f, parse_inequality(p.axiom)).valid);
    }

  // Graph: each E-flag matches validity of the same axioms, on samples
  FrameSampler sampler(63);
  for (int i = 0; i < 120; ++i) {
    GraphFrame f = sampler.graph_frame(1 + i % 3);
    SpaceClassReport rep = classify_space(f);
    CHECK(rep.serial.holds == frame_valid(f, parse_inequality("box p <= dia p")).valid);
    CHECK(rep.e_reflexive.holds == (frame_valid(f, parse_inequality("box p <= p")).valid &&
                                    frame_valid(f, parse_inequality("p <= dia p")).valid));
    CHECK(rep.e_symmetric.holds == (frame_valid(f, parse_inequality("p <= box dia p")).valid &&
                                    frame_valid(f, parse_inequality("dia box p <= p")).valid));
    CHECK(rep.e_transitive_box.holds == frame_valid(f, parse_inequality("box p <= box box p")).valid);
    CHECK(rep.e_transitive_dia.holds == frame_valid(f, parse_inequality("dia dia p <= dia p")).valid);
  }
}

TEST_CASE("identity-graph classification matches the Kripke flags") {
  FrameSampler sampler(64);
  for (int i = 0; i < 80; ++i) {
    std::size_t n = 1 + i % 4;
    FiniteRelation r = sampler.relation(FiniteDomain::indexed(n), FiniteDomain::indexed(n), 0.45);
    KripkeFrame k = KripkeFrame::unimodal(r.src(), r);
    GraphFrame g = shift(k);
    SpaceClassReport gk = classify_space(k), gg = classify_space(g);
    CHECK(gk.serial.holds == gg.serial.holds);
    CHECK(gk.reflexive.holds == gg.e_reflexive.holds);
    CHECK(gk.symmetric.holds == gg.e_symmetric.holds);
    CHECK(gk.transitive.holds == (gg.e_transitive_box.holds && gg.e_transitive_dia.holds));
  }
}

TEST_CASE("pawlak condition suite") {
  // the canonical frame over the chain graph passes all ten
  PawlakReport rep = pawlak_check(fixtures::chain3());
  CHECK_FALSE(rep.refused);
  CHECK(rep.all_pass());

  // the four-testimony frames are classified Pawlak and pass as well;
  // conditions 5-10 are the six validated axioms
  for (char who : {'b', 'l', 's'}) {
    PawlakReport r = pawlak_check(fixtures::rashomon(who));
    CHECK_FALSE(r.refused);
    for (std::size_t i = 4; i < 10; ++i) CHECK(r.items[i].holds);
    CHECK(r.all_pass());
  }

  // a non-Pawlak frame is refused, with the classification attached
  PawlakReport refused = pawlak_check(shift(fixtures::k12()));
  CHECK(refused.refused);
  CHECK_FALSE(refused.classification.e_reflexive.holds);
}
