#include <doctest.h>

#include <set>

#include "mrpcorr/frames.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mrpcorr;

namespace {

std::set<std::pair<Bits, Bits>> concept_set(const ConceptLattice& lat) {
  std::set<std::pair<Bits, Bits>> out;
  for (const Concept& c : lat.concepts()) out.insert({c.extent, c.intent});
  return out;
}

}  // namespace

TEST_CASE("frame validation") {
  GraphFrame chain = fixtures::chain3();
  CHECK_FALSE(validate_frame(chain).has_value());

  // canonical frames validate for any sampled reflexive E
  FrameSampler sampler(7);
  for (int i = 0; i < 60; ++i) {
    FiniteRelation e = sampler.reflexive_relation(1 + i % 5);
    CHECK_FALSE(validate_frame(canonical_pawlak_frame(e.src(), e)).has_value());
  }

  // identity as box relation breaks compatibility on the chain graph
  GraphFrame bad = chain;
  bad.r_box = FiniteRelation::identity(chain.dom);
  auto v = validate_frame(bad);
  REQUIRE(v.has_value());
  CHECK(v->message.find("R_box") != std::string::npos);
  CHECK(v->message.find("v") != std::string::npos);

  GraphFrame irr = chain;
  irr.e.set(0, 0, false);
  auto v2 = validate_frame(irr);
  REQUIRE(v2.has_value());
  CHECK(v2->message.find("reflexive") != std::string::npos);
}

TEST_CASE("shift and unshift are mutually inverse") {
  KripkeFrame k = fixtures::k12();
  GraphFrame g = shift(k);
  CHECK(g.e == FiniteRelation::identity(k.dom));
  CHECK(g.r_box == k.r_box);
  CHECK(g.r_dia == k.r_dia);
  CHECK_FALSE(validate_frame(g).has_value());
  KripkeFrame back = unshift(g);
  CHECK(back.r_box == k.r_box);
  CHECK(back.r_dia == k.r_dia);

  GraphFrame nondelta = fixtures::chain3();
  CHECK_THROWS_AS(unshift(nondelta), std::invalid_argument);
  GraphFrame mismatched = shift(k);
  mismatched.r_dia = FiniteRelation::identity(k.dom);
  CHECK_THROWS_AS(unshift(mismatched), std::invalid_argument);
}

TEST_CASE("lift complements the relations into the polarity") {
  GraphFrame g = fixtures::chain3();
  PolarityFrame p = lift(g);
  CHECK(p.i == g.e.complement());
  CHECK(p.r_box == g.r_box.complement());
  CHECK(p.r_dia == g.r_dia.complement());
  CHECK_FALSE(validate_frame(p).has_value());

  // the lifted polarity has the same concepts, read through the two sorts
  ConceptLattice gl = ConceptLattice::of_graph(g);
  ConceptLattice pl = ConceptLattice::of_polarity(p);
  CHECK(concept_set(gl) == concept_set(pl));
}

TEST_CASE("chain graph concept lattice is the known five-element one") {
  GraphFrame g = fixtures::chain3();
  ConceptLattice lat = ConceptLattice::of_graph(g);
  REQUIRE(lat.size() == 5);
  const Bits u = bit(0), v = bit(1), w = bit(2);
  std::set<std::pair<Bits, Bits>> expect = {
      {0, u | v | w}, {w, u | v}, {v | w, u}, {u, w}, {u | v | w, 0}};
  CHECK(concept_set(lat) == expect);
  CHECK(lat.concepts()[0].extent == 0);                  // deterministic order: by extent size
  CHECK(lat.concepts()[4].extent == (u | v | w));
  CHECK(format_concept(lat, lat[1]) == "(u | w)");
}

TEST_CASE("four-testimony lattice has the nine known concepts") {
  GraphFrame g = fixtures::rashomon();
  ConceptLattice lat = ConceptLattice::of_graph(g);
  REQUIRE(lat.size() == 9);
  const Bits b = bit(0), l = bit(1), s = bit(2), w = bit(3);
  std::set<std::pair<Bits, Bits>> expect = {{0, b | l | s | w},
                                            {b, l | s | w},
                                            {l, b | s | w},
                                            {s, b | l | w},
                                            {b | l, s | w},
                                            {b | s, l | w},
                                            {l | s, b | w},
                                            {b | l | s, w},
                                            {b | l | s | w, 0}};
  CHECK(concept_set(lat) == expect);
}

TEST_CASE("identity graphs give powerset lattices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    FiniteDomain dom = FiniteDomain::indexed(n, "s");
    GraphFrame g{dom, FiniteRelation::identity(dom), FiniteRelation::identity(dom),
                 FiniteRelation::identity(dom)};
    ConceptLattice lat = ConceptLattice::of_graph(g);
    CHECK(lat.size() == (std::size_t(1) << n));
    for (const Concept& c : lat.concepts()) CHECK(c.intent == (~c.extent & dom.full()));
    // the lifted polarity carries the same powerset of concepts
    CHECK(ConceptLattice::of_polarity(lift(g)).size() == (std::size_t(1) << n));
  }
}

TEST_CASE("lattice structure: order, join, meet, covers, generators") {
  FrameSampler sampler(2718);
  for (int round = 0; round < 40; ++round) {
    GraphFrame f = sampler.graph_frame(1 + round % 4);
    ConceptLattice lat = ConceptLattice::of_graph(f);

    // cross-check the concept set against the subset-closure oracle
    auto ref = oracle::concepts_of_graph(oracle::pairs_of(f.e), f.size());
    CHECK(lat.size() == ref.size());
    for (const Concept& c : lat.concepts()) {
      CHECK(ref.count({oracle::set_of(c.extent, f.size()), oracle::set_of(c.intent, f.size())}) == 1);
      // mutual polarity of the two sides
      CHECK(f.e.galois_neg(1, c.extent) == c.intent);
      CHECK(f.e.galois_neg(0, c.intent) == c.extent);
    }

    for (std::size_t a = 0; a < lat.size(); ++a)
      for (std::size_t b = 0; b < lat.size(); ++b) {
        std::size_t j = lat.join(a, b), m = lat.meet(a, b);
        CHECK(lat.leq(a, j));
        CHECK(lat.leq(b, j));
        CHECK(lat.leq(m, a));
        CHECK(lat.leq(m, b));
        CHECK(lat.join(a, b) == lat.join(b, a));
        // absorption
        CHECK(lat.meet(a, lat.join(a, b)) == a);
        CHECK(lat.join(a, lat.meet(a, b)) == a);
        for (std::size_t c = 0; c < lat.size(); ++c) {
          CHECK(lat.join(a, lat.join(b, c)) == lat.join(lat.join(a, b), c));
          CHECK(lat.meet(a, lat.meet(b, c)) == lat.meet(lat.meet(a, b), c));
        }
      }

    // join-generation by the point concepts (z^[10], z^[1]) and
    // meet-generation by (z^[0], z^[01])
    for (std::size_t i = 0; i < lat.size(); ++i) {
      std::size_t ji = lat.bottom_index(), mi = lat.top_index();
      for (std::size_t z = 0; z < f.size(); ++z) {
        std::size_t zj = lat.close_extent(bit(z));
        if (lat.leq(zj, i)) ji = lat.join(ji, zj);
        std::size_t zm = lat.close_intent(bit(z));
        if (lat.leq(i, zm)) mi = lat.meet(mi, zm);
      }
      CHECK(ji == i);
      CHECK(mi == i);
    }
  }
}

TEST_CASE("exhaustive generators and determinism") {
  auto g1 = all_graph_frames(1);
  CHECK(g1.size() == 4);  // one E, two compatible relations each way
  for (const GraphFrame& f : g1) CHECK_FALSE(validate_frame(f).has_value());

  auto g2 = all_graph_frames(2);
  for (const GraphFrame& f : g2) CHECK_FALSE(validate_frame(f).has_value());
  CHECK(g2.size() > 100);
  CHECK_THROWS_AS(all_graph_frames(5), std::invalid_argument);

  CHECK(all_kripke_frames(2).size() == 256);
  CHECK(all_unimodal_kripke_frames(2).size() == 16);

  // seeded sampling is reproducible bit-exactly
  FrameSampler s1(42), s2(42);
  for (int i = 0; i < 25; ++i) {
    GraphFrame a = s1.graph_frame(4), b = s2.graph_frame(4);
    CHECK(a.e == b.e);
    CHECK(a.r_box == b.r_box);
    CHECK(a.r_dia == b.r_dia);
    CHECK_FALSE(validate_frame(a).has_value());
  }
  CHECK(s1.stats().relations_tried == s2.stats().relations_tried);
  CHECK(s1.stats().relations_accepted == 50);
}

TEST_CASE("dot export lists every concept and cover") {
  GraphFrame g = fixtures::chain3();
  ConceptLattice lat = ConceptLattice::of_graph(g);
  std::string dot = lattice_to_dot(lat);
  CHECK(dot.find("digraph") != std::string::npos);
  for (const Concept& c : lat.concepts())
    CHECK(dot.find(format_concept(lat, c)) != std::string::npos);
  // the five-element lattice has exactly five covering edges
  CHECK(lat.covers().size() == 5);
}
