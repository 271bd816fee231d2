#include <doctest.h>

#include <random>

#include "mrpcorr/relation.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mrpcorr;

namespace {

FiniteRelation random_relation(std::mt19937_64& rng, const FiniteDomain& src,
                               const FiniteDomain& dst, double density = 0.45) {
  FiniteRelation r(src, dst);
  for (std::size_t u = 0; u < src.size(); ++u)
    for (std::size_t v = 0; v < dst.size(); ++v)
      if (double(rng() >> 11) * 0x1.0p-53 < density) r.set(u, v);
  return r;
}

Bits random_subset(std::mt19937_64& rng, std::size_t n) {
  return Bits(rng()) & full_mask(n);
}

}  // namespace

TEST_CASE("galois operators on small hand data") {
  // U = {1,2}, V = {a,b}, T = {(1,a)}
  FiniteDomain u({"1", "2"}), v({"a", "b"});
  FiniteRelation t(u, v);
  t.set(0, 0);
  CHECK(t.galois_pos(0, bit(0)) == bit(0));  // T^(0)[{a}] = {1}
  CHECK(t.galois_pos(0, 0) == u.full());     // empty argument: every element, vacuously
  CHECK(t.galois_neg(0, 0) == u.full());
  CHECK(t.galois_pos(1, 0) == v.full());

  // the chain graph: E^[1][{w}] = {u,v}, i.e. the attributes of concept (w|uv)
  GraphFrame g = fixtures::chain3();
  std::size_t w = 2;
  CHECK(g.e.galois_neg(1, bit(w)) == (bit(0) | bit(1)));
  // same set through the positive operator of the complement relation
  CHECK(g.e.complement().galois_pos(1, bit(w)) == (bit(0) | bit(1)));

  // Delta on {1,2}: Delta^[0][{2}] = {1} and it coincides with [Delta]{1}
  FiniteRelation delta = FiniteRelation::identity(u);
  CHECK(delta.galois_neg(0, bit(1)) == bit(0));
  CHECK(delta.galois_neg(0, bit(1)) == delta.box(bit(0)));
}

TEST_CASE("galois operators against the reference oracle") {
  std::mt19937_64 rng(2201);
  for (int round = 0; round < 300; ++round) {
    std::size_t ns = 1 + rng() % 6, nd = 1 + rng() % 6;
    FiniteDomain src = FiniteDomain::indexed(ns, "s"), dst = FiniteDomain::indexed(nd, "t");
    FiniteRelation t = random_relation(rng, src, dst);
    oracle::PairSet tp = oracle::pairs_of(t);
    Bits vs = random_subset(rng, nd), us = random_subset(rng, ns);
    CHECK(oracle::set_of(t.galois_pos(0, vs), ns) == oracle::pos0(tp, oracle::set_of(vs, nd), ns));
    CHECK(oracle::set_of(t.galois_pos(1, us), nd) == oracle::pos1(tp, oracle::set_of(us, ns), nd));
    CHECK(oracle::set_of(t.galois_neg(0, vs), ns) ==
          oracle::neg0(tp, oracle::set_of(vs, nd), ns, nd));
    CHECK(oracle::set_of(t.galois_neg(1, us), nd) ==
          oracle::neg1(tp, oracle::set_of(us, ns), ns, nd));
    CHECK(oracle::set_of(t.box(vs), ns) == oracle::box(tp, oracle::set_of(vs, nd), ns, nd));
    CHECK(oracle::set_of(t.dia(vs), ns) == oracle::dia(tp, oracle::set_of(vs, nd), ns));
  }
}

TEST_CASE("adjunction, antitonicity, idempotence, unions") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 500; ++round) {
    std::size_t ns = 1 + rng() % 5, nd = 1 + rng() % 5;
    FiniteDomain src = FiniteDomain::indexed(ns), dst = FiniteDomain::indexed(nd, "y");
    FiniteRelation t = random_relation(rng, src, dst);
    Bits us = random_subset(rng, ns), vs = random_subset(rng, nd);
    // adjunction
    bool left = (us & ~t.galois_pos(0, vs)) == 0;
    bool right = (vs & ~t.galois_pos(1, us)) == 0;
    CHECK(left == right);
    // antitonicity
    Bits vs2 = vs | random_subset(rng, nd);
    CHECK((t.galois_pos(0, vs2) & ~t.galois_pos(0, vs)) == 0);
    CHECK((t.galois_neg(0, vs2) & ~t.galois_neg(0, vs)) == 0);
    // expansion and triple-application idempotence
    CHECK((vs & ~t.galois_pos(1, t.galois_pos(0, vs))) == 0);
    CHECK(t.galois_pos(0, vs) == t.galois_pos(0, t.galois_pos(1, t.galois_pos(0, vs))));
    CHECK(t.galois_neg(0, vs) == t.galois_neg(0, t.galois_neg(1, t.galois_neg(0, vs))));
    // distribution over unions
    Bits w1 = random_subset(rng, nd), w2 = random_subset(rng, nd);
    CHECK(t.galois_pos(0, w1 | w2) == (t.galois_pos(0, w1) & t.galois_pos(0, w2)));
    // square-bracket operators against the modal ones
    Bits w = random_subset(rng, nd);
    CHECK(t.galois_neg(0, ~w & dst.full()) == t.box(w));
    CHECK((~t.galois_neg(0, w) & src.full()) == t.dia(w));
  }
}

TEST_CASE("compositions against the reference oracle") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 1 + rng() % 4;
    FiniteDomain dom = FiniteDomain::indexed(n);
    FiniteRelation e = FiniteRelation::identity(dom);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && rng() % 3 == 0) e.set(a, b);
    FiniteRelation r = random_relation(rng, dom, dom), t = random_relation(rng, dom, dom);
    oracle::PairSet rp = oracle::pairs_of(r), tp = oracle::pairs_of(t), ep = oracle::pairs_of(e);
    CHECK(oracle::pairs_of(compose(CompKind::Circ, r, t)) == oracle::comp_circ(rp, tp, n));
    CHECK(oracle::pairs_of(compose(CompKind::Ast, r, t)) == oracle::comp_ast(rp, tp, n));
    CHECK(oracle::pairs_of(compose(CompKind::Star, r, t)) == oracle::comp_ast(rp, tp, n));
    CHECK(oracle::pairs_of(compose(CompKind::DiaE, r, t, &e)) == oracle::comp_dia_e(rp, tp, ep, n));
    CHECK(oracle::pairs_of(compose(CompKind::BoxE, r, t, &e)) == oracle::comp_box_e(rp, tp, ep, n));
  }
  FiniteDomain z2 = FiniteDomain::indexed(2);
  FiniteRelation e = FiniteRelation::identity(z2);
  FiniteRelation r(z2, z2), t(z2, z2);
  r.set(0, 1);
  t.set(1, 0);
  // mediated by Delta, both compositions are ordinary composition
  FiniteRelation expected(z2, z2);
  expected.set(0, 0);
  CHECK(compose(CompKind::DiaE, r, t, &e) == expected);
  CHECK(compose(CompKind::BoxE, r, t, &e) == expected);
  CHECK(compose(CompKind::Circ, r, t) == expected);
  CHECK_THROWS_AS(compose(CompKind::DiaE, r, t), std::invalid_argument);
}

TEST_CASE("layered composition is not associative") {
  FiniteDomain z = FiniteDomain::indexed(2);
  FiniteRelation r = FiniteRelation::total(z, z);
  FiniteRelation t = FiniteRelation::identity(z);
  FiniteRelation u(z, z);
  FiniteRelation left = compose(CompKind::Ast, r, compose(CompKind::Ast, t, u));
  FiniteRelation right = compose(CompKind::Ast, compose(CompKind::Ast, r, t), u);
  CHECK(left.empty());
  CHECK(right == FiniteRelation::total(z, z));
}

TEST_CASE("compatibility checks") {
  // every relation is Delta-compatible, in both orientations
  std::mt19937_64 rng(99);
  FiniteDomain dom = FiniteDomain::indexed(3);
  FiniteRelation delta = FiniteRelation::identity(dom);
  for (int i = 0; i < 50; ++i) {
    FiniteRelation r = random_relation(rng, dom, dom);
    CHECK(is_e_compatible(r, delta, Orientation::BoxLike));
    CHECK(is_e_compatible(r, delta, Orientation::DiaLike));
  }

  // E itself is box-compatible and its converse dia-compatible
  GraphFrame g = fixtures::chain3();
  CHECK(is_e_compatible(g.e, g.e, Orientation::BoxLike));
  CHECK(is_e_compatible(g.e.converse(), g.e, Orientation::DiaLike));

  // the identity relation fails on the chain graph, with the known witness
  auto v = e_compat_violation(delta, g.e, Orientation::BoxLike);
  REQUIRE(v.has_value());
  CHECK(v->element == 1);                      // at state v
  CHECK(v->stable_set == (bit(0) | bit(2)));   // Delta^[0][v] = {u,w}
  CHECK(v->closure == g.dom.full());           // closes to the whole domain

  CHECK_THROWS_AS(is_e_compatible(delta, FiniteRelation(dom, dom), Orientation::BoxLike),
                  std::invalid_argument);
}

TEST_CASE("unit laws for mediated composition") {
  std::mt19937_64 rng(123);
  FrameSampler sampler(418);
  for (int i = 0; i < 80; ++i) {
    GraphFrame f = sampler.graph_frame(1 + rng() % 4);
    FiniteRelation d = f.d();
    CHECK(compose(CompKind::DiaE, f.r_dia, d, &f.e) == f.r_dia);
    CHECK(compose(CompKind::DiaE, d, f.r_dia, &f.e) == f.r_dia);
    CHECK(compose(CompKind::BoxE, f.r_box, f.e, &f.e) == f.r_box);
    CHECK(compose(CompKind::BoxE, f.e, f.r_box, &f.e) == f.r_box);
  }
}
