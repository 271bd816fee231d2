#pragma once

// Shared frame constructions used across the suites.

#include "mrpcorr/frames.hpp"

namespace fixtures {

using namespace mrpcorr;

// Three-point reflexive chain u -> v -> w; the running small graph example.
inline GraphFrame chain3() {
  FiniteDomain dom({"u", "v", "w"});
  FiniteRelation e = FiniteRelation::identity(dom);
  e.set(0, 1);
  e.set(1, 2);
  return canonical_pawlak_frame(dom, e);
}

// The four-testimony frame: w's account is compatible with everyone's, the
// other three undermine one another. r_extra picks the one non-E arrow of the
// chosen epistemic relation.
inline GraphFrame rashomon(char who = 's') {
  FiniteDomain dom({"b", "l", "s", "w"});
  FiniteRelation e = FiniteRelation::identity(dom);
  e.set(3, 0);
  e.set(3, 1);
  e.set(3, 2);
  FiniteRelation r = e;
  switch (who) {
    case 'b': r.set(0, 2); break;  // b accepts s's portrayal of him
    case 'l': r.set(1, 0); break;  // l accepts b's portrayal of her
    default: r.set(2, 0); break;   // s accepts b's portrayal of him
  }
  return GraphFrame{dom, e, r, r.converse()};
}

inline KripkeFrame k12() {
  FiniteDomain dom({"1", "2"});
  FiniteRelation r(dom, dom);
  r.set(0, 1);
  return KripkeFrame::unimodal(dom, r);
}

}  // namespace fixtures
