#pragma once

// Test-only reference implementations, written directly from the defining
// set-comprehensions with no bit tricks. The production code is checked
// against these; keep them independent of the library internals.

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "mrpcorr/relation.hpp"

namespace oracle {

using Pair = std::pair<std::size_t, std::size_t>;
using PairSet = std::set<Pair>;
using Set = std::set<std::size_t>;

inline PairSet pairs_of(const mrpcorr::FiniteRelation& r) {
  PairSet out;
  for (auto p : r.pairs()) out.insert(p);
  return out;
}

inline Set set_of(mrpcorr::Bits s, std::size_t n) {
  Set out;
  for (std::size_t i = 0; i < n; ++i)
    if (mrpcorr::contains(s, i)) out.insert(i);
  return out;
}

inline mrpcorr::Bits bits_of(const Set& s) {
  mrpcorr::Bits b = 0;
  for (std::size_t i : s) b |= mrpcorr::bit(i);
  return b;
}

// T^(0)[V'] = {u | forall v in V': u T v}
inline Set pos0(const PairSet& t, const Set& vs, std::size_t n_src) {
  Set out;
  for (std::size_t u = 0; u < n_src; ++u) {
    bool all = true;
    for (std::size_t v : vs)
      if (!t.count({u, v})) all = false;
    if (all) out.insert(u);
  }
  return out;
}

// T^(1)[U'] = {v | forall u in U': u T v}
inline Set pos1(const PairSet& t, const Set& us, std::size_t n_dst) {
  Set out;
  for (std::size_t v = 0; v < n_dst; ++v) {
    bool all = true;
    for (std::size_t u : us)
      if (!t.count({u, v})) all = false;
    if (all) out.insert(v);
  }
  return out;
}

inline PairSet complement(const PairSet& t, std::size_t n_src, std::size_t n_dst) {
  PairSet out;
  for (std::size_t u = 0; u < n_src; ++u)
    for (std::size_t v = 0; v < n_dst; ++v)
      if (!t.count({u, v})) out.insert({u, v});
  return out;
}

inline Set neg0(const PairSet& t, const Set& vs, std::size_t n_src, std::size_t n_dst) {
  return pos0(complement(t, n_src, n_dst), vs, n_src);
}

inline Set neg1(const PairSet& t, const Set& us, std::size_t n_src, std::size_t n_dst) {
  return pos1(complement(t, n_src, n_dst), us, n_dst);
}

// <T>W = T^{-1}[W] and [T]W = (T^{-1}[W^c])^c, spelled out pointwise.
inline Set dia(const PairSet& t, const Set& w, std::size_t n) {
  Set out;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : w)
      if (t.count({u, v})) out.insert(u);
  return out;
}

inline Set box(const PairSet& t, const Set& w, std::size_t n_src, std::size_t n_dst) {
  Set out;
  for (std::size_t u = 0; u < n_src; ++u) {
    bool ok = true;
    for (std::size_t v = 0; v < n_dst; ++v)
      if (t.count({u, v}) && !w.count(v)) ok = false;
    if (ok) out.insert(u);
  }
  return out;
}

// The three graph compositions and the Kripke layered composition, written
// from their [0]-operator definitions.
inline PairSet comp_dia_e(const PairSet& r, const PairSet& t, const PairSet& e, std::size_t n) {
  PairSet out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a) {
      Set inner = neg0(t, {a}, n, n);
      Set mid = neg0(e, inner, n, n);
      Set top = neg0(r, mid, n, n);
      if (!top.count(x)) out.insert({x, a});
    }
  return out;
}

inline PairSet comp_box_e(const PairSet& r, const PairSet& t, const PairSet& e, std::size_t n) {
  PairSet out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      Set inner = neg0(t, {x}, n, n);
      Set mid = neg1(e, inner, n, n);
      Set top = neg0(r, mid, n, n);
      if (!top.count(a)) out.insert({a, x});
    }
  return out;
}

inline PairSet comp_ast(const PairSet& r, const PairSet& t, std::size_t n) {
  PairSet out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      Set top = neg0(r, neg0(t, {x}, n, n), n, n);
      if (!top.count(a)) out.insert({a, x});
    }
  return out;
}

inline PairSet comp_circ(const PairSet& r, const PairSet& t, std::size_t n) {
  PairSet out;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t m = 0; m < n; ++m)
        if (r.count({u, m}) && t.count({m, v})) out.insert({u, v});
  return out;
}

// Concept enumeration by closing every subset of the complement polarity.
inline std::set<std::pair<Set, Set>> concepts_of_graph(const PairSet& e, std::size_t n) {
  std::set<std::pair<Set, Set>> out;
  for (mrpcorr::Bits m = 0; m < (mrpcorr::Bits{1} << n); ++m) {
    Set b = set_of(m, n);
    Set y = neg1(e, b, n, n);
    Set b2 = neg0(e, y, n, n);
    out.insert({b2, y});
  }
  return out;
}

}  // namespace oracle
