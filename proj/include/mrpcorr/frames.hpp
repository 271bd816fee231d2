#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mrpcorr/relation.hpp"

namespace mrpcorr {

struct KripkeFrame {
  FiniteDomain dom;
  FiniteRelation r_box, r_dia;

  static KripkeFrame unimodal(FiniteDomain dom, FiniteRelation r);
  bool unimodal_relation() const { return r_box == r_dia; }
  std::size_t size() const { return dom.size(); }
  std::uint64_t hash() const;
};

struct GraphFrame {
  FiniteDomain dom;
  FiniteRelation e;      // reflexive indiscernibility relation
  FiniteRelation r_box;  // BoxLike E-compatible
  FiniteRelation r_dia;  // DiaLike E-compatible

  std::size_t size() const { return dom.size(); }
  FiniteRelation d() const { return e.converse(); }
  FiniteRelation r_bdia() const { return r_box.converse(); }
  FiniteRelation r_bbox() const { return r_dia.converse(); }
  std::uint64_t hash() const;
};

struct PolarityFrame {
  FiniteDomain a, x;
  FiniteRelation i;      // A x X
  FiniteRelation r_box;  // A x X
  FiniteRelation r_dia;  // X x A

  std::uint64_t hash() const;
};

struct FrameViolation {
  std::string message;
};

/// Structural well-formedness: reflexivity of E and the compatibility of both
/// relations in their orientation (Galois-stability over I for polarities).
std::optional<FrameViolation> validate_frame(const GraphFrame& f);
std::optional<FrameViolation> validate_frame(const PolarityFrame& f);

/// Embeds a Kripke frame as the graph-based frame over (S, Delta).
GraphFrame shift(const KripkeFrame& k);

/// Inverse of shift; requires E = Delta and r_box = r_dia.
KripkeFrame unshift(const GraphFrame& f);

/// Lifts a graph-based frame to the polarity-based frame over (Z_A, Z_X, E^c)
/// with complement-coded modal relations.
PolarityFrame lift(const GraphFrame& f);

/// The graph-based frame (Z, E, D, E); Pawlak for every reflexive E.
GraphFrame canonical_pawlak_frame(const FiniteDomain& dom, const FiniteRelation& e);

/// A Galois-stable (extent, intent) pair.
struct Concept {
  Bits extent = 0;
  Bits intent = 0;
  bool operator==(const Concept&) const = default;
};

class ConceptLattice {
 public:
  /// Builds the lattice of stable pairs of the complement polarity of E
  /// (graph frames) or of I itself (polarity frames).
  static ConceptLattice of_graph(const GraphFrame& f);
  static ConceptLattice of_polarity(const PolarityFrame& f);

  std::size_t size() const { return concepts_.size(); }
  const std::vector<Concept>& concepts() const { return concepts_; }
  const Concept& operator[](std::size_t i) const { return concepts_[i]; }

  std::optional<std::size_t> index_of_extent(Bits extent) const;
  bool leq(std::size_t c, std::size_t d) const;
  std::size_t join(std::size_t c, std::size_t d) const;
  std::size_t meet(std::size_t c, std::size_t d) const;
  std::size_t top_index() const;
  std::size_t bottom_index() const;

  /// Closes an extent-side subset to a concept index.
  std::size_t close_extent(Bits b) const;
  /// Closes an intent-side subset to a concept index.
  std::size_t close_intent(Bits y) const;

  /// Covering relation, as (lower, upper) index pairs.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  const FiniteDomain& extent_domain() const { return ext_dom_; }
  const FiniteDomain& intent_domain() const { return int_dom_; }

 private:
  ConceptLattice(FiniteDomain ext, FiniteDomain intd, const FiniteRelation& polar_neg, bool negated);
  FiniteDomain ext_dom_, int_dom_;
  std::vector<Concept> concepts_;  // sorted by (extent popcount, extent bits)
  // galois maps, captured at build time
  std::function<Bits(Bits)> up_, down_;
};

std::string format_concept(const ConceptLattice& lat, const Concept& c);

/// DOT rendering of the lattice's Hasse diagram.
std::string lattice_to_dot(const ConceptLattice& lat, const std::string& name = "lattice");

/// Deterministic generators. Sampling uses rejection against the
/// compatibility conditions; counts of tried/accepted relations are recorded
/// so sparse strata stay visible.
struct GeneratorStats {
  std::uint64_t graphs_tried = 0;
  std::uint64_t relations_tried = 0;
  std::uint64_t relations_accepted = 0;
};

/// All graph-based frames on n elements (every reflexive E, every compatible
/// pair of relations). Intended for n <= 2; throws above the cap.
std::vector<GraphFrame> all_graph_frames(std::size_t n, std::size_t cap = 3);

/// All bimodal Kripke frames on n elements; intended for n <= 3.
std::vector<KripkeFrame> all_kripke_frames(std::size_t n, std::size_t cap = 3);

/// All unimodal Kripke frames (r_box = r_dia) on n elements.
std::vector<KripkeFrame> all_unimodal_kripke_frames(std::size_t n, std::size_t cap = 4);

class FrameSampler {
 public:
  explicit FrameSampler(std::uint64_t seed) : rng_(seed) {}

  GraphFrame graph_frame(std::size_t n);
  KripkeFrame kripke_frame(std::size_t n, double density = 0.4);
  FiniteRelation reflexive_relation(std::size_t n, double density = 0.35);
  FiniteRelation relation(const FiniteDomain& src, const FiniteDomain& dst, double density = 0.4);
  /// Rejection-samples a relation compatible with e in the given orientation.
  FiniteRelation compatible_relation(const FiniteDomain& dom, const FiniteRelation& e, Orientation o,
                                     double density = 0.4);
  Bits subset(std::size_t n, double density = 0.5);
  std::uint64_t next() { return rng_(); }
  double unit() { return double(rng_() >> 11) * 0x1.0p-53; }

  const GeneratorStats& stats() const { return stats_; }

 private:
  std::mt19937_64 rng_;
  GeneratorStats stats_;
};

}  // namespace mrpcorr
