#pragma once

#include <array>
#include <optional>
#include <string>

#include "mrpcorr/frames.hpp"
#include "mrpcorr/relterm.hpp"

namespace mrpcorr {

/// Lower/upper approximation of a subset in a generalized approximation
/// space (unimodal Kripke frame): lower = [R]Z, upper = <R>Z.
struct Approximations {
  Bits lower = 0;
  Bits upper = 0;
};
Approximations approximations(const KripkeFrame& f, Bits z);

struct FlagResult {
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // failing pair, when meaningful
};

/// Classification of a frame against the standard space classes. Kripke
/// frames (with one relation) get the first-order conditions; graph frames
/// get their E-parametric counterparts, each decided by the corresponding
/// relational inclusion.
struct SpaceClassReport {
  bool kripke = false;
  // Kripke flags
  FlagResult serial, reflexive, symmetric, transitive, euclidean;
  // Graph flags (E-parametric); the transitivity components are tracked
  // separately because neither inclusion implies the other in general.
  FlagResult e_reflexive, e_symmetric, e_transitive_box, e_transitive_dia;
  bool e_transitive() const { return e_transitive_box.holds && e_transitive_dia.holds; }
  bool pawlak() const {
    return e_reflexive.holds && e_symmetric.holds && e_transitive();
  }
};

SpaceClassReport classify_space(const KripkeFrame& f);
SpaceClassReport classify_space(const GraphFrame& f);

/// The ten lattice conditions satisfied by every Pawlak space, checked
/// exhaustively over the frame's concept lattice.
struct PawlakItem {
  std::string name;
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // concept indices
};

struct PawlakReport {
  bool refused = false;  // set when the frame is not classified Pawlak
  SpaceClassReport classification;
  std::array<PawlakItem, 10> items;
  bool all_pass() const;
};

PawlakReport pawlak_check(const GraphFrame& f);

std::string format_report(const SpaceClassReport& r);

}  // namespace mrpcorr
