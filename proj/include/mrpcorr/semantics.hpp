#pragma once

#include <map>
#include <optional>
#include <string>

#include "mrpcorr/formula.hpp"
#include "mrpcorr/frames.hpp"

namespace mrpcorr {

/// Graph-based models assign concepts to atoms (weakly persistent
/// valuations); Kripke models assign arbitrary subsets.
struct GraphModel {
  GraphFrame frame;
  std::map<std::string, Concept> valuation;
};

struct KripkeModel {
  KripkeFrame frame;
  std::map<std::string, Bits> valuation;
};

/// Compositional interpretation. Throws std::invalid_argument on an unbound
/// atom, and rejects a graph valuation whose targets are not stable pairs.
Concept interpret(const GraphModel& m, const FormulaPtr& f);
Bits interpret(const KripkeModel& m, const FormulaPtr& f);

/// Truth of lhs |- rhs: lattice order (extent inclusion) on graph models,
/// extension inclusion on Kripke models.
bool sequent_true(const GraphModel& m, const Inequality& seq);
bool sequent_true(const KripkeModel& m, const Inequality& seq);

/// The unravelled form of graph sequent truth: every satisfying state is
/// E-unrelated to every refuting state. Equivalent to sequent_true; kept as a
/// second route for cross-checks.
bool sequent_true_pointwise(const GraphModel& m, const Inequality& seq);

struct ValidityLimits {
  std::size_t max_vars = 2;
  std::size_t max_assignments = std::size_t(1) << 20;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphValidity {
  bool valid = false;
  std::optional<std::map<std::string, Concept>> countervaluation;
};

struct KripkeValidity {
  bool valid = false;
  std::optional<std::map<std::string, Bits>> countervaluation;
};

/// Brute-force frame validity: enumerates every admissible valuation (all
/// concepts per atom on graph frames, all subsets on Kripke frames) in a
/// deterministic order and reports the first countervaluation. Throws
/// CapExceeded instead of sampling when the space exceeds the limits.
GraphValidity frame_valid(const GraphFrame& f, const Inequality& seq, const ValidityLimits& lim = {});
KripkeValidity frame_valid(const KripkeFrame& f, const Inequality& seq, const ValidityLimits& lim = {});

}  // namespace mrpcorr
