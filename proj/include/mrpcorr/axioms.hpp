#pragma once

#include <string>
#include <vector>

#include "mrpcorr/correspond.hpp"

namespace mrpcorr {

/// The built-in catalogue of classical frame-property axioms. All thirteen
/// are analytic inductive, so each yields an (a)- and a (b)-derived
/// correspondent row in every language.
struct AxiomEntry {
  std::string property;
  std::string mrp;  // concrete syntax, e.g. "box p <= p"
};

const std::vector<AxiomEntry>& axiom_catalogue();

struct CatalogueRow {
  std::string property;
  std::string mrp;
  char type;  // 'a' or 'b'
  std::string krel, grel, prel;
};

/// Recomputes every row of the catalogue from the classifier and compiler.
std::vector<CatalogueRow> regenerate_catalogue();

std::string render_catalogue(const std::vector<CatalogueRow>& rows);

/// The golden copy the regeneration is diffed against.
const std::string& golden_catalogue();

/// Mismatching lines (prefixed with the row header); empty when clean.
std::vector<std::string> catalogue_diff();

}  // namespace mrpcorr
