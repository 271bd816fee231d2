#include "mrpcorr/axioms.hpp"

#include <sstream>

namespace mrpcorr {

const std::vector<AxiomEntry>& axiom_catalogue() {
  static const std::vector<AxiomEntry> entries = {
      {"reflexivity", "p <= dia p"},
      {"reflexivity", "box p <= p"},
      {"transitivity", "dia dia p <= dia p"},
      {"transitivity", "box p <= box box p"},
      {"symmetry", "p <= box dia p"},
      {"symmetry", "dia box p <= p"},
      {"seriality", "box p <= dia p"},
      {"partial functionality", "dia p <= box p"},
      {"euclideanness", "dia p <= box dia p"},
      {"euclideanness", "dia box p <= box p"},
      {"confluence", "dia box p <= box dia p"},
      {"denseness", "dia p <= dia dia p"},
      {"denseness", "box box p <= box p"},
  };
  return entries;
}

std::vector<CatalogueRow> regenerate_catalogue() {
  std::vector<CatalogueRow> rows;
  for (const AxiomEntry& entry : axiom_catalogue()) {
    Inequality mrp = parse_inequality(entry.mrp);
    MrpClassification c = classify_mrp(mrp.lhs, mrp.rhs);
    auto k = correspondent(c, RelLang::KRel);
    auto g = correspondent(c, RelLang::GRel);
    auto p = correspondent(c, RelLang::PRel);
    for (std::size_t i = 0; i < k.size(); ++i)
      rows.push_back({entry.property, entry.mrp, k[i].type, print_rel_inequality(k[i].ineq),
                      print_rel_inequality(g[i].ineq), print_rel_inequality(p[i].ineq)});
  }
  return rows;
}

std::string render_catalogue(const std::vector<CatalogueRow>& rows) {
  std::ostringstream os;
  for (const CatalogueRow& r : rows)
    os << r.property << " | " << r.mrp << " | " << r.type << " | " << r.krel << " | " << r.grel
       << " | " << r.prel << "\n";
  return os.str();
}

const std::string& golden_catalogue() {
  static const std::string golden =
      "reflexivity | p <= dia p | a | Delta <= Rdia | D <= Rdia | Rdia <= J\n"
      "reflexivity | p <= dia p | b | Delta <= Rbbox | E <= Rbbox | Rbbox <= I\n"
      "reflexivity | box p <= p | a | Delta <= Rbdia | D <= Rbdia | Rbdia <= J\n"
      "reflexivity | box p <= p | b | Delta <= Rbox | E <= Rbox | Rbox <= I\n"
      "transitivity | dia dia p <= dia p | a | Rdia o Rdia <= Rdia | Rdia ;d Rdia <= Rdia | Rdia <= Rdia ;I Rdia\n"
      "transitivity | dia dia p <= dia p | b | Rbbox o Rbbox <= Rbbox | Rbbox ;b Rbbox <= Rbbox | Rbbox <= Rbbox ;I Rbbox\n"
      "transitivity | box p <= box box p | a | Rbdia o Rbdia <= Rbdia | Rbdia ;d Rbdia <= Rbdia | Rbdia <= Rbdia ;I Rbdia\n"
      "transitivity | box p <= box box p | b | Rbox o Rbox <= Rbox | Rbox ;b Rbox <= Rbox | Rbox <= Rbox ;I Rbox\n"
      "symmetry | p <= box dia p | a | Rbdia <= Rdia | Rbdia <= Rdia | Rdia <= Rbdia\n"
      "symmetry | p <= box dia p | b | Rbox <= Rbbox | Rbox <= Rbbox | Rbbox <= Rbox\n"
      "symmetry | dia box p <= p | a | Rdia <= Rbdia | Rdia <= Rbdia | Rbdia <= Rdia\n"
      "symmetry | dia box p <= p | b | Rbbox <= Rbox | Rbbox <= Rbox | Rbox <= Rbbox\n"
      "seriality | box p <= dia p | a | Delta <= Rdia o Rbdia | D <= Rdia ;d Rbdia | Rdia ;I Rbdia <= J\n"
      "seriality | box p <= dia p | b | Delta <= Rbox o Rbbox | E <= Rbox ;b Rbbox | Rbox ;I Rbbox <= I\n"
      "partial functionality | dia p <= box p | a | Rbdia o Rdia <= Delta | Rbdia ;d Rdia <= D | J <= Rbdia ;I Rdia\n"
      "partial functionality | dia p <= box p | b | Rbbox o Rbox <= Delta | Rbbox ;b Rbox <= E | I <= Rbbox ;I Rbox\n"
      "euclideanness | dia p <= box dia p | a | Rbdia o Rdia <= Rdia | Rbdia ;d Rdia <= Rdia | Rdia <= Rbdia ;I Rdia\n"
      "euclideanness | dia p <= box dia p | b | Rbbox o Rbox <= Rbbox | Rbbox ;b Rbox <= Rbbox | Rbbox <= Rbbox ;I Rbox\n"
      "euclideanness | dia box p <= box p | a | Rbdia o Rdia <= Rbdia | Rbdia ;d Rdia <= Rbdia | Rbdia <= Rbdia ;I Rdia\n"
      "euclideanness | dia box p <= box p | b | Rbbox o Rbox <= Rbox | Rbbox ;b Rbox <= Rbox | Rbox <= Rbbox ;I Rbox\n"
      "confluence | dia box p <= box dia p | a | Rbdia o Rdia <= Rdia o Rbdia | Rbdia ;d Rdia <= Rdia ;d Rbdia | Rdia ;I Rbdia <= Rbdia ;I Rdia\n"
      "confluence | dia box p <= box dia p | b | Rbbox o Rbox <= Rbox o Rbbox | Rbbox ;b Rbox <= Rbox ;b Rbbox | Rbox ;I Rbbox <= Rbbox ;I Rbox\n"
      "denseness | dia p <= dia dia p | a | Rdia <= Rdia o Rdia | Rdia <= Rdia ;d Rdia | Rdia ;I Rdia <= Rdia\n"
      "denseness | dia p <= dia dia p | b | Rbbox <= Rbbox o Rbbox | Rbbox <= Rbbox ;b Rbbox | Rbbox ;I Rbbox <= Rbbox\n"
      "denseness | box box p <= box p | a | Rbdia <= Rbdia o Rbdia | Rbdia <= Rbdia ;d Rbdia | Rbdia ;I Rbdia <= Rbdia\n"
      "denseness | box box p <= box p | b | Rbox <= Rbox o Rbox | Rbox <= Rbox ;b Rbox | Rbox ;I Rbox <= Rbox\n";
  return golden;
}

std::vector<std::string> catalogue_diff() {
  std::vector<std::string> diffs;
  std::string fresh = render_catalogue(regenerate_catalogue());
  std::istringstream got(fresh), want(golden_catalogue());
  std::string g, w;
  std::size_t line = 0;
  while (true) {
    bool hg = bool(std::getline(got, g));
    bool hw = bool(std::getline(want, w));
    ++line;
    if (!hg && !hw) break;
    if (!hg || !hw || g != w)
      diffs.push_back("line " + std::to_string(line) + ": regenerated '" + (hg ? g : "<missing>") +
                      "' vs golden '" + (hw ? w : "<missing>") + "'");
    if (!hg || !hw) break;
  }
  return diffs;
}

}  // namespace mrpcorr
