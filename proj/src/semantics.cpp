#include "mrpcorr/semantics.hpp"

namespace mrpcorr {

namespace {

Concept lookup_concept(const GraphModel& m, const std::string& name) {
  auto it = m.valuation.find(name);
  if (it == m.valuation.end()) throw std::invalid_argument("unbound atom: " + name);
  const Concept& c = it->second;
  if (m.frame.e.galois_neg(1, c.extent) != c.intent ||
      m.frame.e.galois_neg(0, c.intent) != c.extent)
    throw std::invalid_argument("valuation of " + name + " is not a stable pair");
  return c;
}

}  // namespace

Concept interpret(const GraphModel& m, const FormulaPtr& f) {
  const FiniteRelation& e = m.frame.e;
  const Bits all = m.frame.dom.full();
  auto up = [&](Bits b) { return e.galois_neg(1, b); };    // extent -> intent
  auto down = [&](Bits y) { return e.galois_neg(0, y); };  // intent -> extent
  switch (f->kind()) {
    case Formula::Kind::Bottom: return {down(all), all};
    case Formula::Kind::Top: return {all, up(all)};
    case Formula::Kind::Var:
    case Formula::Kind::Nominal:
    case Formula::Kind::Conominal: return lookup_concept(m, f->name());
    case Formula::Kind::And: {
      Concept a = interpret(m, f->left()), b = interpret(m, f->right());
      Bits ext = a.extent & b.extent;
      return {ext, up(ext)};
    }
    case Formula::Kind::Or: {
      Concept a = interpret(m, f->left()), b = interpret(m, f->right());
      Bits in = a.intent & b.intent;
      return {down(in), in};
    }
    case Formula::Kind::Box: {
      Concept a = interpret(m, f->child());
      Bits ext = m.frame.r_box.galois_neg(0, a.intent);
      return {ext, up(ext)};
    }
    case Formula::Kind::Dia: {
      Concept a = interpret(m, f->child());
      Bits in = m.frame.r_dia.galois_neg(0, a.extent);
      return {down(in), in};
    }
    case Formula::Kind::BBox: {
      Concept a = interpret(m, f->child());
      Bits ext = m.frame.r_bbox().galois_neg(0, a.intent);
      return {ext, up(ext)};
    }
    case Formula::Kind::BDia: {
      Concept a = interpret(m, f->child());
      Bits in = m.frame.r_bdia().galois_neg(0, a.extent);
      return {down(in), in};
    }
  }
  throw std::logic_error("unreachable formula kind");
}

Bits interpret(const KripkeModel& m, const FormulaPtr& f) {
  const Bits all = m.frame.dom.full();
  switch (f->kind()) {
    case Formula::Kind::Bottom: return 0;
    case Formula::Kind::Top: return all;
    case Formula::Kind::Var:
    case Formula::Kind::Nominal:
    case Formula::Kind::Conominal: {
      auto it = m.valuation.find(f->name());
      if (it == m.valuation.end()) throw std::invalid_argument("unbound atom: " + f->name());
      return it->second & all;
    }
    case Formula::Kind::And: return interpret(m, f->left()) & interpret(m, f->right());
    case Formula::Kind::Or: return interpret(m, f->left()) | interpret(m, f->right());
    case Formula::Kind::Box: return m.frame.r_box.box(interpret(m, f->child()));
    case Formula::Kind::Dia: return m.frame.r_dia.dia(interpret(m, f->child()));
    case Formula::Kind::BBox: return m.frame.r_dia.converse().box(interpret(m, f->child()));
    case Formula::Kind::BDia: return m.frame.r_box.converse().dia(interpret(m, f->child()));
  }
  throw std::logic_error("unreachable formula kind");
}

bool sequent_true(const GraphModel& m, const Inequality& seq) {
  Concept a = interpret(m, seq.lhs), b = interpret(m, seq.rhs);
  return (a.extent & ~b.extent) == 0;
}

bool sequent_true(const KripkeModel& m, const Inequality& seq) {
  return (interpret(m, seq.lhs) & ~interpret(m, seq.rhs)) == 0;
}

bool sequent_true_pointwise(const GraphModel& m, const Inequality& seq) {
  Concept a = interpret(m, seq.lhs), b = interpret(m, seq.rhs);
  const std::size_t n = m.frame.size();
  for (std::size_t z = 0; z < n; ++z) {
    if (!contains(a.extent, z)) continue;
    for (std::size_t z2 = 0; z2 < n; ++z2)
      if (contains(b.intent, z2) && m.frame.e.at(z, z2)) return false;
  }
  return true;
}

namespace {

template <class Value, class Model, class Result>
Result valid_over(Model model, const Inequality& seq, const std::vector<std::string>& vars,
                  const std::vector<Value>& range, const ValidityLimits& lim) {
  if (vars.size() > lim.max_vars)
    throw CapExceeded("sequent uses " + std::to_string(vars.size()) + " atoms; limit is " +
                      std::to_string(lim.max_vars));
  double count = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) count *= double(range.size());
  if (count > double(lim.max_assignments))
    throw CapExceeded("valuation space too large for exhaustive validity");

  std::vector<std::size_t> pick(vars.size(), 0);
  while (true) {
    model.valuation.clear();
    for (std::size_t i = 0; i < vars.size(); ++i) model.valuation[vars[i]] = range[pick[i]];
    if (!sequent_true(model, seq)) return Result{false, model.valuation};
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < range.size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
    if (vars.empty()) break;
  }
  return Result{true, std::nullopt};
}

}  // namespace

GraphValidity frame_valid(const GraphFrame& f, const Inequality& seq, const ValidityLimits& lim) {
  std::vector<std::string> vars = Formula::atoms(seq.lhs);
  for (const auto& v : Formula::atoms(seq.rhs))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  ConceptLattice lat = ConceptLattice::of_graph(f);
  std::vector<Concept> range(lat.concepts().begin(), lat.concepts().end());
  return valid_over<Concept, GraphModel, GraphValidity>(GraphModel{f, {}}, seq, vars, range, lim);
}

KripkeValidity frame_valid(const KripkeFrame& f, const Inequality& seq, const ValidityLimits& lim) {
  std::vector<std::string> vars = Formula::atoms(seq.lhs);
  for (const auto& v : Formula::atoms(seq.rhs))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  if (f.size() >= 20) throw CapExceeded("Kripke valuation space too large");
  std::vector<Bits> range;
  for (Bits s = 0; s < (Bits{1} << f.size()); ++s) range.push_back(s);
  return valid_over<Bits, KripkeModel, KripkeValidity>(KripkeModel{f, {}}, seq, vars, range, lim);
}

}  // namespace mrpcorr
