#include "mrpcorr/roughsets.hpp"

#include <sstream>

namespace mrpcorr {

Approximations approximations(const KripkeFrame& f, Bits z) {
  if (!f.unimodal_relation())
    throw std::invalid_argument("approximation operators require one relation");
  if (z & ~f.dom.full()) throw std::invalid_argument("subset outside the domain");
  return {f.r_box.box(z), f.r_box.dia(z)};
}

namespace {

FlagResult from_subset(const FiniteRelation& lhs, const FiniteRelation& rhs) {
  if (auto w = lhs.witness_not_subset(rhs)) return {false, *w};
  return {true, std::nullopt};
}

}  // namespace

SpaceClassReport classify_space(const KripkeFrame& f) {
  if (!f.unimodal_relation())
    throw std::invalid_argument("Kripke space classification requires one relation");
  const FiniteRelation& r = f.r_box;
  const std::size_t n = f.size();
  SpaceClassReport rep;
  rep.kripke = true;
  rep.serial = {true, std::nullopt};
  for (std::size_t s = 0; s < n; ++s)
    if (r.row(s) == 0) {
      rep.serial = {false, std::make_pair(s, s)};
      break;
    }
  rep.reflexive = from_subset(FiniteRelation::identity(f.dom), r);
  rep.symmetric = from_subset(r.converse(), r);
  rep.transitive = from_subset(compose(CompKind::Circ, r, r), r);
  rep.euclidean = from_subset(compose(CompKind::Circ, r.converse(), r), r);
  return rep;
}

SpaceClassReport classify_space(const GraphFrame& f) {
  SpaceClassReport rep;
  rep.kripke = false;
  const FiniteRelation d = f.d(), bbox = f.r_bbox(), bdia = f.r_bdia();
  // serial: E included in R_box boxE R_bbox
  rep.serial = from_subset(f.e, compose(CompKind::BoxE, f.r_box, bbox, &f.e));
  // E-reflexive: E in R_box and D in R_dia
  FlagResult r1 = from_subset(f.e, f.r_box);
  FlagResult r2 = from_subset(d, f.r_dia);
  rep.e_reflexive = r1.holds ? r2 : r1;
  rep.e_reflexive.holds = r1.holds && r2.holds;
  // E-symmetric: R_bbox in R_box and R_bdia in R_dia
  FlagResult s1 = from_subset(bbox, f.r_box);
  FlagResult s2 = from_subset(bdia, f.r_dia);
  rep.e_symmetric = s1.holds ? s2 : s1;
  rep.e_symmetric.holds = s1.holds && s2.holds;
  // E-transitive: both mediated self-compositions shrink
  rep.e_transitive_box = from_subset(compose(CompKind::BoxE, f.r_box, f.r_box, &f.e), f.r_box);
  rep.e_transitive_dia = from_subset(compose(CompKind::DiaE, f.r_dia, f.r_dia, &f.e), f.r_dia);
  return rep;
}

namespace {

struct LatticeOps {
  const ConceptLattice& lat;
  const GraphFrame& f;

  std::size_t box(std::size_t c) const {
    Bits ext = f.r_box.galois_neg(0, lat[c].intent);
    return *lat.index_of_extent(ext);
  }
  std::size_t dia(std::size_t c) const {
    Bits in = f.r_dia.galois_neg(0, lat[c].extent);
    return *lat.index_of_extent(f.e.galois_neg(0, in));
  }
  std::size_t join(std::size_t c, std::size_t d) const { return lat.join(c, d); }
  std::size_t meet(std::size_t c, std::size_t d) const { return lat.meet(c, d); }
  bool leq(std::size_t c, std::size_t d) const { return lat.leq(c, d); }
};

}  // namespace

bool PawlakReport::all_pass() const {
  for (const auto& it : items)
    if (!it.holds) return false;
  return true;
}

PawlakReport pawlak_check(const GraphFrame& f) {
  PawlakReport rep;
  rep.classification = classify_space(f);
  rep.items = {PawlakItem{"dia preserves join", true, {}},
               PawlakItem{"box preserves meet", true, {}},
               PawlakItem{"a <= box b implies dia a <= b", true, {}},
               PawlakItem{"dia a <= b implies a <= box b", true, {}},
               PawlakItem{"box a <= a", true, {}},
               PawlakItem{"a <= dia a", true, {}},
               PawlakItem{"a <= box dia a", true, {}},
               PawlakItem{"dia box a <= a", true, {}},
               PawlakItem{"dia dia a <= dia a", true, {}},
               PawlakItem{"box a <= box box a", true, {}}};
  if (validate_frame(f).has_value() || !rep.classification.pawlak()) {
    rep.refused = true;
    return rep;
  }
  ConceptLattice lat = ConceptLattice::of_graph(f);
  LatticeOps ops{lat, f};
  const std::size_t m = lat.size();
  auto fail = [&](int item, std::size_t a, std::size_t b) {
    if (rep.items[item].holds) rep.items[item] = {rep.items[item].name, false, std::make_pair(a, b)};
  };
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t ba = ops.box(a), da = ops.dia(a);
    if (!ops.leq(ba, a)) fail(4, a, a);
    if (!ops.leq(a, da)) fail(5, a, a);
    if (!ops.leq(a, ops.box(da))) fail(6, a, a);
    if (!ops.leq(ops.dia(ba), a)) fail(7, a, a);
    if (!ops.leq(ops.dia(da), da)) fail(8, a, a);
    if (!ops.leq(ba, ops.box(ba))) fail(9, a, a);
    for (std::size_t b = 0; b < m; ++b) {
      if (ops.dia(ops.join(a, b)) != ops.join(da, ops.dia(b))) fail(0, a, b);
      if (ops.box(ops.meet(a, b)) != ops.meet(ba, ops.box(b))) fail(1, a, b);
      if (ops.leq(a, ops.box(b)) && !ops.leq(da, b)) fail(2, a, b);
      if (ops.leq(da, b) && !ops.leq(a, ops.box(b))) fail(3, a, b);
    }
  }
  return rep;
}

std::string format_report(const SpaceClassReport& r) {
  std::ostringstream os;
  auto line = [&](const char* name, const FlagResult& fr) {
    os << "  " << name << ": " << (fr.holds ? "yes" : "no") << "\n";
  };
  if (r.kripke) {
    os << "kripke space classification\n";
    line("serial", r.serial);
    line("reflexive", r.reflexive);
    line("symmetric", r.symmetric);
    line("transitive", r.transitive);
    line("euclidean", r.euclidean);
  } else {
    os << "graph space classification\n";
    line("serial", r.serial);
    line("E-reflexive", r.e_reflexive);
    line("E-symmetric", r.e_symmetric);
    line("E-transitive (box)", r.e_transitive_box);
    line("E-transitive (dia)", r.e_transitive_dia);
    os << "  Pawlak: " << (r.pawlak() ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace mrpcorr
