#include "mrpcorr/frames.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mrpcorr {

KripkeFrame KripkeFrame::unimodal(FiniteDomain dom, FiniteRelation r) {
  KripkeFrame k{std::move(dom), r, r};
  return k;
}

std::uint64_t KripkeFrame::hash() const {
  return r_box.hash() * 31 + r_dia.hash() + dom.size();
}

std::uint64_t GraphFrame::hash() const {
  return (e.hash() * 31 + r_box.hash()) * 31 + r_dia.hash() + dom.size();
}

std::uint64_t PolarityFrame::hash() const {
  return (i.hash() * 31 + r_box.hash()) * 31 + r_dia.hash();
}

std::optional<FrameViolation> validate_frame(const GraphFrame& f) {
  if (f.e.src_size() != f.size() || f.e.dst_size() != f.size())
    return FrameViolation{"E is not an endorelation on the domain"};
  if (f.r_box.src_size() != f.size() || f.r_box.dst_size() != f.size() ||
      f.r_dia.src_size() != f.size() || f.r_dia.dst_size() != f.size())
    return FrameViolation{"modal relations must be endorelations on the domain"};
  if (!f.e.is_reflexive()) {
    for (std::size_t z = 0; z < f.size(); ++z)
      if (!f.e.at(z, z)) return FrameViolation{"E is not reflexive: missing (" + f.dom.label(z) + "," + f.dom.label(z) + ")"};
  }
  auto describe = [&](const char* rel, const CompatViolation& v) {
    std::ostringstream os;
    os << rel << " not E-compatible: at " << f.dom.label(v.element) << ", closure of "
       << (v.condition == 0 ? "R^[0]" : "R^[1]") << " = " << format_subset(f.dom, v.closure)
       << " leaks out of " << format_subset(f.dom, v.stable_set);
    return FrameViolation{os.str()};
  };
  if (auto v = e_compat_violation(f.r_box, f.e, Orientation::BoxLike)) return describe("R_box", *v);
  if (auto v = e_compat_violation(f.r_dia, f.e, Orientation::DiaLike)) return describe("R_dia", *v);
  return std::nullopt;
}

std::optional<FrameViolation> validate_frame(const PolarityFrame& f) {
  if (f.i.src_size() != f.a.size() || f.i.dst_size() != f.x.size())
    return FrameViolation{"I must relate A to X"};
  if (f.r_box.src_size() != f.a.size() || f.r_box.dst_size() != f.x.size())
    return FrameViolation{"R_box must have sort A x X"};
  if (f.r_dia.src_size() != f.x.size() || f.r_dia.dst_size() != f.a.size())
    return FrameViolation{"R_dia must have sort X x A"};
  auto close_a = [&](Bits s) { return f.i.galois_pos(0, f.i.galois_pos(1, s)); };
  auto close_x = [&](Bits s) { return f.i.galois_pos(1, f.i.galois_pos(0, s)); };
  for (std::size_t xx = 0; xx < f.x.size(); ++xx) {
    Bits s = f.r_box.galois_pos(0, bit(xx));
    if (close_a(s) & ~s)
      return FrameViolation{"R_box^(0)[" + f.x.label(xx) + "] is not Galois-stable"};
    Bits t = f.r_dia.galois_pos(1, bit(xx));
    if (close_a(t) & ~t)
      return FrameViolation{"R_dia^(1)[" + f.x.label(xx) + "] is not Galois-stable"};
  }
  for (std::size_t aa = 0; aa < f.a.size(); ++aa) {
    Bits s = f.r_box.galois_pos(1, bit(aa));
    if (close_x(s) & ~s)
      return FrameViolation{"R_box^(1)[" + f.a.label(aa) + "] is not Galois-stable"};
    Bits t = f.r_dia.galois_pos(0, bit(aa));
    if (close_x(t) & ~t)
      return FrameViolation{"R_dia^(0)[" + f.a.label(aa) + "] is not Galois-stable"};
  }
  return std::nullopt;
}

GraphFrame shift(const KripkeFrame& k) {
  return GraphFrame{k.dom, FiniteRelation::identity(k.dom), k.r_box, k.r_dia};
}

KripkeFrame unshift(const GraphFrame& f) {
  if (f.e != FiniteRelation::identity(f.dom))
    throw std::invalid_argument("unshift requires E = Delta");
  if (f.r_box != f.r_dia) throw std::invalid_argument("unshift requires R_box = R_dia");
  return KripkeFrame{f.dom, f.r_box, f.r_dia};
}

PolarityFrame lift(const GraphFrame& f) {
  return PolarityFrame{f.dom, f.dom, f.e.complement(), f.r_box.complement(),
                       f.r_dia.complement()};
}

GraphFrame canonical_pawlak_frame(const FiniteDomain& dom, const FiniteRelation& e) {
  return GraphFrame{dom, e, e, e.converse()};
}

ConceptLattice::ConceptLattice(FiniteDomain ext, FiniteDomain intd, const FiniteRelation& polar,
                               bool negated)
    : ext_dom_(std::move(ext)), int_dom_(std::move(intd)) {
  if (ext_dom_.size() > 20)
    throw std::invalid_argument("concept enumeration capped at 20 elements");
  const FiniteRelation rel = polar;  // A x X
  if (negated) {
    up_ = [rel](Bits b) { return rel.galois_neg(1, b); };
    down_ = [rel](Bits y) { return rel.galois_neg(0, y); };
  } else {
    up_ = [rel](Bits b) { return rel.galois_pos(1, b); };
    down_ = [rel](Bits y) { return rel.galois_pos(0, y); };
  }
  std::map<Bits, Bits> seen;  // extent -> intent
  const std::size_t n = ext_dom_.size();
  for (Bits b = 0; b < (Bits{1} << n); ++b) {
    Bits y = up_(b);
    Bits ext2 = down_(y);
    seen.emplace(ext2, y);
  }
  for (auto& [e2, y] : seen) concepts_.push_back({e2, y});
  std::sort(concepts_.begin(), concepts_.end(), [](const Concept& a, const Concept& b) {
    int pa = popcount(a.extent), pb = popcount(b.extent);
    return pa != pb ? pa < pb : a.extent < b.extent;
  });
}

ConceptLattice ConceptLattice::of_graph(const GraphFrame& f) {
  return ConceptLattice(f.dom, f.dom, f.e, /*negated=*/true);
}

ConceptLattice ConceptLattice::of_polarity(const PolarityFrame& f) {
  return ConceptLattice(f.a, f.x, f.i, /*negated=*/false);
}

std::optional<std::size_t> ConceptLattice::index_of_extent(Bits extent) const {
  for (std::size_t i = 0; i < concepts_.size(); ++i)
    if (concepts_[i].extent == extent) return i;
  return std::nullopt;
}

bool ConceptLattice::leq(std::size_t c, std::size_t d) const {
  return (concepts_[c].extent & ~concepts_[d].extent) == 0;
}

std::size_t ConceptLattice::close_extent(Bits b) const {
  Bits y = up_(b);
  auto idx = index_of_extent(down_(y));
  if (!idx) throw std::logic_error("extent closure missing from the lattice");
  return *idx;
}

std::size_t ConceptLattice::close_intent(Bits y) const {
  Bits ext = down_(y);
  auto idx = index_of_extent(ext);
  if (!idx) throw std::logic_error("intent closure missing from the lattice");
  return *idx;
}

std::size_t ConceptLattice::join(std::size_t c, std::size_t d) const {
  Bits y = concepts_[c].intent & concepts_[d].intent;
  auto idx = index_of_extent(down_(y));
  if (!idx) throw std::logic_error("join missing from the lattice");
  return *idx;
}

std::size_t ConceptLattice::meet(std::size_t c, std::size_t d) const {
  Bits b = concepts_[c].extent & concepts_[d].extent;
  auto idx = index_of_extent(b);
  if (!idx) throw std::logic_error("meet missing from the lattice");
  return *idx;
}

std::size_t ConceptLattice::top_index() const {
  auto idx = index_of_extent(ext_dom_.full());
  if (!idx) throw std::logic_error("missing top concept");
  return *idx;
}

std::size_t ConceptLattice::bottom_index() const {
  Bits b = down_(int_dom_.full());
  auto idx = index_of_extent(b);
  if (!idx) throw std::logic_error("missing bottom concept");
  return *idx;
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t c = 0; c < size(); ++c)
    for (std::size_t d = 0; d < size(); ++d) {
      if (c == d || !leq(c, d)) continue;
      bool covered = true;
      for (std::size_t m = 0; m < size() && covered; ++m)
        if (m != c && m != d && leq(c, m) && leq(m, d)) covered = false;
      if (covered) out.emplace_back(c, d);
    }
  return out;
}

std::string format_concept(const ConceptLattice& lat, const Concept& c) {
  auto side = [](const FiniteDomain& d, Bits s) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (contains(s, i)) {
        if (!out.empty()) out += " ";
        out += d.label(i);
      }
    return out.empty() ? "-" : out;
  };
  return "(" + side(lat.extent_domain(), c.extent) + " | " + side(lat.intent_domain(), c.intent) + ")";
}

std::string lattice_to_dot(const ConceptLattice& lat, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i)
    os << "  c" << i << " [label=\"" << format_concept(lat, lat[i]) << "\"];\n";
  for (auto [lo, hi] : lat.covers()) os << "  c" << lo << " -> c" << hi << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

std::vector<FiniteRelation> all_relations(const FiniteDomain& dom) {
  const std::size_t n = dom.size();
  const std::size_t cells = n * n;
  std::vector<FiniteRelation> out;
  out.reserve(std::size_t(1) << cells);
  for (std::uint64_t code = 0; code < (std::uint64_t(1) << cells); ++code) {
    std::vector<Bits> rows(n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if ((code >> (u * n + v)) & 1) rows[u] |= bit(v);
    out.push_back(FiniteRelation::from_rows(dom, dom, std::move(rows)));
  }
  return out;
}

std::vector<FiniteRelation> all_reflexive_relations(const FiniteDomain& dom) {
  const std::size_t n = dom.size();
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) off.emplace_back(u, v);
  std::vector<FiniteRelation> out;
  for (std::uint64_t code = 0; code < (std::uint64_t(1) << off.size()); ++code) {
    FiniteRelation e = FiniteRelation::identity(dom);
    for (std::size_t k = 0; k < off.size(); ++k)
      if ((code >> k) & 1) e.set(off[k].first, off[k].second);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<GraphFrame> all_graph_frames(std::size_t n, std::size_t cap) {
  if (n > cap) throw std::invalid_argument("exhaustive graph frame enumeration capped");
  FiniteDomain dom = FiniteDomain::indexed(n);
  std::vector<GraphFrame> out;
  for (const FiniteRelation& e : all_reflexive_relations(dom)) {
    std::vector<FiniteRelation> boxes, dias;
    for (const FiniteRelation& r : all_relations(dom)) {
      if (is_e_compatible(r, e, Orientation::BoxLike)) boxes.push_back(r);
      if (is_e_compatible(r, e, Orientation::DiaLike)) dias.push_back(r);
    }
    for (const FiniteRelation& rb : boxes)
      for (const FiniteRelation& rd : dias) out.push_back(GraphFrame{dom, e, rb, rd});
  }
  return out;
}

std::vector<KripkeFrame> all_kripke_frames(std::size_t n, std::size_t cap) {
  if (n > cap) throw std::invalid_argument("exhaustive Kripke frame enumeration capped");
  FiniteDomain dom = FiniteDomain::indexed(n, "w");
  std::vector<KripkeFrame> out;
  auto rels = all_relations(dom);
  for (const FiniteRelation& rb : rels)
    for (const FiniteRelation& rd : rels) out.push_back(KripkeFrame{dom, rb, rd});
  return out;
}

std::vector<KripkeFrame> all_unimodal_kripke_frames(std::size_t n, std::size_t cap) {
  if (n > cap) throw std::invalid_argument("exhaustive Kripke frame enumeration capped");
  FiniteDomain dom = FiniteDomain::indexed(n, "w");
  std::vector<KripkeFrame> out;
  for (const FiniteRelation& r : all_relations(dom)) out.push_back(KripkeFrame::unimodal(dom, r));
  return out;
}

FiniteRelation FrameSampler::relation(const FiniteDomain& src, const FiniteDomain& dst, double density) {
  FiniteRelation r(src, dst);
  for (std::size_t u = 0; u < src.size(); ++u)
    for (std::size_t v = 0; v < dst.size(); ++v)
      if (unit() < density) r.set(u, v);
  return r;
}

FiniteRelation FrameSampler::reflexive_relation(std::size_t n, double density) {
  FiniteDomain dom = FiniteDomain::indexed(n);
  FiniteRelation e = FiniteRelation::identity(dom);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && unit() < density) e.set(u, v);
  return e;
}

FiniteRelation FrameSampler::compatible_relation(const FiniteDomain& dom, const FiniteRelation& e,
                                                 Orientation o, double density) {
  while (true) {
    ++stats_.relations_tried;
    FiniteRelation r = relation(dom, dom, density);
    if (is_e_compatible(r, e, o)) {
      ++stats_.relations_accepted;
      return r;
    }
  }
}

GraphFrame FrameSampler::graph_frame(std::size_t n) {
  ++stats_.graphs_tried;
  FiniteRelation e = reflexive_relation(n);
  FiniteDomain dom = e.src();
  FiniteRelation rb = compatible_relation(dom, e, Orientation::BoxLike);
  FiniteRelation rd = compatible_relation(dom, e, Orientation::DiaLike);
  return GraphFrame{dom, e, rb, rd};
}

KripkeFrame FrameSampler::kripke_frame(std::size_t n, double density) {
  FiniteDomain dom = FiniteDomain::indexed(n, "w");
  return KripkeFrame{dom, relation(dom, dom, density), relation(dom, dom, density)};
}

Bits FrameSampler::subset(std::size_t n, double density) {
  Bits s = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (unit() < density) s |= bit(i);
  return s;
}

}  // namespace mrpcorr
