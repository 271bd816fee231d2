#include "mrpcorr/correspond.hpp"

namespace mrpcorr {

std::string print_pure_inequality(const PureInequality& p) {
  return "forall " + p.var + " . " + print_formula(p.lhs) + " <= " + print_formula(p.rhs);
}

std::vector<PureInequality> alba_output(const MrpClassification& c) {
  if (!c.sahlqvist()) throw std::invalid_argument("ALBA output requires an inductive mrp");
  std::vector<PureInequality> out;
  if (c.a) {
    ModalString la_psi = adjoint_string(c.a->psi, Side::Left);
    ModalString la_alpha = adjoint_string(c.a->alpha, Side::Left);
    FormulaPtr j = Formula::nominal("j");
    out.push_back({false, "j", la_psi.concat(c.a->phi).apply(j),
                   c.a->chi.full().concat(la_alpha).apply(j)});
  }
  if (c.b) {
    ModalString ra_phi = adjoint_string(c.b->phi, Side::Right);
    ModalString ra_delta = adjoint_string(c.b->delta, Side::Right);
    FormulaPtr m = Formula::conominal("m");
    out.push_back({true, "m", c.b->zeta.full().concat(ra_delta).apply(m),
                   ra_phi.concat(c.b->psi).apply(m)});
  }
  return out;
}

namespace {

RelSym conn_symbol(Conn c) {
  switch (c) {
    case Conn::Dia: return RelSym::RDia;
    case Conn::BDia: return RelSym::RBDia;
    case Conn::Box: return RelSym::RBox;
    case Conn::BBox: return RelSym::RBBox;
  }
  throw std::logic_error("unreachable connective");
}

RelSym unit_symbol(RelLang lang, bool dia_side) {
  switch (lang) {
    case RelLang::KRel: return RelSym::Delta;
    case RelLang::GRel: return dia_side ? RelSym::D : RelSym::E;
    case RelLang::PRel: return dia_side ? RelSym::J : RelSym::I;
  }
  throw std::logic_error("unreachable language");
}

RelOp step_op(RelLang lang, bool dia_side) {
  switch (lang) {
    case RelLang::KRel: return RelOp::Circ;
    case RelLang::GRel: return dia_side ? RelOp::DiaE : RelOp::BoxE;
    case RelLang::PRel: return RelOp::SemiI;
  }
  throw std::logic_error("unreachable language");
}

RelOp layer_op(RelLang lang) {
  switch (lang) {
    case RelLang::KRel: return RelOp::Star;
    case RelLang::GRel: return RelOp::AstG;
    case RelLang::PRel: return RelOp::Semi;
  }
  throw std::logic_error("unreachable language");
}

RelTermPtr compile_string(const ModalString& s, bool dia_side, RelLang lang) {
  RelTermPtr acc = RelTerm::symbol(lang, unit_symbol(lang, dia_side));
  for (auto it = s.conns.rbegin(); it != s.conns.rend(); ++it) {
    if (dia_side ? !is_dia_like(*it) : !is_box_like(*it))
      throw std::invalid_argument("connective kind does not fit the role");
    acc = RelTerm::comp(step_op(lang, dia_side), RelTerm::symbol(lang, conn_symbol(*it)), acc);
  }
  return acc;
}

}  // namespace

RelTermPtr rel_term(const ModalString& s, Role role, RelLang lang) {
  if (role == Role::Chi) return rel_term(decompose(BlockDecomposition::Shape::Chi, s), lang);
  if (role == Role::Zeta) return rel_term(decompose(BlockDecomposition::Shape::Zeta, s), lang);
  return compile_string(s, role == Role::Phi, lang);
}

RelTermPtr rel_term(const BlockDecomposition& d, RelLang lang) {
  const bool chi = d.shape == BlockDecomposition::Shape::Chi;
  std::vector<RelTermPtr> layers;
  for (const auto& blk : d.blocks) {
    layers.push_back(compile_string(blk.first, /*dia_side=*/chi, lang));
    if (!blk.second.empty()) layers.push_back(compile_string(blk.second, /*dia_side=*/!chi, lang));
  }
  // A nonempty terminal block of the opposite kind keeps the trailing unit.
  if (!d.blocks.back().second.empty())
    layers.push_back(RelTerm::symbol(lang, unit_symbol(lang, chi)));
  RelTermPtr acc = layers.back();
  for (auto it = layers.rbegin() + 1; it != layers.rend(); ++it)
    acc = RelTerm::comp(layer_op(lang), *it, acc);
  return acc;
}

std::vector<Correspondent> correspondent(const MrpClassification& c, RelLang lang, bool normalized) {
  if (!c.sahlqvist()) throw std::invalid_argument("correspondent requires an inductive mrp");
  std::vector<Correspondent> out;
  auto push = [&](char type, RelTermPtr composite, RelTermPtr target) {
    RelInequality q = lang == RelLang::PRel ? RelInequality{target, composite}
                                            : RelInequality{composite, target};
    out.push_back({type, normalized ? normalize(q) : q});
  };
  if (c.a) {
    ModalString la_psi = adjoint_string(c.a->psi, Side::Left);
    ModalString la_alpha = adjoint_string(c.a->alpha, Side::Left);
    RelTermPtr composite = RelTerm::comp(step_op(lang, true), compile_string(la_psi, true, lang),
                                         compile_string(c.a->phi, true, lang));
    BlockDecomposition chi_sub =
        decompose(BlockDecomposition::Shape::Chi, c.a->chi.full().concat(la_alpha));
    push('a', composite, rel_term(chi_sub, lang));
  }
  if (c.b) {
    ModalString ra_phi = adjoint_string(c.b->phi, Side::Right);
    ModalString ra_delta = adjoint_string(c.b->delta, Side::Right);
    RelTermPtr composite = RelTerm::comp(step_op(lang, false), compile_string(ra_phi, false, lang),
                                         compile_string(c.b->psi, false, lang));
    BlockDecomposition zeta_sub =
        decompose(BlockDecomposition::Shape::Zeta, c.b->zeta.full().concat(ra_delta));
    push('b', composite, rel_term(zeta_sub, lang));
  }
  return out;
}

}  // namespace mrpcorr
