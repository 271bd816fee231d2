#pragma once

#include <string>
#include <vector>

#include "mrpcorr/formula.hpp"
#include "mrpcorr/relterm.hpp"

namespace mrpcorr {

/// The quantified pure inequality produced for an inductive mrp: one nominal
/// (type a) or one conominal (type b), no propositional variables.
struct PureInequality {
  bool conominal = false;  // false: forall over a nominal j; true: conominal m
  std::string var;
  FormulaPtr lhs, rhs;
};

std::string print_pure_inequality(const PureInequality& p);

/// ALBA output(s) of a classified mrp: the type-(a) form, the type-(b) form,
/// or both for analytic instances. Throws on NotSahlqvist.
std::vector<PureInequality> alba_output(const MrpClassification& c);

/// Roles of compiled string parts inside a correspondent.
enum class Role { Phi, Psi, Chi, Zeta };

/// Compiles a pure connective string (Phi: diamond-like, Psi: box-like) into
/// the relational term of the chosen language.
RelTermPtr rel_term(const ModalString& s, Role role, RelLang lang);

/// Compiles an alternating block shape (Chi or Zeta per its own shape tag).
RelTermPtr rel_term(const BlockDecomposition& d, RelLang lang);

struct Correspondent {
  char type;  // 'a' or 'b'
  RelInequality ineq;
};

/// The relational correspondent(s) of an inductive mrp in the requested
/// language, normalized. Analytic mrps yield the (a)- and (b)-derived rows in
/// that order. The PRel rows have the inclusion direction reversed, matching
/// the complement coding of lifted relations. Throws on NotSahlqvist.
std::vector<Correspondent> correspondent(const MrpClassification& c, RelLang lang,
                                         bool normalized = true);

}  // namespace mrpcorr
