#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mrpcorr/frames.hpp"
#include "mrpcorr/relation.hpp"

namespace mrpcorr {

enum class RelLang { KRel, GRel, PRel };

enum class RelSym { Delta, E, D, RDia, RBDia, RBox, RBBox, I, J };

/// Term-forming composition operators:
///   Circ  `o`   ordinary composition            (KRel)
///   Star  `*k`  layered composition on Kripke   (KRel)
///   DiaE  `;d`  E-mediated diamond composition  (GRel)
///   BoxE  `;b`  E-mediated box composition      (GRel)
///   AstG  `*g`  layered composition on graphs   (GRel)
///   SemiI `;I`  I-mediated composition          (PRel)
///   Semi  `;`   cross-sort composition          (PRel)
enum class RelOp { Circ, Star, DiaE, BoxE, AstG, SemiI, Semi };

const char* rel_sym_name(RelSym s);
const char* rel_op_name(RelOp o);

/// Sort of a PRel term; Unsorted for KRel/GRel.
enum class SortSide { A, X };
struct RelSort {
  SortSide row, col;
  bool operator==(const RelSort&) const = default;
};

class RelTerm;
using RelTermPtr = std::shared_ptr<const RelTerm>;

/// Immutable syntax tree over relation symbols. Construction validates the
/// symbol and operator sets of the language and, for PRel, the sorts.
class RelTerm {
 public:
  static RelTermPtr symbol(RelLang lang, RelSym s);
  static RelTermPtr comp(RelOp op, RelTermPtr left, RelTermPtr right);

  bool is_symbol() const { return !left_; }
  RelSym sym() const { return sym_; }
  RelOp op() const { return op_; }
  const RelTermPtr& left() const { return left_; }
  const RelTermPtr& right() const { return right_; }
  RelLang lang() const { return lang_; }
  std::optional<RelSort> sort() const { return sort_; }

  static bool equal(const RelTermPtr& a, const RelTermPtr& b);

 private:
  RelTerm() = default;
  RelLang lang_{};
  RelSym sym_{};
  RelOp op_{};
  RelTermPtr left_, right_;
  std::optional<RelSort> sort_;
};

struct RelInequality {
  RelTermPtr lhs, rhs;
  bool operator==(const RelInequality& o) const {
    return RelTerm::equal(lhs, o.lhs) && RelTerm::equal(rhs, o.rhs);
  }
};

std::string print_rel_term(const RelTermPtr& t);
std::string print_rel_inequality(const RelInequality& q);

/// Concrete syntax: symbols Delta E D Rdia Rbdia Rbox Rbbox I J; operators
/// o *k ;d ;b *g ;I ; — chains associate to the right, parentheses override.
RelTermPtr parse_rel_term(std::string_view text, RelLang lang);
RelInequality parse_rel_inequality(std::string_view text, RelLang lang);

/// Eliminates unit composites of the associative operators (D for ;d, E for
/// ;b, Delta for o, J/I for ;I by sort). Layered compositions *k/*g/; keep
/// their trailing units. Single bottom-up pass; confluent and terminating.
RelTermPtr normalize(const RelTermPtr& t);
RelInequality normalize(const RelInequality& q);

/// The translation from GRel to KRel: E, D become Delta, mediated
/// compositions become o, *g becomes *k, symbols stay fixed.
RelTermPtr translate_tau(const RelTermPtr& t);
RelInequality translate_tau(const RelInequality& q);

/// Evaluation of a term on the matching frame kind.
FiniteRelation eval_term(const RelTermPtr& t, const KripkeFrame& f);
FiniteRelation eval_term(const RelTermPtr& t, const GraphFrame& f);
FiniteRelation eval_term(const RelTermPtr& t, const PolarityFrame& f);

struct IneqCheck {
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> counterpair;
};

IneqCheck ineq_holds(const RelInequality& q, const KripkeFrame& f);
IneqCheck ineq_holds(const RelInequality& q, const GraphFrame& f);
IneqCheck ineq_holds(const RelInequality& q, const PolarityFrame& f);

}  // namespace mrpcorr
