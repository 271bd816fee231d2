#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mrpcorr {

/// Unary modal connectives. BBox and BDia are the adjoint (black) operators
/// available in the extended language; user-facing modal reduction principles
/// use only Box and Dia.
enum class Conn { Box, Dia, BBox, BDia };

inline bool is_dia_like(Conn c) { return c == Conn::Dia || c == Conn::BDia; }
inline bool is_box_like(Conn c) { return c == Conn::Box || c == Conn::BBox; }
const char* conn_keyword(Conn c);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  enum class Kind { Bottom, Top, Var, Nominal, Conominal, And, Or, Box, Dia, BBox, BDia };

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }
  /// Child of a unary modal node.
  const FormulaPtr& child() const { return left_; }

  static FormulaPtr bottom();
  static FormulaPtr top();
  static FormulaPtr var(std::string name);
  static FormulaPtr nominal(std::string name);
  static FormulaPtr conominal(std::string name);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr modal(Conn c, FormulaPtr a);

  bool is_modal() const {
    return kind_ == Kind::Box || kind_ == Kind::Dia || kind_ == Kind::BBox || kind_ == Kind::BDia;
  }
  Conn conn() const;

  static bool equal(const FormulaPtr& a, const FormulaPtr& b);
  /// Variable, nominal and conominal names occurring in the formula.
  static std::vector<std::string> atoms(const FormulaPtr& f);

 private:
  Formula(Kind k, std::string name, FormulaPtr l, FormulaPtr r)
      : kind_(k), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {}
  Kind kind_;
  std::string name_;
  FormulaPtr left_, right_;
};

std::string print_formula(const FormulaPtr& f);

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, std::vector<std::string> expected);
  std::size_t offset;
  std::vector<std::string> expected;
};

FormulaPtr parse_formula(std::string_view text);

/// An inequality / sequent `lhs <= rhs`.
struct Inequality {
  FormulaPtr lhs, rhs;
};
Inequality parse_inequality(std::string_view text);
std::string print_inequality(const Inequality& ineq);

/// A finite sequence of unary modal connectives, outermost first.
struct ModalString {
  std::vector<Conn> conns;

  bool empty() const { return conns.empty(); }
  std::size_t size() const { return conns.size(); }
  bool all_dia_like() const;
  bool all_box_like() const;
  ModalString concat(const ModalString& tail) const;
  /// Applies the string to an inner formula, outermost connective last applied.
  FormulaPtr apply(FormulaPtr inner) const;
  bool operator==(const ModalString&) const = default;
};

std::string print_modal_string(const ModalString& s);

enum class Side { Left, Right };

/// Left-good terms are diamonds-then-boxes over one variable, right-good ones
/// boxes-then-diamonds. Throws std::invalid_argument on non-mrp input.
bool is_good(const FormulaPtr& t, Side side);

/// Extracts the connective string of an mrp side; requires a single variable
/// under Box/Dia connectives only.
ModalString mrp_string(const FormulaPtr& t, std::string* var_name = nullptr);

/// Alternating block shape of the inner part of an mrp side. Chi-shaped
/// decompositions alternate (diamond block, box block) pairs of which only the
/// final box block may be empty; zeta-shaped ones are the mirror image. The
/// variable-only case is a single block whose both halves are empty.
struct BlockDecomposition {
  enum class Shape { Chi, Zeta };
  struct Block {
    ModalString first;   // diamond-like for Chi, box-like for Zeta
    ModalString second;  // box-like for Chi, diamond-like for Zeta
    bool operator==(const Block&) const = default;
  };
  Shape shape;
  std::vector<Block> blocks;

  ModalString full() const;
  bool operator==(const BlockDecomposition&) const = default;
};

/// Splits a connective string into the alternating block shape; BBox/BDia are
/// box-like/diamond-like respectively. Throws if the string cannot take the
/// shape (it always can, except an empty-interior pathology cannot arise).
BlockDecomposition decompose(BlockDecomposition::Shape shape, const ModalString& s);

struct TypeADecomposition {
  ModalString phi;    // diamond prefix of the left side
  ModalString alpha;  // box remainder of the left side
  ModalString psi;    // box prefix of the right side
  BlockDecomposition chi;
};

struct TypeBDecomposition {
  ModalString phi;  // diamond prefix of the left side
  BlockDecomposition zeta;
  ModalString psi;    // box prefix of the right side
  ModalString delta;  // diamond remainder of the right side
};

struct MrpClassification {
  enum class Kind { NotSahlqvist, TypeA, TypeB, Analytic };
  Kind kind = Kind::NotSahlqvist;
  std::optional<TypeADecomposition> a;  // set for TypeA and Analytic
  std::optional<TypeBDecomposition> b;  // set for TypeB and Analytic
  std::string var;                      // the single propositional variable

  bool sahlqvist() const { return kind != Kind::NotSahlqvist; }
};

/// Classifies an mrp s(p) <= t(p). Throws std::invalid_argument on non-mrp
/// input (connectives other than box/dia, or more than one variable).
MrpClassification classify_mrp(const FormulaPtr& s, const FormulaPtr& t);

/// Reconstructs the two sides of the mrp from a classification.
Inequality reconstruct(const MrpClassification& c);

/// LA maps a box string to the matching black-diamond string, RA a diamond
/// string to the matching black-box string. Throws on mixed input.
ModalString adjoint_string(const ModalString& s, Side side);

std::string describe_classification(const MrpClassification& c);

}  // namespace mrpcorr
