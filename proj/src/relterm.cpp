#include "mrpcorr/relterm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mrpcorr/formula.hpp"

namespace mrpcorr {

const char* rel_sym_name(RelSym s) {
  switch (s) {
    case RelSym::Delta: return "Delta";
    case RelSym::E: return "E";
    case RelSym::D: return "D";
    case RelSym::RDia: return "Rdia";
    case RelSym::RBDia: return "Rbdia";
    case RelSym::RBox: return "Rbox";
    case RelSym::RBBox: return "Rbbox";
    case RelSym::I: return "I";
    case RelSym::J: return "J";
  }
  return "?";
}

const char* rel_op_name(RelOp o) {
  switch (o) {
    case RelOp::Circ: return "o";
    case RelOp::Star: return "*k";
    case RelOp::DiaE: return ";d";
    case RelOp::BoxE: return ";b";
    case RelOp::AstG: return "*g";
    case RelOp::SemiI: return ";I";
    case RelOp::Semi: return ";";
  }
  return "?";
}

namespace {

bool sym_in_lang(RelLang lang, RelSym s) {
  switch (lang) {
    case RelLang::KRel:
      return s == RelSym::Delta || s == RelSym::RDia || s == RelSym::RBDia || s == RelSym::RBox ||
             s == RelSym::RBBox;
    case RelLang::GRel:
      return s == RelSym::E || s == RelSym::D || s == RelSym::RDia || s == RelSym::RBDia ||
             s == RelSym::RBox || s == RelSym::RBBox;
    case RelLang::PRel:
      return s == RelSym::I || s == RelSym::J || s == RelSym::RDia || s == RelSym::RBDia ||
             s == RelSym::RBox || s == RelSym::RBBox;
  }
  return false;
}

bool op_in_lang(RelLang lang, RelOp o) {
  switch (lang) {
    case RelLang::KRel: return o == RelOp::Circ || o == RelOp::Star;
    case RelLang::GRel: return o == RelOp::DiaE || o == RelOp::BoxE || o == RelOp::AstG;
    case RelLang::PRel: return o == RelOp::SemiI || o == RelOp::Semi;
  }
  return false;
}

RelSort prel_symbol_sort(RelSym s) {
  switch (s) {
    case RelSym::I: return {SortSide::A, SortSide::X};
    case RelSym::RBox: return {SortSide::A, SortSide::X};
    case RelSym::RBBox: return {SortSide::A, SortSide::X};
    case RelSym::J: return {SortSide::X, SortSide::A};
    case RelSym::RDia: return {SortSide::X, SortSide::A};
    case RelSym::RBDia: return {SortSide::X, SortSide::A};
    default: throw std::invalid_argument("symbol has no polarity sort");
  }
}

}  // namespace

RelTermPtr RelTerm::symbol(RelLang lang, RelSym s) {
  if (!sym_in_lang(lang, s))
    throw std::invalid_argument(std::string("symbol ") + rel_sym_name(s) + " is not part of this language");
  auto t = std::shared_ptr<RelTerm>(new RelTerm);
  t->lang_ = lang;
  t->sym_ = s;
  if (lang == RelLang::PRel) t->sort_ = prel_symbol_sort(s);
  return t;
}

RelTermPtr RelTerm::comp(RelOp op, RelTermPtr left, RelTermPtr right) {
  if (!left || !right) throw std::invalid_argument("composition of null terms");
  if (left->lang_ != right->lang_) throw std::invalid_argument("composition across languages");
  RelLang lang = left->lang_;
  if (!op_in_lang(lang, op))
    throw std::invalid_argument(std::string("operator ") + rel_op_name(op) + " is not part of this language");
  auto t = std::shared_ptr<RelTerm>(new RelTerm);
  t->lang_ = lang;
  t->op_ = op;
  if (lang == RelLang::PRel) {
    RelSort ls = *left->sort_, rs = *right->sort_;
    if (op == RelOp::SemiI) {
      if (!(ls == rs && ls.row != ls.col))
        throw std::invalid_argument(";I requires two terms of one modal sort (AxX or XxA)");
      t->sort_ = ls;
    } else {  // Semi composes through a shared middle sort
      if (ls.col != rs.row) throw std::invalid_argument("; sort mismatch");
      t->sort_ = RelSort{ls.row, rs.col};
    }
  }
  t->left_ = std::move(left);
  t->right_ = std::move(right);
  return t;
}

bool RelTerm::equal(const RelTermPtr& a, const RelTermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->lang_ != b->lang_ || a->is_symbol() != b->is_symbol()) return false;
  if (a->is_symbol()) return a->sym_ == b->sym_;
  return a->op_ == b->op_ && equal(a->left_, b->left_) && equal(a->right_, b->right_);
}

namespace {

// Right-nested chains of one operator print flat; a composite left child, or
// a right child under a different operator, is parenthesized.
void print_rec(std::ostringstream& os, const RelTermPtr& t, bool parens) {
  if (t->is_symbol()) {
    os << rel_sym_name(t->sym());
    return;
  }
  if (parens) os << "(";
  print_rec(os, t->left(), /*parens=*/!t->left()->is_symbol());
  os << " " << rel_op_name(t->op()) << " ";
  print_rec(os, t->right(), /*parens=*/!t->right()->is_symbol() && t->right()->op() != t->op());
  if (parens) os << ")";
}

}  // namespace

std::string print_rel_term(const RelTermPtr& t) {
  std::ostringstream os;
  print_rec(os, t, false);
  return os.str();
}

std::string print_rel_inequality(const RelInequality& q) {
  return print_rel_term(q.lhs) + " <= " + print_rel_term(q.rhs);
}

namespace {

struct RelToken {
  enum class Kind { Sym, Op, LParen, RParen, Leq, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

const std::map<std::string, RelSym> kSymNames = {
    {"Delta", RelSym::Delta}, {"E", RelSym::E},         {"D", RelSym::D},
    {"Rdia", RelSym::RDia},   {"Rbdia", RelSym::RBDia}, {"Rbox", RelSym::RBox},
    {"Rbbox", RelSym::RBBox}, {"I", RelSym::I},         {"J", RelSym::J}};

const std::map<std::string, RelOp> kOpNames = {
    {"o", RelOp::Circ}, {"*k", RelOp::Star}, {";d", RelOp::DiaE},  {";b", RelOp::BoxE},
    {"*g", RelOp::AstG}, {";I", RelOp::SemiI}, {";", RelOp::Semi}};

std::vector<RelToken> rel_lex(std::string_view text) {
  std::vector<RelToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({RelToken::Kind::LParen, "(", i});
      ++i;
    } else if (c == ')') {
      out.push_back({RelToken::Kind::RParen, ")", i});
      ++i;
    } else if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({RelToken::Kind::Leq, "<=", i});
      i += 2;
    } else if (c == ';') {
      if (i + 1 < text.size() && (text[i + 1] == 'd' || text[i + 1] == 'b' || text[i + 1] == 'I')) {
        out.push_back({RelToken::Kind::Op, std::string(";") + text[i + 1], i});
        i += 2;
      } else {
        out.push_back({RelToken::Kind::Op, ";", i});
        ++i;
      }
    } else if (c == '*') {
      if (i + 1 >= text.size() || (text[i + 1] != 'k' && text[i + 1] != 'g'))
        throw ParseError(i, {"*k", "*g"});
      out.push_back({RelToken::Kind::Op, std::string("*") + text[i + 1], i});
      i += 2;
    } else if (c == 'o' && (i + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
      out.push_back({RelToken::Kind::Op, "o", i});
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({RelToken::Kind::Sym, std::string(text.substr(start, i - start)), start});
    } else {
      throw ParseError(i, {"a relation term token"});
    }
  }
  out.push_back({RelToken::Kind::End, "", text.size()});
  return out;
}

class RelParser {
 public:
  RelParser(std::string_view text, RelLang lang) : toks_(rel_lex(text)), lang_(lang) {}

  RelTermPtr term_all() {
    RelTermPtr t = term();
    if (peek().kind != RelToken::Kind::End) throw ParseError(peek().offset, {"end of input"});
    return t;
  }

  RelInequality ineq_all() {
    RelTermPtr l = term();
    if (peek().kind != RelToken::Kind::Leq) throw ParseError(peek().offset, {"<="});
    ++pos_;
    RelTermPtr r = term();
    if (peek().kind != RelToken::Kind::End) throw ParseError(peek().offset, {"end of input"});
    if (l->sort() != r->sort())
      throw std::invalid_argument("inequality sides must have the same sort");
    return {l, r};
  }

 private:
  const RelToken& peek() const { return toks_[pos_]; }

  // term := atom [op term]  (right-nested chains)
  RelTermPtr term() {
    RelTermPtr lhs = atom();
    if (peek().kind == RelToken::Kind::Op) {
      auto it = kOpNames.find(peek().text);
      if (it == kOpNames.end()) throw ParseError(peek().offset, {"a composition operator"});
      RelOp op = it->second;
      ++pos_;
      return RelTerm::comp(op, lhs, term());
    }
    return lhs;
  }

  RelTermPtr atom() {
    const RelToken& t = peek();
    if (t.kind == RelToken::Kind::Sym) {
      auto it = kSymNames.find(t.text);
      if (it == kSymNames.end()) throw ParseError(t.offset, {"a relation symbol"});
      ++pos_;
      return RelTerm::symbol(lang_, it->second);
    }
    if (t.kind == RelToken::Kind::LParen) {
      ++pos_;
      RelTermPtr inner = term();
      if (peek().kind != RelToken::Kind::RParen) throw ParseError(peek().offset, {")"});
      ++pos_;
      return inner;
    }
    throw ParseError(t.offset, {"a relation symbol", "("});
  }

  std::vector<RelToken> toks_;
  RelLang lang_;
  std::size_t pos_ = 0;
};

}  // namespace

RelTermPtr parse_rel_term(std::string_view text, RelLang lang) {
  return RelParser(text, lang).term_all();
}

RelInequality parse_rel_inequality(std::string_view text, RelLang lang) {
  return RelParser(text, lang).ineq_all();
}

namespace {

bool is_unit_for(const RelTermPtr& t, RelOp op) {
  if (!t->is_symbol()) return false;
  switch (op) {
    case RelOp::Circ: return t->sym() == RelSym::Delta;
    case RelOp::DiaE: return t->sym() == RelSym::D;
    case RelOp::BoxE: return t->sym() == RelSym::E;
    case RelOp::SemiI: return t->sym() == RelSym::J || t->sym() == RelSym::I;
    default: return false;
  }
}

}  // namespace

RelTermPtr normalize(const RelTermPtr& t) {
  if (t->is_symbol()) return t;
  RelTermPtr l = normalize(t->left());
  RelTermPtr r = normalize(t->right());
  if (is_unit_for(l, t->op())) return r;
  if (is_unit_for(r, t->op())) return l;
  return RelTerm::comp(t->op(), l, r);
}

RelInequality normalize(const RelInequality& q) { return {normalize(q.lhs), normalize(q.rhs)}; }

RelTermPtr translate_tau(const RelTermPtr& t) {
  if (t->lang() != RelLang::GRel) throw std::invalid_argument("tau expects a GRel term");
  if (t->is_symbol()) {
    RelSym s = t->sym();
    if (s == RelSym::E || s == RelSym::D) s = RelSym::Delta;
    return RelTerm::symbol(RelLang::KRel, s);
  }
  RelOp op = t->op() == RelOp::AstG ? RelOp::Star : RelOp::Circ;
  return RelTerm::comp(op, translate_tau(t->left()), translate_tau(t->right()));
}

RelInequality translate_tau(const RelInequality& q) {
  return {translate_tau(q.lhs), translate_tau(q.rhs)};
}

namespace {

FiniteRelation eval_kripke(const RelTermPtr& t, const KripkeFrame& f) {
  if (t->is_symbol()) {
    switch (t->sym()) {
      case RelSym::Delta: return FiniteRelation::identity(f.dom);
      case RelSym::RDia: return f.r_dia;
      case RelSym::RBox: return f.r_box;
      case RelSym::RBDia: return f.r_box.converse();
      case RelSym::RBBox: return f.r_dia.converse();
      default: throw std::invalid_argument("symbol outside KRel");
    }
  }
  FiniteRelation l = eval_kripke(t->left(), f), r = eval_kripke(t->right(), f);
  return compose(t->op() == RelOp::Circ ? CompKind::Circ : CompKind::Star, l, r);
}

FiniteRelation eval_graph(const RelTermPtr& t, const GraphFrame& f) {
  if (t->is_symbol()) {
    switch (t->sym()) {
      case RelSym::E: return f.e;
      case RelSym::D: return f.d();
      case RelSym::RDia: return f.r_dia;
      case RelSym::RBox: return f.r_box;
      case RelSym::RBDia: return f.r_bdia();
      case RelSym::RBBox: return f.r_bbox();
      default: throw std::invalid_argument("symbol outside GRel");
    }
  }
  FiniteRelation l = eval_graph(t->left(), f), r = eval_graph(t->right(), f);
  CompKind k = t->op() == RelOp::DiaE ? CompKind::DiaE
               : t->op() == RelOp::BoxE ? CompKind::BoxE
                                        : CompKind::Ast;
  return compose(k, l, r, &f.e);
}

// PRel compositions act through the positive universal operators; the
// complement coding of lifted relations keeps membership positive here.
Bits rd0(const FiniteRelation& p, Bits cols) { return p.galois_pos(0, cols); }
Bits rd1(const FiniteRelation& p, Bits rows) { return p.galois_pos(1, rows); }

FiniteRelation eval_polarity(const RelTermPtr& t, const PolarityFrame& f) {
  if (t->is_symbol()) {
    switch (t->sym()) {
      case RelSym::I: return f.i;
      case RelSym::J: return f.i.converse();
      case RelSym::RBox: return f.r_box;
      case RelSym::RDia: return f.r_dia;
      case RelSym::RBBox: return f.r_dia.converse();
      case RelSym::RBDia: return f.r_box.converse();
      default: throw std::invalid_argument("symbol outside PRel");
    }
  }
  FiniteRelation l = eval_polarity(t->left(), f), r = eval_polarity(t->right(), f);
  const std::size_t rows = l.src_size(), cols = r.dst_size();
  FiniteRelation out(l.src(), r.dst());
  for (std::size_t w = 0; w < cols; ++w) {
    Bits mid = rd0(r, bit(w));
    Bits col;
    if (t->op() == RelOp::SemiI) {
      RelSort s = *t->sort();
      col = s.row == SortSide::A ? rd0(l, rd1(f.i, mid)) : rd0(l, rd0(f.i, mid));
    } else {
      col = rd0(l, mid);
    }
    for (std::size_t u = 0; u < rows; ++u)
      if (contains(col, u)) out.set(u, w);
  }
  return out;
}

template <class Frame>
IneqCheck check(const RelInequality& q, const Frame& f,
                FiniteRelation (*ev)(const RelTermPtr&, const Frame&)) {
  if (q.lhs->sort() != q.rhs->sort())
    throw std::invalid_argument("inequality sides must have the same sort");
  FiniteRelation l = ev(q.lhs, f), r = ev(q.rhs, f);
  if (l.src_size() != r.src_size() || l.dst_size() != r.dst_size())
    throw std::invalid_argument("inequality sides evaluate over different domains");
  if (auto w = l.witness_not_subset(r)) return {false, *w};
  return {true, std::nullopt};
}

}  // namespace

FiniteRelation eval_term(const RelTermPtr& t, const KripkeFrame& f) {
  if (t->lang() != RelLang::KRel) throw std::invalid_argument("Kripke frames evaluate KRel terms");
  return eval_kripke(t, f);
}

FiniteRelation eval_term(const RelTermPtr& t, const GraphFrame& f) {
  if (t->lang() != RelLang::GRel) throw std::invalid_argument("graph frames evaluate GRel terms");
  return eval_graph(t, f);
}

FiniteRelation eval_term(const RelTermPtr& t, const PolarityFrame& f) {
  if (t->lang() != RelLang::PRel) throw std::invalid_argument("polarity frames evaluate PRel terms");
  return eval_polarity(t, f);
}

IneqCheck ineq_holds(const RelInequality& q, const KripkeFrame& f) {
  return check<KripkeFrame>(q, f, [](const RelTermPtr& t, const KripkeFrame& g) { return eval_term(t, g); });
}

IneqCheck ineq_holds(const RelInequality& q, const GraphFrame& f) {
  return check<GraphFrame>(q, f, [](const RelTermPtr& t, const GraphFrame& g) { return eval_term(t, g); });
}

IneqCheck ineq_holds(const RelInequality& q, const PolarityFrame& f) {
  return check<PolarityFrame>(q, f, [](const RelTermPtr& t, const PolarityFrame& g) { return eval_term(t, g); });
}

}  // namespace mrpcorr
