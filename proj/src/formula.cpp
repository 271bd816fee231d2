#include "mrpcorr/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mrpcorr {

const char* conn_keyword(Conn c) {
  switch (c) {
    case Conn::Box: return "box";
    case Conn::Dia: return "dia";
    case Conn::BBox: return "bbox";
    case Conn::BDia: return "bdia";
  }
  return "?";
}

FormulaPtr Formula::bottom() { return FormulaPtr(new Formula(Kind::Bottom, "", nullptr, nullptr)); }
FormulaPtr Formula::top() { return FormulaPtr(new Formula(Kind::Top, "", nullptr, nullptr)); }
FormulaPtr Formula::var(std::string name) {
  return FormulaPtr(new Formula(Kind::Var, std::move(name), nullptr, nullptr));
}
FormulaPtr Formula::nominal(std::string name) {
  return FormulaPtr(new Formula(Kind::Nominal, std::move(name), nullptr, nullptr));
}
FormulaPtr Formula::conominal(std::string name) {
  return FormulaPtr(new Formula(Kind::Conominal, std::move(name), nullptr, nullptr));
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::And, "", std::move(a), std::move(b)));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::Or, "", std::move(a), std::move(b)));
}
FormulaPtr Formula::modal(Conn c, FormulaPtr a) {
  Kind k = c == Conn::Box   ? Kind::Box
           : c == Conn::Dia ? Kind::Dia
           : c == Conn::BBox ? Kind::BBox
                             : Kind::BDia;
  return FormulaPtr(new Formula(k, "", std::move(a), nullptr));
}

Conn Formula::conn() const {
  switch (kind_) {
    case Kind::Box: return Conn::Box;
    case Kind::Dia: return Conn::Dia;
    case Kind::BBox: return Conn::BBox;
    case Kind::BDia: return Conn::BDia;
    default: throw std::logic_error("conn() on a non-modal node");
  }
}

bool Formula::equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind_ != b->kind_ || a->name_ != b->name_) return false;
  return equal(a->left_, b->left_) && equal(a->right_, b->right_);
}

std::vector<std::string> Formula::atoms(const FormulaPtr& f) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const FormulaPtr& g) -> void {
    if (!g) return;
    if (g->kind_ == Kind::Var || g->kind_ == Kind::Nominal || g->kind_ == Kind::Conominal) {
      if (seen.insert(g->name_).second) out.push_back(g->name_);
    }
    self(self, g->left_);
    self(self, g->right_);
  };
  walk(walk, f);
  return out;
}

namespace {

// Precedence: or < and < modal/atom.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 0;
    case Formula::Kind::And: return 1;
    default: return 2;
  }
}

void print_rec(std::ostringstream& os, const FormulaPtr& f, int min_prec) {
  int p = precedence(f->kind());
  bool parens = p < min_prec;
  if (parens) os << "(";
  switch (f->kind()) {
    case Formula::Kind::Bottom: os << "bot"; break;
    case Formula::Kind::Top: os << "top"; break;
    case Formula::Kind::Var:
    case Formula::Kind::Nominal:
    case Formula::Kind::Conominal: os << f->name(); break;
    case Formula::Kind::And:
      print_rec(os, f->left(), 2);
      os << " and ";
      print_rec(os, f->right(), 2);
      break;
    case Formula::Kind::Or:
      print_rec(os, f->left(), 1);
      os << " or ";
      print_rec(os, f->right(), 1);
      break;
    default:
      os << conn_keyword(f->conn()) << " ";
      print_rec(os, f->child(), 2);
      break;
  }
  if (parens) os << ")";
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream os;
  print_rec(os, f, 0);
  return os.str();
}

ParseError::ParseError(std::size_t off, std::vector<std::string> exp)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "syntax error at offset " << off << "; expected ";
        for (std::size_t i = 0; i < exp.size(); ++i) os << (i ? ", " : "") << exp[i];
        return os.str();
      }()),
      offset(off),
      expected(std::move(exp)) {}

namespace {

struct Token {
  enum class Kind { Ident, Keyword, LParen, RParen, Leq, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

const std::set<std::string> kKeywords = {"box", "dia", "bbox", "bdia", "and", "or", "top", "bot"};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::Kind::LParen, "(", i});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Kind::RParen, ")", i});
      ++i;
    } else if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({Token::Kind::Leq, "<=", i});
      i += 2;
    } else if (c >= 'a' && c <= 'z') {
      std::size_t start = i;
      while (i < text.size() &&
             ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= '0' && text[i] <= '9') || text[i] == '_'))
        ++i;
      std::string word(text.substr(start, i - start));
      out.push_back({kKeywords.count(word) ? Token::Kind::Keyword : Token::Kind::Ident, word, start});
    } else {
      throw ParseError(i, {"a formula token"});
    }
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  FormulaPtr parse_formula_all() {
    FormulaPtr f = parse_or();
    expect_end();
    return f;
  }

  Inequality parse_inequality_all() {
    FormulaPtr l = parse_or();
    if (peek().kind != Token::Kind::Leq) throw ParseError(peek().offset, {"<="});
    ++pos_;
    FormulaPtr r = parse_or();
    expect_end();
    return {l, r};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  void expect_end() {
    if (peek().kind != Token::Kind::End) throw ParseError(peek().offset, {"end of input"});
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (peek().kind == Token::Kind::Keyword && peek().text == "or") {
      ++pos_;
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (peek().kind == Token::Kind::Keyword && peek().text == "and") {
      ++pos_;
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Keyword) {
      if (t.text == "box" || t.text == "dia" || t.text == "bbox" || t.text == "bdia") {
        Conn c = t.text == "box"   ? Conn::Box
                 : t.text == "dia" ? Conn::Dia
                 : t.text == "bbox" ? Conn::BBox
                                    : Conn::BDia;
        ++pos_;
        return Formula::modal(c, parse_unary());
      }
      if (t.text == "top") {
        ++pos_;
        return Formula::top();
      }
      if (t.text == "bot") {
        ++pos_;
        return Formula::bottom();
      }
      throw ParseError(t.offset, {"a formula"});
    }
    if (t.kind == Token::Kind::Ident) {
      ++pos_;
      return Formula::var(t.text);
    }
    if (t.kind == Token::Kind::LParen) {
      ++pos_;
      FormulaPtr f = parse_or();
      if (peek().kind != Token::Kind::RParen) throw ParseError(peek().offset, {")"});
      ++pos_;
      return f;
    }
    throw ParseError(t.offset, {"bot", "top", "an identifier", "box", "dia", "bbox", "bdia", "("});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).parse_formula_all(); }

Inequality parse_inequality(std::string_view text) { return Parser(text).parse_inequality_all(); }

std::string print_inequality(const Inequality& ineq) {
  return print_formula(ineq.lhs) + " <= " + print_formula(ineq.rhs);
}

bool ModalString::all_dia_like() const {
  return std::all_of(conns.begin(), conns.end(), is_dia_like);
}

bool ModalString::all_box_like() const {
  return std::all_of(conns.begin(), conns.end(), is_box_like);
}

ModalString ModalString::concat(const ModalString& tail) const {
  ModalString out = *this;
  out.conns.insert(out.conns.end(), tail.conns.begin(), tail.conns.end());
  return out;
}

FormulaPtr ModalString::apply(FormulaPtr inner) const {
  FormulaPtr f = std::move(inner);
  for (auto it = conns.rbegin(); it != conns.rend(); ++it) f = Formula::modal(*it, f);
  return f;
}

std::string print_modal_string(const ModalString& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.conns.size(); ++i) os << (i ? " " : "") << conn_keyword(s.conns[i]);
  return os.str();
}

ModalString mrp_string(const FormulaPtr& t, std::string* var_name) {
  ModalString out;
  const Formula* cur = t.get();
  while (cur->kind() == Formula::Kind::Box || cur->kind() == Formula::Kind::Dia) {
    out.conns.push_back(cur->conn());
    cur = cur->child().get();
  }
  if (cur->kind() != Formula::Kind::Var)
    throw std::invalid_argument("not an mrp term: expected box/dia connectives over one variable");
  if (var_name) *var_name = cur->name();
  return out;
}

bool is_good(const FormulaPtr& t, Side side) {
  ModalString s = mrp_string(t);
  std::size_t i = 0;
  if (side == Side::Left) {
    while (i < s.size() && s.conns[i] == Conn::Dia) ++i;
    while (i < s.size() && s.conns[i] == Conn::Box) ++i;
  } else {
    while (i < s.size() && s.conns[i] == Conn::Box) ++i;
    while (i < s.size() && s.conns[i] == Conn::Dia) ++i;
  }
  return i == s.size();
}

ModalString BlockDecomposition::full() const {
  ModalString out;
  for (const Block& b : blocks) {
    out = out.concat(b.first);
    out = out.concat(b.second);
  }
  return out;
}

BlockDecomposition decompose(BlockDecomposition::Shape shape, const ModalString& s) {
  const bool chi = shape == BlockDecomposition::Shape::Chi;
  auto first_kind = chi ? is_dia_like : is_box_like;
  BlockDecomposition out{shape, {}};
  std::size_t i = 0;
  if (s.empty()) {
    out.blocks.push_back({{}, {}});
    return out;
  }
  if (!first_kind(s.conns[0]))
    throw std::invalid_argument("block decomposition: string starts with the wrong connective kind");
  while (i < s.size()) {
    BlockDecomposition::Block blk;
    while (i < s.size() && first_kind(s.conns[i])) blk.first.conns.push_back(s.conns[i++]);
    while (i < s.size() && !first_kind(s.conns[i])) blk.second.conns.push_back(s.conns[i++]);
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

namespace {

// Splits a pure box/dia string at the end of its maximal prefix of `lead`.
std::pair<ModalString, ModalString> split_prefix(const ModalString& s, Conn lead) {
  std::size_t i = 0;
  while (i < s.size() && s.conns[i] == lead) ++i;
  ModalString head, tail;
  head.conns.assign(s.conns.begin(), s.conns.begin() + std::ptrdiff_t(i));
  tail.conns.assign(s.conns.begin() + std::ptrdiff_t(i), s.conns.end());
  return {head, tail};
}

}  // namespace

MrpClassification classify_mrp(const FormulaPtr& s, const FormulaPtr& t) {
  std::string vs, vt;
  ModalString ls = mrp_string(s, &vs);
  ModalString rt = mrp_string(t, &vt);
  if (vs != vt) throw std::invalid_argument("mrp sides must share one propositional variable");

  MrpClassification out;
  out.var = vs;
  bool left_good = is_good(s, Side::Left);
  bool right_good = is_good(t, Side::Right);

  if (left_good) {
    TypeADecomposition a;
    auto [phi, alpha] = split_prefix(ls, Conn::Dia);
    a.phi = phi;
    a.alpha = alpha;
    auto [psi, chi] = split_prefix(rt, Conn::Box);
    a.psi = psi;
    a.chi = decompose(BlockDecomposition::Shape::Chi, chi);
    out.a = std::move(a);
  }
  if (right_good) {
    TypeBDecomposition b;
    auto [phi, zeta] = split_prefix(ls, Conn::Dia);
    b.phi = phi;
    b.zeta = decompose(BlockDecomposition::Shape::Zeta, zeta);
    auto [psi, delta] = split_prefix(rt, Conn::Box);
    b.psi = psi;
    b.delta = delta;
    out.b = std::move(b);
  }
  out.kind = left_good && right_good ? MrpClassification::Kind::Analytic
             : left_good             ? MrpClassification::Kind::TypeA
             : right_good            ? MrpClassification::Kind::TypeB
                                     : MrpClassification::Kind::NotSahlqvist;
  return out;
}

Inequality reconstruct(const MrpClassification& c) {
  FormulaPtr p = Formula::var(c.var);
  if (c.a) {
    FormulaPtr lhs = c.a->phi.apply(c.a->alpha.apply(p));
    FormulaPtr rhs = c.a->psi.apply(c.a->chi.full().apply(p));
    return {lhs, rhs};
  }
  if (c.b) {
    FormulaPtr lhs = c.b->phi.apply(c.b->zeta.full().apply(p));
    FormulaPtr rhs = c.b->psi.apply(c.b->delta.apply(p));
    return {lhs, rhs};
  }
  throw std::invalid_argument("cannot reconstruct a non-Sahlqvist classification");
}

ModalString adjoint_string(const ModalString& s, Side side) {
  ModalString out;
  out.conns.reserve(s.size());
  for (Conn c : s.conns) {
    if (side == Side::Left) {
      if (c != Conn::Box) throw std::invalid_argument("LA requires a pure box string");
      out.conns.push_back(Conn::BDia);
    } else {
      if (c != Conn::Dia) throw std::invalid_argument("RA requires a pure diamond string");
      out.conns.push_back(Conn::BBox);
    }
  }
  return out;
}

std::string describe_classification(const MrpClassification& c) {
  std::ostringstream os;
  auto str = [](const ModalString& m) {
    std::string s = print_modal_string(m);
    return s.empty() ? std::string("(empty)") : s;
  };
  switch (c.kind) {
    case MrpClassification::Kind::NotSahlqvist: os << "not Sahlqvist"; return os.str();
    case MrpClassification::Kind::TypeA: os << "inductive of type (a)"; break;
    case MrpClassification::Kind::TypeB: os << "inductive of type (b)"; break;
    case MrpClassification::Kind::Analytic: os << "analytic inductive (types (a) and (b))"; break;
  }
  if (c.a) {
    os << "\n  (a) phi = " << str(c.a->phi) << "; alpha = " << str(c.a->alpha)
       << "; psi = " << str(c.a->psi) << "; chi = "
       << (c.a->chi.full().empty() ? c.var : print_modal_string(c.a->chi.full()) + " " + c.var);
  }
  if (c.b) {
    os << "\n  (b) phi = " << str(c.b->phi) << "; zeta = "
       << (c.b->zeta.full().empty() ? c.var : print_modal_string(c.b->zeta.full()) + " " + c.var)
       << "; psi = " << str(c.b->psi) << "; delta = " << str(c.b->delta);
  }
  return os.str();
}

}  // namespace mrpcorr
