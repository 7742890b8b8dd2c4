#include "shacl2fol/scl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>

#include "shacl2fol/error.hpp"

namespace shacl2fol::scl {

std::string_view filter_name(Filter f) {
  switch (f) {
    case Filter::IsIri: return "isIRI";
    case Filter::IsLiteral: return "isLiteral";
    case Filter::IsBlank: return "isBlank";
  }
  return {};
}

PathFormula PathFormula::make_role(std::string iri, bool inverted) {
  PathFormula p;
  p.kind = PathKind::Role;
  p.role = std::move(iri);
  p.inverted = inverted;
  return p;
}

namespace {
PathFormula path_node(PathKind kind, std::vector<PathFormula> children) {
  PathFormula p;
  p.kind = kind;
  p.children = std::move(children);
  return p;
}
}  // namespace

PathFormula PathFormula::seq(PathFormula a, PathFormula b) {
  return path_node(PathKind::Seq, {std::move(a), std::move(b)});
}
PathFormula PathFormula::alt(PathFormula a, PathFormula b) {
  return path_node(PathKind::Alt, {std::move(a), std::move(b)});
}
PathFormula PathFormula::star(PathFormula p) {
  return path_node(PathKind::Star, {std::move(p)});
}
PathFormula PathFormula::zero_or_one(PathFormula p) {
  return path_node(PathKind::ZeroOrOne, {std::move(p)});
}

NodeFormula NodeFormula::top() { return NodeFormula{}; }

NodeFormula NodeFormula::negate(NodeFormula f) {
  NodeFormula out;
  out.kind = NodeKind::Not;
  out.children.push_back(std::move(f));
  return out;
}

NodeFormula NodeFormula::conj(NodeFormula a, NodeFormula b) {
  NodeFormula out;
  out.kind = NodeKind::And;
  out.children.push_back(std::move(a));
  out.children.push_back(std::move(b));
  return out;
}

NodeFormula NodeFormula::eq_const(Constant c) {
  NodeFormula out;
  out.kind = NodeKind::EqConst;
  out.constant = std::move(c);
  return out;
}

NodeFormula NodeFormula::make_filter(scl::Filter f) {
  NodeFormula out;
  out.kind = NodeKind::Filter;
  out.filter = f;
  return out;
}

NodeFormula NodeFormula::has_shape(ShapeName s) {
  NodeFormula out;
  out.kind = NodeKind::HasShape;
  out.shape = std::move(s);
  return out;
}

NodeFormula NodeFormula::exists(PathFormula p, NodeFormula f) {
  NodeFormula out;
  out.kind = NodeKind::Exists;
  out.path = std::move(p);
  out.children.push_back(std::move(f));
  return out;
}

NodeFormula NodeFormula::not_exists_both(PathFormula p, std::string role) {
  NodeFormula out;
  out.kind = NodeKind::NotExistsBoth;
  out.path = std::move(p);
  out.role = std::move(role);
  return out;
}

NodeFormula NodeFormula::forall_iff(PathFormula p, std::string role) {
  NodeFormula out = not_exists_both(std::move(p), std::move(role));
  out.kind = NodeKind::ForallIff;
  return out;
}

NodeFormula NodeFormula::pairwise_order(PathFormula p, std::string role,
                                        OrderAtom order) {
  NodeFormula out = not_exists_both(std::move(p), std::move(role));
  out.kind = NodeKind::PairwiseOrder;
  out.order = order;
  return out;
}

NodeFormula NodeFormula::at_least(std::size_t n, PathFormula p,
                                  NodeFormula f) {
  NodeFormula out = exists(std::move(p), std::move(f));
  out.kind = NodeKind::AtLeast;
  out.count = n;
  return out;
}

SclSentence SclSentence::top() { return SclSentence{}; }

SclSentence SclSentence::conj(SclSentence a, SclSentence b) {
  SclSentence out;
  out.kind = SentenceKind::Conj;
  out.children.push_back(std::move(a));
  out.children.push_back(std::move(b));
  return out;
}

SclSentence SclSentence::target_node(Constant c, ShapeName s) {
  SclSentence out;
  out.kind = SentenceKind::TargetNode;
  out.constant = std::move(c);
  out.shape = std::move(s);
  return out;
}

SclSentence SclSentence::target_class(Constant c, ShapeName s) {
  SclSentence out = target_node(std::move(c), std::move(s));
  out.kind = SentenceKind::TargetClass;
  return out;
}

SclSentence SclSentence::target_subjects_of(std::string role, ShapeName s) {
  SclSentence out;
  out.kind = SentenceKind::TargetSubjectsOf;
  out.role = std::move(role);
  out.shape = std::move(s);
  return out;
}

SclSentence SclSentence::target_objects_of(std::string role, ShapeName s) {
  SclSentence out = target_subjects_of(std::move(role), std::move(s));
  out.kind = SentenceKind::TargetObjectsOf;
  return out;
}

SclSentence SclSentence::shape_def(ShapeName s, NodeFormula body) {
  SclSentence out;
  out.kind = SentenceKind::ShapeDef;
  out.shape = std::move(s);
  out.body = std::move(body);
  return out;
}

bool SclSentence::is_target() const {
  return kind == SentenceKind::TargetNode ||
         kind == SentenceKind::TargetClass ||
         kind == SentenceKind::TargetSubjectsOf ||
         kind == SentenceKind::TargetObjectsOf;
}

namespace {

void free_refs(const NodeFormula& f, std::set<ShapeName>& out) {
  if (f.kind == NodeKind::HasShape) out.insert(f.shape);
  for (const auto& c : f.children) free_refs(c, out);
}

void body_constants(const NodeFormula& f, std::set<Constant>& out) {
  if (f.kind == NodeKind::EqConst) out.insert(f.constant);
  if (f.kind == NodeKind::HasShape) out.insert(f.shape.name);
  for (const auto& c : f.children) body_constants(c, out);
}

void body_roles(const NodeFormula& f, std::set<std::string>& out) {
  switch (f.kind) {
    case NodeKind::Exists:
    case NodeKind::AtLeast:
      collect_roles(f.path, out);
      break;
    case NodeKind::NotExistsBoth:
    case NodeKind::ForallIff:
    case NodeKind::PairwiseOrder:
      collect_roles(f.path, out);
      out.insert(f.role);
      break;
    default:
      break;
  }
  for (const auto& c : f.children) body_roles(c, out);
}

}  // namespace

std::set<ShapeName> free_shape_refs(const NodeFormula& f) {
  std::set<ShapeName> out;
  free_refs(f, out);
  return out;
}

void collect_roles(const PathFormula& p, std::set<std::string>& out) {
  if (p.kind == PathKind::Role) out.insert(p.role);
  for (const auto& c : p.children) collect_roles(c, out);
}

void collect_constants(const SclSentence& s, std::set<Constant>& out) {
  switch (s.kind) {
    case SentenceKind::TargetNode:
    case SentenceKind::TargetClass:
      out.insert(s.constant);
      out.insert(s.shape.name);
      break;
    case SentenceKind::TargetSubjectsOf:
    case SentenceKind::TargetObjectsOf:
      out.insert(s.shape.name);
      break;
    case SentenceKind::ShapeDef:
      out.insert(s.shape.name);
      body_constants(s.body, out);
      break;
    default:
      break;
  }
  for (const auto& c : s.children) collect_constants(c, out);
}

void collect_roles(const SclSentence& s, std::set<std::string>& out) {
  switch (s.kind) {
    case SentenceKind::TargetClass:
      out.insert(std::string(rdf::vocab::kRdfType));
      break;
    case SentenceKind::TargetSubjectsOf:
    case SentenceKind::TargetObjectsOf:
      out.insert(s.role);
      break;
    case SentenceKind::ShapeDef:
      body_roles(s.body, out);
      break;
    default:
      break;
  }
  for (const auto& c : s.children) collect_roles(c, out);
}

std::vector<SclSentence> flatten(std::span<const SclSentence> sentences) {
  std::vector<SclSentence> out;
  for (const auto& s : sentences) {
    if (s.kind == SentenceKind::Top) continue;
    if (s.kind == SentenceKind::Conj) {
      for (auto& c : flatten(s.children)) out.push_back(std::move(c));
      continue;
    }
    out.push_back(s);
  }
  return out;
}

bool is_valid_shape_relation(std::string_view name) {
  static const std::set<std::string_view> reserved = {
      "isIRI", "isLiteral", "isBlank", "isA",    "lt",
      "leq",   "T",         "exists", "forall"};
  if (name.empty() || reserved.contains(name)) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  // Emitted star relations are named star_<k>.
  return !name.starts_with("star_");
}

std::string WellFormednessError::to_string() const {
  std::string what;
  switch (kind) {
    case ErrorKind::DuplicateDefinition: what = "DuplicateDefinition"; break;
    case ErrorKind::UndefinedShape: what = "UndefinedShape"; break;
    case ErrorKind::NamespaceClash: what = "NamespaceClash"; break;
    case ErrorKind::InvalidCardinality: what = "InvalidCardinality"; break;
  }
  what += "(" + shape.relation + " " + shape.name.to_ntriples() + ")";
  if (!detail.empty()) what += ": " + detail;
  return what;
}

std::vector<WellFormednessError> validate_theory(
    std::span<const SclSentence> sentences) {
  std::vector<WellFormednessError> errors;
  auto flat = flatten(sentences);
  std::map<ShapeName, int> defs;
  std::set<ShapeName> refs;
  std::set<std::string> clashing;
  auto check_relation = [&](const ShapeName& s) {
    if (!is_valid_shape_relation(s.relation) &&
        clashing.insert(s.relation).second) {
      errors.push_back({ErrorKind::NamespaceClash, s,
                        "shape relation '" + s.relation +
                            "' is not a valid shape relation name"});
    }
  };
  std::function<void(const NodeFormula&, const ShapeName&)> check_body =
      [&](const NodeFormula& f, const ShapeName& owner) {
        if (f.kind == NodeKind::AtLeast && f.count == 0)
          errors.push_back({ErrorKind::InvalidCardinality, owner,
                            "exists>=0 is not an SCL formula"});
        if (f.kind == NodeKind::HasShape) check_relation(f.shape);
        for (const auto& c : f.children) check_body(c, owner);
      };
  for (const auto& s : flat) {
    check_relation(s.shape);
    if (s.kind == SentenceKind::ShapeDef) {
      if (++defs[s.shape] == 2)
        errors.push_back({ErrorKind::DuplicateDefinition, s.shape, {}});
      for (const auto& r : free_shape_refs(s.body)) refs.insert(r);
      check_body(s.body, s.shape);
    } else if (s.is_target()) {
      refs.insert(s.shape);
    }
  }
  for (const auto& r : refs) {
    if (!defs.contains(r))
      errors.push_back({ErrorKind::UndefinedShape, r, {}});
  }
  return errors;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string var(std::size_t depth) { return "x" + std::to_string(depth); }

std::string shape_atom(const ShapeName& s, const std::string& subject) {
  return s.relation + "(" + subject + ", " + s.name.to_ntriples() + ")";
}

std::string role_atom(const std::string& role, std::size_t a, std::size_t b) {
  return "<" + role + ">(" + var(a) + ", " + var(b) + ")";
}

std::string path_atom(const PathFormula& p, std::size_t a, std::size_t b) {
  return "[" + to_text(p) + "](" + var(a) + ", " + var(b) + ")";
}

bool is_quantified(NodeKind k) {
  return k == NodeKind::Exists || k == NodeKind::AtLeast ||
         k == NodeKind::NotExistsBoth || k == NodeKind::ForallIff ||
         k == NodeKind::PairwiseOrder;
}

// True when the printed form ends inside a quantifier scope.
bool open_ended(const NodeFormula& f) {
  if (is_quantified(f.kind)) return true;
  if (f.kind == NodeKind::Not)
    return f.children[0].kind != NodeKind::And && open_ended(f.children[0]);
  if (f.kind == NodeKind::And) return open_ended(f.children[1]);
  return false;
}

}  // namespace

std::string to_text(const PathFormula& p) {
  switch (p.kind) {
    case PathKind::Role:
      return (p.inverted ? "^<" : "<") + p.role + ">";
    case PathKind::Seq: {
      const auto& a = p.children[0];
      const auto& b = p.children[1];
      std::string l = to_text(a);
      std::string r = to_text(b);
      if (a.kind == PathKind::Seq || a.kind == PathKind::Alt) l = "(" + l + ")";
      if (b.kind == PathKind::Alt) r = "(" + r + ")";
      return l + " / " + r;
    }
    case PathKind::Alt: {
      std::string l = to_text(p.children[0]);
      if (p.children[0].kind == PathKind::Alt) l = "(" + l + ")";
      return l + " | " + to_text(p.children[1]);
    }
    case PathKind::Star:
    case PathKind::ZeroOrOne: {
      const auto& c = p.children[0];
      std::string inner = to_text(c);
      if (c.kind == PathKind::Seq || c.kind == PathKind::Alt)
        inner = "(" + inner + ")";
      return inner + (p.kind == PathKind::Star ? "*" : "?");
    }
  }
  return {};
}

std::string to_text(const NodeFormula& f, std::size_t d) {
  switch (f.kind) {
    case NodeKind::Top:
      return "T";
    case NodeKind::Not: {
      const auto& c = f.children[0];
      std::string inner = to_text(c, d);
      if (c.kind == NodeKind::And) inner = "(" + inner + ")";
      return "~" + inner;
    }
    case NodeKind::And: {
      const auto& a = f.children[0];
      std::string l = to_text(a, d);
      if (a.kind == NodeKind::And || open_ended(a)) l = "(" + l + ")";
      return l + " & " + to_text(f.children[1], d);
    }
    case NodeKind::EqConst:
      return var(d) + " = " + f.constant.to_ntriples();
    case NodeKind::Filter:
      return std::string(filter_name(f.filter)) + "(" + var(d) + ")";
    case NodeKind::HasShape:
      return shape_atom(f.shape, var(d));
    case NodeKind::Exists:
      return "exists " + var(d + 1) + ". " + path_atom(f.path, d, d + 1) +
             " & " + to_text(f.children[0], d + 1);
    case NodeKind::AtLeast:
      return "exists>=" + std::to_string(f.count) + " " + var(d + 1) + ". " +
             path_atom(f.path, d, d + 1) + " & " +
             to_text(f.children[0], d + 1);
    case NodeKind::NotExistsBoth:
      return "~exists " + var(d + 1) + ". " + path_atom(f.path, d, d + 1) +
             " & " + role_atom(f.role, d, d + 1);
    case NodeKind::ForallIff:
      return "forall " + var(d + 1) + ". " + path_atom(f.path, d, d + 1) +
             " <-> " + role_atom(f.role, d, d + 1);
    case NodeKind::PairwiseOrder: {
      std::string op = f.order.op == OrderOp::Lt ? " < " : " <= ";
      std::string cmp = f.order.inverted ? var(d + 2) + op + var(d + 1)
                                         : var(d + 1) + op + var(d + 2);
      return "forall " + var(d + 1) + ", " + var(d + 2) + ". " +
             path_atom(f.path, d, d + 1) + " & " +
             role_atom(f.role, d, d + 2) + " -> " + cmp;
    }
  }
  return {};
}

std::string to_text(const SclSentence& s) {
  switch (s.kind) {
    case SentenceKind::Top:
      return "T";
    case SentenceKind::Conj:
      return "(" + to_text(s.children[0]) + ") & (" + to_text(s.children[1]) +
             ")";
    case SentenceKind::TargetNode:
      return shape_atom(s.shape, s.constant.to_ntriples());
    case SentenceKind::TargetClass:
      return "forall x0. isA(x0, " + s.constant.to_ntriples() + ") -> " +
             shape_atom(s.shape, "x0");
    case SentenceKind::TargetSubjectsOf:
    case SentenceKind::TargetObjectsOf:
      return "forall x0, x1. " +
             path_atom(PathFormula::make_role(
                           s.role, s.kind == SentenceKind::TargetObjectsOf),
                       0, 1) +
             " -> " + shape_atom(s.shape, "x0");
    case SentenceKind::ShapeDef:
      return "forall x0. " + shape_atom(s.shape, "x0") + " <-> " +
             to_text(s.body, 0);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, Iri, Term, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;      // identifier, IRI body, punctuation, number
  rdf::RdfTerm term;     // Iri and Term tokens
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
        ++i_;
      Token t;
      t.column = i_ + 1;
      if (i_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      char c = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        t.kind = Tok::Ident;
        while (i_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                s_[i_] == '_'))
          t.text += s_[i_++];
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Number;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
          t.text += s_[i_++];
      } else if (c == '<') {
        if (starts("<->")) {
          punct(t, "<->");
        } else if (starts("<=")) {
          punct(t, "<=");
        } else if (i_ + 1 >= s_.size() ||
                   std::isspace(static_cast<unsigned char>(s_[i_ + 1]))) {
          punct(t, "<");
        } else {
          t.kind = Tok::Iri;
          t.text = iri();
          t.term = rdf::RdfTerm::iri(t.text);
        }
      } else if (c == '_' && starts("_:")) {
        i_ += 2;
        t.kind = Tok::Term;
        std::string label;
        while (i_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                s_[i_] == '_' || s_[i_] == '-'))
          label += s_[i_++];
        if (label.empty()) fail("empty blank node label", t.column);
        t.term = rdf::RdfTerm::blank(label);
      } else if (c == '"') {
        t.kind = Tok::Term;
        t.term = literal(t.column);
      } else if (starts("->")) {
        punct(t, "->");
      } else if (starts(">=")) {
        punct(t, ">=");
      } else if (std::string_view("()[],.&~=/|*?^").find(c) !=
                 std::string_view::npos) {
        punct(t, std::string(1, c));
      } else {
        fail(std::string("unexpected character '") + c + "'", t.column);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  [[noreturn]] static void fail(const std::string& msg, std::size_t col) {
    throw SyntaxError(msg, 1, col);
  }

  bool starts(std::string_view p) const { return s_.substr(i_).starts_with(p); }

  void punct(Token& t, std::string p) {
    i_ += p.size();
    t.kind = Tok::Punct;
    t.text = std::move(p);
  }

  std::string iri() {
    std::size_t start = i_;
    ++i_;
    std::string out;
    while (i_ < s_.size() && s_[i_] != '>') out += s_[i_++];
    if (i_ >= s_.size()) fail("unterminated IRI", start + 1);
    ++i_;
    return out;
  }

  rdf::RdfTerm literal(std::size_t col) {
    ++i_;
    std::string lex;
    for (;;) {
      if (i_ >= s_.size()) fail("unterminated literal", col);
      char c = s_[i_++];
      if (c == '"') break;
      if (c != '\\') {
        lex += c;
        continue;
      }
      if (i_ >= s_.size()) fail("dangling escape", col);
      char e = s_[i_++];
      switch (e) {
        case 'n': lex += '\n'; break;
        case 'r': lex += '\r'; break;
        case 't': lex += '\t'; break;
        case '"': lex += '"'; break;
        case '\\': lex += '\\'; break;
        default: fail("invalid escape", col);
      }
    }
    if (starts("@")) {
      ++i_;
      std::string lang;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-'))
        lang += s_[i_++];
      return rdf::RdfTerm::lang_literal(lex, lang);
    }
    if (starts("^^<")) {
      i_ += 2;
      return rdf::RdfTerm::typed_literal(lex, iri());
    }
    return rdf::RdfTerm::literal(lex);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  SclSentence sentence_to_end() {
    SclSentence s = sentence();
    expect_end();
    return s;
  }

  NodeFormula formula_to_end(std::size_t d) {
    NodeFormula f = conj(d);
    expect_end();
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, 1, peek().column);
  }

  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool is_ident(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == p;
  }

  void expect(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    ++pos_;
  }
  void expect_ident(std::string_view p) {
    if (!is_ident(p)) fail("expected '" + std::string(p) + "'");
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected trailing input");
  }

  void expect_var(std::size_t d) {
    if (!is_ident(var(d))) fail("expected variable " + var(d));
    ++pos_;
  }

  std::string relation_name() {
    if (peek().kind != Tok::Ident) fail("expected shape relation");
    std::string r = peek().text;
    if (!is_valid_shape_relation(r)) fail("invalid shape relation '" + r + "'");
    ++pos_;
    return r;
  }

  rdf::RdfTerm constant() {
    if (peek().kind != Tok::Iri && peek().kind != Tok::Term)
      fail("expected constant");
    return toks_[pos_++].term;
  }

  rdf::RdfTerm shape_term() {
    rdf::RdfTerm t = constant();
    if (t.is_literal()) fail("shape names cannot be literals");
    return t;
  }

  std::string iri() {
    if (peek().kind != Tok::Iri) fail("expected IRI");
    return toks_[pos_++].text;
  }

  // rel(<subject>, <shape>) where subject is a variable or constant.
  ShapeName shape_atom_tail(std::string relation) {
    expect(",");
    ShapeName s{shape_term(), std::move(relation)};
    expect(")");
    return s;
  }

  SclSentence sentence() {
    if (is_ident("T")) {
      ++pos_;
      return SclSentence::top();
    }
    if (is_punct("(")) {
      ++pos_;
      SclSentence a = sentence();
      expect(")");
      expect("&");
      expect("(");
      SclSentence b = sentence();
      expect(")");
      return SclSentence::conj(std::move(a), std::move(b));
    }
    if (is_ident("forall")) {
      ++pos_;
      expect_var(0);
      if (is_punct(",")) {
        ++pos_;
        expect_var(1);
        expect(".");
        PathFormula p = path_atom(0, 1);
        if (p.kind != PathKind::Role) fail("target axioms take a single role");
        expect("->");
        std::string rel = relation_name();
        expect("(");
        expect_var(0);
        ShapeName s = shape_atom_tail(rel);
        return p.inverted ? SclSentence::target_objects_of(p.role, s)
                          : SclSentence::target_subjects_of(p.role, s);
      }
      expect(".");
      if (is_ident("isA")) {
        ++pos_;
        expect("(");
        expect_var(0);
        expect(",");
        rdf::RdfTerm c = constant();
        expect(")");
        expect("->");
        std::string rel = relation_name();
        expect("(");
        expect_var(0);
        return SclSentence::target_class(c, shape_atom_tail(rel));
      }
      std::string rel = relation_name();
      expect("(");
      expect_var(0);
      ShapeName s = shape_atom_tail(rel);
      expect("<->");
      return SclSentence::shape_def(std::move(s), conj(0));
    }
    std::string rel = relation_name();
    expect("(");
    rdf::RdfTerm c = constant();
    return SclSentence::target_node(c, shape_atom_tail(rel));
  }

  NodeFormula conj(std::size_t d) {
    NodeFormula a = unary(d);
    if (is_punct("&")) {
      ++pos_;
      return NodeFormula::conj(std::move(a), conj(d));
    }
    return a;
  }

  NodeFormula unary(std::size_t d) {
    if (is_punct("~")) {
      ++pos_;
      if (is_ident("exists") && !is_punct(">=", 1)) {
        std::size_t save = pos_;
        if (auto f = try_not_exists_both(d)) return *f;
        pos_ = save;
      }
      return NodeFormula::negate(unary(d));
    }
    if (is_punct("(")) {
      ++pos_;
      NodeFormula f = conj(d);
      expect(")");
      return f;
    }
    if (is_ident("T")) {
      ++pos_;
      return NodeFormula::top();
    }
    if (is_ident("exists")) {
      ++pos_;
      std::size_t n = 0;
      bool counted = false;
      if (is_punct(">=")) {
        ++pos_;
        if (peek().kind != Tok::Number) fail("expected count");
        n = std::stoul(toks_[pos_++].text);
        counted = true;
      }
      expect_var(d + 1);
      expect(".");
      PathFormula p = path_atom(d, d + 1);
      expect("&");
      NodeFormula body = conj(d + 1);
      return counted ? NodeFormula::at_least(n, std::move(p), std::move(body))
                     : NodeFormula::exists(std::move(p), std::move(body));
    }
    if (is_ident("forall")) {
      ++pos_;
      expect_var(d + 1);
      if (is_punct(",")) {
        ++pos_;
        expect_var(d + 2);
        expect(".");
        PathFormula p = path_atom(d, d + 1);
        expect("&");
        std::string r = role_atom(d, d + 2);
        expect("->");
        OrderAtom order;
        if (is_ident(var(d + 1))) {
          ++pos_;
        } else {
          expect_var(d + 2);
          order.inverted = true;
        }
        if (is_punct("<")) {
          order.op = OrderOp::Lt;
        } else if (is_punct("<=")) {
          order.op = OrderOp::Leq;
        } else {
          fail("expected '<' or '<='");
        }
        ++pos_;
        expect_var(order.inverted ? d + 1 : d + 2);
        return NodeFormula::pairwise_order(std::move(p), std::move(r), order);
      }
      expect(".");
      PathFormula p = path_atom(d, d + 1);
      expect("<->");
      std::string r = role_atom(d, d + 1);
      return NodeFormula::forall_iff(std::move(p), std::move(r));
    }
    if (is_ident(var(d)) && is_punct("=", 1)) {
      pos_ += 2;
      return NodeFormula::eq_const(constant());
    }
    for (Filter f : {Filter::IsIri, Filter::IsLiteral, Filter::IsBlank}) {
      if (is_ident(filter_name(f))) {
        ++pos_;
        expect("(");
        expect_var(d);
        expect(")");
        return NodeFormula::make_filter(f);
      }
    }
    std::string rel = relation_name();
    expect("(");
    expect_var(d);
    return NodeFormula::has_shape(shape_atom_tail(rel));
  }

  std::optional<NodeFormula> try_not_exists_both(std::size_t d) {
    try {
      expect_ident("exists");
      expect_var(d + 1);
      expect(".");
      PathFormula p = path_atom(d, d + 1);
      expect("&");
      if (peek().kind != Tok::Iri) return std::nullopt;
      std::string r = role_atom(d, d + 1);
      return NodeFormula::not_exists_both(std::move(p), std::move(r));
    } catch (const SyntaxError&) {
      return std::nullopt;
    }
  }

  std::string role_atom(std::size_t a, std::size_t b) {
    std::string r = iri();
    expect("(");
    expect_var(a);
    expect(",");
    expect_var(b);
    expect(")");
    return r;
  }

  PathFormula path_atom(std::size_t a, std::size_t b) {
    expect("[");
    PathFormula p = path_alt();
    expect("]");
    expect("(");
    expect_var(a);
    expect(",");
    expect_var(b);
    expect(")");
    return p;
  }

  PathFormula path_alt() {
    PathFormula a = path_seq();
    if (is_punct("|")) {
      ++pos_;
      return PathFormula::alt(std::move(a), path_alt());
    }
    return a;
  }

  PathFormula path_seq() {
    PathFormula a = path_postfix();
    if (is_punct("/")) {
      ++pos_;
      return PathFormula::seq(std::move(a), path_seq());
    }
    return a;
  }

  PathFormula path_postfix() {
    PathFormula p = path_primary();
    for (;;) {
      if (is_punct("*")) {
        ++pos_;
        p = PathFormula::star(std::move(p));
      } else if (is_punct("?")) {
        ++pos_;
        p = PathFormula::zero_or_one(std::move(p));
      } else {
        return p;
      }
    }
  }

  PathFormula path_primary() {
    if (is_punct("^")) {
      ++pos_;
      return PathFormula::make_role(iri(), true);
    }
    if (is_punct("(")) {
      ++pos_;
      PathFormula p = path_alt();
      expect(")");
      return p;
    }
    return PathFormula::make_role(iri(), false);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

SclSentence parse_sentence(std::string_view text) {
  return Parser(text).sentence_to_end();
}

NodeFormula parse_node_formula(std::string_view text, std::size_t depth) {
  return Parser(text).formula_to_end(depth);
}

}  // namespace shacl2fol::scl
