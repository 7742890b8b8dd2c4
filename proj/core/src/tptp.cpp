#include "shacl2fol/tptp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "shacl2fol/error.hpp"
#include "shacl2fol/translate.hpp"

namespace shacl2fol::tptp {

using scl::NodeFormula;
using scl::NodeKind;
using scl::PathFormula;
using scl::PathKind;
using scl::SclSentence;
using scl::SentenceKind;

namespace {

constexpr char kHex[] = "0123456789ABCDEF";

std::string quote(std::string_view raw) {
  std::string out = "'";
  for (unsigned char c : raw) {
    if (c == '\\' || c == '\'') {
      out += '\\';
      out += static_cast<char>(c);
    } else if (c == '%' || c < 0x20 || c >= 0x7f) {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xf];
    } else {
      out += static_cast<char>(c);
    }
  }
  out += '\'';
  return out;
}

std::optional<std::string> unquote(std::string_view q) {
  if (q.size() < 2 || q.front() != '\'' || q.back() != '\'') return std::nullopt;
  q = q.substr(1, q.size() - 2);
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  std::string out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    char c = q[i];
    if (c == '\\') {
      if (i + 1 >= q.size()) return std::nullopt;
      out += q[++i];
    } else if (c == '%') {
      if (i + 2 >= q.size()) return std::nullopt;
      int hi = hex(q[i + 1]);
      int lo = hex(q[i + 2]);
      if (hi < 0 || lo < 0) return std::nullopt;
      out += static_cast<char>(hi * 16 + lo);
      i += 2;
    } else if (c == '\'') {
      return std::nullopt;
    } else {
      out += c;
    }
  }
  return out;
}

bool is_lower_word(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

Fol role_atom(std::string_view iri, bool inverted, Term x, Term y) {
  if (inverted) std::swap(x, y);
  return Fol::atom(role_symbol(iri), {std::move(x), std::move(y)});
}

const char* filter_symbol(scl::Filter f) {
  switch (f) {
    case scl::Filter::IsIri: return "isIRI";
    case scl::Filter::IsLiteral: return "isLiteral";
    case scl::Filter::IsBlank: return "isBlank";
  }
  return "isIRI";
}

using PairSet = std::set<std::pair<rdf::RdfTerm, rdf::RdfTerm>>;

PairSet compose(const PairSet& a, const PairSet& b) {
  std::multimap<rdf::RdfTerm, rdf::RdfTerm> by_first;
  for (const auto& [s, o] : b) by_first.emplace(s, o);
  PairSet out;
  for (const auto& [s, m] : a) {
    auto [lo, hi] = by_first.equal_range(m);
    for (auto it = lo; it != hi; ++it) out.emplace(s, it->second);
  }
  return out;
}

// Relational semantics of a path over a finite graph. Identity is restricted
// to `nodes`; pairs (d, d) for other elements are covered by X = Y.
PairSet path_pairs(const PathFormula& p, const rdf::Graph& g,
                   const std::set<rdf::RdfTerm>& nodes) {
  switch (p.kind) {
    case PathKind::Role: {
      PairSet out;
      for (const auto& t : g)
        if (t.predicate.lexical() == p.role) {
          if (p.inverted)
            out.emplace(t.object, t.subject);
          else
            out.emplace(t.subject, t.object);
        }
      return out;
    }
    case PathKind::Seq:
      return compose(path_pairs(p.children[0], g, nodes),
                     path_pairs(p.children[1], g, nodes));
    case PathKind::Alt: {
      PairSet out = path_pairs(p.children[0], g, nodes);
      PairSet rhs = path_pairs(p.children[1], g, nodes);
      out.insert(rhs.begin(), rhs.end());
      return out;
    }
    case PathKind::ZeroOrOne: {
      PairSet out = path_pairs(p.children[0], g, nodes);
      for (const auto& n : nodes) out.emplace(n, n);
      return out;
    }
    case PathKind::Star: {
      PairSet step = path_pairs(p.children[0], g, nodes);
      PairSet out;
      for (const auto& n : nodes) out.emplace(n, n);
      out.insert(step.begin(), step.end());
      for (;;) {
        PairSet next = compose(out, step);
        std::size_t before = out.size();
        out.insert(next.begin(), next.end());
        if (out.size() == before) break;
      }
      return out;
    }
  }
  return {};
}

class Emitter {
 public:
  Emitter(const EmitOptions& opts, const rdf::Graph* data)
      : opts_(opts), data_(data) {}

  Fol node(const NodeFormula& f, const Term& x) {
    switch (f.kind) {
      case NodeKind::Top:
        return Fol::truth();
      case NodeKind::Not:
        return Fol::negate(node(f.children[0], x));
      case NodeKind::And:
        return Fol::conj({node(f.children[0], x), node(f.children[1], x)});
      case NodeKind::EqConst:
        return Fol::eq(x, Term::constant(f.constant));
      case NodeKind::Filter:
        return Fol::atom(filter_symbol(f.filter), {x});
      case NodeKind::HasShape:
        return Fol::atom(shape_relation_symbol(f.shape.relation),
                         {x, Term::constant(f.shape.name)});
      case NodeKind::Exists: {
        Term y = fresh();
        return Fol::exists({y.name}, Fol::conj({path(f.path, x, y),
                                                node(f.children[0], y)}));
      }
      case NodeKind::AtLeast:
        return at_least(f, x);
      case NodeKind::NotExistsBoth: {
        Term y = fresh();
        return Fol::negate(Fol::exists(
            {y.name},
            Fol::conj({path(f.path, x, y), role_atom(f.role, false, x, y)})));
      }
      case NodeKind::ForallIff: {
        Term y = fresh();
        return Fol::forall({y.name}, Fol::iff(path(f.path, x, y),
                                              role_atom(f.role, false, x, y)));
      }
      case NodeKind::PairwiseOrder: {
        uses_order_ = true;
        Term y1 = fresh();
        Term y2 = fresh();
        const char* rel = f.order.op == scl::OrderOp::Lt ? "lt" : "leq";
        Fol cmp = f.order.inverted ? Fol::atom(rel, {y2, y1})
                                   : Fol::atom(rel, {y1, y2});
        return Fol::forall(
            {y1.name, y2.name},
            Fol::implies(Fol::conj({path(f.path, x, y1),
                                    role_atom(f.role, false, x, y2)}),
                         std::move(cmp)));
      }
    }
    return Fol::truth();
  }

  Fol path(const PathFormula& p, const Term& x, const Term& y) {
    switch (p.kind) {
      case PathKind::Role:
        return role_atom(p.role, p.inverted, x, y);
      case PathKind::Seq: {
        Term z = fresh();
        return Fol::exists({z.name}, Fol::conj({path(p.children[0], x, z),
                                                path(p.children[1], z, y)}));
      }
      case PathKind::Alt:
        return Fol::disj({path(p.children[0], x, y),
                          path(p.children[1], x, y)});
      case PathKind::ZeroOrOne:
        return Fol::disj({Fol::eq(x, y), path(p.children[0], x, y)});
      case PathKind::Star:
        return Fol::atom(star_symbol(p), {x, y});
    }
    return Fol::truth();
  }

  Fol sentence(const SclSentence& s) {
    Term x = Term::variable("X");
    auto has = [&](const Term& t) {
      return Fol::atom(shape_relation_symbol(s.shape.relation),
                       {t, Term::constant(s.shape.name)});
    };
    switch (s.kind) {
      case SentenceKind::Top:
        return Fol::truth();
      case SentenceKind::Conj: {
        std::vector<Fol> parts;
        for (const auto& c : s.children) parts.push_back(sentence(c));
        return Fol::conj(std::move(parts));
      }
      case SentenceKind::TargetNode:
        return has(Term::constant(s.constant));
      case SentenceKind::TargetClass:
        return Fol::forall(
            {"X"}, Fol::implies(role_atom(rdf::vocab::kRdfType, false, x,
                                          Term::constant(s.constant)),
                                has(x)));
      case SentenceKind::TargetSubjectsOf:
      case SentenceKind::TargetObjectsOf: {
        Term y = Term::variable("Y");
        bool inv = s.kind == SentenceKind::TargetObjectsOf;
        return Fol::forall({"X", "Y"},
                           Fol::implies(role_atom(s.role, inv, x, y), has(x)));
      }
      case SentenceKind::ShapeDef:
        counter_ = 0;
        return Fol::forall({"X"}, Fol::iff(has(x), node(s.body, x)));
    }
    return Fol::truth();
  }

  // Star, order and node-kind axioms.
  std::vector<TptpFormula> auxiliary(const std::set<rdf::RdfTerm>& constants,
                                     bool& approximate) {
    std::vector<TptpFormula> out;
    for (std::size_t k = 1; k <= stars_.size(); ++k) {
      // stars_ may grow while emitting nested stars.
      const PathFormula body = star_body_[k - 1];
      std::string sym = "star_" + std::to_string(k);
      Term x = Term::variable("X");
      Term y = Term::variable("Y");
      Term z = Term::variable("Z");
      counter_ = 0;
      out.push_back({sym + "_reflexive", Role::Axiom,
                     Fol::forall({"X"}, Fol::atom(sym, {x, x}))});
      if (opts_.star == StarMode::ApproximateAxioms) {
        approximate = true;
        Fol step = path(body, x, y);
        out.push_back(
            {sym + "_step", Role::Axiom,
             Fol::forall({"X", "Y", "Z"},
                         Fol::implies(Fol::conj({std::move(step),
                                                 Fol::atom(sym, {y, z})}),
                                      Fol::atom(sym, {x, z})))});
      } else {
        std::set<rdf::RdfTerm> nodes = data_->constants();
        PairSet closure =
            path_pairs(PathFormula::star(body), *data_, nodes);
        std::vector<Fol> cases{Fol::eq(x, y)};
        std::size_t i = 0;
        for (const auto& [a, b] : closure) {
          if (a == b) continue;
          Term ta = Term::constant(a);
          Term tb = Term::constant(b);
          out.push_back({sym + "_fact_" + std::to_string(++i), Role::Axiom,
                         Fol::atom(sym, {ta, tb})});
          cases.push_back(Fol::conj({Fol::eq(x, ta), Fol::eq(y, tb)}));
        }
        out.push_back(
            {sym + "_closure", Role::Axiom,
             Fol::forall({"X", "Y"},
                         Fol::implies(Fol::atom(sym, {x, y}),
                                      Fol::disj(std::move(cases))))});
      }
    }

    if (uses_order_) {
      approximate = true;
      Term x = Term::variable("X");
      Term y = Term::variable("Y");
      Term z = Term::variable("Z");
      out.push_back({"order_irreflexive", Role::Axiom,
                     Fol::forall({"X"}, Fol::negate(Fol::atom("lt", {x, x})))});
      out.push_back(
          {"order_transitive", Role::Axiom,
           Fol::forall({"X", "Y", "Z"},
                       Fol::implies(Fol::conj({Fol::atom("lt", {x, y}),
                                               Fol::atom("lt", {y, z})}),
                                    Fol::atom("lt", {x, z})))});
      out.push_back(
          {"order_leq", Role::Axiom,
           Fol::forall({"X", "Y"},
                       Fol::iff(Fol::atom("leq", {x, y}),
                                Fol::disj({Fol::atom("lt", {x, y}),
                                           Fol::eq(x, y)})))});
    }

    const scl::Filter filters[] = {scl::Filter::IsIri, scl::Filter::IsLiteral,
                                   scl::Filter::IsBlank};
    std::size_t d = 0;
    Term x = Term::variable("X");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        out.push_back(
            {"kind_disjoint_" + std::to_string(++d), Role::Axiom,
             Fol::forall({"X"},
                         Fol::negate(Fol::conj(
                             {Fol::atom(filter_symbol(filters[i]), {x}),
                              Fol::atom(filter_symbol(filters[j]), {x})})))});
    std::size_t n = 0;
    for (const auto& c : constants) {
      if (is_dummy_constant(c)) continue;
      scl::Filter f = c.is_iri()       ? scl::Filter::IsIri
                      : c.is_literal() ? scl::Filter::IsLiteral
                                       : scl::Filter::IsBlank;
      out.push_back({"kind_" + std::to_string(++n), Role::Axiom,
                     Fol::atom(filter_symbol(f), {Term::constant(c)})});
    }
    return out;
  }

 private:
  Term fresh() { return Term::variable("Y" + std::to_string(++counter_)); }

  std::string star_symbol(const PathFormula& star) {
    const PathFormula& body = star.children[0];
    auto it = stars_.find(body);
    if (it == stars_.end()) {
      it = stars_.emplace(body, stars_.size() + 1).first;
      star_body_.push_back(body);
    }
    return "star_" + std::to_string(it->second);
  }

  Fol at_least(const NodeFormula& f, const Term& x) {
    if (f.count == 0) return Fol::truth();
    if (f.count > opts_.cardinality_limit)
      throw CardinalityLimitExceeded(f.count, opts_.cardinality_limit);
    std::vector<Term> ys;
    for (std::size_t i = 0; i < f.count; ++i) ys.push_back(fresh());
    std::vector<Fol> parts;
    for (const auto& y : ys) {
      parts.push_back(path(f.path, x, y));
      parts.push_back(node(f.children[0], y));
    }
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t j = i + 1; j < ys.size(); ++j)
        parts.push_back(Fol::neq(ys[i], ys[j]));
    std::vector<std::string> names;
    for (const auto& y : ys) names.push_back(y.name);
    return Fol::exists(std::move(names), Fol::conj(std::move(parts)));
  }

  EmitOptions opts_;
  const rdf::Graph* data_;
  std::size_t counter_ = 0;
  bool uses_order_ = false;
  std::map<PathFormula, std::size_t> stars_;
  std::vector<PathFormula> star_body_;
};

}  // namespace

void check_options(const EmitOptions& opts) {
  if (opts.una == UnaMode::Distinct && opts.dialect == Dialect::Fof)
    throw InvalidOptions("the $distinct unique name encoding requires TFF");
  if (opts.cardinality_limit == 0)
    throw InvalidOptions("cardinality limit must be positive");
}

Term Term::variable(std::string name) { return {true, std::move(name)}; }
Term Term::constant(const rdf::RdfTerm& c) {
  return {false, constant_symbol(c)};
}
Term Term::atom(std::string rendered) { return {false, std::move(rendered)}; }

Fol Fol::truth() { return {}; }

Fol Fol::falsity() {
  Fol f;
  f.kind = FolKind::False;
  return f;
}

Fol Fol::atom(std::string symbol, std::vector<Term> args) {
  Fol f;
  f.kind = FolKind::Atom;
  f.symbol = std::move(symbol);
  f.args = std::move(args);
  return f;
}

Fol Fol::eq(Term a, Term b) {
  Fol f;
  f.kind = FolKind::Eq;
  f.args = {std::move(a), std::move(b)};
  return f;
}

Fol Fol::neq(Term a, Term b) { return negate(eq(std::move(a), std::move(b))); }

Fol Fol::distinct(std::vector<Term> args) {
  Fol f;
  f.kind = FolKind::Distinct;
  f.args = std::move(args);
  return f;
}

Fol Fol::negate(Fol inner) {
  Fol f;
  f.kind = FolKind::Not;
  f.children.push_back(std::move(inner));
  return f;
}

Fol Fol::conj(std::vector<Fol> fs) {
  std::erase_if(fs, [](const Fol& f) { return f.kind == FolKind::True; });
  if (fs.empty()) return truth();
  if (fs.size() == 1) return std::move(fs[0]);
  Fol f;
  f.kind = FolKind::And;
  f.children = std::move(fs);
  return f;
}

Fol Fol::disj(std::vector<Fol> fs) {
  if (fs.empty()) return falsity();
  if (fs.size() == 1) return std::move(fs[0]);
  Fol f;
  f.kind = FolKind::Or;
  f.children = std::move(fs);
  return f;
}

Fol Fol::implies(Fol a, Fol b) {
  Fol f;
  f.kind = FolKind::Implies;
  f.children = {std::move(a), std::move(b)};
  return f;
}

Fol Fol::iff(Fol a, Fol b) {
  Fol f;
  f.kind = FolKind::Iff;
  f.children = {std::move(a), std::move(b)};
  return f;
}

Fol Fol::forall(std::vector<std::string> vars, Fol body) {
  Fol f;
  f.kind = FolKind::Forall;
  f.vars = std::move(vars);
  f.children.push_back(std::move(body));
  return f;
}

Fol Fol::exists(std::vector<std::string> vars, Fol body) {
  Fol f = forall(std::move(vars), std::move(body));
  f.kind = FolKind::Exists;
  return f;
}

void TptpDocument::append(std::vector<TptpFormula> fs) {
  for (auto& f : fs) formulas.push_back(std::move(f));
}

std::string constant_symbol(const rdf::RdfTerm& c) {
  return quote(c.is_iri() ? c.lexical() : c.to_ntriples());
}

std::string role_symbol(std::string_view iri) {
  if (iri == rdf::vocab::kRdfType) return "isA";
  return quote("<" + std::string(iri) + ">");
}

std::string shape_relation_symbol(std::string_view relation) {
  if (is_lower_word(relation)) return std::string(relation);
  return quote(relation);
}

std::optional<rdf::RdfTerm> parse_constant_symbol(std::string_view symbol) {
  auto raw = unquote(symbol);
  if (!raw || raw->empty()) return std::nullopt;
  if (raw->starts_with("_:")) return rdf::RdfTerm::blank(raw->substr(2));
  if (raw->front() != '"') return rdf::RdfTerm::iri(*raw);
  try {
    rdf::Graph g = rdf::parse_document("<urn:s> <urn:p> " + *raw + " .",
                                       rdf::Syntax::NTriples, "");
    if (g.size() != 1) return std::nullopt;
    return g.begin()->object;
  } catch (const Error&) {
    return std::nullopt;
  }
}

Fol encode_node_formula(const NodeFormula& f, const EmitOptions& opts) {
  check_options(opts);
  Emitter e(opts, nullptr);
  return e.node(f, Term::variable("X"));
}

TptpDocument emit_theory(std::span<const SclSentence> sentences,
                         const EmitOptions& opts, const rdf::Graph* data) {
  TheoryInput in;
  in.sentences = sentences;
  in.data = data;
  return emit_theory(in, opts);
}

TptpDocument emit_theory(const TheoryInput& input, const EmitOptions& opts) {
  check_options(opts);
  if (opts.star == StarMode::GroundedClosure && input.data == nullptr)
    throw InvalidOptions("grounded star closure needs a data graph");

  TptpDocument doc;
  doc.dialect = opts.dialect;
  Emitter e(opts, input.data);
  std::set<rdf::RdfTerm> constants;

  std::size_t shapes = 0;
  std::size_t targets = 0;
  for (const auto& s : scl::flatten(input.sentences)) {
    scl::collect_constants(s, constants);
    std::string name = s.kind == SentenceKind::ShapeDef
                           ? "shape_" + std::to_string(++shapes)
                           : "target_" + std::to_string(++targets);
    doc.formulas.push_back({std::move(name), Role::Axiom, e.sentence(s)});
  }
  if (input.negated_targets) {
    std::vector<Fol> parts;
    for (const auto& s : scl::flatten(*input.negated_targets)) {
      if (!s.is_target())
        throw InvalidOptions("negated target set holds a non-target");
      scl::collect_constants(s, constants);
      parts.push_back(e.sentence(s));
    }
    // An empty conjunction is $true, so its negation is $false.
    doc.formulas.push_back({"negated_targets", Role::Axiom,
                            Fol::negate(Fol::conj(std::move(parts)))});
  }
  if (input.data) {
    auto more = input.data->constants();
    constants.insert(more.begin(), more.end());
  }
  doc.append(e.auxiliary(constants, doc.approximate));
  return doc;
}

std::vector<TptpFormula> emit_una(const std::set<rdf::RdfTerm>& constants,
                                  const EmitOptions& opts) {
  check_options(opts);
  std::vector<Term> terms;
  for (const auto& c : constants)
    if (!is_dummy_constant(c)) terms.push_back(Term::constant(c));
  std::vector<TptpFormula> out;
  if (terms.size() < 2) return out;
  if (opts.una == UnaMode::Distinct) {
    out.push_back({"una_distinct", Role::Axiom, Fol::distinct(std::move(terms))});
    return out;
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      out.push_back({"una_" + std::to_string(++n), Role::Axiom,
                     Fol::neq(terms[i], terms[j])});
  return out;
}

std::vector<TptpFormula> emit_graph_axioms(
    const rdf::Graph& g, const std::set<std::string>& signature) {
  std::vector<TptpFormula> out;
  std::size_t n = 0;
  for (const auto& t : g)
    out.push_back({"ax_g_" + std::to_string(++n), Role::Axiom,
                   role_atom(t.predicate.lexical(), false,
                             Term::constant(t.subject),
                             Term::constant(t.object))});

  std::set<std::string> roles = signature;
  auto preds = g.predicate_names();
  roles.insert(preds.begin(), preds.end());
  Term x = Term::variable("X");
  Term y = Term::variable("Y");
  std::size_t m = 0;
  for (const auto& r : roles) {
    std::vector<Fol> cases;
    for (const auto& t : g)
      if (t.predicate.lexical() == r)
        cases.push_back(Fol::conj({Fol::eq(x, Term::constant(t.subject)),
                                   Fol::eq(y, Term::constant(t.object))}));
    Fol atom = role_atom(r, false, x, y);
    Fol body = cases.empty()
                   ? Fol::negate(Fol::exists({"X", "Y"}, std::move(atom)))
                   : Fol::forall({"X", "Y"},
                                 Fol::implies(std::move(atom),
                                              Fol::disj(std::move(cases))));
    out.push_back({"ax_gneg_" + std::to_string(++m), Role::Axiom,
                   std::move(body)});
  }
  return out;
}

namespace {

std::string join_terms(const std::vector<Term>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ',';
    out += ts[i].name;
  }
  return out;
}

bool is_infix_atom(const Fol& f) {
  return f.kind == FolKind::Eq ||
         (f.kind == FolKind::Not && f.children[0].kind == FolKind::Eq);
}

void render_to(const Fol& f, std::string& out);

void render_unit(const Fol& f, std::string& out) {
  if (is_infix_atom(f)) {
    out += '(';
    render_to(f, out);
    out += ')';
  } else {
    render_to(f, out);
  }
}

void render_to(const Fol& f, std::string& out) {
  switch (f.kind) {
    case FolKind::True:
      out += "$true";
      return;
    case FolKind::False:
      out += "$false";
      return;
    case FolKind::Atom:
      out += f.symbol;
      if (!f.args.empty()) out += "(" + join_terms(f.args) + ")";
      return;
    case FolKind::Eq:
      out += f.args[0].name + " = " + f.args[1].name;
      return;
    case FolKind::Distinct:
      out += "$distinct(" + join_terms(f.args) + ")";
      return;
    case FolKind::Not:
      if (f.children[0].kind == FolKind::Eq) {
        out += f.children[0].args[0].name + " != " +
               f.children[0].args[1].name;
        return;
      }
      out += '~';
      render_unit(f.children[0], out);
      return;
    case FolKind::And:
    case FolKind::Or: {
      const char* op = f.kind == FolKind::And ? " & " : " | ";
      out += '(';
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += op;
        render_to(f.children[i], out);
      }
      out += ')';
      return;
    }
    case FolKind::Implies:
    case FolKind::Iff:
      out += '(';
      render_unit(f.children[0], out);
      out += f.kind == FolKind::Implies ? " => " : " <=> ";
      render_unit(f.children[1], out);
      out += ')';
      return;
    case FolKind::Forall:
    case FolKind::Exists: {
      out += f.kind == FolKind::Forall ? "![" : "?[";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ',';
        out += f.vars[i];
      }
      out += "]: ";
      render_unit(f.children[0], out);
      return;
    }
  }
}

}  // namespace

std::string render(const Fol& f) {
  std::string out;
  render_to(f, out);
  return out;
}

std::string render(const TptpDocument& doc) {
  std::string out;
  for (const auto& h : doc.header) out += "% " + h + "\n";
  const char* lang = doc.dialect == Dialect::Tff ? "tff" : "fof";
  for (const auto& f : doc.formulas) {
    out += lang;
    out += '(' + f.name + ", ";
    out += f.role == Role::Axiom ? "axiom" : "conjecture";
    out += ", " + render(f.body) + ").\n";
  }
  return out;
}

}  // namespace shacl2fol::tptp
