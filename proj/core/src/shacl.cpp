#include "shacl2fol/shacl.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "shacl2fol/error.hpp"

namespace shacl2fol::shacl {

using rdf::RdfTerm;

PropertyPath PropertyPath::predicate(std::string iri) {
  PropertyPath p;
  p.kind = PathKind::Predicate;
  p.iri = std::move(iri);
  return p;
}

namespace {
PropertyPath wrap(PathKind kind, std::vector<PropertyPath> children) {
  PropertyPath p;
  p.kind = kind;
  p.children = std::move(children);
  return p;
}
}  // namespace

PropertyPath PropertyPath::inverse(PropertyPath p) {
  return wrap(PathKind::Inverse, {std::move(p)});
}
PropertyPath PropertyPath::sequence(PropertyPath a, PropertyPath b) {
  return wrap(PathKind::Sequence, {std::move(a), std::move(b)});
}
PropertyPath PropertyPath::alternative(PropertyPath a, PropertyPath b) {
  return wrap(PathKind::Alternative, {std::move(a), std::move(b)});
}
PropertyPath PropertyPath::zero_or_one(PropertyPath p) {
  return wrap(PathKind::ZeroOrOne, {std::move(p)});
}
PropertyPath PropertyPath::zero_or_more(PropertyPath p) {
  return wrap(PathKind::ZeroOrMore, {std::move(p)});
}
PropertyPath PropertyPath::one_or_more(PropertyPath p) {
  return wrap(PathKind::OneOrMore, {std::move(p)});
}

namespace {

PropertyPath normalize_impl(const PropertyPath& p, bool inverted) {
  switch (p.kind) {
    case PathKind::Predicate:
      return inverted ? PropertyPath::inverse(p) : p;
    case PathKind::Inverse:
      // Inverse(Predicate) is already normal and must stay a fixpoint.
      if (p.children[0].kind == PathKind::Predicate)
        return inverted ? p.children[0] : p;
      return normalize_impl(p.children[0], !inverted);
    case PathKind::Sequence: {
      auto a = normalize_impl(p.children[0], inverted);
      auto b = normalize_impl(p.children[1], inverted);
      return inverted ? PropertyPath::sequence(std::move(b), std::move(a))
                      : PropertyPath::sequence(std::move(a), std::move(b));
    }
    case PathKind::Alternative:
      return PropertyPath::alternative(normalize_impl(p.children[0], inverted),
                                       normalize_impl(p.children[1], inverted));
    case PathKind::ZeroOrOne:
      return PropertyPath::zero_or_one(normalize_impl(p.children[0], inverted));
    case PathKind::ZeroOrMore:
      return PropertyPath::zero_or_more(
          normalize_impl(p.children[0], inverted));
    case PathKind::OneOrMore: {
      auto inner = normalize_impl(p.children[0], inverted);
      return PropertyPath::sequence(inner, PropertyPath::zero_or_more(inner));
    }
  }
  return p;
}

}  // namespace

PropertyPath normalize(const PropertyPath& p) { return normalize_impl(p, false); }

void collect_predicates(const PropertyPath& p, std::set<std::string>& out) {
  if (p.kind == PathKind::Predicate) out.insert(p.iri);
  for (const auto& c : p.children) collect_predicates(c, out);
}

std::string to_string(const PropertyPath& p) {
  switch (p.kind) {
    case PathKind::Predicate: return "<" + p.iri + ">";
    case PathKind::Inverse: return "^" + to_string(p.children[0]);
    case PathKind::Sequence:
      return "(" + to_string(p.children[0]) + "/" + to_string(p.children[1]) +
             ")";
    case PathKind::Alternative:
      return "(" + to_string(p.children[0]) + "|" + to_string(p.children[1]) +
             ")";
    case PathKind::ZeroOrOne: return to_string(p.children[0]) + "?";
    case PathKind::ZeroOrMore: return to_string(p.children[0]) + "*";
    case PathKind::OneOrMore: return to_string(p.children[0]) + "+";
  }
  return {};
}

Constraint Constraint::truth() { return Constraint{}; }

Constraint Constraint::negate(Constraint c) {
  Constraint out;
  out.kind = ConstraintKind::Not;
  out.children.push_back(std::move(c));
  return out;
}

Constraint Constraint::conj(Constraint a, Constraint b) {
  Constraint out;
  out.kind = ConstraintKind::And;
  out.children.push_back(std::move(a));
  out.children.push_back(std::move(b));
  return out;
}

Constraint Constraint::conj(std::vector<Constraint> cs) {
  if (cs.empty()) return truth();
  Constraint acc = std::move(cs.back());
  for (std::size_t i = cs.size() - 1; i-- > 0;)
    acc = conj(std::move(cs[i]), std::move(acc));
  return acc;
}

Constraint Constraint::disj(std::vector<Constraint> cs) {
  for (auto& c : cs) c = negate(std::move(c));
  if (cs.empty()) return negate(truth());
  return negate(conj(std::move(cs)));
}

Constraint Constraint::eq_const(RdfTerm t) {
  Constraint out;
  out.kind = ConstraintKind::EqConst;
  out.term = std::move(t);
  return out;
}

Constraint Constraint::node_kind_is(shacl::NodeKind k) {
  Constraint out;
  out.kind = ConstraintKind::NodeKind;
  out.node_kind = k;
  return out;
}

Constraint Constraint::has_shape(RdfTerm shape) {
  Constraint out;
  out.kind = ConstraintKind::HasShape;
  out.term = std::move(shape);
  return out;
}

Constraint Constraint::some_through(PropertyPath p, Constraint c) {
  Constraint out;
  out.kind = ConstraintKind::SomeThrough;
  out.path = std::move(p);
  out.children.push_back(std::move(c));
  return out;
}

Constraint Constraint::all_through(PropertyPath p, Constraint c) {
  return negate(some_through(std::move(p), negate(std::move(c))));
}

Constraint Constraint::min_count(std::size_t n, PropertyPath p, Constraint c) {
  Constraint out;
  out.kind = ConstraintKind::MinCount;
  out.count = n;
  out.path = std::move(p);
  out.children.push_back(std::move(c));
  return out;
}

Constraint Constraint::max_count(std::size_t n, PropertyPath p, Constraint c) {
  Constraint out = min_count(n, std::move(p), std::move(c));
  out.kind = ConstraintKind::MaxCount;
  return out;
}

Constraint Constraint::equals_prop(PropertyPath p, std::string predicate) {
  Constraint out;
  out.kind = ConstraintKind::EqualsProp;
  out.path = std::move(p);
  out.predicate = std::move(predicate);
  return out;
}

Constraint Constraint::disjoint_prop(PropertyPath p, std::string predicate) {
  Constraint out = equals_prop(std::move(p), std::move(predicate));
  out.kind = ConstraintKind::DisjointProp;
  return out;
}

Constraint Constraint::order_prop(PropertyPath p, std::string predicate,
                                  OrderOp op) {
  Constraint out = equals_prop(std::move(p), std::move(predicate));
  out.kind = ConstraintKind::OrderProp;
  out.op = op;
  return out;
}

Constraint Constraint::closed(std::set<std::string> allowed) {
  Constraint out;
  out.kind = ConstraintKind::Closed;
  out.allowed = std::move(allowed);
  return out;
}

std::set<RdfTerm> shape_refs(const Constraint& c) {
  std::set<RdfTerm> out;
  std::function<void(const Constraint&)> walk = [&](const Constraint& n) {
    if (n.kind == ConstraintKind::HasShape) out.insert(n.term);
    for (const auto& ch : n.children) walk(ch);
  };
  walk(c);
  return out;
}

ShapeGraph::ShapeGraph(std::vector<Shape> shapes) : shapes_(std::move(shapes)) {
  std::set<RdfTerm> names;
  for (const auto& s : shapes_) {
    if (s.name.is_literal())
      throw MalformedShape("shape name must be an IRI or blank node: " +
                           s.name.to_ntriples());
    if (!names.insert(s.name).second)
      throw MalformedShape("duplicate shape " + s.name.to_ntriples());
  }
  for (const auto& s : shapes_) {
    for (const auto& ref : shape_refs(s.constraint)) {
      if (!names.contains(ref))
        throw MalformedShape("shape " + s.name.to_ntriples() +
                             " references undefined shape " +
                             ref.to_ntriples());
    }
  }
}

const Shape* ShapeGraph::find(const RdfTerm& name) const {
  for (const auto& s : shapes_)
    if (s.name == name) return &s;
  return nullptr;
}

std::set<std::string> ShapeGraph::signature() const {
  std::set<std::string> out;
  std::function<void(const Constraint&)> walk = [&](const Constraint& c) {
    switch (c.kind) {
      case ConstraintKind::SomeThrough:
      case ConstraintKind::MinCount:
      case ConstraintKind::MaxCount:
        collect_predicates(c.path, out);
        break;
      case ConstraintKind::EqualsProp:
      case ConstraintKind::DisjointProp:
      case ConstraintKind::OrderProp:
        collect_predicates(c.path, out);
        out.insert(c.predicate);
        break;
      default:
        break;
    }
    for (const auto& ch : c.children) walk(ch);
  };
  for (const auto& s : shapes_) {
    for (const auto& t : s.targets) {
      if (t.kind == TargetKind::Class)
        out.insert(std::string(rdf::vocab::kRdfType));
      if (t.kind == TargetKind::SubjectsOf || t.kind == TargetKind::ObjectsOf)
        out.insert(t.argument.lexical());
    }
    walk(s.constraint);
  }
  return out;
}

namespace {

std::string sh(std::string_view local) { return std::string(kSh) + std::string(local); }

const std::set<std::string>& unsupported_parameters() {
  static const std::set<std::string> names = {
      sh("datatype"),     sh("pattern"),      sh("flags"),
      sh("minLength"),    sh("maxLength"),    sh("languageIn"),
      sh("uniqueLang"),   sh("minInclusive"), sh("maxInclusive"),
      sh("minExclusive"), sh("maxExclusive"), sh("xone"),
      sh("sparql")};
  return names;
}

const std::set<std::string>& constraint_parameters() {
  static const std::set<std::string> names = {
      sh("class"),    sh("nodeKind"), sh("node"),     sh("not"),
      sh("and"),      sh("or"),       sh("in"),       sh("hasValue"),
      sh("minCount"), sh("maxCount"), sh("equals"),   sh("disjoint"),
      sh("lessThan"), sh("lessThanOrEquals"),         sh("closed"),
      sh("qualifiedValueShape"),      sh("qualifiedMinCount"),
      sh("qualifiedMaxCount")};
  return names;
}

const std::set<std::string>& shape_markers() {
  static const std::set<std::string> names = {
      sh("targetNode"), sh("targetClass"), sh("targetSubjectsOf"),
      sh("targetObjectsOf"), sh("property"), sh("path")};
  return names;
}

std::string short_name(const std::string& iri) {
  if (iri.starts_with(kSh)) return "sh:" + iri.substr(kSh.size());
  return "<" + iri + ">";
}

class Extractor {
 public:
  explicit Extractor(const rdf::Graph& g) : g_(g) {}

  ShapeGraph run() {
    find_shapes();
    std::vector<Shape> shapes;
    for (const auto& name : shape_nodes_) {
      if (deactivated(name)) continue;
      shapes.push_back(read_shape(name));
    }
    return ShapeGraph(std::move(shapes));
  }

 private:
  void find_shapes() {
    const std::string type(rdf::vocab::kRdfType);
    for (const auto& t : g_) {
      const std::string& p = t.predicate.lexical();
      if (p == type && t.object.is_iri() &&
          (t.object.lexical() == sh("NodeShape") ||
           t.object.lexical() == sh("PropertyShape"))) {
        shape_nodes_.insert(t.subject);
        continue;
      }
      if (!p.starts_with(kSh)) continue;
      if (shape_markers().contains(p) || constraint_parameters().contains(p) ||
          unsupported_parameters().contains(p))
        shape_nodes_.insert(t.subject);
      if (p == sh("node") || p == sh("property") || p == sh("not") ||
          p == sh("qualifiedValueShape")) {
        if (t.object.is_literal())
          throw MalformedShape(short_name(p) + " expects a shape, got " +
                               t.object.to_ntriples());
        shape_nodes_.insert(t.object);
      }
      if (p == sh("and") || p == sh("or")) {
        for (const auto& m : list(t.object, p)) {
          if (m.is_literal())
            throw MalformedShape(short_name(p) + " member is a literal");
          shape_nodes_.insert(m);
        }
      }
    }
  }

  bool deactivated(const RdfTerm& s) const {
    for (const auto& v : g_.objects(s, sh("deactivated"))) {
      if (v.is_literal() && v.lexical() == "true") return true;
    }
    return false;
  }

  std::vector<RdfTerm> list(const RdfTerm& head, const std::string& param) const {
    auto items = rdf::read_list(g_, head);
    if (!items)
      throw MalformedShape(short_name(param) + " expects an RDF list");
    return *items;
  }

  std::size_t count_value(const RdfTerm& v, const std::string& param) const {
    std::size_t n = 0;
    const std::string& lex = v.lexical();
    auto res = std::from_chars(lex.data(), lex.data() + lex.size(), n);
    if (!v.is_literal() || lex.empty() || res.ec != std::errc() ||
        res.ptr != lex.data() + lex.size())
      throw MalformedShape(short_name(param) +
                           " expects a non-negative integer, got " +
                           v.to_ntriples());
    return n;
  }

  Constraint shape_ref(const RdfTerm& s) const {
    if (deactivated(s)) return Constraint::truth();
    return Constraint::has_shape(s);
  }

  PropertyPath read_path(const RdfTerm& node, int depth = 0) const {
    if (depth > 64) throw MalformedShape("property path nesting too deep");
    if (node.is_literal())
      throw MalformedShape("literal used as property path: " +
                           node.to_ntriples());
    if (node.is_iri()) {
      if (node.lexical() == rdf::vocab::kRdfNil)
        throw MalformedShape("empty sequence path");
      return PropertyPath::predicate(node.lexical());
    }
    if (!g_.objects(node, rdf::vocab::kRdfFirst).empty()) {
      auto items = list(node, sh("path"));
      if (items.size() < 2)
        throw MalformedShape("sequence path needs at least two members");
      PropertyPath acc = read_path(items.back(), depth + 1);
      for (std::size_t i = items.size() - 1; i-- > 0;)
        acc = PropertyPath::sequence(read_path(items[i], depth + 1),
                                     std::move(acc));
      return acc;
    }
    if (auto inv = g_.object(node, sh("inversePath")))
      return PropertyPath::inverse(read_path(*inv, depth + 1));
    if (auto alt = g_.object(node, sh("alternativePath"))) {
      auto items = list(*alt, sh("alternativePath"));
      if (items.size() < 2)
        throw MalformedShape("alternative path needs at least two members");
      PropertyPath acc = read_path(items.back(), depth + 1);
      for (std::size_t i = items.size() - 1; i-- > 0;)
        acc = PropertyPath::alternative(read_path(items[i], depth + 1),
                                        std::move(acc));
      return acc;
    }
    if (auto p = g_.object(node, sh("zeroOrOnePath")))
      return PropertyPath::zero_or_one(read_path(*p, depth + 1));
    if (auto p = g_.object(node, sh("zeroOrMorePath")))
      return PropertyPath::zero_or_more(read_path(*p, depth + 1));
    if (auto p = g_.object(node, sh("oneOrMorePath")))
      return PropertyPath::one_or_more(read_path(*p, depth + 1));
    throw MalformedShape("unrecognized property path " + node.to_ntriples());
  }

  static shacl::NodeKind node_kind_of(const std::string& iri) {
    if (iri == sh("IRI")) return shacl::NodeKind::Iri;
    if (iri == sh("Literal")) return shacl::NodeKind::Literal;
    return shacl::NodeKind::BlankNode;
  }

  static Constraint node_kind_constraint(const RdfTerm& v) {
    const std::string& k = v.lexical();
    if (!v.is_iri()) throw MalformedShape("sh:nodeKind expects an IRI");
    if (k == sh("IRI") || k == sh("Literal") || k == sh("BlankNode"))
      return Constraint::node_kind_is(node_kind_of(k));
    auto either = [](shacl::NodeKind a, shacl::NodeKind b) {
      return Constraint::disj(
          {Constraint::node_kind_is(a), Constraint::node_kind_is(b)});
    };
    if (k == sh("BlankNodeOrIRI"))
      return either(shacl::NodeKind::BlankNode, shacl::NodeKind::Iri);
    if (k == sh("BlankNodeOrLiteral"))
      return either(shacl::NodeKind::BlankNode, shacl::NodeKind::Literal);
    if (k == sh("IRIOrLiteral"))
      return either(shacl::NodeKind::Iri, shacl::NodeKind::Literal);
    throw MalformedShape("unknown node kind " + v.to_ntriples());
  }

  Shape read_shape(const RdfTerm& name) const {
    Shape shape;
    shape.name = name;
    std::optional<PropertyPath> path;
    if (auto p = g_.objects(name, sh("path")); !p.empty()) {
      if (p.size() > 1)
        throw MalformedShape("shape " + name.to_ntriples() +
                             " has several sh:path values");
      path = read_path(p.front());
    }

    // Value constraints apply to the focus node of a node shape and to every
    // value node of a property shape.
    auto on_values = [&](Constraint c) {
      return path ? Constraint::all_through(*path, std::move(c)) : c;
    };
    auto need_path = [&](const std::string& param) -> const PropertyPath& {
      if (!path)
        throw UnsupportedComponent(short_name(param),
                                   "only supported on property shapes");
      return *path;
    };

    std::vector<Constraint> parts;
    std::optional<RdfTerm> qualified_shape;
    for (auto it = g_.begin(); it != g_.end(); ++it) {
      const auto& t = *it;
      if (t.subject != name) continue;
      const std::string& p = t.predicate.lexical();
      const RdfTerm& v = t.object;
      if (p == rdf::vocab::kRdfType && v == RdfTerm::iri(std::string(
                                                rdf::vocab::kRdfsClass))) {
        shape.targets.push_back({TargetKind::Class, name});
        continue;
      }
      if (!p.starts_with(kSh)) continue;
      if (unsupported_parameters().contains(p))
        throw UnsupportedComponent(short_name(p));

      if (p == sh("targetNode")) {
        shape.targets.push_back({TargetKind::Node, v});
      } else if (p == sh("targetClass")) {
        if (v.is_literal())
          throw MalformedShape("sh:targetClass expects an IRI or blank node");
        shape.targets.push_back({TargetKind::Class, v});
      } else if (p == sh("targetSubjectsOf") || p == sh("targetObjectsOf")) {
        if (!v.is_iri())
          throw MalformedShape(short_name(p) + " expects a predicate IRI");
        shape.targets.push_back({p == sh("targetSubjectsOf")
                                     ? TargetKind::SubjectsOf
                                     : TargetKind::ObjectsOf,
                                 v});
      } else if (p == sh("class")) {
        if (v.is_literal()) throw MalformedShape("sh:class expects an IRI");
        parts.push_back(on_values(Constraint::some_through(
            PropertyPath::predicate(std::string(rdf::vocab::kRdfType)),
            Constraint::eq_const(v))));
      } else if (p == sh("nodeKind")) {
        parts.push_back(on_values(node_kind_constraint(v)));
      } else if (p == sh("node")) {
        parts.push_back(on_values(shape_ref(v)));
      } else if (p == sh("property")) {
        parts.push_back(shape_ref(v));
      } else if (p == sh("not")) {
        parts.push_back(on_values(Constraint::negate(shape_ref(v))));
      } else if (p == sh("and") || p == sh("or")) {
        std::vector<Constraint> members;
        for (const auto& m : list(v, p)) members.push_back(shape_ref(m));
        parts.push_back(on_values(p == sh("and")
                                      ? Constraint::conj(std::move(members))
                                      : Constraint::disj(std::move(members))));
      } else if (p == sh("in")) {
        std::vector<Constraint> members;
        for (const auto& m : list(v, p))
          members.push_back(Constraint::eq_const(m));
        parts.push_back(on_values(Constraint::disj(std::move(members))));
      } else if (p == sh("hasValue")) {
        parts.push_back(path ? Constraint::some_through(*path,
                                                        Constraint::eq_const(v))
                             : Constraint::eq_const(v));
      } else if (p == sh("minCount")) {
        std::size_t n = count_value(v, p);
        const auto& pp = need_path(p);
        parts.push_back(n == 0 ? Constraint::truth()
                               : Constraint::min_count(n, pp,
                                                       Constraint::truth()));
      } else if (p == sh("maxCount")) {
        parts.push_back(Constraint::max_count(count_value(v, p), need_path(p),
                                              Constraint::truth()));
      } else if (p == sh("equals") || p == sh("disjoint") ||
                 p == sh("lessThan") || p == sh("lessThanOrEquals")) {
        if (!v.is_iri())
          throw MalformedShape(short_name(p) + " expects a predicate IRI");
        const auto& pp = need_path(p);
        if (p == sh("equals")) {
          parts.push_back(Constraint::equals_prop(pp, v.lexical()));
        } else if (p == sh("disjoint")) {
          parts.push_back(Constraint::disjoint_prop(pp, v.lexical()));
        } else {
          parts.push_back(Constraint::order_prop(
              pp, v.lexical(),
              p == sh("lessThan") ? OrderOp::Lt : OrderOp::Leq));
        }
      } else if (p == sh("closed")) {
        if (!v.is_literal() || (v.lexical() != "true" && v.lexical() != "false"))
          throw MalformedShape("sh:closed expects a boolean");
        if (v.lexical() == "true") parts.push_back(closed_constraint(name));
      } else if (p == sh("qualifiedValueShape")) {
        if (qualified_shape)
          throw MalformedShape("several sh:qualifiedValueShape values");
        qualified_shape = v;
      } else if (p == sh("qualifiedValueShapesDisjoint")) {
        if (v.is_literal() && v.lexical() == "true")
          throw UnsupportedComponent(short_name(p));
      }
    }

    for (const auto& param : {sh("qualifiedMinCount"), sh("qualifiedMaxCount")}) {
      for (const auto& v : g_.objects(name, param)) {
        if (!qualified_shape)
          throw MalformedShape(short_name(param) +
                               " without sh:qualifiedValueShape");
        std::size_t n = count_value(v, param);
        const auto& pp = need_path(param);
        if (param == sh("qualifiedMinCount")) {
          parts.push_back(n == 0 ? Constraint::truth()
                                 : Constraint::min_count(
                                       n, pp, shape_ref(*qualified_shape)));
        } else {
          parts.push_back(
              Constraint::max_count(n, pp, shape_ref(*qualified_shape)));
        }
      }
    }
    shape.constraint = Constraint::conj(std::move(parts));
    return shape;
  }

  Constraint closed_constraint(const RdfTerm& name) const {
    std::set<std::string> allowed;
    for (const auto& ps : g_.objects(name, sh("property"))) {
      for (const auto& p : g_.objects(ps, sh("path"))) {
        if (p.is_iri()) allowed.insert(p.lexical());
      }
    }
    for (const auto& head : g_.objects(name, sh("ignoredProperties"))) {
      for (const auto& m : list(head, sh("ignoredProperties"))) {
        if (!m.is_iri())
          throw MalformedShape("sh:ignoredProperties members must be IRIs");
        allowed.insert(m.lexical());
      }
    }
    return Constraint::closed(std::move(allowed));
  }

  const rdf::Graph& g_;
  std::set<RdfTerm> shape_nodes_;
};

}  // namespace

ShapeGraph extract_shape_graph(const rdf::Graph& g) {
  return Extractor(g).run();
}

std::vector<std::vector<RdfTerm>> detect_recursion(const ShapeGraph& sg) {
  std::vector<RdfTerm> names;
  for (const auto& s : sg.shapes()) names.push_back(s.name);
  std::sort(names.begin(), names.end());
  std::map<RdfTerm, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;

  std::vector<std::vector<std::size_t>> adj(names.size());
  for (const auto& s : sg.shapes()) {
    for (const auto& ref : shape_refs(s.constraint)) {
      auto it = index.find(ref);
      if (it != index.end()) adj[index[s.name]].push_back(it->second);
    }
  }

  // Cycles are enumerated from their smallest member, visiting only larger
  // members, so each elementary cycle is produced exactly once.
  std::vector<std::vector<RdfTerm>> cycles;
  std::vector<std::size_t> stack;
  std::vector<bool> on_stack(names.size(), false);
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start,
                                                          std::size_t v) {
    for (std::size_t w : adj[v]) {
      if (w == start) {
        std::vector<RdfTerm> cycle;
        for (std::size_t i : stack) cycle.push_back(names[i]);
        cycles.push_back(std::move(cycle));
      } else if (w > start && !on_stack[w]) {
        on_stack[w] = true;
        stack.push_back(w);
        dfs(start, w);
        stack.pop_back();
        on_stack[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < names.size(); ++s) {
    stack = {s};
    on_stack[s] = true;
    dfs(s, s);
    on_stack[s] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace shacl2fol::shacl
