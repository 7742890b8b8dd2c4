#include "shacl2fol/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "shacl2fol/error.hpp"

namespace shacl2fol::oracle {

using rdf::RdfTerm;
using shacl::ConstraintKind;
using shacl::PathKind;
using shacl::PropertyPath;
using NodeSet = std::set<RdfTerm>;

namespace {

NodeSet to_set(const std::vector<RdfTerm>& v) {
  return NodeSet(v.begin(), v.end());
}

NodeSet step(const PropertyPath& p, const rdf::Graph& g, const NodeSet& from) {
  NodeSet out;
  for (const auto& n : from) {
    auto next = path_eval(p, g, n);
    out.insert(next.begin(), next.end());
  }
  return out;
}

NodeSet closure(const PropertyPath& p, const rdf::Graph& g, NodeSet frontier,
                NodeSet seen) {
  while (!frontier.empty()) {
    NodeSet next;
    for (const auto& n : step(p, g, frontier))
      if (seen.insert(n).second) next.insert(n);
    frontier = std::move(next);
  }
  return seen;
}

std::optional<long long> as_integer(const RdfTerm& t) {
  if (!t.is_literal() || t.datatype() != rdf::vocab::kXsdInteger)
    return std::nullopt;
  std::string_view s = t.lexical();
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_plain_string(const RdfTerm& t) {
  return t.is_literal() && !t.datatype() && !t.lang();
}

// Only integers and plain strings are ordered; every other pair fails.
bool ordered(const RdfTerm& a, const RdfTerm& b, bool strict) {
  if (auto x = as_integer(a)) {
    auto y = as_integer(b);
    if (!y) return false;
    return strict ? *x < *y : *x <= *y;
  }
  if (is_plain_string(a) && is_plain_string(b))
    return strict ? a.lexical() < b.lexical() : a.lexical() <= b.lexical();
  return false;
}

std::size_t count_matching(const shacl::ShapeGraph& sg, const rdf::Graph& g,
                           const NodeSet& values, const shacl::Constraint& c) {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](const RdfTerm& v) {
        return satisfies(sg, g, v, c);
      }));
}

}  // namespace

NodeSet path_eval(const PropertyPath& p, const rdf::Graph& g,
                  const RdfTerm& start) {
  switch (p.kind) {
    case PathKind::Predicate:
      return to_set(g.objects(start, p.iri));
    case PathKind::Inverse: {
      const PropertyPath& inner = p.children[0];
      if (inner.kind == PathKind::Predicate)
        return to_set(g.subjects(inner.iri, start));
      NodeSet candidates = g.constants();
      candidates.insert(start);
      NodeSet out;
      for (const auto& n : candidates)
        if (path_eval(inner, g, n).contains(start)) out.insert(n);
      return out;
    }
    case PathKind::Sequence: {
      NodeSet cur{start};
      for (const auto& c : p.children) cur = step(c, g, cur);
      return cur;
    }
    case PathKind::Alternative: {
      NodeSet out;
      for (const auto& c : p.children) {
        auto part = path_eval(c, g, start);
        out.insert(part.begin(), part.end());
      }
      return out;
    }
    case PathKind::ZeroOrOne: {
      NodeSet out = path_eval(p.children[0], g, start);
      out.insert(start);
      return out;
    }
    case PathKind::ZeroOrMore:
      return closure(p.children[0], g, {start}, {start});
    case PathKind::OneOrMore: {
      NodeSet first = path_eval(p.children[0], g, start);
      return closure(p.children[0], g, first, first);
    }
  }
  return {};
}

NodeSet target_nodes(const shacl::Shape& shape, const rdf::Graph& g) {
  NodeSet out;
  for (const auto& t : shape.targets) {
    switch (t.kind) {
      case shacl::TargetKind::Node:
        out.insert(t.argument);
        break;
      case shacl::TargetKind::Class: {
        auto s = g.subjects(rdf::vocab::kRdfType, t.argument);
        out.insert(s.begin(), s.end());
        break;
      }
      case shacl::TargetKind::SubjectsOf:
      case shacl::TargetKind::ObjectsOf:
        for (const auto& tr : g)
          if (tr.predicate == t.argument)
            out.insert(t.kind == shacl::TargetKind::SubjectsOf ? tr.subject
                                                                : tr.object);
        break;
    }
  }
  return out;
}

bool satisfies(const shacl::ShapeGraph& sg, const rdf::Graph& g,
               const RdfTerm& node, const shacl::Constraint& c) {
  switch (c.kind) {
    case ConstraintKind::True:
      return true;
    case ConstraintKind::Not:
      return !satisfies(sg, g, node, c.children[0]);
    case ConstraintKind::And:
      return std::all_of(c.children.begin(), c.children.end(),
                         [&](const shacl::Constraint& ch) {
                           return satisfies(sg, g, node, ch);
                         });
    case ConstraintKind::EqConst:
      return node == c.term;
    case ConstraintKind::NodeKind:
      switch (c.node_kind) {
        case shacl::NodeKind::Iri: return node.is_iri();
        case shacl::NodeKind::Literal: return node.is_literal();
        case shacl::NodeKind::BlankNode: return node.is_blank();
      }
      return false;
    case ConstraintKind::HasShape: {
      const shacl::Shape* s = sg.find(c.term);
      if (!s) throw MalformedShape("unknown shape " + c.term.to_ntriples());
      return satisfies(sg, g, node, s->constraint);
    }
    case ConstraintKind::SomeThrough:
      return count_matching(sg, g, path_eval(c.path, g, node),
                            c.children[0]) >= 1;
    case ConstraintKind::MinCount:
      return count_matching(sg, g, path_eval(c.path, g, node),
                            c.children[0]) >= c.count;
    case ConstraintKind::MaxCount:
      return count_matching(sg, g, path_eval(c.path, g, node),
                            c.children[0]) <= c.count;
    case ConstraintKind::EqualsProp:
      return path_eval(c.path, g, node) ==
             to_set(g.objects(node, c.predicate));
    case ConstraintKind::DisjointProp: {
      auto a = path_eval(c.path, g, node);
      auto b = to_set(g.objects(node, c.predicate));
      return std::none_of(a.begin(), a.end(),
                          [&](const RdfTerm& v) { return b.contains(v); });
    }
    case ConstraintKind::OrderProp: {
      auto a = path_eval(c.path, g, node);
      auto b = to_set(g.objects(node, c.predicate));
      bool strict =
          c.op == shacl::OrderOp::Lt || c.op == shacl::OrderOp::Gt;
      bool flip = c.op == shacl::OrderOp::Gt || c.op == shacl::OrderOp::Geq;
      for (const auto& v : a)
        for (const auto& w : b)
          if (!(flip ? ordered(w, v, strict) : ordered(v, w, strict)))
            return false;
      return true;
    }
    case ConstraintKind::Closed:
      for (const auto& t : g)
        if (t.subject == node && !c.allowed.contains(t.predicate.lexical()))
          return false;
      return true;
  }
  return false;
}

Report evaluate(const shacl::ShapeGraph& sg, const rdf::Graph& g) {
  auto cycles = shacl::detect_recursion(sg);
  if (!cycles.empty())
    throw RecursiveShapeGraph("shape graph is recursive through " +
                              cycles.front().front().to_ntriples());
  Report report;
  for (const auto& shape : sg.shapes())
    for (const auto& n : target_nodes(shape, g))
      if (!satisfies(sg, g, n, shape.constraint))
        report.violations.push_back({n, shape.name});
  std::sort(report.violations.begin(), report.violations.end());
  report.conforms = report.violations.empty();
  return report;
}

}  // namespace shacl2fol::oracle
