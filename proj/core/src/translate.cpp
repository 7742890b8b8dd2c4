#include "shacl2fol/translate.hpp"

#include <charconv>
#include <stdexcept>

namespace shacl2fol {

using scl::NodeFormula;
using scl::PathFormula;
using scl::SclSentence;
using shacl::ConstraintKind;
using shacl::PathKind;

namespace {

PathFormula translate_normal_path(const shacl::PropertyPath& p) {
  switch (p.kind) {
    case PathKind::Predicate:
      return PathFormula::make_role(p.iri);
    case PathKind::Inverse:
      // normalize() leaves Inverse only directly above a predicate.
      return PathFormula::make_role(p.children[0].iri, true);
    case PathKind::Sequence:
      return PathFormula::seq(translate_normal_path(p.children[0]),
                              translate_normal_path(p.children[1]));
    case PathKind::Alternative:
      return PathFormula::alt(translate_normal_path(p.children[0]),
                              translate_normal_path(p.children[1]));
    case PathKind::ZeroOrOne:
      return PathFormula::zero_or_one(translate_normal_path(p.children[0]));
    case PathKind::ZeroOrMore:
      return PathFormula::star(translate_normal_path(p.children[0]));
    case PathKind::OneOrMore:
      break;
  }
  throw std::logic_error("path not normalized");
}

scl::Filter filter_of(shacl::NodeKind k) {
  switch (k) {
    case shacl::NodeKind::Iri: return scl::Filter::IsIri;
    case shacl::NodeKind::Literal: return scl::Filter::IsLiteral;
    case shacl::NodeKind::BlankNode: return scl::Filter::IsBlank;
  }
  return scl::Filter::IsIri;
}

}  // namespace

PathFormula translate_path(const shacl::PropertyPath& p) {
  return translate_normal_path(shacl::normalize(p));
}

NodeFormula translate_constraint(const shacl::Constraint& c,
                                 const std::set<std::string>& signature,
                                 std::string_view shape_relation) {
  auto sub = [&](std::size_t i) {
    return translate_constraint(c.children[i], signature, shape_relation);
  };
  switch (c.kind) {
    case ConstraintKind::True:
      return NodeFormula::top();
    case ConstraintKind::Not:
      return NodeFormula::negate(sub(0));
    case ConstraintKind::And:
      return NodeFormula::conj(sub(0), sub(1));
    case ConstraintKind::EqConst:
      return NodeFormula::eq_const(c.term);
    case ConstraintKind::NodeKind:
      return NodeFormula::make_filter(filter_of(c.node_kind));
    case ConstraintKind::HasShape:
      return NodeFormula::has_shape({c.term, std::string(shape_relation)});
    case ConstraintKind::SomeThrough:
      return NodeFormula::exists(translate_path(c.path), sub(0));
    case ConstraintKind::MinCount:
      return NodeFormula::at_least(c.count, translate_path(c.path), sub(0));
    case ConstraintKind::MaxCount:
      return NodeFormula::negate(
          NodeFormula::at_least(c.count + 1, translate_path(c.path), sub(0)));
    case ConstraintKind::EqualsProp:
      return NodeFormula::forall_iff(translate_path(c.path), c.predicate);
    case ConstraintKind::DisjointProp:
      return NodeFormula::not_exists_both(translate_path(c.path), c.predicate);
    case ConstraintKind::OrderProp: {
      scl::OrderAtom order;
      order.op = (c.op == shacl::OrderOp::Lt || c.op == shacl::OrderOp::Gt)
                     ? scl::OrderOp::Lt
                     : scl::OrderOp::Leq;
      order.inverted =
          c.op == shacl::OrderOp::Gt || c.op == shacl::OrderOp::Geq;
      return NodeFormula::pairwise_order(translate_path(c.path), c.predicate,
                                         order);
    }
    case ConstraintKind::Closed: {
      std::vector<NodeFormula> parts;
      for (const auto& r : signature) {
        if (c.allowed.contains(r)) continue;
        parts.push_back(NodeFormula::negate(NodeFormula::at_least(
            1, PathFormula::make_role(r), NodeFormula::top())));
      }
      if (parts.empty()) return NodeFormula::top();
      NodeFormula acc = std::move(parts.back());
      for (std::size_t i = parts.size() - 1; i-- > 0;)
        acc = NodeFormula::conj(std::move(parts[i]), std::move(acc));
      return acc;
    }
  }
  throw std::logic_error("unknown constraint kind");
}

std::vector<SclSentence> translate(const shacl::ShapeGraph& sg,
                                   const TranslateOptions& opts) {
  std::set<std::string> signature = sg.signature();
  signature.insert(opts.extra_signature.begin(), opts.extra_signature.end());

  std::vector<SclSentence> out;
  for (const auto& shape : sg.shapes()) {
    out.push_back(SclSentence::shape_def(
        {shape.name, opts.shape_relation},
        translate_constraint(shape.constraint, signature,
                             opts.shape_relation)));
  }
  for (const auto& shape : sg.shapes()) {
    scl::ShapeName name{shape.name, opts.shape_relation};
    for (const auto& t : shape.targets) {
      switch (t.kind) {
        case shacl::TargetKind::Node:
          out.push_back(SclSentence::target_node(t.argument, name));
          break;
        case shacl::TargetKind::Class:
          out.push_back(SclSentence::target_class(t.argument, name));
          break;
        case shacl::TargetKind::SubjectsOf:
          out.push_back(
              SclSentence::target_subjects_of(t.argument.lexical(), name));
          break;
        case shacl::TargetKind::ObjectsOf:
          out.push_back(
              SclSentence::target_objects_of(t.argument.lexical(), name));
          break;
      }
    }
  }
  return out;
}

bool is_dummy_constant(const rdf::RdfTerm& t) {
  return t.is_iri() && t.lexical().starts_with(kDummyPrefix);
}

std::vector<SclSentence> add_strong_satisfiability_targets(
    std::vector<SclSentence> sentences,
    std::span<const scl::ShapeName> shapes) {
  std::set<scl::ShapeName> defined;
  std::set<rdf::RdfTerm> constants;
  for (const auto& s : scl::flatten(sentences)) {
    if (s.kind == scl::SentenceKind::ShapeDef) defined.insert(s.shape);
    scl::collect_constants(s, constants);
  }
  std::size_t next = 1;
  for (const auto& c : constants) {
    if (!is_dummy_constant(c)) continue;
    std::string_view suffix = c.lexical();
    suffix.remove_prefix(kDummyPrefix.size());
    std::size_t k = 0;
    auto res = std::from_chars(suffix.data(), suffix.data() + suffix.size(), k);
    if (res.ec == std::errc() && k >= next) next = k + 1;
  }
  for (const auto& shape : shapes) {
    if (!defined.contains(shape))
      throw std::invalid_argument("strong satisfiability target for undefined "
                                  "shape " + shape.name.to_ntriples());
    rdf::RdfTerm dummy =
        rdf::RdfTerm::iri(std::string(kDummyPrefix) + std::to_string(next++));
    while (constants.contains(dummy))
      dummy = rdf::RdfTerm::iri(std::string(kDummyPrefix) +
                                std::to_string(next++));
    sentences.push_back(SclSentence::target_node(dummy, shape));
  }
  return sentences;
}

}  // namespace shacl2fol
