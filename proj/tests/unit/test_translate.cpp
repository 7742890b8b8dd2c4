#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "shacl2fol/oracle.hpp"
#include "shacl2fol/translate.hpp"
#include "support.hpp"

using namespace shacl2fol;
using scl::NodeFormula;
using scl::PathFormula;
using scl::SclSentence;
using rdf::RdfTerm;
using testsupport::ex;
using testsupport::exi;
using testsupport::shapes;

namespace {

scl::ShapeName sn(const char* local) { return {exi(local), "hasShape"}; }

// Direct evaluation of SCL formulas over an RDF graph, used to compare the
// translation against the SHACL oracle.
struct SclEval {
  const rdf::Graph& g;
  std::map<scl::ShapeName, NodeFormula> defs;

  std::set<RdfTerm> step(const PathFormula& p, const RdfTerm& x) const {
    std::set<RdfTerm> out;
    switch (p.kind) {
      case scl::PathKind::Role:
        if (p.inverted) {
          for (const auto& s : g.subjects(p.role, x)) out.insert(s);
        } else {
          for (const auto& o : g.objects(x, p.role)) out.insert(o);
        }
        return out;
      case scl::PathKind::Seq:
        for (const auto& m : step(p.children[0], x))
          for (const auto& y : step(p.children[1], m)) out.insert(y);
        return out;
      case scl::PathKind::Alt:
        out = step(p.children[0], x);
        for (const auto& y : step(p.children[1], x)) out.insert(y);
        return out;
      case scl::PathKind::ZeroOrOne:
        out = step(p.children[0], x);
        out.insert(x);
        return out;
      case scl::PathKind::Star: {
        out.insert(x);
        std::vector<RdfTerm> todo{x};
        while (!todo.empty()) {
          RdfTerm n = todo.back();
          todo.pop_back();
          for (const auto& y : step(p.children[0], n))
            if (out.insert(y).second) todo.push_back(y);
        }
        return out;
      }
    }
    return out;
  }

  bool holds(const NodeFormula& f, const RdfTerm& x) const {
    using K = scl::NodeKind;
    switch (f.kind) {
      case K::Top: return true;
      case K::Not: return !holds(f.children[0], x);
      case K::And: return holds(f.children[0], x) && holds(f.children[1], x);
      case K::EqConst: return x == f.constant;
      case K::Filter:
        return f.filter == scl::Filter::IsIri       ? x.is_iri()
               : f.filter == scl::Filter::IsLiteral ? x.is_literal()
                                                    : x.is_blank();
      case K::HasShape: return holds(defs.at(f.shape), x);
      case K::Exists:
      case K::AtLeast: {
        std::size_t need = f.kind == K::Exists ? 1 : f.count;
        std::size_t n = 0;
        for (const auto& y : step(f.path, x)) n += holds(f.children[0], y);
        return n >= need;
      }
      case K::NotExistsBoth: {
        auto r = g.objects(x, f.role);
        for (const auto& y : step(f.path, x))
          if (std::find(r.begin(), r.end(), y) != r.end()) return false;
        return true;
      }
      case K::ForallIff: {
        auto r = g.objects(x, f.role);
        return step(f.path, x) == std::set<RdfTerm>(r.begin(), r.end());
      }
      case K::PairwiseOrder: break;
    }
    throw std::logic_error("not evaluated here");
  }
};

shacl::PropertyPath random_shacl_path(std::mt19937& rng, int depth) {
  using shacl::PropertyPath;
  auto pred = [&] { return PropertyPath::predicate(ex("p" + std::to_string(rng() % 3))); };
  if (depth <= 0) return rng() % 3 ? pred() : PropertyPath::inverse(pred());
  auto sub = [&] { return random_shacl_path(rng, depth - 1); };
  switch (rng() % 8) {
    case 0: return PropertyPath::inverse(sub());
    case 1: return PropertyPath::sequence(sub(), sub());
    case 2: return PropertyPath::alternative(sub(), sub());
    case 3: return PropertyPath::zero_or_one(sub());
    case 4: return PropertyPath::zero_or_more(sub());
    case 5: return PropertyPath::one_or_more(sub());
    default: return pred();
  }
}

shacl::Constraint random_constraint(std::mt19937& rng, int depth) {
  using shacl::Constraint;
  auto sub = [&] { return random_constraint(rng, depth - 1); };
  int top = depth <= 0 ? 2 : 11;
  switch (rng() % (top + 1)) {
    case 0: return Constraint::eq_const(exi("n" + std::to_string(rng() % 4)));
    case 1: return Constraint::node_kind_is(rng() % 2 ? shacl::NodeKind::Iri
                                                      : shacl::NodeKind::Literal);
    case 2: return Constraint::truth();
    case 3: return Constraint::negate(sub());
    case 4: return Constraint::conj(sub(), sub());
    case 5: return Constraint::disj({sub(), sub()});
    case 6: return Constraint::some_through(random_shacl_path(rng, 1), sub());
    case 7: return Constraint::all_through(random_shacl_path(rng, 1), sub());
    case 8: return Constraint::min_count(rng() % 3, random_shacl_path(rng, 2), sub());
    case 9: return Constraint::max_count(rng() % 3, random_shacl_path(rng, 2), sub());
    case 10:
      return Constraint::equals_prop(random_shacl_path(rng, 1),
                                     ex("p" + std::to_string(rng() % 3)));
    default:
      return Constraint::disjoint_prop(random_shacl_path(rng, 1),
                                       ex("p" + std::to_string(rng() % 3)));
  }
}

}  // namespace

TEST(TargetAxioms, OneSentencePerTargetKind) {
  auto sg = shapes(R"(
    ex:s a sh:NodeShape ; sh:targetNode ex:c ; sh:targetClass ex:C ;
         sh:targetSubjectsOf ex:R ; sh:targetObjectsOf ex:Q .)");
  auto out = translate(sg);
  ASSERT_EQ(out.size(), 5u);
  EXPECT_EQ(out[0], SclSentence::shape_def(sn("s"), NodeFormula::top()));
  std::set<std::string> texts;
  for (std::size_t i = 1; i < out.size(); ++i) texts.insert(scl::to_text(out[i]));
  EXPECT_EQ(texts, (std::set<std::string>{
                       "hasShape(<http://example.org/c>, <http://example.org/s>)",
                       "forall x0. isA(x0, <http://example.org/C>) -> "
                       "hasShape(x0, <http://example.org/s>)",
                       "forall x0, x1. [<http://example.org/R>](x0, x1) -> "
                       "hasShape(x0, <http://example.org/s>)",
                       "forall x0, x1. [^<http://example.org/Q>](x0, x1) -> "
                       "hasShape(x0, <http://example.org/s>)"}));
}

TEST(Constraints, CountsBecomeAtLeast) {
  auto p = shacl::PropertyPath::predicate(ex("R"));
  auto top = shacl::Constraint::truth();
  EXPECT_EQ(translate_constraint(shacl::Constraint::min_count(2, p, top)),
            NodeFormula::at_least(2, PathFormula::make_role(ex("R")),
                                  NodeFormula::top()));
  EXPECT_EQ(translate_constraint(shacl::Constraint::max_count(1, p, top)),
            NodeFormula::negate(NodeFormula::at_least(
                2, PathFormula::make_role(ex("R")), NodeFormula::top())));
}

TEST(Constraints, PairConstraints) {
  auto p = shacl::PropertyPath::predicate(ex("R"));
  auto role = PathFormula::make_role(ex("R"));
  EXPECT_EQ(translate_constraint(shacl::Constraint::equals_prop(p, ex("Q"))),
            NodeFormula::forall_iff(role, ex("Q")));
  EXPECT_EQ(translate_constraint(shacl::Constraint::disjoint_prop(p, ex("Q"))),
            NodeFormula::not_exists_both(role, ex("Q")));
}

TEST(Constraints, ClosedRulesOutTheRestOfTheSignature) {
  auto c = shacl::Constraint::closed({ex("a")});
  auto f = translate_constraint(c, {ex("a"), ex("b"), ex("c")});
  EXPECT_EQ(scl::to_text(f),
            "(~exists>=1 x1. [<http://example.org/b>](x0, x1) & T) & "
            "~exists>=1 x1. [<http://example.org/c>](x0, x1) & T");
  EXPECT_EQ(translate_constraint(c, {ex("a")}), NodeFormula::top());
}

TEST(Constraints, ShapeReferencesUseTheConfiguredRelation) {
  auto f = translate_constraint(shacl::Constraint::has_shape(exi("t")), {},
                                "hasShape_B");
  EXPECT_EQ(f, NodeFormula::has_shape({exi("t"), "hasShape_B"}));
}

TEST(Paths, OneOrMoreIsSequenceThenStar) {
  auto p = shacl::PropertyPath::one_or_more(shacl::PropertyPath::predicate(ex("R")));
  auto r = PathFormula::make_role(ex("R"));
  EXPECT_EQ(translate_path(p), PathFormula::seq(r, PathFormula::star(r)));
}

TEST(Paths, InverseIsPushedToRoles) {
  using shacl::PropertyPath;
  auto p = PropertyPath::inverse(PropertyPath::sequence(
      PropertyPath::predicate(ex("a")), PropertyPath::predicate(ex("b"))));
  EXPECT_EQ(translate_path(p),
            PathFormula::seq(PathFormula::make_role(ex("b"), true),
                             PathFormula::make_role(ex("a"), true)));
}

TEST(Semantics, TranslationAgreesWithTheOracleOnRandomInputs) {
  // Random constraints and graphs; the SCL formula evaluated directly on
  // the graph must agree with SHACL evaluation at every node.
  std::mt19937 rng(31);
  for (int round = 0; round < 400; ++round) {
    shacl::Constraint c = random_constraint(rng, 3);
    shacl::ShapeGraph sg({shacl::Shape{exi("s"), {}, c}});
    rdf::Graph g = testsupport::random_graph(rng, 10, 3, 4);
    NodeFormula f = translate_constraint(c, sg.signature());
    SclEval eval{g, {{sn("s"), f}}};
    std::set<RdfTerm> nodes = g.constants();
    for (int i = 0; i < 4; ++i) nodes.insert(exi("n" + std::to_string(i)));
    for (const auto& n : nodes)
      ASSERT_EQ(eval.holds(f, n), oracle::satisfies(sg, g, n, c))
          << scl::to_text(f) << "\nat " << n.to_ntriples() << "\n"
          << rdf::serialize_ntriples(g);
  }
}

TEST(StrongSat, FreshDummyPerShape) {
  std::vector<SclSentence> theory = {
      SclSentence::shape_def(sn("a"), NodeFormula::top()),
      SclSentence::shape_def(sn("b"), NodeFormula::top())};
  std::vector<scl::ShapeName> both = {sn("a"), sn("b")};
  auto out = add_strong_satisfiability_targets(theory, both);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[2], SclSentence::target_node(
                        RdfTerm::iri("urn:shacl2fol:dummy:1"), sn("a")));
  EXPECT_EQ(out[3], SclSentence::target_node(
                        RdfTerm::iri("urn:shacl2fol:dummy:2"), sn("b")));
  EXPECT_TRUE(is_dummy_constant(out[3].constant));
  EXPECT_FALSE(is_dummy_constant(exi("a")));

  // Applying twice never reuses a dummy.
  auto again = add_strong_satisfiability_targets(out, both);
  std::set<RdfTerm> dummies;
  for (std::size_t i = 2; i < again.size(); ++i) dummies.insert(again[i].constant);
  EXPECT_EQ(dummies.size(), 4u);

  std::vector<scl::ShapeName> missing = {sn("zzz")};
  EXPECT_THROW(add_strong_satisfiability_targets(theory, missing),
               std::invalid_argument);
}
